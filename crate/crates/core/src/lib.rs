//! Exact enumeration and counting of numerical semigroups by genus.
//!
//! A numerical semigroup is a cofinite subset of the nonnegative integers
//! that contains 0 and is closed under addition; its genus is the number of
//! missing values. This crate counts semigroups of a given genus three ways
//! and checks the ways against each other:
//!
//! - [`tree_oracle`] walks the tree of all semigroups, brute force;
//! - [`census`] evaluates closed-form counts for the classes with small
//!   Frobenius number relative to the multiplicity, built from the type
//!   decomposition in [`type_space`] and [`construction`];
//! - [`quad_field`] evaluates the limiting bound constants exactly in
//!   Q(phi), so every printed decimal is correctly rounded.
//!
//! The counts by genus grow like powers of the golden ratio; the census
//! functions expose that scaling directly.

pub mod arith;
pub mod census;
pub mod construction;
pub mod error;
pub mod limits;
pub mod quad_field;
pub mod semigroup;
pub mod tree_oracle;
pub mod type_space;

pub use census::{Baselines, CensusRow, CENSUS_CSV_HEADER};
pub use error::{Error, Result};
pub use limits::Limits;
pub use quad_field::QuadraticValue;
pub use semigroup::{is_closed, GapSemigroup, SemigroupClass};
pub use tree_oracle::ClassTotals;
pub use type_space::{ExponentHistogram, TypeDescriptor};
