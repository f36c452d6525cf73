//! Constructions of numerical semigroups by Frobenius class, with exact
//! counts of each family by genus.
//!
//! Class f < 2m: pick the multiplicity m and any subset S of [m+1, 2m-1];
//! the semigroup is {0, m} u S u [2m, inf). Counting subsets by genus gives
//! binomial(m - 1, 2m - 2 - g), and summing over m yields fib(g + 1).
//!
//! Class 2m < f < 3m: pick m, a prefix set (A; k) with k < m, and a free
//! subset B of the window [m+k+1, 2m+k-1] minus the forced members
//! 2m + (A+A restricted to [0, k]). The semigroup is
//! {0} u (m + A) u (2m + (A+A) n [0,k]) u B u [2m+k+1, inf),
//! and distinct B give distinct semigroups, so counting is binomial again.

pub use crate::arith::{binomial, fib};
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::semigroup::{GapSemigroup, MemberBits, SemigroupClass};
use crate::type_space::TypeDescriptor;

/// Build the f < 2m semigroup {0, m} u S u [2m, inf). `s` must be a subset
/// of [m+1, 2m-1]. For m = 1 the result is the gap-free semigroup.
pub fn build_f_lt_2m(m: u64, s: &[u64]) -> Result<GapSemigroup> {
    if m == 0 {
        return Err(Error::OutOfRange("multiplicity must be positive".into()));
    }
    for &x in s {
        if x <= m || x >= 2 * m {
            return Err(Error::OutOfRange(format!(
                "S must lie in [{}, {}], got {x}",
                m + 1,
                2 * m - 1
            )));
        }
    }
    let mut members = MemberBits::zeros(2 * m - 1);
    members.set(0);
    members.set(m);
    for &x in s {
        members.set(x);
    }
    Ok(finish_from_window(members, 2 * m - 1))
}

/// Number of f < 2m semigroups with multiplicity m and genus g:
/// binomial(m - 1, 2m - 2 - g).
pub fn count_f_lt_2m(m: u64, g: u64) -> BigUint {
    binomial(m as i64 - 1, 2 * m as i64 - 2 - g as i64)
}

/// Number of f < 2m semigroups of genus g across all multiplicities. The
/// closed form is fib(g + 1); the sum is computed and the identity asserted.
pub fn total_f_lt_2m(g: u64) -> BigUint {
    let mut acc = BigUint::zero();
    for m in 1..=(g + 1) {
        acc += count_f_lt_2m(m, g);
    }
    assert_eq!(acc, fib(g as i64 + 1), "binomial sum must telescope");
    acc
}

/// Positions in [m+k+1, 2m+k-1] left free for B by the type (A; k): the
/// window minus the forced members 2m + ((A+A) n [0, k]).
pub fn typed_free_positions(m: u64, t: &TypeDescriptor) -> Result<Vec<u64>> {
    let k = t.k() as u64;
    if m <= k {
        return Err(Error::OutOfRange(format!(
            "multiplicity must exceed k = {k}, got {m}"
        )));
    }
    let forced = forced_sumset_members(m, t);
    Ok((m + k + 1..=2 * m + k - 1)
        .filter(|x| !forced.contains(x))
        .collect())
}

/// 2m + ((A+A) n [0, k]) as explicit positions.
fn forced_sumset_members(m: u64, t: &TypeDescriptor) -> Vec<u64> {
    let elems: Vec<u64> = t.elements().map(u64::from).collect();
    let k = t.k() as u64;
    let mut sums: Vec<u64> = elems
        .iter()
        .flat_map(|&x| elems.iter().map(move |&y| x + y))
        .filter(|&s| s <= k)
        .collect();
    sums.sort_unstable();
    sums.dedup();
    sums.into_iter().map(|s| 2 * m + s).collect()
}

/// Build the 2m < f < 3m semigroup determined by multiplicity m, type
/// (A; k) and free subset B. Requires m > k and B inside the free window.
pub fn build_typed(m: u64, t: &TypeDescriptor, b: &[u64]) -> Result<GapSemigroup> {
    let free = typed_free_positions(m, t)?;
    for &x in b {
        if !free.contains(&x) {
            return Err(Error::OutOfRange(format!(
                "B must be a subset of the free window {free:?}, got {x}"
            )));
        }
    }
    let k = t.k() as u64;
    let f = 2 * m + k;
    let mut members = MemberBits::zeros(f);
    members.set(0);
    for e in t.elements() {
        members.set(m + e as u64);
    }
    for x in forced_sumset_members(m, t) {
        members.set(x);
    }
    for &x in b {
        members.set(x);
    }
    Ok(finish_from_window(members, f))
}

/// Shared tail of the builders: bits describe members on [0, hi], and every
/// position above hi is a member. Locates the Frobenius number (the largest
/// unset bit), trims the vector to it, and derives the genus.
fn finish_from_window(members: MemberBits, hi: u64) -> GapSemigroup {
    let Some(f) = (1..=hi).rev().find(|&x| !members.test(x)) else {
        return GapSemigroup::nat0();
    };
    let mut words = members.words;
    words.truncate(((f + 1) as usize).div_ceil(64));
    let spare = words.len() * 64 - (f + 1) as usize;
    if spare > 0 {
        *words.last_mut().expect("non-empty") &= u64::MAX >> spare;
    }
    let members = MemberBits { words };
    let genus = f + 1 - members.count_ones();
    let s = GapSemigroup::from_member_bits(members, f, genus);
    debug_assert!(crate::semigroup::is_closed(&s.gaps()));
    s
}

/// The type (A; k) of a semigroup with 2m < f < 3m: k = f - 2m and
/// A = (members n [m, m+k]) - m.
pub fn type_of(s: &GapSemigroup) -> Result<TypeDescriptor> {
    if s.classify() != SemigroupClass::FBetween2M3M {
        return Err(Error::WrongClass {
            frobenius: s.frobenius(),
            multiplicity: s.multiplicity(),
        });
    }
    let m = s.multiplicity();
    let k = (s.frobenius() as u64 - 2 * m) as u32;
    let mut mask = 0u64;
    for e in 0..=k as u64 {
        if s.is_member(m + e) {
            mask |= 1 << e;
        }
    }
    TypeDescriptor::new(k, mask)
}

/// Number of semigroups with multiplicity m, type (A; k) and genus g:
/// binomial(m - 1 - |(A+A) n [0,k]|, g + |A| - m - k - 1).
pub fn count_typed_mg(m: u64, t: &TypeDescriptor, g: u64) -> Result<BigUint> {
    let k = t.k() as u64;
    if m <= k {
        return Err(Error::OutOfRange(format!(
            "multiplicity must exceed k = {k}, got {m}"
        )));
    }
    let p = t.sumset_size() as i64;
    let a = t.set_size() as i64;
    Ok(binomial(
        m as i64 - 1 - p,
        g as i64 + a - m as i64 - k as i64 - 1,
    ))
}

/// Exact count of genus-g semigroups of type (A; k) over all multiplicities,
/// together with its Fibonacci closed form fib(g - |(A+A) n [0,k]| + |A| - k - 1).
/// The closed form drops the constraint m > k, so it is an upper bound; it
/// is exact whenever 3k <= g + |A| + |(A+A) n [0,k]| - 2 (reported as
/// `condition_holds`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedCount {
    pub sum: BigUint,
    pub fibonacci_form: BigUint,
    pub condition_holds: bool,
}

impl TypedCount {
    /// Whether the closed form agrees with the exact sum.
    pub fn is_exact(&self) -> bool {
        self.sum == self.fibonacci_form
    }
}

/// Count genus-g semigroups of type (A; k), exactly and in Fibonacci form.
pub fn count_typed_g(g: u64, t: &TypeDescriptor) -> TypedCount {
    let k = t.k() as i64;
    let p = t.sumset_size() as i64;
    let a = t.set_size() as i64;
    let g = g as i64;
    let mut sum = BigUint::zero();
    // Terms vanish outside m <= g + a - k - 1, so the range is finite.
    for m in (k + 1)..=(g + a - k - 1).max(k) {
        sum += binomial(m - 1 - p, g + a - m - k - 1);
    }
    TypedCount {
        sum,
        fibonacci_form: fib(g - p + a - k - 1),
        condition_holds: 3 * k <= g + a + p - 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::is_closed;
    use crate::type_space::enumerate_ak;
    use num_traits::One;

    fn td(k: u32, elems: &[u64]) -> TypeDescriptor {
        TypeDescriptor::from_elements(k, elems).expect("valid type")
    }

    #[test]
    fn f_lt_2m_examples() {
        let s = build_f_lt_2m(1, &[]).unwrap();
        assert_eq!(s, GapSemigroup::nat0());

        let s = build_f_lt_2m(3, &[4]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 5]);
        assert_eq!(s.genus(), 3);
        assert_eq!(s.classify(), SemigroupClass::FLt2M);

        let s = build_f_lt_2m(4, &[]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(s.genus(), 6);

        assert!(build_f_lt_2m(3, &[3]).is_err());
        assert!(build_f_lt_2m(3, &[6]).is_err());
        assert!(build_f_lt_2m(0, &[]).is_err());
    }

    #[test]
    fn f_lt_2m_counts() {
        assert_eq!(count_f_lt_2m(3, 4), BigUint::one());
        assert_eq!(count_f_lt_2m(5, 5), BigUint::from(4u32));
        assert_eq!(count_f_lt_2m(2, 5), BigUint::zero());
        assert_eq!(total_f_lt_2m(1), BigUint::one());
        assert_eq!(total_f_lt_2m(4), BigUint::from(5u32));
        assert_eq!(total_f_lt_2m(10), BigUint::from(89u32));
    }

    #[test]
    fn f_lt_2m_genus_accounting() {
        // Every subset of [m+1, 2m-1] yields genus 2m - 2 - |S|.
        for m in 1..=7u64 {
            let window: Vec<u64> = (m + 1..2 * m).collect();
            for bits in 0..(1u32 << window.len()) {
                let s: Vec<u64> = window
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                let sg = build_f_lt_2m(m, &s).unwrap();
                assert_eq!(sg.genus(), 2 * m - 2 - s.len() as u64);
                assert!(is_closed(&sg.gaps()));
                assert_eq!(sg.multiplicity(), if m == 1 { 1 } else { m });
                assert_eq!(sg.classify(), SemigroupClass::FLt2M);
            }
        }
    }

    #[test]
    fn typed_construction_worked_example() {
        let t = td(3, &[0, 2]);
        assert_eq!(typed_free_positions(5, &t).unwrap(), vec![9, 11]);

        let s = build_typed(5, &t, &[]).unwrap();
        assert_eq!(s.members_string(), "0,5,7,10,12,14...");
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 13);

        let s = build_typed(5, &t, &[9, 11]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 6, 8, 13]);
        assert_eq!(s.genus(), 7);

        // 10 = 2m + 0 is forced, not free.
        assert!(build_typed(5, &t, &[10]).is_err());
        assert!(build_typed(5, &t, &[8]).is_err());
        // m must exceed k.
        assert!(build_typed(3, &t, &[]).is_err());
        assert!(typed_free_positions(3, &t).is_err());
    }

    #[test]
    fn typed_construction_small_type() {
        let t = td(1, &[0]);
        let s = build_typed(2, &t, &[]).unwrap();
        assert_eq!(s.gaps(), vec![1, 3, 5]);
        assert_eq!(s.genus(), 3);
        assert_eq!(s.classify(), SemigroupClass::FBetween2M3M);
        assert_eq!(type_of(&s).unwrap(), t);

        // m = 3, k = 1: free window is [5, 6] minus the forced 6 = {5}.
        let t3 = td(1, &[0]);
        assert_eq!(typed_free_positions(3, &t3).unwrap(), vec![5]);
        let s = build_typed(3, &t3, &[5]).unwrap();
        assert_eq!(s.members_up_to(8), vec![0, 3, 5, 6, 8]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(type_of(&s).unwrap(), t3);
    }

    #[test]
    fn type_of_requires_middle_class() {
        let s = GapSemigroup::from_gaps([1]).unwrap();
        assert!(matches!(type_of(&s), Err(Error::WrongClass { .. })));
        let s = GapSemigroup::nat0();
        assert!(type_of(&s).is_err());
    }

    #[test]
    fn typed_roundtrip_and_genus_accounting() {
        // All types with k <= 5, multiplicities up to 9, every free subset.
        for k in 1..=5u32 {
            for t in enumerate_ak(k).unwrap() {
                for m in (k as u64 + 1)..=9 {
                    let free = typed_free_positions(m, &t).unwrap();
                    for bits in 0..(1u32 << free.len()) {
                        let b: Vec<u64> = free
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| bits >> i & 1 == 1)
                            .map(|(_, &x)| x)
                            .collect();
                        let s = build_typed(m, &t, &b).unwrap();
                        assert!(is_closed(&s.gaps()));
                        assert_eq!(s.multiplicity(), m);
                        assert_eq!(s.classify(), SemigroupClass::FBetween2M3M);
                        assert_eq!(type_of(&s).unwrap(), t);
                        let expected_genus = 2 * m + k as u64
                            - t.set_size() as u64
                            - t.sumset_size() as u64
                            - b.len() as u64;
                        assert_eq!(s.genus(), expected_genus);
                    }
                }
            }
        }
    }

    #[test]
    fn per_multiplicity_counts() {
        let t = td(3, &[0, 2]);
        assert_eq!(count_typed_mg(5, &t, 7).unwrap(), BigUint::one());
        assert_eq!(count_typed_mg(5, &t, 8).unwrap(), BigUint::from(2u32));
        assert_eq!(count_typed_mg(5, &t, 9).unwrap(), BigUint::one());
        assert_eq!(count_typed_mg(5, &t, 6).unwrap(), BigUint::zero());
        assert!(count_typed_mg(3, &t, 8).is_err());
    }

    #[test]
    fn per_multiplicity_counts_match_enumeration() {
        // The count formula equals the number of free subsets of each genus.
        for k in 1..=4u32 {
            for t in enumerate_ak(k).unwrap() {
                for m in (k as u64 + 1)..=8 {
                    let free = typed_free_positions(m, &t).unwrap();
                    let mut by_genus = std::collections::BTreeMap::new();
                    for bits in 0..(1u32 << free.len()) {
                        let b: Vec<u64> = free
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| bits >> i & 1 == 1)
                            .map(|(_, &x)| x)
                            .collect();
                        let g = build_typed(m, &t, &b).unwrap().genus();
                        *by_genus.entry(g).or_insert(0u64) += 1;
                    }
                    for (g, n) in by_genus {
                        assert_eq!(
                            count_typed_mg(m, &t, g).unwrap(),
                            BigUint::from(n),
                            "m={m} g={g} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn genus_counts_with_fibonacci_form() {
        let t = td(3, &[0, 2]);
        let c = count_typed_g(9, &t);
        assert_eq!(c.sum, BigUint::from(5u32));
        assert_eq!(c.fibonacci_form, fib(5));
        assert!(c.condition_holds);
        assert!(c.is_exact());

        let t = td(1, &[0]);
        let c = count_typed_g(3, &t);
        assert_eq!(c.sum, BigUint::one());
        assert_eq!(c.fibonacci_form, BigUint::one());
        assert!(c.is_exact());

        // Genus too small for the type: zero either way.
        let t = td(5, &[0]);
        let c = count_typed_g(1, &t);
        assert_eq!(c.sum, BigUint::zero());
        assert_eq!(c.fibonacci_form, BigUint::zero());

        // Large k relative to g: the closed form overshoots and the
        // sufficient condition correctly fails.
        let t = td(4, &[0]);
        let c = count_typed_g(9, &t);
        assert!(!c.condition_holds);
        assert!(c.sum <= c.fibonacci_form);
    }

    #[test]
    fn condition_implies_exact() {
        for k in 1..=6u32 {
            for t in enumerate_ak(k).unwrap() {
                for g in 1..=24u64 {
                    let c = count_typed_g(g, &t);
                    assert!(c.sum <= c.fibonacci_form);
                    if c.condition_holds {
                        assert!(c.is_exact(), "g={g} t=({t};{k})");
                    }
                }
            }
        }
    }
}
