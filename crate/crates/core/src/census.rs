//! Genus-by-genus counting: the exact type-sum count t_g, its Fibonacci
//! companions t_lower and t_upper, the cumulative bound table, reference
//! baseline sequences, and CSV row formatting for census output.
//!
//! Every count here decomposes semigroups by Frobenius class. The f < 2m
//! class contributes fib(g + 1) exactly. Each 2m < f < 3m semigroup is
//! tagged by its type (A; k) and counted per type:
//!
//!   exact   sum over m > k of binomial(m - 1 - P, g + |A| - m - k - 1),
//!   bound   fib(g - c) with c the type's weight exponent,
//!
//! and the bound is exact for every type once k <= g/3, which is what makes
//! t_lower a true lower bound and t_upper a true upper bound. The exact sum
//! per type is a truncated diagonal prefix (see `arith::DiagonalSums`), so
//! only the joint (|A|, P) tally of each level is needed, never the sets.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{fib, DiagonalSums};
use crate::error::{Error, Result};
use crate::limits::{Limits, MAX_K};
use crate::quad_field::{bound_value, phi_pow, QuadraticValue};
use crate::type_space::{ak_profile, ExponentHistogram};

/// Exact number of genus-g numerical semigroups with f < 3m:
/// fib(g + 1) for the f < 2m class plus the full type sum.
pub fn t_exact(g: u64, limits: &Limits) -> Result<BigUint> {
    guard_genus(g, limits)?;
    Ok(fib(g as i64 + 1) + typed_exact_sum(g, u32::MAX)?)
}

/// Lower bound for t_g: the type sum truncated to levels k <= g/3, where
/// every Fibonacci form is exact. Never exceeds `t_exact`.
pub fn t_lower(g: u64, limits: &Limits) -> Result<BigUint> {
    guard_genus(g, limits)?;
    Ok(fib(g as i64 + 1) + fib_weighted_sum(g, (g / 3).min(u32::MAX as u64) as u32)?)
}

/// Upper bound for t_g: every level weighted by its Fibonacci form, which
/// dominates the exact per-type count. Never below `t_exact`.
pub fn t_upper(g: u64, limits: &Limits) -> Result<BigUint> {
    guard_genus(g, limits)?;
    Ok(fib(g as i64 + 1) + fib_weighted_sum(g, u32::MAX)?)
}

/// Sum over levels 1..=k_max and types (A; k) of the exact genus-g count
/// binomial(m - 1 - P, g + |A| - m - k - 1) summed over m > k. Levels whose
/// terms all vanish are skipped, so passing u32::MAX means "all levels".
pub fn typed_exact_sum(g: u64, k_max: u32) -> Result<BigUint> {
    let cap = level_cap((k_max as u64).min(last_exact_level(g)))?;
    let diag = DiagonalSums::new(g.saturating_sub(3) as usize);
    let mut acc = BigUint::zero();
    for k in 1..=cap {
        acc += exact_sum_at_level(g, k, &diag);
    }
    Ok(acc)
}

/// One level of `typed_exact_sum`: the per-type sum over m telescopes into
/// a diagonal prefix with n = g + |A| - P - k - 2 and cutoff g + |A| - 2k - 2.
fn exact_sum_at_level(g: u64, k: u32, diag: &DiagonalSums) -> BigUint {
    let (g, k) = (g as i64, k as i64);
    let mut acc = BigUint::zero();
    for (a, p, count) in ak_profile(k as u32).entries() {
        let (a, p) = (a as i64, p as i64);
        let term = diag.prefix(g + a - p - k - 2, g + a - 2 * k - 2);
        if !term.is_zero() {
            acc += term * count;
        }
    }
    acc
}

/// Sum of fib(g - c) over all types with level k <= k_max, c the weight
/// exponent. Levels past g - 2 contribute nothing and are skipped.
fn fib_weighted_sum(g: u64, k_max: u32) -> Result<BigUint> {
    let cap = level_cap((k_max as u64).min(g.saturating_sub(2)))?;
    let mut acc = BigUint::zero();
    for k in 1..=cap {
        for (c, count) in ak_profile(k).exponent_counts().iter().enumerate() {
            if *count > 0 {
                acc += fib(g as i64 - c as i64) * *count;
            }
        }
    }
    Ok(acc)
}

/// Largest level that can contribute to the exact genus-g sum: some type
/// must satisfy g + |A| - 2k - 2 >= 0 and |A| <= floor((k+1)/2) + [k = 1].
fn last_exact_level(g: u64) -> u64 {
    (1..=g)
        .take_while(|&k| 2 * k + 2 <= g + k.div_ceil(2))
        .last()
        .unwrap_or(0)
}

/// Levels are stored as 64-bit masks, so k beyond MAX_K cannot be handled.
fn level_cap(wanted: u64) -> Result<u32> {
    if wanted > MAX_K as u64 {
        return Err(Error::EnumerationTooLarge {
            what: "prefix-set level",
            requested: wanted,
            ceiling: MAX_K as u64,
        });
    }
    Ok(wanted as u32)
}

fn guard_genus(g: u64, limits: &Limits) -> Result<()> {
    if g > limits.formula_genus as u64 {
        return Err(Error::EnumerationTooLarge {
            what: "census genus",
            requested: g,
            ceiling: limits.formula_genus as u64,
        });
    }
    Ok(())
}

/// Partial sums of the asymptotic lower bound for t_g / phi^g: row k_M is
/// phi/sqrt5 plus the histogram of weight exponents over levels k <= k_M,
/// each exponent c weighted by phi^(-c) / sqrt5. The rows increase and
/// converge to the limiting constant.
pub fn bound_table(k_max: u32, limits: &Limits) -> Result<Vec<(u32, QuadraticValue)>> {
    let ceiling = limits.histogram_k.min(MAX_K);
    if k_max > ceiling {
        return Err(Error::EnumerationTooLarge {
            what: "bound-table k_max",
            requested: k_max as u64,
            ceiling: ceiling as u64,
        });
    }
    let mut h = ExponentHistogram::new();
    let mut rows = Vec::with_capacity(k_max as usize + 1);
    rows.push((0, bound_value(&h)));
    for k in 1..=k_max {
        for (c, count) in ak_profile(k).exponent_counts().iter().enumerate() {
            if *count > 0 {
                h.add(c as u32, BigUint::from(*count));
            }
        }
        rows.push((k, bound_value(&h)));
    }
    Ok(rows)
}

/// Reference counts to compare a census against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Baselines {
    /// 2 fib(g): counts the doublings and double-plus-ones of a semigroup.
    pub doubling_lower: BigUint,
    /// 1 + 3 * 2^(g-3), rounded half-to-even below g = 3.
    pub coordinate_upper: BigUint,
    /// Catalan number C(2g, g) / (g + 1): gap sets without the closure law.
    pub dyck_upper: BigUint,
}

/// The three closed-form baselines at genus g.
pub fn baselines(g: u64) -> Baselines {
    let coordinate_upper = match g {
        // 1 + 3/8 and 1 + 3/4 round to 1 and 2; 1 + 3/2 rounds to 2.
        0 => BigUint::from(1u32),
        1 | 2 => BigUint::from(2u32),
        _ => BigUint::from(1u32) + BigUint::from(3u32) * (BigUint::from(1u32) << (g - 3)),
    };
    let two_g = crate::arith::binomial(2 * g as i64, g as i64);
    Baselines {
        doubling_lower: BigUint::from(2u32) * fib(g as i64),
        coordinate_upper,
        dyck_upper: two_g / BigUint::from(g + 1),
    }
}

/// Coefficients a_0..a_max of the rational generating function counting
/// gap sets whose members satisfy the closure law only up to the Frobenius
/// number on pairs below it. The numerator is
/// t (1 - t^2 - 2t^3 - 3t^4 + t^5 + 2t^6 + 3t^7 + 3t^8 + t^9) and the
/// denominator is the product below; a_0 = 0.
pub fn relaxed_closure_series(g_max: u64) -> Vec<BigUint> {
    const NUMERATOR: [i64; 11] = [0, 1, 0, -1, -2, -3, 1, 2, 3, 3, 1];
    let factors: [&[i64]; 5] = [
        &[1, 1],
        &[1, -1],
        &[1, -1, -1],
        &[1, -1, 0, -1],
        &[1, 0, 0, -1, -2, -2, -1],
    ];
    let mut den = vec![1i64];
    for f in factors {
        let mut next = vec![0i64; den.len() + f.len() - 1];
        for (i, &x) in den.iter().enumerate() {
            for (j, &y) in f.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        den = next;
    }
    debug_assert_eq!(den[0], 1, "series division needs a unit constant term");

    let mut a: Vec<BigInt> = Vec::with_capacity(g_max as usize + 1);
    for i in 0..=g_max as usize {
        let mut v = BigInt::from(*NUMERATOR.get(i).unwrap_or(&0));
        for j in 1..den.len().min(i + 1) {
            v -= den[j] * &a[i - j];
        }
        a.push(v);
    }
    a.into_iter()
        .map(|v| v.to_biguint().expect("coefficients are nonnegative"))
        .collect()
}

/// Header of the census CSV produced by `csv_line`.
pub const CENSUS_CSV_HEADER: &str = "g,n_g,t_g,n_phi,t_phi,t_over_n";

/// One census row: the full count n_g (when a tree walk supplied it), the
/// type-sum count t_g, and their scaled forms. Optional fields print empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub genus: u64,
    pub n: Option<BigUint>,
    pub t: BigUint,
    pub n_phi: Option<String>,
    pub t_phi: String,
    pub t_over_n: Option<String>,
}

impl CensusRow {
    /// Format as a line under `CENSUS_CSV_HEADER`.
    pub fn csv_line(&self) -> String {
        let opt = |s: Option<String>| s.unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.genus,
            opt(self.n.as_ref().map(|n| n.to_string())),
            self.t,
            opt(self.n_phi.clone()),
            self.t_phi,
            opt(self.t_over_n.clone()),
        )
    }
}

/// value / phi^genus, correctly rounded to `places` decimals.
pub fn phi_ratio(value: &BigUint, genus: u64, places: u32) -> String {
    (QuadraticValue::from_biguint(value) * phi_pow(-(genus as i64))).to_decimal(places)
}

/// num / den as a correctly rounded decimal string.
pub fn rational_ratio(num: &BigUint, den: &BigUint, places: u32) -> String {
    let r = BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
    QuadraticValue::from_rational(r).to_decimal(places)
}
