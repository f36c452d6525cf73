//! Exact integer arithmetic under the counting conventions used everywhere
//! in this crate: `fib(n) = 0` for `n <= 0` with `fib(1) = fib(2) = 1`, and
//! `binomial(n, r) = 0` unless `0 <= r <= n`. Both conventions are
//! load-bearing — the counting formulas rely on out-of-range terms
//! vanishing — so they live here and nowhere else.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Fibonacci number with `fib(1) = fib(2) = 1` and `fib(n) = 0` for `n <= 0`.
pub fn fib(n: i64) -> BigUint {
    if n <= 0 {
        return BigUint::zero();
    }
    let mut a = BigUint::zero(); // fib(0)
    let mut b = BigUint::one(); // fib(1)
    for _ in 1..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// Binomial coefficient with `binomial(n, r) = 0` unless `0 <= r <= n`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if r < 0 || r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    // Multiply and divide alternately; every prefix product is divisible.
    for i in 1..=r {
        acc *= n - r + i;
        acc /= i;
    }
    acc
}

/// Truncated Fibonacci-diagonal sums `sum_{i=0}^{j} binomial(n - i, i)`.
///
/// The full diagonal (`j = floor(n/2)`) equals `fib(n + 1)`; the truncated
/// prefixes are what the exact per-type counts need.
pub(crate) struct DiagonalSums {
    rows: Vec<Vec<BigUint>>, // rows[n][j], 0 <= j <= n/2
}

impl DiagonalSums {
    pub(crate) fn new(n_max: usize) -> Self {
        let mut rows = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = Vec::with_capacity(n / 2 + 1);
            let mut acc = BigUint::zero();
            for j in 0..=(n / 2) {
                acc += binomial((n - j) as i64, j as i64);
                row.push(acc.clone());
            }
            debug_assert_eq!(acc, fib(n as i64 + 1));
            rows.push(row);
        }
        DiagonalSums { rows }
    }

    /// `sum_{i=0}^{min(j_cap, n/2)} binomial(n - i, i)`, zero when `n` or
    /// `j_cap` is negative.
    pub(crate) fn prefix(&self, n: i64, j_cap: i64) -> BigUint {
        if n < 0 || j_cap < 0 {
            return BigUint::zero();
        }
        let n = n as usize;
        let j = (j_cap as usize).min(n / 2);
        self.rows[n][j].clone()
    }
}
