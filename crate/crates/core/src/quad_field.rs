//! Exact arithmetic in Q(phi), phi the golden ratio, with guaranteed
//! correctly-rounded decimal output.
//!
//! Values are a + b*phi with rational a, b; the reduction rule is
//! phi^2 = phi + 1, so (a + b*phi)(c + d*phi) = (ac + bd) + (ad + bc + bd)phi.
//! Powers use phi^n = F(n)*phi + F(n-1) over the doubly-infinite Fibonacci
//! extension F(-n) = (-1)^(n+1) F(n). That extension exists only inside this
//! module; the rest of the crate uses the counting convention fib(n <= 0) = 0.
//!
//! Decimal rendering is exact: a rational value is rounded half-to-even
//! directly; an irrational value (b != 0) is bracketed by rational bounds
//! from integer square roots of 5, and the precision of the bracket is
//! doubled until both ends round to the same string. An irrational number is
//! never exactly at a rounding boundary, so the loop terminates.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::type_space::ExponentHistogram;

/// An element a + b*phi of Q(phi), exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticValue {
    a: BigRational,
    b: BigRational,
}

/// Doubly-infinite Fibonacci numbers: F(1) = F(2) = 1, F(0) = 0, and
/// F(-n) = (-1)^(n+1) F(n). Local to this module by design.
fn fib_extended(n: i64) -> BigInt {
    let mag = n.unsigned_abs();
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if mag == 0 {
        return a;
    }
    for _ in 1..mag {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    if n > 0 || mag % 2 == 1 {
        b
    } else {
        -b
    }
}

/// phi^n as an exact element of Q(phi), any integer n.
pub fn phi_pow(n: i64) -> QuadraticValue {
    QuadraticValue {
        a: BigRational::from_integer(fib_extended(n - 1)),
        b: BigRational::from_integer(fib_extended(n)),
    }
}

impl QuadraticValue {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadraticValue { a, b }
    }

    /// The rational a/b + (c/d)*phi, for test and table literals.
    pub fn from_parts(a: (i64, i64), b: (i64, i64)) -> Self {
        QuadraticValue {
            a: BigRational::new(BigInt::from(a.0), BigInt::from(a.1)),
            b: BigRational::new(BigInt::from(b.0), BigInt::from(b.1)),
        }
    }

    pub fn zero() -> Self {
        QuadraticValue {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        QuadraticValue {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn phi() -> Self {
        QuadraticValue {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// sqrt(5) = 2*phi - 1.
    pub fn sqrt5() -> Self {
        QuadraticValue {
            a: BigRational::from_integer(BigInt::from(-1)),
            b: BigRational::from_integer(BigInt::from(2)),
        }
    }

    /// 1/sqrt(5) = (2*phi - 1)/5.
    pub fn inv_sqrt5() -> Self {
        QuadraticValue {
            a: BigRational::new(BigInt::from(-1), BigInt::from(5)),
            b: BigRational::new(BigInt::from(2), BigInt::from(5)),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        QuadraticValue {
            a: r,
            b: BigRational::zero(),
        }
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n.clone())))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn phi_coefficient(&self) -> &BigRational {
        &self.b
    }

    /// Comparison against zero, exact. With p = a + b/2 and q = b/2 the
    /// value is p + q*sqrt(5); mixed signs reduce to comparing p^2 and 5q^2.
    pub fn sign(&self) -> Ordering {
        let two = BigRational::from_integer(BigInt::from(2));
        let p = &self.a + &self.b / &two;
        let q = &self.b / &two;
        match (p.cmp(&BigRational::zero()), q.cmp(&BigRational::zero())) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) => {
                // positive iff p^2 > 5 q^2
                (&p * &p).cmp(&(&q * &q * BigRational::from_integer(BigInt::from(5))))
            }
            (Ordering::Less, Ordering::Greater) => {
                (&q * &q * BigRational::from_integer(BigInt::from(5))).cmp(&(&p * &p))
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Decimal string with exactly `places` fractional digits, correctly
    /// rounded (ties to even). `places` is capped at 50 by contract.
    pub fn to_decimal(&self, places: u32) -> String {
        assert!(places <= 50, "at most 50 decimal places are supported");
        let two = BigRational::from_integer(BigInt::from(2));
        let p = &self.a + &self.b / &two;
        let q = &self.b / &two;
        if q.is_zero() {
            return format_rational(&p, places);
        }
        // Bracket sqrt(5) between s/10^prec and (s+1)/10^prec and tighten
        // until both ends of the value bracket round identically.
        let mut guard = 10u32;
        loop {
            let prec = places + guard;
            let scale = BigInt::from(10u32).pow(prec);
            let five_scaled: BigUint = (BigInt::from(5) * &scale * &scale)
                .to_biguint()
                .expect("positive");
            let s = BigInt::from(five_scaled.sqrt());
            let s1 = &s + BigInt::one();
            let lo_root = BigRational::new(s.clone(), scale.clone());
            let hi_root = BigRational::new(s1, scale.clone());
            let (lo, hi) = if q.is_positive() {
                (&p + &q * &lo_root, &p + &q * &hi_root)
            } else {
                (&p + &q * &hi_root, &p + &q * &lo_root)
            };
            let lo_s = format_rational(&lo, places);
            let hi_s = format_rational(&hi, places);
            if lo_s == hi_s {
                return lo_s;
            }
            guard = guard.checked_mul(2).expect("guard growth");
            assert!(guard <= 1 << 20, "decimal bracketing failed to converge");
        }
    }
}

/// Exact round-half-to-even rendering of a rational with `places` digits.
fn format_rational(r: &BigRational, places: u32) -> String {
    let negative = r.is_negative();
    let r = r.abs();
    let scale = BigInt::from(10u32).pow(places);
    let scaled_num = r.numer() * &scale;
    let (mut q, rem) = scaled_num.div_rem(r.denom());
    match (&rem * BigInt::from(2)).cmp(r.denom()) {
        Ordering::Less => {}
        Ordering::Greater => q += 1,
        Ordering::Equal => {
            if q.is_odd() {
                q += 1;
            }
        }
    }
    let digits = q.to_string();
    let width = places as usize + 1;
    let padded = if digits.len() < width {
        format!("{}{}", "0".repeat(width - digits.len()), digits)
    } else {
        digits
    };
    let split = padded.len() - places as usize;
    let body = if places == 0 {
        padded
    } else {
        format!("{}.{}", &padded[..split], &padded[split..])
    };
    // Never render a negative zero.
    if negative && !q.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

impl Add for QuadraticValue {
    type Output = QuadraticValue;
    fn add(self, rhs: QuadraticValue) -> QuadraticValue {
        QuadraticValue {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for QuadraticValue {
    fn add_assign(&mut self, rhs: QuadraticValue) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for QuadraticValue {
    type Output = QuadraticValue;
    fn sub(self, rhs: QuadraticValue) -> QuadraticValue {
        QuadraticValue {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        QuadraticValue {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, rhs: QuadraticValue) -> QuadraticValue {
        &self * &rhs
    }
}

impl Mul for &QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, rhs: &QuadraticValue) -> QuadraticValue {
        let bd = &self.b * &rhs.b;
        QuadraticValue {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl PartialOrd for QuadraticValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).sign())
    }
}

/// Evaluate the golden-ratio series bound from a weight-exponent histogram:
/// phi/sqrt(5) + (1/sqrt(5)) * sum_c H[c] * phi^(-c).
pub fn bound_value(h: &ExponentHistogram) -> QuadraticValue {
    // Accumulate sum H[c]*phi^(-c) with integer coefficients u + v*phi.
    let mut u = BigInt::zero();
    let mut v = BigInt::zero();
    for (c, count) in h.iter() {
        let count = BigInt::from(count.clone());
        u += fib_extended(-(c as i64) - 1) * &count;
        v += fib_extended(-(c as i64)) * count;
    }
    let series = QuadraticValue {
        a: BigRational::from_integer(u),
        b: BigRational::from_integer(v),
    };
    &(QuadraticValue::phi() + series) * &QuadraticValue::inv_sqrt5()
}
