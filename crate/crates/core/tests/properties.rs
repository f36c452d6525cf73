//! Randomized invariants for the constructions and the exact arithmetic.

use proptest::prelude::*;
use semigroup_census::construction::{build_f_lt_2m, build_typed, type_of, typed_free_positions};
use semigroup_census::quad_field::{phi_pow, QuadraticValue};
use semigroup_census::type_space::enumerate_ak;
use semigroup_census::{is_closed, SemigroupClass};

/// Closure checked from the definition, on explicit member lists.
fn naive_is_closed(gaps: &[u64]) -> bool {
    if gaps.contains(&0) {
        return false;
    }
    let f = match gaps.iter().max() {
        Some(&f) => f,
        None => return true,
    };
    let members: Vec<u64> = (0..=f).filter(|x| !gaps.contains(x)).collect();
    for &a in &members {
        for &b in &members {
            if a > 0 && b > 0 && a + b <= f && gaps.contains(&(a + b)) {
                return false;
            }
        }
    }
    true
}

/// Subset of `window` selected by the low bits of `bits`.
fn pick(window: &[u64], bits: u32) -> Vec<u64> {
    window
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &x)| x)
        .collect()
}

proptest! {
    #[test]
    fn closure_test_matches_naive_definition(raw in proptest::collection::vec(0u64..24, 0..10)) {
        let mut gaps = raw.clone();
        gaps.sort_unstable();
        gaps.dedup();
        prop_assert_eq!(is_closed(&gaps), naive_is_closed(&gaps));
    }

    #[test]
    fn small_frobenius_family_is_always_valid(m in 1u64..=16, bits in any::<u32>()) {
        let window: Vec<u64> = (m + 1..2 * m).collect();
        let s = pick(&window, bits);
        let sg = build_f_lt_2m(m, &s).unwrap();
        prop_assert!(is_closed(&sg.gaps()));
        prop_assert_eq!(sg.genus(), 2 * m - 2 - s.len() as u64);
        prop_assert_eq!(sg.classify(), SemigroupClass::FLt2M);
        prop_assert!(sg.frobenius() < 2 * sg.multiplicity() as i64);
    }

    #[test]
    fn typed_family_round_trips(
        k in 1u32..=6,
        pick_type in any::<u64>(),
        m_off in 1u64..=8,
        bits in any::<u32>(),
    ) {
        let types: Vec<_> = enumerate_ak(k).unwrap().collect();
        let t = types[(pick_type % types.len() as u64) as usize];
        let m = k as u64 + m_off;
        let free = typed_free_positions(m, &t).unwrap();
        let b = pick(&free, bits);
        let sg = build_typed(m, &t, &b).unwrap();
        prop_assert!(is_closed(&sg.gaps()));
        prop_assert_eq!(sg.multiplicity(), m);
        prop_assert_eq!(sg.frobenius() as u64, 2 * m + t.k() as u64);
        prop_assert_eq!(sg.classify(), SemigroupClass::FBetween2M3M);
        prop_assert_eq!(type_of(&sg).unwrap(), t);
        let expected_genus = 2 * m + t.k() as u64
            - t.set_size() as u64
            - t.sumset_size() as u64
            - b.len() as u64;
        prop_assert_eq!(sg.genus(), expected_genus);
    }

    #[test]
    fn golden_ratio_powers_multiply_by_adding_exponents(a in -40i64..=40, b in -40i64..=40) {
        prop_assert_eq!(phi_pow(a) * phi_pow(b), phi_pow(a + b));
    }

    #[test]
    fn decimal_output_is_correctly_rounded(num in -9999i64..=9999, den in 1i64..=999, places in 0u32..=8) {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::{One, Signed};

        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        let s = QuadraticValue::from_rational(r.clone()).to_decimal(places);
        // Parse the decimal back and check it is within half an ulp.
        let parsed = BigRational::new(
            s.replace('.', "").parse::<BigInt>().unwrap(),
            BigInt::from(10u32).pow(places),
        );
        let half_ulp = BigRational::new(BigInt::one(), BigInt::from(2) * BigInt::from(10u32).pow(places));
        let diff = (parsed - r).abs();
        prop_assert!(diff <= half_ulp, "{s} vs {num}/{den}: off by {diff}");
    }
}
