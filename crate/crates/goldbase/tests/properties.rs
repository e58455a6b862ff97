//! Randomized properties over the exact arithmetic and the expansion
//! constructions: ring laws, order consistency, evaluation linearity,
//! round trips, and the floor closed forms against a big-integer oracle.

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;

use goldbase::beatty::{floor_mul, gbs_term, AlphaKind, GbsParams};
use goldbase::digits::DigitString;
use goldbase::quad::{weight_pow, Base, QuadInt};
use goldbase::representation::{bergman_of, canonical_of, is_admissible, normalize, Scheme};
use goldbase::silver::{is_silver_admissible, silver_expansion_of};
use goldbase::RadixGlyph;

fn any_base() -> impl Strategy<Value = Base> {
    prop_oneof![Just(Base::Phi), Just(Base::Silver)]
}

fn quad(base: Base) -> impl Strategy<Value = QuadInt> {
    (any::<i64>(), any::<i64>()).prop_map(move |(a, b)| QuadInt::new(base, a, b))
}

fn quad_in_any_base() -> impl Strategy<Value = (QuadInt, QuadInt, QuadInt)> {
    any_base().prop_flat_map(|base| (quad(base), quad(base), quad(base)))
}

fn sparse_digits() -> impl Strategy<Value = Vec<(i32, u8)>> {
    prop::collection::vec(((-12..=12i32), (0..=2u8)), 0..10)
}

proptest! {
    #[test]
    fn ring_laws_hold_exactly((x, y, z) in quad_in_any_base()) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(
            (x.clone() + y.clone()) + z.clone(),
            x.clone() + (y.clone() + z.clone())
        );
        prop_assert_eq!(
            (x.clone() * y.clone()) * z.clone(),
            x.clone() * (y.clone() * z.clone())
        );
        prop_assert_eq!(
            x.clone() * (y.clone() + z.clone()),
            x.clone() * y.clone() + x.clone() * z.clone()
        );
        prop_assert_eq!(x.clone() + (-x.clone()), QuadInt::zero(x.base()));
    }

    #[test]
    fn order_is_a_total_order_compatible_with_subtraction((x, y, _) in quad_in_any_base()) {
        let diff_sign = (x.clone() - y.clone()).signum();
        let expected = match x.cmp_exact(&y) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
        prop_assert_eq!(diff_sign, expected);
        prop_assert_eq!(x.cmp_exact(&x), Ordering::Equal);
    }

    #[test]
    fn weight_powers_multiply(base in any_base(), i in -40..=40i32, j in -40..=40i32) {
        prop_assert_eq!(
            weight_pow(base, i) * weight_pow(base, j),
            weight_pow(base, i + j)
        );
    }

    #[test]
    fn digit_strings_evaluate_linearly(
        base in any_base(),
        a in sparse_digits(),
        b in sparse_digits(),
    ) {
        let x = DigitString::from_digits(base, a);
        let y = DigitString::from_digits(base, b);
        let sum = x.add_digitwise(&y);
        prop_assert_eq!(sum.value(), x.value() + y.value());
    }

    #[test]
    fn render_parse_round_trips(base in any_base(), digits in sparse_digits()) {
        let rep = DigitString::from_digits(base, digits);
        for glyph in [RadixGlyph::MiddleDot, RadixGlyph::AsciiDot] {
            let text = rep.render(glyph);
            prop_assert_eq!(DigitString::parse(&text, base).unwrap(), rep.clone());
        }
    }

    #[test]
    fn expansions_hit_their_value_and_stay_admissible(n in 1..=200_000u64) {
        let beta = bergman_of(n);
        prop_assert!(is_admissible(&beta, Scheme::Bergman));
        prop_assert_eq!(beta.value(), QuadInt::from_int(Base::Phi, n));
        let gamma = canonical_of(n);
        prop_assert!(is_admissible(&gamma, Scheme::Canonical));
        prop_assert_eq!(gamma.value(), QuadInt::from_int(Base::Phi, n));
    }

    #[test]
    fn normalized_sums_equal_direct_expansions(n in 1..=4_000u64, m in 1..=4_000u64) {
        let sum = bergman_of(n).add_digitwise(&bergman_of(m));
        let normalized = normalize(&sum, Scheme::Bergman).unwrap();
        prop_assert_eq!(normalized, bergman_of(n + m));
        let canonical_sum = canonical_of(n).add_digitwise(&canonical_of(m));
        let normalized = normalize(&canonical_sum, Scheme::Canonical).unwrap();
        prop_assert_eq!(normalized, canonical_of(n + m));
    }

    #[test]
    fn silver_expansions_round_trip(n in 1..=20_000u64) {
        for scheme in [Scheme::Bergman, Scheme::Canonical] {
            let rep = silver_expansion_of(n, scheme);
            prop_assert!(is_silver_admissible(&rep, scheme));
            prop_assert_eq!(rep.value(), QuadInt::from_int(Base::Silver, n));
        }
    }

    #[test]
    fn floors_match_the_oracle_at_scale(n in 1..=1_000_000_000_000u64) {
        let big = BigInt::from(n);
        for (alpha, oracle) in [
            (AlphaKind::Phi, u64::try_from((&big + (5u32 * &big * &big).sqrt()) / 2).unwrap()),
            (AlphaKind::Sigma, u64::try_from(&big + (2u32 * &big * &big).sqrt()).unwrap()),
            (
                AlphaKind::SigmaPlus1,
                u64::try_from(2u32 * &big + (2u32 * &big * &big).sqrt()).unwrap(),
            ),
        ] {
            prop_assert_eq!(floor_mul(alpha, n), oracle);
        }
    }

    #[test]
    fn affine_beatty_terms_expand_correctly(
        p in -6..=6i64,
        q in -6..=6i64,
        r in -12..=12i64,
        n in 1..=100_000u64,
    ) {
        let params = GbsParams::new(p, q, r, AlphaKind::Phi);
        let expect = p as i128 * floor_mul(AlphaKind::Phi, n) as i128
            + q as i128 * n as i128
            + r as i128;
        prop_assert_eq!(gbs_term(params, n) as i128, expect);
    }
}
