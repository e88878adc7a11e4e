use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qgw_core::scalars::LaurentPoly;
use qgw_core::scalars::{parse_scalar, qint, ScalarQ};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn scalar() -> impl Strategy<Value = ScalarQ> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| ScalarQ::from_parts(n, d).ok())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in scalar()) {
        match a.inv() {
            Ok(i) => prop_assert!((&a * &i).is_one()),
            Err(_) => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), num in 2i64..7) {
        let q0 = rat(num, 3);
        if let (Ok(x), Ok(y)) = (a.eval_at(&q0), b.eval_at(&q0)) {
            prop_assert_eq!((&a * &b).eval_at(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval_at(&q0).unwrap(), x + y);
        }
    }

    #[test]
    fn print_parse_roundtrip(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }
}

#[test]
fn quantum_integers_at_one() {
    for n in 0..8 {
        assert_eq!(qint(n).eval_at(&rat(1, 1)).unwrap(), rat(n, 1));
    }
}
