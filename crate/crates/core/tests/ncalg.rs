use proptest::prelude::*;
use qgw_core::ncalg::{check_confluence, suq2, NCPoly, Strategy as Redex, Word};
use qgw_core::scalars::ScalarQ;

fn element() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0u16..4, 0..=6), -3i64..=3, -2i64..=2), 1..5).prop_map(|ts| {
        NCPoly::from_terms(ts.into_iter().map(|(w, c, e)| (w as Word, &ScalarQ::from_int(c) * &ScalarQ::q_pow(e))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree(p in element()) {
        let sys = suq2();
        prop_assert_eq!(sys.normalize_with(&p, Redex::Leftmost), sys.normalize_with(&p, Redex::Rightmost));
    }

    #[test]
    fn normal_forms_are_normal(p in element()) {
        let sys = suq2();
        let n = sys.normalize(&p);
        prop_assert!(n.terms().all(|(w, _)| sys.is_normal_word(w)));
        prop_assert_eq!(sys.normalize(&n), n);
    }

    #[test]
    fn multiplication_is_associative(a in element(), b in element(), c in element()) {
        let sys = suq2();
        prop_assert_eq!(sys.mul(&sys.mul(&a, &b), &c), sys.mul(&a, &sys.mul(&b, &c)));
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(a in element(), b in element()) {
        let sys = suq2();
        prop_assert_eq!(sys.star(&sys.star(&a)), sys.normalize(&a));
        prop_assert_eq!(sys.star(&sys.mul(&a, &b)), sys.mul(&sys.star(&b), &sys.star(&a)));
    }

    #[test]
    fn render_parse_roundtrip_of_words(w in prop::collection::vec(0u16..4, 0..=6)) {
        let sys = suq2();
        let names = sys.alphabet().word_names(&w);
        let back: Word = names.iter().map(|n| sys.alphabet().index(n).unwrap()).collect();
        prop_assert_eq!(back, w);
    }
}

#[test]
fn suq2_has_no_unresolved_critical_pairs() {
    assert!(check_confluence(suq2(), 8).is_empty());
}
