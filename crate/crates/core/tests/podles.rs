use qgw_core::ncalg::{suq2, NCPoly, A, AS, G, GS};
use qgw_core::podles::*;
use qgw_core::qgroup::{pbw_words, Spin};

fn weight_zero_words(degree: usize) -> Vec<NCPoly> {
    pbw_words(degree).into_iter().filter(|w| word_weight(w) == 0).map(NCPoly::word).collect()
}

#[test]
fn adjoint_action_is_a_module_action() {
    let sys = suq2();
    let gens = suq2_generators();
    for x in weight_zero_words(2) {
        assert_eq!(adjoint_action(&NCPoly::one(), &x), sys.normalize(&x));
        for h in &gens {
            for k in &gens {
                let hk = sys.mul(h, k);
                assert_eq!(adjoint_action(&hk, &x), adjoint_action(h, &adjoint_action(k, &x)));
            }
        }
    }
}

#[test]
fn torus_projection_splits_elements() {
    let sys = suq2();
    for w in pbw_words(4) {
        let x = NCPoly::word(w.clone());
        let parts = torus_project(&x);
        assert_eq!(parts.len(), 1);
        let (&k, p) = parts.iter().next().unwrap();
        assert_eq!(k, word_weight(&w));
        assert!(in_line_bundle(p, k));
        for (g, shift) in [(A, 1), (AS, -1), (G, 1), (GS, -1)] {
            let y = sys.mul(&NCPoly::gen(g), &x);
            assert!(y.is_zero() || in_line_bundle(&y, k + shift));
        }
    }
    let mixed = &NCPoly::gen(A) + &NCPoly::gen(AS);
    assert_eq!(torus_project(&mixed).len(), 2);
    assert!(weight_formula_holds(4));
}

#[test]
fn bundle_products() {
    for m in -2..=2 {
        for n in -2..=2 {
            assert!(bundle_product_check(m, n, 3), "{m} {n}");
        }
    }
}

#[test]
fn bundle_generators_span() {
    for k in -1..=1 {
        assert!(bundle_generators_check(k, 3).unwrap(), "k = {k}");
    }
    assert!(bundle_generators_check(2, 3).is_err());
}

#[test]
fn idempotents_are_projections() {
    for k in [-1, 1] {
        assert!(is_projection(&projective_idempotent(k).unwrap()));
    }
    assert!(projective_idempotent(3).is_err());
}

#[test]
fn yetter_drinfeld_compatibility() {
    assert!(yd_compatibility_check(&suq2_generators(), 3));
    let x = NCPoly::word(vec![G, GS]);
    assert!(yd_identity_holds(&suq2().mul(&NCPoly::gen(A), &NCPoly::gen(G)), &x));
}

#[test]
fn isotypic_profiles() {
    let bound = Spin::from_twice(5);
    let plus = isotypic_profile(1, bound).unwrap();
    let minus = isotypic_profile(-1, bound).unwrap();
    assert_eq!(plus.multiplicities, minus.multiplicities);
    for k in -2..=2 {
        let p = isotypic_profile(k, bound).unwrap();
        for l in Spin::up_to(bound) {
            assert_eq!(p.multiplicity(l), IsotypicProfile::closed_form(k, l), "k = {k}, l = {l}");
        }
    }
}
