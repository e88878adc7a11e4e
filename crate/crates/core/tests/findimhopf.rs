use num_rational::BigRational;
use proptest::prelude::*;
use qgw_core::findimhopf::*;
use qgw_core::findimhopf::zoo;
use qgw_core::scalars::Field;

type Q = BigRational;

#[test]
fn zoo_instances_are_hopf_algebras() {
    let hs = zoo::zoo();
    assert_eq!(hs.len(), 7);
    for h in &hs {
        let r = verify_hopf(h);
        assert!(r.passed(), "{}: {:?}", h.name, r.failures);
    }
}

#[test]
fn bicharacters_and_codoubles() {
    for h in zoo::zoo() {
        let w = bicharacter(&h).unwrap();
        let r = verify_bicharacter(&w);
        assert!(r.passed(), "{}: {:?}", h.name, r.failures);
        let d = codouble(&h).unwrap();
        assert_eq!(d.dim(), h.dim() * h.dim());
        assert!(verify_hopf(&d).passed(), "{}", d.name);
        let (pi, pi_hat) = codouble_projections(&h);
        assert!(verify_hopf_morphism(&d, &h, &pi).passed());
        assert!(verify_hopf_morphism(&d, &dual_cop(&h).unwrap(), &pi_hat).passed());
    }
}

#[test]
fn double_dual_is_op_cop() {
    for h in zoo::zoo() {
        let dd = dual_cop(&dual_cop(&h).unwrap()).unwrap();
        let oc = h.op_cop();
        assert_eq!((dd.algebra, dd.comult, dd.counit, dd.antipode), (oc.algebra, oc.comult, oc.counit, oc.antipode));
    }
}

#[test]
fn yd_codouble_roundtrips_on_random_comodules() {
    let hs = zoo::zoo();
    for seed in 0..20u64 {
        let h = &hs[seed as usize % hs.len()];
        let c = random_codouble_comodule(h, 1 + seed as usize % 3, seed).unwrap();
        let m = codouble_to_yd(h, &c).unwrap();
        assert!(verify_yd(h, &m), "{} seed {seed}", h.name);
        assert_eq!(yd_to_codouble(h, &m).unwrap(), c, "{} seed {seed}", h.name);
        assert_eq!(codouble_to_yd(h, &yd_to_codouble(h, &m).unwrap()).unwrap(), m);
    }
}

#[test]
fn adjoint_modules_are_yd() {
    for h in zoo::zoo() {
        let m = adjoint_yd(&h);
        assert!(verify_yd(&h, &m), "{}", h.name);
        let c = yd_to_codouble(&h, &m).unwrap();
        let d = codouble(&h).unwrap();
        assert!(verify_comodule(&d, &c.coaction).passed());
    }
}

#[test]
fn braided_products_on_zoo() {
    for h in zoo::zoo() {
        let a = YDAlgebra { algebra: h.algebra.clone(), module: adjoint_yd(&h) };
        let b = ComoduleAlgebra { algebra: h.algebra.clone(), comodule: Comodule::regular(&h) };
        let p = braided_product(&h, &a, &b).unwrap();
        assert!(p.verify().passed(), "{}", h.name);
        let trivial = ComoduleAlgebra { algebra: h.algebra.clone(), comodule: Comodule::trivial(&h, h.dim()) };
        assert_eq!(braided_product(&h, &a, &trivial).unwrap(), h.algebra.tensor(&h.algebra), "{}", h.name);
    }
}

#[test]
fn cocommutative_commutative_case_is_plain() {
    for n in 2..=4 {
        let h = zoo::group_algebra(n);
        let a = YDAlgebra { algebra: h.algebra.clone(), module: adjoint_yd(&h) };
        let b = ComoduleAlgebra { algebra: h.algebra.clone(), comodule: Comodule::regular(&h) };
        assert_eq!(braided_product(&h, &a, &b).unwrap(), h.algebra.tensor(&h.algebra));
    }
}

#[test]
fn json_roundtrip_of_codouble() {
    let d = codouble(&zoo::sweedler()).unwrap();
    assert_eq!(FinHopf::<Q>::from_json(&d.to_json()).unwrap(), d);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sweedler_antipode_is_anti_multiplicative(a in prop::collection::vec(-3i64..=3, 4), b in prop::collection::vec(-3i64..=3, 4)) {
        let h = zoo::sweedler();
        let v = |xs: &[i64]| -> Vector<Q> {
            xs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, Q::from_i64(c))).collect()
        };
        let (x, y) = (v(&a), v(&b));
        let left = h.apply_antipode(&h.mul(&x, &y));
        let right = h.mul(&h.apply_antipode(&y), &h.apply_antipode(&x));
        prop_assert_eq!(left, right);
    }
}
