use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qgw_core::ktheory::*;
use qgw_core::linalg::rank;
use qgw_core::qgroup::{intertwiner_dim, Spin};
use qgw_core::scalars::LaurentPoly;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

fn to_int(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k×k minors.
fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
            g = g.gcd(&IntMatrix::from_rows(sub).unwrap().det().unwrap());
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_correct(rows in matrix()) {
        let m = to_int(&rows);
        let f = smith_normal_form(&m);
        prop_assert_eq!(f.u.mul(&m).unwrap().mul(&f.v).unwrap(), f.s.clone());
        prop_assert!(f.u.det().unwrap().abs().is_one());
        prop_assert!(f.v.det().unwrap().abs().is_one());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert!(i == j || f.s.get(i, j).is_zero());
            }
        }
        let d = f.invariant_factors();
        prop_assert!(d.iter().all(|x| x.is_positive()));
        prop_assert!(d.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        let q: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        prop_assert_eq!(f.rank(), rank(&q, m.cols()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn invariant_factors_match_minors(rows in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))) {
        let m = to_int(&rows);
        let d = smith_normal_form(&m).invariant_factors();
        let mut prod = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            let dk = determinantal_divisor(&m, k);
            if k <= d.len() {
                prod *= &d[k - 1];
                prop_assert_eq!(&dk, &prod);
            } else {
                prop_assert!(dk.is_zero());
            }
        }
    }
}

#[test]
fn boundary_family() {
    for n in 3..=10i64 {
        let k = resolve_five_term(&IntMatrix::from_i64(&[&[n, -n], &[-n, n]]));
        assert_eq!(k.k0, AbelianGroup::new(1, &[BigInt::from(n)]).unwrap());
        assert_eq!(k.k1, AbelianGroup::free(1));
        assert_eq!(k.k0.to_string(), format!("Z^1 + Z/{n}"));
    }
}

#[test]
fn pimsner_voiculescu_examples() {
    let circle = pv_solve(&IntMatrix::identity(1), &IntMatrix::zero(0, 0)).unwrap();
    assert_eq!((circle.k0, circle.k1), (AbelianGroup::free(1), AbelianGroup::free(1)));
    let flip = pv_solve(&IntMatrix::from_i64(&[&[-1]]), &IntMatrix::zero(0, 0)).unwrap();
    assert_eq!((flip.k0, flip.k1), (AbelianGroup::new(0, &[BigInt::from(2)]).unwrap(), AbelianGroup::trivial()));
}

#[test]
fn fusion_agrees_with_intertwiners() {
    let top = Spin::from_twice(3);
    for l1 in Spin::up_to(top) {
        for l2 in Spin::up_to(top) {
            let f = fusion(l1, l2);
            for l3 in Spin::up_to(Spin::from_twice(6)) {
                let expect = usize::from(f.contains(&l3));
                assert_eq!(intertwiner_dim(l1, l2, l3).unwrap(), expect, "{l1} ⊗ {l2} → {l3}");
            }
        }
    }
}

#[test]
fn restriction_is_multiplicative() {
    for l1 in Spin::up_to(Spin::from_twice(6)) {
        for l2 in Spin::up_to(Spin::from_twice(6)) {
            let sum = fusion(l1, l2)
                .into_iter()
                .fold(LaurentPoly::zero(), |acc, l| &acc + &restriction_character(l));
            assert_eq!(&restriction_character(l1) * &restriction_character(l2), sum);
        }
    }
}

#[test]
fn integral_labels() {
    let integral: Vec<Spin> = (0..=4).map(Spin::integral).collect();
    assert!(integral_labels_closed(&integral));
    assert!(!integral_labels_closed(&[Spin::HALF]));
}
