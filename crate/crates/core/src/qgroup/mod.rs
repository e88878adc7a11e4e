//! Hopf-*-algebra structure of C[SU_q(2)]: comultiplication, counit,
//! antipode, Haar state, corepresentations and their intertwiners.

mod corep;
mod hopf;
mod spin;
mod tensor;

use crate::ncalg::{suq2, NCPoly, A, AS, G, GS};
use crate::scalars::ScalarQ;

pub use corep::{
    build_corep, build_corep_bounded, intertwiner_dim, intertwiner_dim_bounded, tensor_corep, CorepMatrix,
    DEFAULT_SPIN_BOUND,
};
pub use hopf::{
    all_words, antipode, antipode_word, comultiply, comultiply_left, comultiply_n, comultiply_right,
    comultiply_word, counit, counit_word, haar, haar_balanced, haar_on_normal_word, hopf_axiom_report, pbw_words,
    peter_weyl_pairing, HopfReport,
};
pub use spin::Spin;
pub use tensor::TensorPoly;

/// `u = [[α, −qγ*], [γ, α*]]`
pub fn fundamental_matrix() -> [[NCPoly; 2]; 2] {
    [
        [NCPoly::gen(A), NCPoly::term(-ScalarQ::q(), vec![GS])],
        [NCPoly::gen(G), NCPoly::gen(AS)],
    ]
}

/// `u u* = u* u = 1` entry-wise in normal form.
pub fn fundamental_is_unitary() -> bool {
    let sys = suq2();
    let u = fundamental_matrix();
    let ustar: Vec<Vec<NCPoly>> = (0..2).map(|i| (0..2).map(|j| sys.star(&u[j][i])).collect()).collect();
    let id = |i: usize, j: usize| if i == j { NCPoly::one() } else { NCPoly::zero() };
    (0..2).all(|i| {
        (0..2).all(|j| {
            let mut uu = NCPoly::zero();
            let mut su = NCPoly::zero();
            for k in 0..2 {
                uu = &uu + &sys.mul(&u[i][k], &ustar[k][j]);
                su = &su + &sys.mul(&ustar[i][k], &u[k][j]);
            }
            uu == id(i, j) && su == id(i, j)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[u16]) -> NCPoly {
        NCPoly::word(w.to_vec())
    }

    #[test]
    fn coproduct_examples() {
        let d = comultiply(&p(&[A]));
        let mut want = TensorPoly::zero(2);
        want.add_term(vec![vec![A], vec![A]], ScalarQ::one());
        want.add_term(vec![vec![GS], vec![G]], -ScalarQ::q());
        assert_eq!(d, want);
        assert_eq!(comultiply(&NCPoly::one()), TensorPoly::one(2));
        // Δ(γγ*) = (γ⊗α + α*⊗γ)(γ*⊗α* + α⊗γ*), leg-normalized
        let sys = suq2();
        let dg = comultiply(&p(&[G]));
        let dgs = comultiply(&p(&[GS]));
        assert_eq!(comultiply(&p(&[G, GS])), dg.mul(&dgs, sys));
        let expect = {
            let mut t = TensorPoly::zero(2);
            for (l, r) in [
                (vec![G, GS], vec![A, AS]),
                (vec![G, A], vec![A, GS]),
                (vec![AS, GS], vec![G, AS]),
                (vec![AS, A], vec![G, GS]),
            ] {
                let lhs = sys.normal_word(&l);
                let rhs = sys.normal_word(&r);
                t.add_scaled(&ScalarQ::one(), &TensorPoly::pure(&[&lhs, &rhs]));
            }
            t
        };
        assert_eq!(comultiply(&p(&[G, GS])), expect);
    }

    #[test]
    fn counit_and_antipode_on_generators() {
        assert_eq!(counit(&p(&[A])), ScalarQ::one());
        assert_eq!(counit(&p(&[G])), ScalarQ::zero());
        assert_eq!(counit(&p(&[A, A, A])), ScalarQ::one());
        assert_eq!(counit(&p(&[A, GS])), ScalarQ::zero());
        assert_eq!(antipode(&p(&[A])), p(&[AS]));
        assert_eq!(antipode(&p(&[G])), NCPoly::term(-ScalarQ::q(), vec![G]));
        assert_eq!(antipode(&NCPoly::one()), NCPoly::one());
    }

    #[test]
    fn haar_examples() {
        assert_eq!(haar(&NCPoly::one()), ScalarQ::one());
        assert_eq!(haar(&p(&[A])), ScalarQ::zero());
        assert_eq!(haar(&p(&[G, GS])), "1/(1+q^2)".parse().unwrap());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(peter_weyl_pairing(&NCPoly::one(), &NCPoly::one()), ScalarQ::one());
        assert_eq!(peter_weyl_pairing(&p(&[A]), &p(&[A])), "q^2/(1+q^2)".parse().unwrap());
        assert_eq!(peter_weyl_pairing(&p(&[A]), &p(&[G])), ScalarQ::zero());
    }

    #[test]
    fn unitarity() {
        assert!(fundamental_is_unitary());
    }

    #[test]
    fn low_spin_coreps() {
        let u0 = build_corep(Spin::ZERO).unwrap();
        assert_eq!(u0.entries, vec![vec![NCPoly::one()]]);
        let u = build_corep(Spin::HALF).unwrap();
        let f = fundamental_matrix();
        for (row, frow) in u.entries.iter().zip(&f) {
            assert_eq!(row, &frow.to_vec());
        }
        let u1 = build_corep(Spin::ONE).unwrap();
        assert_eq!(u1.dim(), 3);
        assert_eq!(u1.entries[0][0], p(&[A, A]));
        assert!(u1.satisfies_comultiplication());
        assert!(u1.satisfies_counit());
        assert!(build_corep(Spin::from_twice(7)).is_err());
    }

    #[test]
    fn intertwiner_examples() {
        let h = Spin::HALF;
        assert_eq!(intertwiner_dim(h, h, Spin::ZERO).unwrap(), 1);
        assert_eq!(intertwiner_dim(h, h, Spin::ONE).unwrap(), 1);
        assert_eq!(intertwiner_dim(h, h, Spin::integral(2)).unwrap(), 0);
    }

    #[test]
    fn pbw_word_count() {
        assert_eq!(pbw_words(0).len(), 1);
        assert_eq!(pbw_words(1).len(), 5);
        assert_eq!(pbw_words(4).len(), 55);
    }
}
