//! Finite-dimensional Hopf algebras given by structure tensors: duals,
//! the canonical element `w`, the Drinfeld codouble, Yetter-Drinfeld
//! modules and braided tensor products.
//!
//! Conventions: `mult[i][j]` is `e_i e_j`, `comult[k]` is `Δ(e_k)`,
//! `antipode[i]` is `S(e_i)`. The dual basis satisfies `e^j(e_i) = δ_ij`.

mod braided;
mod double;
mod json;
mod tensor;
mod yd;
pub mod zoo;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::Field;

pub use braided::{braided_product, Algebra, ComoduleAlgebra, YDAlgebra};
pub use double::{
    bicharacter, codouble, codouble_projections, dual_cop, verified_codouble, verify_bicharacter, BicharacterElement,
};
pub use json::FinHopfDoc;
pub use tensor::{Tens, Vector};
pub use yd::{
    adjoint_yd, codouble_to_yd, random_codouble_comodule, trivial_yd, verify_comodule, verify_module, verify_yd,
    yd_failures, yd_to_codouble, Comodule, YDModule,
};

pub(crate) use tensor::{basis_vector, vec_add_scaled};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf<F> {
    pub name: String,
    pub algebra: Algebra<F>,
    pub comult: Vec<Tens<F>>,
    pub counit: Vec<F>,
    pub antipode: Vec<Vector<F>>,
}

impl<F: Field> FinHopf<F> {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn unit(&self) -> &Vector<F> {
        &self.algebra.unit
    }

    pub fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.algebra.mul(a, b)
    }

    /// Applies Δ to leg `leg`.
    pub fn comult_leg(&self, t: &Tens<F>, leg: usize) -> Tens<F> {
        t.map_leg(leg, 2, |i| self.comult[i].clone())
    }

    /// Applies ε to leg `leg`.
    pub fn counit_leg(&self, t: &Tens<F>, leg: usize) -> Tens<F> {
        t.map_leg(leg, 0, |i| Tens::scalar(self.counit[i].clone()))
    }

    /// Applies S to leg `leg`.
    pub fn antipode_leg(&self, t: &Tens<F>, leg: usize) -> Tens<F> {
        t.map_leg(leg, 1, |i| Tens::from_vector(&self.antipode[i]))
    }

    pub fn comultiply(&self, v: &Vector<F>) -> Tens<F> {
        self.comult_leg(&Tens::from_vector(v), 0)
    }

    pub fn counit_of(&self, v: &Vector<F>) -> F {
        v.iter().fold(F::zero(), |acc, (&i, c)| acc.plus(&c.times(&self.counit[i])))
    }

    pub fn apply_antipode(&self, v: &Vector<F>) -> Vector<F> {
        let mut out = Vector::new();
        for (&i, c) in v {
            vec_add_scaled(&mut out, c, &self.antipode[i]);
        }
        out
    }

    /// Inverse of the antipode as a matrix of images.
    pub fn antipode_inverse(&self) -> Result<Vec<Vector<F>>> {
        let n = self.dim();
        let dense: Vec<Vec<F>> = (0..n)
            .map(|i| (0..n).map(|j| self.antipode[i].get(&j).cloned().unwrap_or_else(F::zero)).collect())
            .collect();
        let inv = linalg::inverse(&dense)
            .ok_or_else(|| Error::Precondition(format!("{}: antipode is not invertible", self.name)))?;
        Ok(inv.iter().map(|row| linalg::dense_to_sparse(row)).collect())
    }

    /// `H^{op,cop}`: opposite multiplication and flipped comultiplication.
    pub fn op_cop(&self) -> FinHopf<F> {
        let n = self.dim();
        FinHopf {
            name: format!("{}^op,cop", self.name),
            algebra: Algebra {
                dim: n,
                mult: (0..n).map(|i| (0..n).map(|j| self.algebra.mult[j][i].clone()).collect()).collect(),
                unit: self.algebra.unit.clone(),
            },
            comult: self.comult.iter().map(|t| t.flip(0)).collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    /// Checks the shapes of all tables.
    pub fn check_shape(&self) -> Result<()> {
        let n = self.dim();
        let bad = |what: &str| Err(Error::Shape(format!("{}: {what}", self.name)));
        if n == 0 {
            return bad("dimension must be positive");
        }
        if self.algebra.mult.len() != n || self.algebra.mult.iter().any(|r| r.len() != n) {
            return bad("mult must be dim × dim");
        }
        if self.comult.len() != n || self.comult.iter().any(|t| t.legs() != 2) {
            return bad("comult must hold dim two-leg tensors");
        }
        if self.counit.len() != n || self.antipode.len() != n {
            return bad("counit and antipode must have length dim");
        }
        let out_of_range = |v: &Vector<F>| v.keys().any(|&k| k >= n);
        if out_of_range(&self.algebra.unit)
            || self.antipode.iter().any(out_of_range)
            || self.algebra.mult.iter().flatten().any(out_of_range)
            || self.comult.iter().any(|t| t.terms().any(|(k, _)| k.iter().any(|&i| i >= n)))
        {
            return bad("basis index out of range");
        }
        Ok(())
    }
}

/// Result of an axiom check: one line per failed identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    pub fn into_result(self, what: &str) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Verification(format!("{what}: {}", self.failures.join("; "))))
        }
    }
}

/// Checks every Hopf algebra axiom as an exact tensor identity. At most
/// one failure per axiom is reported, naming the first offending basis
/// elements.
pub fn verify_hopf<F: Field>(h: &FinHopf<F>) -> AxiomReport {
    let mut r = AxiomReport::default();
    if let Err(e) = h.check_shape() {
        r.fail(e.to_string());
        return r;
    }
    let n = h.dim();
    r.failures.extend(h.algebra.verify().failures);

    let id2 = |i: usize| Tens::basis(vec![i]);
    if let Some(i) = (0..n).find(|&i| {
        let d = &h.comult[i];
        h.comult_leg(d, 0) != h.comult_leg(d, 1)
    }) {
        r.fail(format!("coassociativity fails on e_{i}"));
    }
    if let Some(i) = (0..n).find(|&i| {
        let d = &h.comult[i];
        h.counit_leg(d, 0) != id2(i) || h.counit_leg(d, 1) != id2(i)
    }) {
        r.fail(format!("counit law fails on e_{i}"));
    }
    let unit2 = Tens::from_vector(h.unit()).outer(&Tens::from_vector(h.unit()));
    if h.comultiply(h.unit()) != unit2 {
        r.fail("Δ(1) ≠ 1⊗1".into());
    }
    if h.counit_of(h.unit()) != F::one() {
        r.fail("ε(1) ≠ 1".into());
    }
    let algs = [&h.algebra, &h.algebra];
    'bialg: for i in 0..n {
        for j in 0..n {
            let prod = &h.algebra.mult[i][j];
            if h.comultiply(prod) != tensor_mul(&h.comult[i], &h.comult[j], &algs) {
                r.fail(format!("Δ(e_{i} e_{j}) ≠ Δ(e_{i})Δ(e_{j})"));
                break 'bialg;
            }
            if h.counit_of(prod) != h.counit[i].times(&h.counit[j]) {
                r.fail(format!("ε(e_{i} e_{j}) ≠ ε(e_{i})ε(e_{j})"));
                break 'bialg;
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| {
        let d = &h.comult[i];
        let want = scale(&Tens::from_vector(h.unit()), &h.counit[i]);
        h.algebra.mul_leg(&h.antipode_leg(d, 0), 0) != want || h.algebra.mul_leg(&h.antipode_leg(d, 1), 0) != want
    }) {
        r.fail(format!("antipode axiom fails on e_{i}"));
    }
    r
}

fn scale<F: Field>(t: &Tens<F>, c: &F) -> Tens<F> {
    let mut out = Tens::zero(t.legs());
    out.add_scaled(c, t);
    out
}

/// Product in `A₁ ⊗ … ⊗ A_k` with the tensor-product algebra structure.
pub fn tensor_mul<F: Field>(x: &Tens<F>, y: &Tens<F>, algs: &[&Algebra<F>]) -> Tens<F> {
    assert_eq!(x.legs(), algs.len());
    assert_eq!(y.legs(), algs.len());
    let mut out = Tens::zero(algs.len());
    for (k1, c1) in x.terms() {
        for (k2, c2) in y.terms() {
            let mut acc = Tens::scalar(c1.times(c2));
            for (leg, alg) in algs.iter().enumerate() {
                acc = acc.outer(&Tens::from_vector(&alg.mult[k1[leg]][k2[leg]]));
            }
            out.add_scaled(&F::one(), &acc);
        }
    }
    out
}

/// Unit `1 ⊗ … ⊗ 1` of a tensor-product algebra.
pub fn tensor_unit<F: Field>(algs: &[&Algebra<F>]) -> Tens<F> {
    algs.iter().fold(Tens::scalar(F::one()), |acc, a| acc.outer(&Tens::from_vector(&a.unit)))
}

/// Applies a linear map, given by images of basis vectors, to leg `leg`.
pub fn apply_linear<F: Field>(t: &Tens<F>, leg: usize, map: &[Vector<F>]) -> Tens<F> {
    t.map_leg(leg, 1, |i| Tens::from_vector(&map[i]))
}

pub fn apply_to_vector<F: Field>(v: &Vector<F>, map: &[Vector<F>]) -> Vector<F> {
    let mut out = Vector::new();
    for (&i, c) in v {
        vec_add_scaled(&mut out, c, &map[i]);
    }
    out
}

/// Checks that `map: src → dst` (images of basis vectors) is a Hopf
/// algebra homomorphism.
pub fn verify_hopf_morphism<F: Field>(src: &FinHopf<F>, dst: &FinHopf<F>, map: &[Vector<F>]) -> AxiomReport {
    let mut r = AxiomReport::default();
    let n = src.dim();
    if map.len() != n {
        r.fail(format!("map has {} images for a {n}-dimensional source", map.len()));
        return r;
    }
    if apply_to_vector(src.unit(), map) != *dst.unit() {
        r.fail("unit not preserved".into());
    }
    'mult: for i in 0..n {
        for j in 0..n {
            if apply_to_vector(&src.algebra.mult[i][j], map) != dst.mul(&map[i], &map[j]) {
                r.fail(format!("multiplication not preserved on (e_{i}, e_{j})"));
                break 'mult;
            }
        }
    }
    for i in 0..n {
        let pushed = apply_linear(&apply_linear(&src.comult[i], 0, map), 1, map);
        if pushed != dst.comultiply(&map[i]) {
            r.fail(format!("comultiplication not preserved on e_{i}"));
            break;
        }
    }
    if let Some(i) = (0..n).find(|&i| dst.counit_of(&map[i]) != src.counit[i]) {
        r.fail(format!("counit not preserved on e_{i}"));
    }
    if let Some(i) = (0..n).find(|&i| apply_to_vector(&src.antipode[i], map) != dst.apply_antipode(&map[i])) {
        r.fail(format!("antipode not preserved on e_{i}"));
    }
    r
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::zoo;
    use super::*;

    #[test]
    fn zoo_passes() {
        for h in zoo::zoo() {
            let r = verify_hopf(&h);
            assert!(r.passed(), "{}: {:?}", h.name, r.failures);
        }
    }

    #[test]
    fn broken_antipode_is_caught() {
        let mut h = zoo::sweedler();
        h.antipode = (0..4).map(basis_vector).collect();
        let r = verify_hopf(&h);
        assert_eq!(r.failures.len(), 1, "{:?}", r.failures);
        assert!(r.failures[0].starts_with("antipode axiom"));
    }

    #[test]
    fn bad_shape() {
        let mut h = zoo::group_algebra(2);
        h.counit.pop();
        assert!(!verify_hopf(&h).passed());
        assert!(h.check_shape().is_err());
    }

    #[test]
    fn identity_is_morphism() {
        let h: FinHopf<BigRational> = zoo::sweedler();
        let id: Vec<_> = (0..4).map(basis_vector).collect();
        assert!(verify_hopf_morphism(&h, &h, &id).passed());
        let zero: Vec<_> = (0..4).map(|_| Vector::new()).collect();
        assert!(!verify_hopf_morphism(&h, &h, &zero).passed());
    }

    #[test]
    fn op_cop_is_hopf() {
        let h = zoo::sweedler();
        assert!(verify_hopf(&h.op_cop()).passed());
        assert_ne!(h.op_cop(), h);
    }
}
