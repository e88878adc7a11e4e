use crate::error::{Error, Result};
use crate::scalars::Field;

use super::{tensor_mul, vec_add_scaled, verify_comodule, verify_module, verify_yd, AxiomReport, Comodule, FinHopf};
use super::{Tens, Vector, YDModule};

/// Finite-dimensional unital algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    pub dim: usize,
    /// `mult[i][j] = e_i e_j`
    pub mult: Vec<Vec<Vector<F>>>,
    pub unit: Vector<F>,
}

impl<F: Field> Algebra<F> {
    pub fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let mut out = Vector::new();
        for (&i, x) in a {
            for (&j, y) in b {
                vec_add_scaled(&mut out, &x.times(y), &self.mult[i][j]);
            }
        }
        out
    }

    /// Multiplies legs `leg` and `leg + 1`.
    pub fn mul_leg(&self, t: &Tens<F>, leg: usize) -> Tens<F> {
        t.map_legs(leg, 2, 1, |k| Tens::from_vector(&self.mult[k[0]][k[1]]))
    }

    /// Associativity and the unit law.
    pub fn verify(&self) -> AxiomReport {
        let mut r = AxiomReport::default();
        let n = self.dim;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.mult[i][j], &super::basis_vector(k));
                    let right = self.mul(&super::basis_vector(i), &self.mult[j][k]);
                    if left != right {
                        r.failures.push(format!("associativity fails on (e_{i}, e_{j}, e_{k})"));
                        break 'assoc;
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| {
            let e = super::basis_vector(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        }) {
            r.failures.push(format!("unit law fails on e_{i}"));
        }
        r
    }

    /// Plain tensor-product algebra, basis `e_a ⊗ e_b ↦ a·dim(B) + b`.
    pub fn tensor(&self, other: &Algebra<F>) -> Algebra<F> {
        let m = other.dim;
        let flatten = |t: &Tens<F>| -> Vector<F> { t.terms().map(|(k, c)| (k[0] * m + k[1], c.clone())).collect() };
        let idx = |a: usize| (a / m, a % m);
        let dim = self.dim * m;
        let mult = (0..dim)
            .map(|x| {
                (0..dim)
                    .map(|y| {
                        let ((a, b), (c, d)) = (idx(x), idx(y));
                        flatten(&Tens::from_vector(&self.mult[a][c]).outer(&Tens::from_vector(&other.mult[b][d])))
                    })
                    .collect()
            })
            .collect();
        let unit = flatten(&Tens::from_vector(&self.unit).outer(&Tens::from_vector(&other.unit)));
        Algebra { dim, mult, unit }
    }
}

/// An algebra in the category of Yetter-Drinfeld modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDAlgebra<F> {
    pub algebra: Algebra<F>,
    pub module: YDModule<F>,
}

/// An algebra with a compatible left coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra<F> {
    pub algebra: Algebra<F>,
    pub comodule: Comodule<F>,
}

fn comodule_algebra_report<F: Field>(h: &FinHopf<F>, alg: &Algebra<F>, coaction: &[Tens<F>]) -> AxiomReport {
    let mut r = AxiomReport::default();
    let algs = [&h.algebra, alg];
    let push = |v: &Vector<F>| -> Tens<F> {
        let mut t = Tens::zero(2);
        for (&i, c) in v {
            t.add_scaled(c, &coaction[i]);
        }
        t
    };
    if push(&alg.unit) != super::tensor_unit(&algs) {
        r.failures.push("coaction does not preserve the unit".into());
    }
    'outer: for i in 0..alg.dim {
        for j in 0..alg.dim {
            if push(&alg.mult[i][j]) != tensor_mul(&coaction[i], &coaction[j], &algs) {
                r.failures.push(format!("coaction is not multiplicative on (e_{i}, e_{j})"));
                break 'outer;
            }
        }
    }
    r
}

fn module_algebra_report<F: Field>(h: &FinHopf<F>, alg: &Algebra<F>, action: &[Vec<Vector<F>>]) -> AxiomReport {
    let mut r = AxiomReport::default();
    let act = |f: usize, v: &Vector<F>| -> Vector<F> {
        let mut out = Vector::new();
        for (&m, c) in v {
            vec_add_scaled(&mut out, c, &action[f][m]);
        }
        out
    };
    for f in 0..h.dim() {
        let mut eps_one = Vector::new();
        vec_add_scaled(&mut eps_one, &h.counit[f], &alg.unit);
        if act(f, &alg.unit) != eps_one {
            r.failures.push(format!("e_{f}·1 ≠ ε(e_{f})1"));
            return r;
        }
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let left = act(f, &alg.mult[i][j]);
                let mut right = Vector::new();
                for (k, c) in h.comult[f].terms() {
                    let p = alg.mul(&action[k[0]][i], &action[k[1]][j]);
                    vec_add_scaled(&mut right, c, &p);
                }
                if left != right {
                    r.failures.push(format!("action is not a module-algebra action at e_{f} on (e_{i}, e_{j})"));
                    return r;
                }
            }
        }
    }
    r
}

/// Multiplication on `A ⊗ B` given by
/// `(a⊗b)(a'⊗b') = a (b₍₋₁₎·a') ⊗ b₍₀₎ b'`,
/// where the coaction of `B` drives the action on `A`. Returns the
/// algebra after checking the preconditions and associativity.
pub fn braided_product<F: Field>(h: &FinHopf<F>, a: &YDAlgebra<F>, b: &ComoduleAlgebra<F>) -> Result<Algebra<F>> {
    let (na, nb) = (a.algebra.dim, b.algebra.dim);
    if a.module.dim != na || b.comodule.dim != nb {
        return Err(Error::Shape("module carriers must match the algebras".into()));
    }
    verify_module(h, &a.module.action).into_result("A is not an H-module")?;
    verify_comodule(h, &a.module.coaction).into_result("A is not an H-comodule")?;
    if !verify_yd(h, &a.module) {
        return Err(Error::Precondition("A is not a Yetter-Drinfeld module".into()));
    }
    module_algebra_report(h, &a.algebra, &a.module.action).into_result("A is not a module algebra")?;
    comodule_algebra_report(h, &a.algebra, &a.module.coaction).into_result("A is not a comodule algebra")?;
    verify_comodule(h, &b.comodule.coaction).into_result("B is not an H-comodule")?;
    comodule_algebra_report(h, &b.algebra, &b.comodule.coaction).into_result("B is not a comodule algebra")?;

    let dim = na * nb;
    let mut mult = vec![vec![Vector::new(); dim]; dim];
    for (x, row) in mult.iter_mut().enumerate() {
        let (ai, bi) = (x / nb, x % nb);
        for (y, slot) in row.iter_mut().enumerate() {
            let (aj, bj) = (y / nb, y % nb);
            for (k, c) in b.comodule.coaction[bi].terms() {
                let (hk, b0) = (k[0], k[1]);
                let left = a.algebra.mul(&super::basis_vector(ai), &a.module.action[hk][aj]);
                let right = &b.algebra.mult[b0][bj];
                for (&l, lc) in &left {
                    for (&r, rc) in right {
                        let mut v = Vector::new();
                        v.insert(l * nb + r, c.times(lc).times(rc));
                        vec_add_scaled(slot, &F::one(), &v);
                    }
                }
            }
        }
    }
    let unit = a.algebra.tensor(&b.algebra).unit;
    let out = Algebra { dim, mult, unit };
    out.verify().into_result("braided product")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::super::{adjoint_yd, basis_vector, trivial_yd, zoo};
    use super::*;

    type Q = BigRational;

    #[test]
    fn trivial_structures_give_plain_tensor() {
        let h = zoo::group_algebra(2);
        let c = zoo::function_algebra(2).algebra;
        let a = YDAlgebra { algebra: c.clone(), module: trivial_yd(&h, 2) };
        let b = ComoduleAlgebra { algebra: c.clone(), comodule: Comodule::trivial(&h, 2) };
        assert_eq!(braided_product(&h, &a, &b).unwrap(), c.tensor(&c));
    }

    #[test]
    fn adjoint_z2_is_plain_tensor() {
        // commutative and cocommutative: the adjoint action is trivial
        let h = zoo::group_algebra(2);
        let a = YDAlgebra { algebra: h.algebra.clone(), module: adjoint_yd(&h) };
        let b = ComoduleAlgebra { algebra: h.algebra.clone(), comodule: Comodule::regular(&h) };
        assert_eq!(braided_product(&h, &a, &b).unwrap(), h.algebra.tensor(&h.algebra));
    }

    #[test]
    fn graded_z2_anticommutes() {
        let h = zoo::group_algebra(2);
        let a = zoo::graded_function_algebra();
        let b = ComoduleAlgebra { algebra: a.algebra.clone(), comodule: Comodule { dim: 2, coaction: a.module.coaction.clone() } };
        let p = braided_product(&h, &a, &b).unwrap();
        assert_eq!(p.dim, 4);
        // s⊗1 = e_2, 1⊗s = e_1
        let mut minus = Vector::new();
        minus.insert(3, Q::from_i64(-1));
        assert_eq!(p.mult[1][2], minus);
        assert_eq!(p.mult[2][1], basis_vector(3));
        let u = p.unit.clone();
        for i in 0..4 {
            assert_eq!(p.mul(&u, &basis_vector(i)), basis_vector(i));
        }
    }

    #[test]
    fn rejects_non_module_algebra() {
        let h = zoo::group_algebra(2);
        let mut a = zoo::graded_function_algebra();
        // g·1 = −1 breaks unitality of the action
        a.module.action[1][0] = {
            let mut v = Vector::new();
            v.insert(0, Q::from_i64(-1));
            v
        };
        let b = ComoduleAlgebra { algebra: a.algebra.clone(), comodule: Comodule::trivial(&h, 2) };
        assert!(braided_product(&h, &a, &b).is_err());
    }
}
