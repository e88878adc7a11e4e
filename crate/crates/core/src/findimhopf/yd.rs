use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::Field;

use super::{apply_linear, basis_vector, codouble, vec_add_scaled, AxiomReport, FinHopf, Tens, Vector};

/// Left-left Yetter-Drinfeld module: `action[f][m] = e_f · e_m` and
/// `coaction[m] = δ(e_m) ∈ H ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule<F> {
    pub dim: usize,
    pub action: Vec<Vec<Vector<F>>>,
    pub coaction: Vec<Tens<F>>,
}

/// Left comodule: `coaction[m] = δ(e_m) ∈ C ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F> {
    pub dim: usize,
    pub coaction: Vec<Tens<F>>,
}

impl<F: Field> Comodule<F> {
    /// `m ↦ 1 ⊗ m`
    pub fn trivial(c: &FinHopf<F>, dim: usize) -> Self {
        let coaction = (0..dim)
            .map(|m| Tens::from_vector(c.unit()).outer(&Tens::basis(vec![m])))
            .collect();
        Comodule { dim, coaction }
    }

    /// `C` coacting on itself by Δ.
    pub fn regular(c: &FinHopf<F>) -> Self {
        Comodule { dim: c.dim(), coaction: c.comult.clone() }
    }

    /// Direct sum, the second summand's basis shifted past the first.
    pub fn direct_sum(&self, other: &Comodule<F>) -> Self {
        let shift = self.dim;
        let mut coaction = self.coaction.clone();
        coaction.extend(other.coaction.iter().map(|t| t.map_leg(1, 1, |m| Tens::basis(vec![m + shift]))));
        Comodule { dim: self.dim + other.dim, coaction }
    }

    /// Transports the coaction along the basis change `e_i ↦ p[i]`.
    pub fn conjugate(&self, p: &[Vector<F>]) -> Result<Self> {
        let n = self.dim;
        let dense: Vec<Vec<F>> =
            p.iter().map(|r| (0..n).map(|j| r.get(&j).cloned().unwrap_or_else(F::zero)).collect()).collect();
        let inv = linalg::inverse(&dense).ok_or_else(|| Error::Precondition("basis change is singular".into()))?;
        let inv: Vec<Vector<F>> = inv.iter().map(|r| linalg::dense_to_sparse(r)).collect();
        let coaction = p
            .iter()
            .map(|img| {
                let mut t = Tens::zero(2);
                for (&j, c) in img {
                    t.add_scaled(c, &self.coaction[j]);
                }
                apply_linear(&t, 1, &inv)
            })
            .collect();
        Ok(Comodule { dim: n, coaction })
    }
}

fn act<F: Field>(action: &[Vec<Vector<F>>], f: usize, v: &Vector<F>) -> Vector<F> {
    let mut out = Vector::new();
    for (&m, c) in v {
        vec_add_scaled(&mut out, c, &action[f][m]);
    }
    out
}

/// `1·m = m` and `(e_f e_g)·m = e_f·(e_g·m)`.
pub fn verify_module<F: Field>(h: &FinHopf<F>, action: &[Vec<Vector<F>>]) -> AxiomReport {
    let mut r = AxiomReport::default();
    if action.len() != h.dim() {
        r.failures.push("action table must have one row per basis element of H".into());
        return r;
    }
    let dim = action[0].len();
    for m in 0..dim {
        let e = basis_vector(m);
        let mut unit_act = Vector::new();
        for (&f, c) in h.unit() {
            vec_add_scaled(&mut unit_act, c, &action[f][m]);
        }
        if unit_act != e {
            r.failures.push(format!("1·m_{m} ≠ m_{m}"));
            return r;
        }
        for f in 0..h.dim() {
            for g in 0..h.dim() {
                let mut left = Vector::new();
                for (&k, c) in &h.algebra.mult[f][g] {
                    vec_add_scaled(&mut left, c, &action[k][m]);
                }
                if left != act(action, f, &action[g][m]) {
                    r.failures.push(format!("(e_{f} e_{g})·m_{m} ≠ e_{f}·(e_{g}·m_{m})"));
                    return r;
                }
            }
        }
    }
    r
}

/// `(Δ⊗id)δ = (id⊗δ)δ` and `(ε⊗id)δ = id`.
pub fn verify_comodule<F: Field>(c: &FinHopf<F>, coaction: &[Tens<F>]) -> AxiomReport {
    let mut r = AxiomReport::default();
    for (m, d) in coaction.iter().enumerate() {
        let inner = d.map_leg(1, 2, |k| coaction[k].clone());
        if c.comult_leg(d, 0) != inner {
            r.failures.push(format!("coassociativity of the coaction fails on m_{m}"));
            break;
        }
        if c.counit_leg(d, 0) != Tens::basis(vec![m]) {
            r.failures.push(format!("counit law of the coaction fails on m_{m}"));
            break;
        }
    }
    r
}

/// Pairs `(f, m)` where `δ(f·m) ≠ f₍₁₎ m₍₋₁₎ S(f₍₃₎) ⊗ f₍₂₎·m₍₀₎`.
pub fn yd_failures<F: Field>(h: &FinHopf<F>, m: &YDModule<F>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let delta = |v: &Vector<F>| {
        let mut t = Tens::zero(2);
        for (&i, c) in v {
            t.add_scaled(c, &m.coaction[i]);
        }
        t
    };
    for f in 0..h.dim() {
        let f3 = h.comult_leg(&h.comult[f], 1);
        for mi in 0..m.dim {
            let lhs = delta(&m.action[f][mi]);
            let mut rhs = Tens::zero(2);
            for (fk, fc) in f3.terms() {
                let s3 = &h.antipode[fk[2]];
                for (mk, mc) in m.coaction[mi].terms() {
                    let left = h.mul(&h.mul(&basis_vector(fk[0]), &basis_vector(mk[0])), s3);
                    let right = &m.action[fk[1]][mk[1]];
                    rhs.add_scaled(&fc.times(mc), &Tens::from_vector(&left).outer(&Tens::from_vector(right)));
                }
            }
            if lhs != rhs {
                out.push((f, mi));
            }
        }
    }
    out
}

/// The Yetter-Drinfeld compatibility identity on every basis pair.
pub fn verify_yd<F: Field>(h: &FinHopf<F>, m: &YDModule<F>) -> bool {
    yd_failures(h, m).is_empty()
}

/// Trivial action `f·m = ε(f)m` and trivial coaction `m ↦ 1⊗m`.
pub fn trivial_yd<F: Field>(h: &FinHopf<F>, dim: usize) -> YDModule<F> {
    let action = (0..h.dim())
        .map(|f| {
            (0..dim)
                .map(|m| {
                    let mut v = Vector::new();
                    if !h.counit[f].is_zero() {
                        v.insert(m, h.counit[f].clone());
                    }
                    v
                })
                .collect()
        })
        .collect();
    YDModule { dim, action, coaction: Comodule::trivial(h, dim).coaction }
}

/// `H` acting on itself by `f·x = f₍₁₎ x S(f₍₂₎)`, coacting by Δ.
pub fn adjoint_yd<F: Field>(h: &FinHopf<F>) -> YDModule<F> {
    let n = h.dim();
    let action = (0..n)
        .map(|f| {
            (0..n)
                .map(|x| {
                    let mut out = Vector::new();
                    for (k, c) in h.comult[f].terms() {
                        let p = h.mul(&h.mul(&basis_vector(k[0]), &basis_vector(x)), &h.antipode[k[1]]);
                        vec_add_scaled(&mut out, c, &p);
                    }
                    out
                })
                .collect()
        })
        .collect();
    YDModule { dim: n, action, coaction: h.comult.clone() }
}

/// The codouble comodule `m ↦ Σ_j m₍₋₁₎ ⊗ e^j ⊗ e_j·m₍₀₎`, on the codouble
/// basis `e_f ⊗ e^x ↦ f·dim(H) + x`.
pub fn yd_to_codouble<F: Field>(h: &FinHopf<F>, m: &YDModule<F>) -> Result<Comodule<F>> {
    verify_module(h, &m.action).into_result("action")?;
    verify_comodule(h, &m.coaction).into_result("coaction")?;
    if let Some(&(f, mi)) = yd_failures(h, m).first() {
        return Err(Error::Verification(format!(
            "Yetter-Drinfeld compatibility fails at (e_{f}, m_{mi})"
        )));
    }
    let n = h.dim();
    let coaction = m
        .coaction
        .iter()
        .map(|d| {
            let mut out = Tens::zero(2);
            for (k, c) in d.terms() {
                for j in 0..n {
                    for (&mo, ac) in &m.action[j][k[1]] {
                        out.add_term(vec![k[0] * n + j, mo], c.times(ac));
                    }
                }
            }
            out
        })
        .collect();
    Ok(Comodule { dim: m.dim, coaction })
}

/// Pushes a codouble comodule forward along `π` and `π̂`: the H-coaction
/// is `(π⊗id)Γ`, and `e_j·m` is the `e^j` component of `(π̂⊗id)Γ(m)`.
pub fn codouble_to_yd<F: Field>(h: &FinHopf<F>, c: &Comodule<F>) -> Result<YDModule<F>> {
    let d = codouble(h)?;
    verify_comodule(&d, &c.coaction).into_result("codouble coaction")?;
    let n = h.dim();
    let mut coaction = Vec::with_capacity(c.dim);
    let mut action = vec![vec![Vector::new(); c.dim]; n];
    for (mi, g) in c.coaction.iter().enumerate() {
        let mut delta = Tens::zero(2);
        for (k, coef) in g.terms() {
            let (f, x) = (k[0] / n, k[0] % n);
            if let Some(e) = h.unit().get(&x) {
                delta.add_term(vec![f, k[1]], coef.times(e));
            }
            let eps = &h.counit[f];
            if !eps.is_zero() {
                let mut v = Vector::new();
                v.insert(k[1], coef.times(eps));
                vec_add_scaled(&mut action[x][mi], &F::one(), &v);
            }
        }
        coaction.push(delta);
    }
    let m = YDModule { dim: c.dim, action, coaction };
    if let Some(&(f, mi)) = yd_failures(h, &m).first() {
        return Err(Error::Verification(format!(
            "pushed-forward structure is not Yetter-Drinfeld at (e_{f}, m_{mi})"
        )));
    }
    Ok(m)
}

/// A random comodule over the codouble of `h`: the regular comodule plus
/// `extra` trivial summands, in a random basis with small integer entries.
pub fn random_codouble_comodule<F: Field>(h: &FinHopf<F>, extra: usize, seed: u64) -> Result<Comodule<F>> {
    let d = codouble(h)?;
    let c = Comodule::regular(&d).direct_sum(&Comodule::trivial(&d, extra));
    let n = c.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // unit lower times unit upper triangular, so always invertible
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..n {
            if j < i && rng.gen_bool(0.2) {
                lower[i][j] = rng.gen_range(-2..=2);
            }
            if j > i && rng.gen_bool(0.2) {
                upper[i][j] = rng.gen_range(-2..=2);
            }
        }
    }
    let p: Vec<Vector<F>> = (0..n)
        .map(|i| {
            (0..n)
                .filter_map(|j| {
                    let s: i64 = (0..n).map(|k| lower[i][k] * upper[k][j]).sum();
                    (s != 0).then(|| (j, F::from_i64(s)))
                })
                .collect()
        })
        .collect();
    c.conjugate(&p)
}

#[cfg(test)]
mod tests {
    use super::super::zoo;
    use super::*;

    #[test]
    fn trivial_module() {
        let h = zoo::sweedler();
        let m = trivial_yd(&h, 1);
        assert!(verify_module(&h, &m.action).passed());
        assert!(verify_comodule(&h, &m.coaction).passed());
        assert!(verify_yd(&h, &m));
        let c = yd_to_codouble(&h, &m).unwrap();
        let d = codouble(&h).unwrap();
        assert_eq!(c, Comodule::trivial(&d, 1));
        assert_eq!(codouble_to_yd(&h, &c).unwrap(), m);
    }

    #[test]
    fn adjoint_modules() {
        for h in [zoo::group_algebra(2), zoo::sweedler(), zoo::function_algebra(3)] {
            let m = adjoint_yd(&h);
            assert!(verify_module(&h, &m.action).passed(), "{}", h.name);
            assert!(verify_yd(&h, &m), "{}", h.name);
            let c = yd_to_codouble(&h, &m).unwrap();
            assert!(verify_comodule(&codouble(&h).unwrap(), &c.coaction).passed());
            assert_eq!(codouble_to_yd(&h, &c).unwrap(), m);
        }
    }

    #[test]
    fn flipped_coaction_is_not_yd() {
        let h = zoo::sweedler();
        let mut m = adjoint_yd(&h);
        m.coaction = m.coaction.iter().map(|t| t.flip(0)).collect();
        assert!(!verify_yd(&h, &m));
        assert!(yd_to_codouble(&h, &m).is_err());
    }

    #[test]
    fn random_roundtrip() {
        let h = zoo::sweedler();
        let c = random_codouble_comodule(&h, 2, 7).unwrap();
        assert_eq!(c.dim, 18);
        let m = codouble_to_yd(&h, &c).unwrap();
        assert_eq!(yd_to_codouble(&h, &m).unwrap(), c);
    }
}
