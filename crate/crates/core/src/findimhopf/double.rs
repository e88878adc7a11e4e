use crate::error::{Error, Result};
use crate::scalars::Field;

use super::{tensor_mul, tensor_unit, verify_hopf, Algebra, AxiomReport, FinHopf, Tens, Vector};

/// `(H*)^cop` in the dual basis: multiplication is the transpose of Δ,
/// comultiplication the flipped transpose of the multiplication, counit
/// evaluation at 1 and antipode the transpose of `S⁻¹`.
pub fn dual_cop<F: Field>(h: &FinHopf<F>) -> Result<FinHopf<F>> {
    h.check_shape()?;
    let n = h.dim();
    let mut mult = vec![vec![Vector::new(); n]; n];
    for (k, d) in h.comult.iter().enumerate() {
        for (key, c) in d.terms() {
            mult[key[0]][key[1]].insert(k, c.clone());
        }
    }
    let unit: Vector<F> = h.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
    let mut comult = vec![Tens::zero(2); n];
    for i in 0..n {
        for j in 0..n {
            for (&k, c) in &h.algebra.mult[i][j] {
                comult[k].add_term(vec![j, i], c.clone());
            }
        }
    }
    let counit = (0..n).map(|k| h.unit().get(&k).cloned().unwrap_or_else(F::zero)).collect();
    let s_inv = h.antipode_inverse()?;
    let mut antipode = vec![Vector::new(); n];
    for (i, row) in s_inv.iter().enumerate() {
        for (&k, c) in row {
            antipode[k].insert(i, c.clone());
        }
    }
    Ok(FinHopf {
        name: format!("({}*)^cop", h.name),
        algebra: Algebra { dim: n, mult, unit },
        comult,
        counit,
        antipode,
    })
}

/// `w = Σ e_j ⊗ e^j ∈ H ⊗ (H*)^cop` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharacterElement<F> {
    pub host: FinHopf<F>,
    pub dual: FinHopf<F>,
    pub w: Tens<F>,
    /// `(S⊗id)(w)`
    pub w_inv: Tens<F>,
}

impl<F: Field> BicharacterElement<F> {
    /// Dense table `c[i][j]` with `w = Σ c[i][j] e_i ⊗ e^j`.
    pub fn coefficients(&self) -> Vec<Vec<F>> {
        let n = self.host.dim();
        (0..n).map(|i| (0..n).map(|j| self.w.coeff(&[i, j])).collect()).collect()
    }

    /// `ad(w)(y) = w y w⁻¹` on `H ⊗ (H*)^cop`.
    pub fn ad(&self, y: &Tens<F>) -> Tens<F> {
        let algs = [&self.host.algebra, &self.dual.algebra];
        tensor_mul(&tensor_mul(&self.w, y, &algs), &self.w_inv, &algs)
    }
}

/// Constructs `w` and checks it with [`verify_bicharacter`].
pub fn bicharacter<F: Field>(h: &FinHopf<F>) -> Result<BicharacterElement<F>> {
    let dual = dual_cop(h)?;
    let n = h.dim();
    let mut w = Tens::zero(2);
    for j in 0..n {
        w.add_term(vec![j, j], F::one());
    }
    let w_inv = h.antipode_leg(&w, 0);
    let b = BicharacterElement { host: h.clone(), dual, w, w_inv };
    verify_bicharacter(&b).into_result("bicharacter")?;
    Ok(b)
}

/// `(ε⊗id)w = 1`, `(id⊗ε̂)w = 1`, `(Δ⊗id)w = w₁₃w₂₃`, `(id⊗Δ̂)w = w₁₃w₁₂`
/// and `w·(S⊗id)w = (S⊗id)w·w = 1⊗1`.
pub fn verify_bicharacter<F: Field>(b: &BicharacterElement<F>) -> AxiomReport {
    let (h, d) = (&b.host, &b.dual);
    let mut r = AxiomReport::default();
    if h.counit_leg(&b.w, 0).to_vector() != *d.unit() {
        r.failures.push("(ε⊗id)(w) ≠ 1".into());
    }
    if d.counit_leg(&b.w, 1).to_vector() != *h.unit() {
        r.failures.push("(id⊗ε)(w) ≠ 1".into());
    }
    // insert an identity leg: w_{13} from w on legs (0, 2)
    let spread = |t: &Tens<F>, unit: &Vector<F>, at: usize| -> Tens<F> {
        let mut out = Tens::zero(3);
        for (k, c) in t.terms() {
            for (&u, uc) in unit {
                let mut key = k.clone();
                key.insert(at, u);
                out.add_term(key, c.times(uc));
            }
        }
        out
    };
    let hhd = [&h.algebra, &h.algebra, &d.algebra];
    let w13 = spread(&b.w, h.unit(), 1);
    let w23 = spread(&b.w, h.unit(), 0);
    if h.comult_leg(&b.w, 0) != tensor_mul(&w13, &w23, &hhd) {
        r.failures.push("(Δ⊗id)(w) ≠ w₁₃w₂₃".into());
    }
    let hdd = [&h.algebra, &d.algebra, &d.algebra];
    let w12 = spread(&b.w, d.unit(), 2);
    let w13 = spread(&b.w, d.unit(), 1);
    if d.comult_leg(&b.w, 1) != tensor_mul(&w13, &w12, &hdd) {
        r.failures.push("(id⊗Δ)(w) ≠ w₁₃w₁₂".into());
    }
    let hd = [&h.algebra, &d.algebra];
    let one = tensor_unit(&hd);
    if tensor_mul(&b.w, &b.w_inv, &hd) != one || tensor_mul(&b.w_inv, &b.w, &hd) != one {
        r.failures.push("(S⊗id)(w) is not inverse to w".into());
    }
    r
}

/// Merges legs pairwise: `(a, b, c, d) ↦ (a·n + b, c·n + d)`.
fn flatten2<F: Field>(t: &Tens<F>, n: usize) -> Tens<F> {
    (0..t.legs() / 2).fold(t.clone(), |acc, p| acc.map_legs(p, 2, 1, |k| Tens::basis(vec![k[0] * n + k[1]])))
}

/// The Drinfeld codouble `D_H = H ⊗ (H*)^cop` with the tensor product
/// algebra, `Δ_D = (id⊗σ⊗id)(id⊗ad(w)⊗id)(Δ⊗Δ̂)`, `ε_D = ε⊗ε̂` and
/// `S_D = (S⊗Ŝ)ad(w)`. Basis `e_f ⊗ e^x ↦ f·dim(H) + x`.
pub fn codouble<F: Field>(h: &FinHopf<F>) -> Result<FinHopf<F>> {
    let b = bicharacter(h)?;
    let d = &b.dual;
    let n = h.dim();
    let algebra = h.algebra.tensor(&d.algebra);
    let mut comult = Vec::with_capacity(n * n);
    let mut antipode = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for f in 0..n {
        for x in 0..n {
            // legs [H, H, D, D]
            let t = h.comult[f].outer(&d.comult[x]);
            let t = t.map_legs(1, 2, 2, |k| b.ad(&Tens::basis(k.to_vec())));
            comult.push(flatten2(&t.flip(1), n));
            let s = b.ad(&Tens::basis(vec![f, x]));
            let s = d.antipode_leg(&h.antipode_leg(&s, 0), 1);
            antipode.push(flatten2(&s, n).to_vector());
            counit.push(h.counit[f].times(&d.counit[x]));
        }
    }
    Ok(FinHopf { name: format!("D({})", h.name), algebra, comult, counit, antipode })
}

/// Images of `π(f⊗x) = f ε̂(x)` and `π̂(f⊗x) = ε(f) x` on the codouble basis.
pub fn codouble_projections<F: Field>(h: &FinHopf<F>) -> (Vec<Vector<F>>, Vec<Vector<F>>) {
    let n = h.dim();
    let mut pi = Vec::with_capacity(n * n);
    let mut pi_hat = Vec::with_capacity(n * n);
    for f in 0..n {
        for x in 0..n {
            let eps_hat = h.unit().get(&x).cloned().unwrap_or_else(F::zero);
            let mut v = Vector::new();
            if !eps_hat.is_zero() {
                v.insert(f, eps_hat);
            }
            pi.push(v);
            let mut v = Vector::new();
            if !h.counit[f].is_zero() {
                v.insert(x, h.counit[f].clone());
            }
            pi_hat.push(v);
        }
    }
    (pi, pi_hat)
}

/// Codouble plus a check that it is a Hopf algebra and that both
/// projections are Hopf algebra maps.
pub fn verified_codouble<F: Field>(h: &FinHopf<F>) -> Result<FinHopf<F>> {
    let dh = codouble(h)?;
    verify_hopf(&dh).into_result(&dh.name)?;
    let dual = dual_cop(h)?;
    let (pi, pi_hat) = codouble_projections(h);
    super::verify_hopf_morphism(&dh, h, &pi).into_result("π")?;
    super::verify_hopf_morphism(&dh, &dual, &pi_hat).into_result("π̂")?;
    if dh.dim() != h.dim() * h.dim() {
        return Err(Error::Verification("codouble dimension".into()));
    }
    Ok(dh)
}
