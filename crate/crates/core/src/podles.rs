//! Torus weights on C[SU_q(2)], the Podleś sphere Γ(E_0), the line
//! bundles Γ(E_k), the adjoint action and isotypic multiplicities.
//!
//! The torus quotient π sends α ↦ z, α* ↦ z⁻¹, γ, γ* ↦ 0. An element has
//! weight `k` when `(id⊗π)Δ(x) = x ⊗ z^k`; on PBW words the weight is the
//! letter count `#α − #α* + #γ − #γ*`, a closed formula that
//! [`weight_formula_holds`] validates against the definition.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ncalg::{suq2, Gen, NCPoly, Word, A, AS, G, GS};
use crate::qgroup::{
    antipode_word, build_corep_bounded, comultiply, comultiply_n, pbw_words, Spin, TensorPoly,
};
use crate::scalars::ScalarQ;

/// Torus weight of a single word.
pub fn word_weight(w: &[Gen]) -> i64 {
    w.iter()
        .map(|&g| match g {
            A | G => 1,
            AS | GS => -1,
            _ => 0,
        })
        .sum()
}

/// Decomposes `p` into weight-homogeneous components.
pub fn torus_project(p: &NCPoly) -> BTreeMap<i64, NCPoly> {
    let mut out: BTreeMap<i64, NCPoly> = BTreeMap::new();
    for (w, c) in suq2().normalize(p).terms() {
        out.entry(word_weight(w)).or_default().add_term(w.clone(), c.clone());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Weight {
    /// Zero, or homogeneous of the given weight.
    Pure(i64),
    Mixed,
}

/// An element together with its torus weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedElement {
    pub element: NCPoly,
    pub weight: Weight,
}

impl WeightedElement {
    pub fn new(p: &NCPoly) -> Self {
        let parts = torus_project(p);
        let weight = match parts.len() {
            0 => Weight::Pure(0),
            1 => Weight::Pure(*parts.keys().next().expect("one part")),
            _ => Weight::Mixed,
        };
        WeightedElement { element: suq2().normalize(p), weight }
    }
}

/// True iff `p ∈ Γ(E_k)`. The zero element lies in every bundle.
pub fn in_line_bundle(p: &NCPoly, k: i64) -> bool {
    torus_project(p).keys().all(|&w| w == k)
}

/// `π` on a normal word, as a power of `z`, or `None` when it vanishes.
fn torus_quotient_word(w: &[Gen]) -> Option<i64> {
    if w.iter().any(|&g| g == G || g == GS) {
        None
    } else {
        Some(word_weight(w))
    }
}

/// `(id⊗π)Δ(x)` as a map `(word, z-exponent) → coefficient`.
pub fn right_torus_coaction(p: &NCPoly) -> BTreeMap<(Word, i64), ScalarQ> {
    let mut out: BTreeMap<(Word, i64), ScalarQ> = BTreeMap::new();
    for (key, c) in comultiply(p).terms() {
        if let Some(e) = torus_quotient_word(&key[1]) {
            let slot = out.entry((key[0].clone(), e)).or_insert_with(ScalarQ::zero);
            *slot = &*slot + c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Checks the closed weight formula against `(id⊗π)Δ(x) = x ⊗ z^k` on
/// every PBW word of length at most `degree`.
pub fn weight_formula_holds(degree: usize) -> bool {
    pbw_words(degree).into_iter().all(|w| {
        let k = word_weight(&w);
        let mut want = BTreeMap::new();
        want.insert((w.clone(), k), ScalarQ::one());
        right_torus_coaction(&NCPoly::word(w)) == want
    })
}

fn pbw_words_of_weight(k: i64, degree: usize) -> Vec<Word> {
    pbw_words(degree).into_iter().filter(|w| word_weight(w) == k).collect()
}

/// `Γ(E_m)·Γ(E_n) ⊆ Γ(E_{m+n})` on all pairs of PBW words up to `degree`.
pub fn bundle_product_check(m: i64, n: i64, degree: usize) -> bool {
    let sys = suq2();
    let left = pbw_words_of_weight(m, degree);
    let right = pbw_words_of_weight(n, degree);
    left.iter().all(|x| {
        right.iter().all(|y| {
            let mut w = x.clone();
            w.extend_from_slice(y);
            in_line_bundle(&sys.normal_word(&w), m + n)
        })
    })
}

/// Generator pairs `g_i` with coefficients `h_i` such that `Σ h_i g_i = 1`,
/// used to write `x = Σ (x h_i) g_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleGenerators {
    /// `{α, γ}`, from `α*α + γ*γ = 1`.
    AlphaGamma,
    /// `{α*, γ*}`, from `αα* + q²γγ* = 1`.
    AlphaGammaStar,
    /// `{1}`.
    Unit,
}

impl BundleGenerators {
    /// The natural generating set of `Γ(E_k)`.
    pub fn for_weight(k: i64) -> Result<Self> {
        match k {
            1 => Ok(BundleGenerators::AlphaGamma),
            -1 => Ok(BundleGenerators::AlphaGammaStar),
            0 => Ok(BundleGenerators::Unit),
            _ => Err(Error::Precondition(format!("generator sets are provided for k in {{-1, 0, 1}}, got {k}"))),
        }
    }

    /// `(h_i, g_i)` pairs.
    pub fn pairs(self) -> Vec<(NCPoly, NCPoly)> {
        match self {
            BundleGenerators::AlphaGamma => vec![
                (NCPoly::gen(AS), NCPoly::gen(A)),
                (NCPoly::gen(GS), NCPoly::gen(G)),
            ],
            BundleGenerators::AlphaGammaStar => vec![
                (NCPoly::gen(A), NCPoly::gen(AS)),
                (NCPoly::term(ScalarQ::q_pow(2), vec![G]), NCPoly::gen(GS)),
            ],
            BundleGenerators::Unit => vec![(NCPoly::one(), NCPoly::one())],
        }
    }
}

/// Writes `x = Σ c_i g_i` with `c_i = x h_i`; returns the coefficients if
/// they all lie in the Podleś sphere and the sum reproduces `x`.
pub fn bundle_decomposition(x: &NCPoly, gens: BundleGenerators) -> Option<Vec<NCPoly>> {
    let sys = suq2();
    let mut total = NCPoly::zero();
    let mut coeffs = Vec::new();
    for (h, g) in gens.pairs() {
        let c = sys.mul(x, &h);
        if !in_line_bundle(&c, 0) {
            return None;
        }
        total = &total + &sys.mul(&c, &g);
        coeffs.push(c);
    }
    (total == sys.normalize(x)).then_some(coeffs)
}

/// Every weight-`k` PBW word up to `degree` lies in `B·g₁ + B·g₂` for the
/// natural generators of `Γ(E_k)`.
pub fn bundle_generators_check(k: i64, degree: usize) -> Result<bool> {
    Ok(bundle_generators_check_with(k, BundleGenerators::for_weight(k)?, degree))
}

pub fn bundle_generators_check_with(k: i64, gens: BundleGenerators, degree: usize) -> bool {
    pbw_words_of_weight(k, degree)
        .into_iter()
        .all(|w| bundle_decomposition(&NCPoly::word(w), gens).is_some())
}

/// `p = v v*` for the unit column `v = (α, γ)` when `k = −1` and
/// `v = (−qγ*, α*)` when `k = +1`; both are columns of the unitary
/// fundamental matrix, so `v*v = 1` and `p` is a projection.
pub fn projective_idempotent(k: i64) -> Result<[[NCPoly; 2]; 2]> {
    let v = match k {
        -1 => [NCPoly::gen(A), NCPoly::gen(G)],
        1 => [NCPoly::term(-ScalarQ::q(), vec![GS]), NCPoly::gen(AS)],
        _ => return Err(Error::Precondition(format!("projective_idempotent needs k = ±1, got {k}"))),
    };
    let sys = suq2();
    let vs = [sys.star(&v[0]), sys.star(&v[1])];
    Ok([
        [sys.mul(&v[0], &vs[0]), sys.mul(&v[0], &vs[1])],
        [sys.mul(&v[1], &vs[0]), sys.mul(&v[1], &vs[1])],
    ])
}

/// `p² = p = p*` for a 2×2 matrix over C[SU_q(2)].
pub fn is_projection(p: &[[NCPoly; 2]; 2]) -> bool {
    let sys = suq2();
    (0..2).all(|i| {
        (0..2).all(|j| {
            let sq = (0..2).fold(NCPoly::zero(), |acc, k| &acc + &sys.mul(&p[i][k], &p[k][j]));
            sq == p[i][j] && sys.star(&p[j][i]) == p[i][j]
        })
    })
}

/// `h · x = h₍₁₎ x S(h₍₂₎)`.
pub fn adjoint_action(h: &NCPoly, x: &NCPoly) -> NCPoly {
    let sys = suq2();
    let x = sys.normalize(x);
    let mut out = NCPoly::zero();
    for (key, c) in comultiply(h).terms() {
        let left = sys.normal_word(&key[0]);
        let right = antipode_word(&key[1]);
        out.add_scaled(c, &sys.mul(&sys.mul(&left, &x), &right));
    }
    out
}

/// Left-hand side `Δ(f·m)` of the Yetter-Drinfeld identity.
fn yd_lhs(f: &NCPoly, m: &NCPoly) -> TensorPoly {
    comultiply(&adjoint_action(f, m))
}

/// Right-hand side `f₍₁₎ m₍₋₁₎ S(f₍₃₎) ⊗ f₍₂₎·m₍₀₎`.
fn yd_rhs(f: &NCPoly, m: &NCPoly) -> TensorPoly {
    let sys = suq2();
    let f3 = comultiply_n(f, 3);
    let dm = comultiply(m);
    let mut out = TensorPoly::zero(2);
    for (fk, fc) in f3.terms() {
        let s3 = antipode_word(&fk[2]);
        let f1 = sys.normal_word(&fk[0]);
        let f2 = sys.normal_word(&fk[1]);
        for (mk, mc) in dm.terms() {
            let left = sys.mul(&sys.mul(&f1, &sys.normal_word(&mk[0])), &s3);
            let right = adjoint_action(&f2, &sys.normal_word(&mk[1]));
            out.add_scaled(&(fc * mc), &TensorPoly::pure(&[&left, &right]));
        }
    }
    out
}

/// Checks the Yetter-Drinfeld identity for one pair.
pub fn yd_identity_holds(f: &NCPoly, m: &NCPoly) -> bool {
    yd_lhs(f, m) == yd_rhs(f, m)
}

/// The Yetter-Drinfeld compatibility between Δ (as coaction) and the
/// adjoint action, for the given `f` against every weight-0 PBW word of
/// length at most `degree`. Returns the failing `(f, m)` pairs.
pub fn yd_compatibility_failures(generators: &[NCPoly], degree: usize) -> Vec<(NCPoly, Word)> {
    let mut fails = Vec::new();
    for f in generators {
        for w in pbw_words_of_weight(0, degree) {
            if !yd_identity_holds(f, &NCPoly::word(w.clone())) {
                fails.push((f.clone(), w));
            }
        }
    }
    fails
}

pub fn yd_compatibility_check(generators: &[NCPoly], degree: usize) -> bool {
    yd_compatibility_failures(generators, degree).is_empty()
}

/// `[α, α*, γ, γ*]`
pub fn suq2_generators() -> Vec<NCPoly> {
    [A, AS, G, GS].into_iter().map(NCPoly::gen).collect()
}

/// Multiplicities of the spin-`l` isotypic components in `Γ(E_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicProfile {
    pub bundle: i64,
    /// Computed multiplicities for spins up to the bound.
    pub multiplicities: BTreeMap<Spin, u32>,
    /// Beyond the bound: multiplicity 1 exactly when `2l ≥ |k|` and `2l ≡ k (mod 2)`.
    pub tail: String,
}

impl IsotypicProfile {
    /// The closed form used for spins beyond the computed range.
    pub fn closed_form(k: i64, l: Spin) -> u32 {
        let twice = l.twice() as i64;
        u32::from(twice >= k.abs() && (twice - k).rem_euclid(2) == 0)
    }

    pub fn multiplicity(&self, l: Spin) -> u32 {
        self.multiplicities
            .get(&l)
            .copied()
            .unwrap_or_else(|| Self::closed_form(self.bundle, l))
    }
}

impl fmt::Display for IsotypicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ(E_{}):", self.bundle)?;
        for (l, m) in &self.multiplicities {
            write!(f, " {l}→{m}")?;
        }
        write!(f, "; {}", self.tail)
    }
}

/// Counts, for each spin up to `bound`, the columns of the spin-`l`
/// corepresentation whose entries all have torus weight `k`.
pub fn isotypic_profile(k: i64, bound: Spin) -> Result<IsotypicProfile> {
    if k.unsigned_abs() > bound.twice() as u64 {
        return Err(Error::ResourceBound(format!("|k| = {} exceeds twice the spin bound {bound}", k.abs())));
    }
    let mut multiplicities = BTreeMap::new();
    for l in Spin::up_to(bound) {
        let u = build_corep_bounded(l, bound)?;
        let n = u.dim();
        let count = (0..n)
            .filter(|&j| {
                (0..n).all(|i| {
                    let e = u.entry(i, j);
                    e.is_zero() || (in_line_bundle(e, k) && !torus_project(e).is_empty())
                })
            })
            .count();
        multiplicities.insert(l, count as u32);
    }
    Ok(IsotypicProfile {
        bundle: k,
        multiplicities,
        tail: format!("for l > {bound}: 1 iff 2l >= {} and 2l ≡ {} mod 2, else 0", k.abs(), k.rem_euclid(2)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[Gen]) -> NCPoly {
        NCPoly::word(w.to_vec())
    }

    #[test]
    fn projections_by_weight() {
        assert_eq!(torus_project(&p(&[A])).keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(torus_project(&NCPoly::one()).keys().copied().collect::<Vec<_>>(), vec![0]);
        let mixed = &p(&[G, GS]) + &p(&[A]);
        let parts = torus_project(&mixed);
        assert_eq!(parts[&0], p(&[G, GS]));
        assert_eq!(parts[&1], p(&[A]));
        assert_eq!(WeightedElement::new(&mixed).weight, Weight::Mixed);
    }

    #[test]
    fn bundle_membership() {
        assert!(in_line_bundle(&p(&[G, GS]), 0));
        assert!(!in_line_bundle(&p(&[A]), 0));
        assert!(in_line_bundle(&p(&[A, GS]), 0));
    }

    #[test]
    fn weight_formula_matches_definition() {
        assert!(weight_formula_holds(4));
    }

    #[test]
    fn product_checks() {
        assert!(bundle_product_check(1, -1, 4));
        assert!(bundle_product_check(0, 0, 4));
        assert!(bundle_product_check(1, 1, 4));
    }

    #[test]
    fn generator_checks() {
        // γ²γ* = (γ²γ*α*)α + (γ²γ*γ*)γ
        let x = p(&[G, G, GS]);
        let coeffs = bundle_decomposition(&x, BundleGenerators::AlphaGamma).unwrap();
        let sys = suq2();
        assert_eq!(coeffs[0], sys.normal_word(&[G, G, GS, AS]));
        assert!(bundle_generators_check(1, 4).unwrap());
        assert!(bundle_generators_check(0, 4).unwrap());
        assert!(bundle_generators_check(-1, 4).unwrap());
        assert!(!bundle_generators_check_with(-1, BundleGenerators::AlphaGamma, 4));
    }

    #[test]
    fn idempotents() {
        let pm = projective_idempotent(-1).unwrap();
        assert!(is_projection(&pm));
        let pp = projective_idempotent(1).unwrap();
        assert!(is_projection(&pp));
        for row in pm.iter().chain(pp.iter()) {
            for e in row {
                assert!(in_line_bundle(e, 0));
            }
        }
        let sys = suq2();
        assert_eq!(pm[0][0], sys.normal_word(&[A, AS]));
        assert_eq!(pm[0][1], sys.normal_word(&[A, GS]));
        assert_eq!(pm[1][0], sys.normal_word(&[G, AS]));
        assert_eq!(pm[1][1], p(&[G, GS]));
        // αα* + γγ* = 1 + (1 − q²)γγ*
        let trace = &pm[0][0] + &pm[1][1];
        let mut want = NCPoly::one();
        want.add_term(vec![G, GS], &ScalarQ::one() - &ScalarQ::q_pow(2));
        assert_eq!(trace, want);
        assert!(projective_idempotent(2).is_err());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_action(&p(&[A]), &NCPoly::one()), NCPoly::one());
        assert_eq!(adjoint_action(&p(&[G]), &NCPoly::one()), NCPoly::zero());
        let sys = suq2();
        let mut want = sys.normal_word(&[A, G, GS, AS]);
        want.add_scaled(&ScalarQ::q_pow(2), &sys.normal_word(&[GS, G, GS, G]));
        assert_eq!(adjoint_action(&p(&[A]), &p(&[G, GS])), want);
    }

    #[test]
    fn yd_examples() {
        assert!(yd_identity_holds(&p(&[A]), &NCPoly::one()));
        assert_eq!(yd_lhs(&p(&[A]), &NCPoly::one()), TensorPoly::one(2));
        assert!(yd_identity_holds(&p(&[A]), &p(&[G, GS])));
        assert!(yd_identity_holds(&p(&[G]), &p(&[A, GS])));
    }

    #[test]
    fn isotypic_small() {
        let bound = Spin::from_twice(4);
        let p0 = isotypic_profile(0, bound).unwrap();
        for l in Spin::up_to(bound) {
            assert_eq!(p0.multiplicities[&l], u32::from(l.is_integral()), "k=0 l={l}");
        }
        let p1 = isotypic_profile(1, bound).unwrap();
        for l in Spin::up_to(bound) {
            assert_eq!(p1.multiplicities[&l], u32::from(!l.is_integral()), "k=1 l={l}");
        }
        assert_eq!(isotypic_profile(-1, bound).unwrap().multiplicities, p1.multiplicities);
        assert_eq!(p1.multiplicity(Spin::from_twice(9)), 1);
        assert_eq!(p1.multiplicity(Spin::from_twice(10)), 0);
    }
}
