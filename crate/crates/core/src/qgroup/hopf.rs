use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::ncalg::{suq2, Gen, NCPoly, Word, A, AS, G, GS};
use crate::scalars::{LaurentPoly, ScalarQ};

use super::TensorPoly;

fn gen_coproduct(g: Gen) -> TensorPoly {
    let q = ScalarQ::q();
    let mut t = TensorPoly::zero(2);
    match g {
        A => {
            t.add_term(vec![vec![A], vec![A]], ScalarQ::one());
            t.add_term(vec![vec![GS], vec![G]], -&q);
        }
        AS => {
            t.add_term(vec![vec![AS], vec![AS]], ScalarQ::one());
            t.add_term(vec![vec![G], vec![GS]], -&q);
        }
        G => {
            t.add_term(vec![vec![G], vec![A]], ScalarQ::one());
            t.add_term(vec![vec![AS], vec![G]], ScalarQ::one());
        }
        GS => {
            t.add_term(vec![vec![GS], vec![AS]], ScalarQ::one());
            t.add_term(vec![vec![A], vec![GS]], ScalarQ::one());
        }
        _ => unreachable!("not an SU_q(2) generator"),
    }
    t
}

fn coproduct_cache() -> &'static Mutex<HashMap<Word, TensorPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Word, TensorPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Δ on a single word, memoized; both legs in PBW normal form.
pub fn comultiply_word(w: &[Gen]) -> TensorPoly {
    if w.is_empty() {
        return TensorPoly::one(2);
    }
    if let Some(hit) = coproduct_cache().lock().expect("cache lock").get(w) {
        return hit.clone();
    }
    let (last, init) = w.split_last().expect("nonempty");
    let out = comultiply_word(init).mul(&gen_coproduct(*last), suq2());
    coproduct_cache().lock().expect("cache lock").insert(w.to_vec(), out.clone());
    out
}

/// The comultiplication Δ(α) = α⊗α − qγ*⊗γ, Δ(γ) = γ⊗α + α*⊗γ,
/// extended as a *-homomorphism.
pub fn comultiply(p: &NCPoly) -> TensorPoly {
    let mut out = TensorPoly::zero(2);
    for (w, c) in suq2().normalize(p).terms() {
        out.add_scaled(c, &comultiply_word(w));
    }
    out
}

/// ε on a word: 1 unless it contains γ or γ*.
pub fn counit_word(w: &[Gen]) -> ScalarQ {
    if w.iter().any(|&g| g == G || g == GS) {
        ScalarQ::zero()
    } else {
        ScalarQ::one()
    }
}

/// The counit, ε(α) = ε(α*) = 1, ε(γ) = ε(γ*) = 0.
pub fn counit(p: &NCPoly) -> ScalarQ {
    p.terms().fold(ScalarQ::zero(), |acc, (w, c)| &acc + &(c * &counit_word(w)))
}

fn gen_antipode(g: Gen) -> (ScalarQ, Gen) {
    match g {
        A => (ScalarQ::one(), AS),
        AS => (ScalarQ::one(), A),
        G => (-ScalarQ::q(), G),
        GS => (-ScalarQ::q_pow(-1), GS),
        _ => unreachable!("not an SU_q(2) generator"),
    }
}

/// S on a word as an anti-homomorphism, normalized.
pub fn antipode_word(w: &[Gen]) -> NCPoly {
    let mut c = ScalarQ::one();
    let mut out = Vec::with_capacity(w.len());
    for &g in w.iter().rev() {
        let (s, h) = gen_antipode(g);
        c = &c * &s;
        out.push(h);
    }
    suq2().normal_word(&out).scale(&c)
}

/// The antipode, S(α) = α*, S(α*) = α, S(γ) = −qγ, S(γ*) = −q⁻¹γ*.
pub fn antipode(p: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_scaled(c, &antipode_word(w));
    }
    out
}

/// `φ(γ^m γ*^m) = (1 − q²)/(1 − q^(2m+2))`.
pub fn haar_balanced(m: usize) -> ScalarQ {
    let num = LaurentPoly::from_terms([(0, 1.into()), (2, (-1).into())]);
    let den = LaurentPoly::from_terms([(0, 1.into()), (2 * m as i64 + 2, (-1).into())]);
    ScalarQ::from_parts(num, den).expect("nonzero denominator")
}

/// Value of the Haar state on a PBW normal word.
pub fn haar_on_normal_word(w: &[Gen]) -> ScalarQ {
    let m = w.iter().take_while(|&&g| g == G).count();
    if w.len() == 2 * m && w[m..].iter().all(|&g| g == GS) {
        haar_balanced(m)
    } else {
        ScalarQ::zero()
    }
}

/// The Haar state: vanishes on every PBW word except `γ^m γ*^m`.
pub fn haar(p: &NCPoly) -> ScalarQ {
    suq2()
        .normalize(p)
        .terms()
        .fold(ScalarQ::zero(), |acc, (w, c)| &acc + &(c * &haar_on_normal_word(w)))
}

/// `⟨x, y⟩ = φ(x* y)`.
pub fn peter_weyl_pairing(x: &NCPoly, y: &NCPoly) -> ScalarQ {
    let sys = suq2();
    haar(&sys.mul(&sys.star(x), y))
}

/// All PBW normal words of total length at most `max_degree`:
/// `α^k γ^m γ*^n` and `α*^k γ^m γ*^n` with `k ≥ 1`.
pub fn pbw_words(max_degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for k in 0..=d {
            for m in 0..=d - k {
                let n = d - k - m;
                let tail: Word = std::iter::repeat_n(G, m).chain(std::iter::repeat_n(GS, n)).collect();
                let mut w: Word = std::iter::repeat_n(A, k).collect();
                w.extend(&tail);
                out.push(w);
                if k >= 1 {
                    let mut w: Word = std::iter::repeat_n(AS, k).collect();
                    w.extend(&tail);
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Every word over {α, α*, γ, γ*} of length at most `max_len`, normal or not.
pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 4);
        for w in &layer {
            for g in [A, AS, G, GS] {
                let mut nw = w.clone();
                nw.push(g);
                next.push(nw);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `(Δ⊗id)Δ(x)`
pub fn comultiply_left(t: &TensorPoly) -> TensorPoly {
    t.map_leg(0, 2, |u| comultiply_word(u))
}

/// `(id⊗Δ)Δ(x)`
pub fn comultiply_right(t: &TensorPoly) -> TensorPoly {
    t.map_leg(t.legs() - 1, 2, |u| comultiply_word(u))
}

/// Iterated coproduct into `legs` legs (`legs ≥ 1`).
pub fn comultiply_n(p: &NCPoly, legs: usize) -> TensorPoly {
    let mut t = TensorPoly::from_poly(&suq2().normalize(p));
    for _ in 1..legs {
        t = comultiply_right(&t);
    }
    t
}

/// Failures of the Hopf axioms found by [`hopf_axiom_report`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfReport {
    pub words_checked: usize,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Coassociativity, both counit laws and both antipode laws on every
/// word of length at most `degree`, plus unitarity of the fundamental matrix.
pub fn hopf_axiom_report(degree: usize) -> HopfReport {
    let sys = suq2();
    let mut report = HopfReport::default();
    for w in all_words(degree) {
        report.words_checked += 1;
        let x = sys.normal_word(&w);
        let name = sys.alphabet().word_names(&w).join(" ");
        let d = comultiply_word(&w);
        if comultiply_left(&d) != comultiply_right(&d) {
            report.failures.push(format!("coassociativity on `{name}`"));
        }
        let left = d.map_leg(0, 0, |u| TensorPoly::scalar(counit_word(u))).to_poly();
        let right = d.map_leg(1, 0, |u| TensorPoly::scalar(counit_word(u))).to_poly();
        if left != x || right != x {
            report.failures.push(format!("counit law on `{name}`"));
        }
        let eps = NCPoly::scalar(counit_word(&w));
        let s_left = d
            .map_leg(0, 1, |u| TensorPoly::from_poly(&antipode_word(u)))
            .multiply_legs(0, sys)
            .to_poly();
        let s_right = d
            .map_leg(1, 1, |u| TensorPoly::from_poly(&antipode_word(u)))
            .multiply_legs(0, sys)
            .to_poly();
        if s_left != eps || s_right != eps {
            report.failures.push(format!("antipode law on `{name}`"));
        }
    }
    if !super::fundamental_is_unitary() {
        report.failures.push("fundamental matrix is not unitary".into());
    }
    report
}
