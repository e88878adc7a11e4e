//! The quantum automorphism algebra of M_n: its defining relations, and
//! their derivation from a formal trace-preserving coaction on M_n.
//!
//! Generators are `u[i,j,k,l] = u_ij^kl` together with their adjoints as
//! separate letters, so the star relation `(u_ij^kl)* = u_ji^lk` is a
//! genuine relation of the free algebra.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::ncalg::{Alphabet, Gen, NCPoly, Word};
use crate::scalars::{Field, ScalarQ};

/// Largest supported matrix size; relation counts grow like n⁶.
pub const MAX_N: usize = 3;

/// Letter indexing for the quantum automorphism algebra of M_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QAutAlphabet {
    n: usize,
    alphabet: Alphabet,
}

impl QAutAlphabet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Domain(format!("n must lie in 1..={MAX_N}, got {n}")));
        }
        let count = n.pow(4);
        let mut names = Vec::with_capacity(2 * count);
        for star in [false, true] {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            let s = if star { "*" } else { "" };
                            names.push(format!("u{}{}^{}{}{s}", i + 1, j + 1, k + 1, l + 1));
                        }
                    }
                }
            }
        }
        let star = (0..2 * count).map(|g| ((g + count) % (2 * count)) as Gen).collect();
        Ok(QAutAlphabet { n, alphabet: Alphabet::new(names, star)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `u_ij^kl`, zero-based indices.
    pub fn u(&self, i: usize, j: usize, k: usize, l: usize) -> Gen {
        (((i * self.n + j) * self.n + k) * self.n + l) as Gen
    }

    /// `(u_ij^kl)*` as a letter.
    pub fn u_star(&self, i: usize, j: usize, k: usize, l: usize) -> Gen {
        self.alphabet.star_of(self.u(i, j, k, l))
    }

    /// `(i, j, k, l, starred)` of a letter.
    pub fn indices(&self, g: Gen) -> (usize, usize, usize, usize, bool) {
        let count = self.n.pow(4);
        let (g, starred) = ((g as usize) % count, (g as usize) >= count);
        let n = self.n;
        (g / n.pow(3), (g / n.pow(2)) % n, (g / n) % n, g % n, starred)
    }

    /// Applies the index permutation `sigma` to all four indices of every letter.
    pub fn relabel(&self, p: &NCPoly, sigma: &[usize]) -> NCPoly {
        NCPoly::from_terms(p.terms().map(|(w, c)| {
            let w = w
                .iter()
                .map(|&g| {
                    let (i, j, k, l, s) = self.indices(g);
                    let h = self.u(sigma[i], sigma[j], sigma[k], sigma[l]);
                    if s {
                        self.alphabet.star_of(h)
                    } else {
                        h
                    }
                })
                .collect();
            (w, c.clone())
        }))
    }

    pub fn render(&self, p: &NCPoly) -> String {
        self.alphabet.render(p)
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn minus_delta(p: &mut NCPoly, d: i64, w: Word) {
    if d != 0 {
        p.add_term(w, ScalarQ::from_int(-d));
    }
}

/// The five relation families of the quantum automorphism algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QAutPresentation {
    pub alphabet: QAutAlphabet,
    /// `Σ_p u_ij^kp u_rs^pl − δ_jr u_is^kl`
    pub family1: Vec<NCPoly>,
    /// `Σ_p u_lp^sr u_pk^ji − δ_jr u_lk^si`
    pub family2: Vec<NCPoly>,
    /// `(u_ij^kl)* − u_ji^lk`
    pub star: Vec<NCPoly>,
    /// `Σ_p u_kl^pp − δ_kl`
    pub family4: Vec<NCPoly>,
    /// `Σ_p u_pp^kl − δ_kl`
    pub family5: Vec<NCPoly>,
}

impl QAutPresentation {
    pub fn families(&self) -> [(&'static str, &[NCPoly]); 5] {
        [
            ("family1", &self.family1),
            ("family2", &self.family2),
            ("star", &self.star),
            ("family4", &self.family4),
            ("family5", &self.family5),
        ]
    }

    pub fn relations(&self) -> Vec<NCPoly> {
        self.families().iter().flat_map(|(_, f)| f.iter().cloned()).collect()
    }
}

fn six_tuples(n: usize) -> impl Iterator<Item = [usize; 6]> {
    (0..n.pow(6)).map(move |mut x| {
        let mut t = [0; 6];
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        t
    })
}

/// All five families, indices in lexicographic order.
pub fn wang_relations(n: usize) -> Result<QAutPresentation> {
    let a = QAutAlphabet::new(n)?;
    let mut family1 = Vec::new();
    let mut family2 = Vec::new();
    for [i, j, k, l, r, s] in six_tuples(n) {
        let mut p = NCPoly::zero();
        for q in 0..n {
            p.add_term(vec![a.u(i, j, k, q), a.u(r, s, q, l)], ScalarQ::one());
        }
        minus_delta(&mut p, delta(j, r), vec![a.u(i, s, k, l)]);
        family1.push(p);
        let mut p = NCPoly::zero();
        for q in 0..n {
            p.add_term(vec![a.u(l, q, s, r), a.u(q, k, j, i)], ScalarQ::one());
        }
        minus_delta(&mut p, delta(j, r), vec![a.u(l, k, s, i)]);
        family2.push(p);
    }
    let mut star = Vec::new();
    let mut family4 = Vec::new();
    let mut family5 = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut p = NCPoly::gen(a.u_star(i, j, k, l));
                    p.add_term(vec![a.u(j, i, l, k)], ScalarQ::from_int(-1));
                    star.push(p);
                }
            }
            let (k, l) = (i, j);
            let mut p4 = NCPoly::zero();
            let mut p5 = NCPoly::zero();
            for q in 0..n {
                p4.add_term(vec![a.u(k, l, q, q)], ScalarQ::one());
                p5.add_term(vec![a.u(q, q, k, l)], ScalarQ::one());
            }
            minus_delta(&mut p4, delta(k, l), Vec::new());
            minus_delta(&mut p5, delta(k, l), Vec::new());
            family4.push(p4);
            family5.push(p5);
        }
    }
    Ok(QAutPresentation { alphabet: a, family1, family2, star, family4, family5 })
}

/// Element of `A ⊗ M_n`: matrix-unit coefficients.
type AMat = BTreeMap<(usize, usize), NCPoly>;

fn add_at(m: &mut AMat, key: (usize, usize), p: &NCPoly, c: &ScalarQ) {
    let slot = m.entry(key).or_default();
    slot.add_scaled(c, p);
    if slot.is_zero() {
        m.remove(&key);
    }
}

/// Relations read off from the coaction axioms for
/// `λ(e_ij) = Σ u_ij^kl ⊗ e_kl`, one family per axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRelations {
    /// `λ(e_ij)λ(e_rs) − λ(e_ij e_rs)`
    pub multiplicativity: Vec<NCPoly>,
    /// `λ(e_ij)* − λ(e_ji)`
    pub star: Vec<NCPoly>,
    /// `Σ_i λ(e_ii) − 1⊗1`
    pub unitality: Vec<NCPoly>,
    /// `(id⊗τ)λ(e_ij) − τ(e_ij)1` with the un-normalized trace `τ(e_kl) = δ_kl`
    pub trace: Vec<NCPoly>,
}

impl DerivedRelations {
    pub fn all(&self) -> Vec<NCPoly> {
        let mut out: Vec<NCPoly> = Vec::new();
        for p in self.multiplicativity.iter().chain(&self.star).chain(&self.unitality).chain(&self.trace) {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        out
    }
}

fn dedup(ps: impl IntoIterator<Item = NCPoly>) -> Vec<NCPoly> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in ps {
        if !p.is_zero() && seen.insert(canonical(&p)) {
            out.push(p);
        }
    }
    out
}

/// Scales `p` so that its first term has coefficient 1; zero stays zero.
pub fn canonical(p: &NCPoly) -> NCPoly {
    match p.terms().next() {
        Some((_, c)) => p.scale(&c.inv().expect("nonzero coefficient")),
        None => NCPoly::zero(),
    }
}

/// Canonical relation set for comparisons.
pub fn relation_set(ps: &[NCPoly]) -> HashSet<NCPoly> {
    ps.iter().filter(|p| !p.is_zero()).map(canonical).collect()
}

/// Expands the coaction axioms symbolically and extracts the coefficient
/// of every matrix unit.
pub fn derive_from_coaction(n: usize) -> Result<DerivedRelations> {
    let a = QAutAlphabet::new(n)?;
    let one = ScalarQ::one();
    let lambda = |i: usize, j: usize| -> AMat {
        let mut m = AMat::new();
        for k in 0..n {
            for l in 0..n {
                m.insert((k, l), NCPoly::gen(a.u(i, j, k, l)));
            }
        }
        m
    };
    let mut mult = Vec::new();
    for [i, j, r, s, _, _] in six_tuples(n).filter(|t| t[4] == 0 && t[5] == 0) {
        let (x, y) = (lambda(i, j), lambda(r, s));
        let mut m = AMat::new();
        // e_kl e_k'l' = δ_lk' e_kl'
        for (&(k, l), p) in &x {
            for (&(k2, l2), q) in &y {
                if l == k2 {
                    add_at(&mut m, (k, l2), &p.concat(q), &one);
                }
            }
        }
        if j == r {
            for (key, p) in lambda(i, s) {
                add_at(&mut m, key, &p, &-&one);
            }
        }
        mult.extend((0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|key| m.get(&key).cloned().unwrap_or_default()));
    }
    let mut star = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut m = AMat::new();
            // (x ⊗ e_kl)* = x* ⊗ e_lk
            for (&(k, l), p) in &lambda(i, j) {
                let ps = NCPoly::from_terms(p.terms().map(|(w, c)| {
                    (w.iter().rev().map(|&g| a.alphabet().star_of(g)).collect(), c.bar())
                }));
                add_at(&mut m, (l, k), &ps, &one);
            }
            for (key, p) in lambda(j, i) {
                add_at(&mut m, key, &p, &-&one);
            }
            star.extend(m.into_values());
        }
    }
    let mut unit = AMat::new();
    for i in 0..n {
        for (key, p) in lambda(i, i) {
            add_at(&mut unit, key, &p, &one);
        }
        add_at(&mut unit, (i, i), &NCPoly::one(), &-&one);
    }
    let unitality = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|key| unit.get(&key).cloned().unwrap_or_default());
    let mut trace = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut p = NCPoly::zero();
            for (&(k, l), q) in &lambda(i, j) {
                if k == l {
                    p.add_scaled(&one, q);
                }
            }
            minus_delta(&mut p, delta(i, j), Vec::new());
            trace.push(p);
        }
    }
    Ok(DerivedRelations {
        multiplicativity: dedup(mult),
        star: dedup(star),
        unitality: dedup(unitality),
        trace: dedup(trace),
    })
}

/// Result of a bounded ideal-membership computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    /// For each target: the least flank degree at which it lies in the
    /// span, or `None` if it does not up to the bound.
    pub degrees: Vec<Option<usize>>,
    /// Rows generated at the last degree examined.
    pub rows: usize,
}

impl Membership {
    pub fn all_contained(&self) -> bool {
        self.degrees.iter().all(Option::is_some)
    }
}

/// `m₁ · gens[i] · m₂`
type FlankedRow = (Word, usize, Word);

/// Index from a term word to `(relation, term)` occurrences.
struct TermIndex {
    by_word: HashMap<Word, Vec<usize>>,
    lengths: BTreeSet<usize>,
}

impl TermIndex {
    fn new(gens: &[NCPoly]) -> Self {
        let mut by_word: HashMap<Word, Vec<usize>> = HashMap::new();
        let mut lengths = BTreeSet::new();
        for (i, r) in gens.iter().enumerate() {
            for (w, _) in r.terms() {
                let e = by_word.entry(w.clone()).or_default();
                if !e.contains(&i) {
                    e.push(i);
                }
                lengths.insert(w.len());
            }
        }
        TermIndex { by_word, lengths }
    }
}

/// The component of the row/word incidence graph reachable from `seeds`,
/// where rows are `m₁ r m₂` with `|m₁| + |m₂| ≤ degree`.
fn component_rows(gens: &[NCPoly], index: &TermIndex, seeds: &[Word], degree: usize) -> Vec<FlankedRow> {
    let mut seen_words: HashSet<Word> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Word> = seeds.iter().cloned().collect();
    let mut seen_rows: HashSet<FlankedRow> = HashSet::new();
    let mut rows = Vec::new();
    while let Some(w) = queue.pop_front() {
        for &len in &index.lengths {
            if len > w.len() || w.len() - len > degree {
                continue;
            }
            for p in 0..=w.len() - len {
                let Some(rels) = index.by_word.get(&w[p..p + len]) else { continue };
                for &ri in rels {
                    let key = (w[..p].to_vec(), ri, w[p + len..].to_vec());
                    if seen_rows.contains(&key) {
                        continue;
                    }
                    for (t, _) in gens[ri].terms() {
                        let mut nw = key.0.clone();
                        nw.extend_from_slice(t);
                        nw.extend_from_slice(&key.2);
                        if seen_words.insert(nw.clone()) {
                            queue.push_back(nw);
                        }
                    }
                    seen_rows.insert(key.clone());
                    rows.push(key);
                }
            }
        }
    }
    rows
}

fn span_check<F: Field>(
    gens: &[NCPoly],
    rows: &[FlankedRow],
    targets: &[&NCPoly],
    conv: impl Fn(&ScalarQ) -> F,
) -> Vec<bool> {
    let mut words: BTreeSet<Word> = BTreeSet::new();
    for (m1, ri, m2) in rows {
        for (t, _) in gens[*ri].terms() {
            let mut w = m1.clone();
            w.extend_from_slice(t);
            w.extend_from_slice(m2);
            words.insert(w);
        }
    }
    for t in targets {
        words.extend(t.terms().map(|(w, _)| w.clone()));
    }
    // longest, then lexicographically largest, words get the smallest columns
    let mut ordered: Vec<Word> = words.into_iter().collect();
    ordered.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
    let col: HashMap<Word, usize> = ordered.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let to_row = |p: &NCPoly, m1: &[Gen], m2: &[Gen]| -> SparseRow<F> {
        p.terms()
            .map(|(t, c)| {
                let mut w = m1.to_vec();
                w.extend_from_slice(t);
                w.extend_from_slice(m2);
                (col[&w], conv(c))
            })
            .collect()
    };
    let mut ech: Echelon<F> = Echelon::new(ordered.len());
    for (m1, ri, m2) in rows {
        ech.insert(to_row(&gens[*ri], m1, m2));
    }
    targets.iter().map(|t| ech.contains(to_row(t, &[], &[]))).collect()
}

/// For each target, the least flank degree `d ≤ degree_bound` at which it
/// lies in the linear span of `{m₁ r m₂ : r ∈ gens, |m₁| + |m₂| ≤ d}`.
pub fn ideal_membership(gens: &[NCPoly], targets: &[NCPoly], degree_bound: usize) -> Membership {
    let index = TermIndex::new(gens);
    let rational = gens.iter().chain(targets).all(|p| p.terms().all(|(_, c)| c.as_rational().is_some()));
    let mut degrees: Vec<Option<usize>> = targets.iter().map(|t| t.is_zero().then_some(0)).collect();
    let mut rows_used = 0;
    for d in 0..=degree_bound {
        let open: Vec<usize> = (0..targets.len()).filter(|&i| degrees[i].is_none()).collect();
        if open.is_empty() {
            break;
        }
        // targets in different components are handled independently
        let mut groups: Vec<(Vec<usize>, Vec<FlankedRow>)> = Vec::new();
        for &ti in &open {
            let seeds: Vec<Word> = targets[ti].terms().map(|(w, _)| w.clone()).collect();
            if let Some(g) = groups.iter_mut().find(|(_, rows)| seeds.iter().any(|s| row_touches(gens, rows, s))) {
                g.0.push(ti);
                continue;
            }
            groups.push((vec![ti], component_rows(gens, &index, &seeds, d)));
        }
        rows_used = 0;
        for (members, rows) in &groups {
            rows_used += rows.len();
            let ts: Vec<&NCPoly> = members.iter().map(|&i| &targets[i]).collect();
            let found = if rational {
                span_check::<BigRational>(gens, rows, &ts, |c| c.as_rational().expect("rational coefficient"))
            } else {
                span_check::<ScalarQ>(gens, rows, &ts, Clone::clone)
            };
            for (&i, ok) in members.iter().zip(found) {
                if ok {
                    degrees[i] = Some(d);
                }
            }
        }
    }
    Membership { degrees, rows: rows_used }
}

fn row_touches(gens: &[NCPoly], rows: &[FlankedRow], w: &Word) -> bool {
    rows.iter().any(|(m1, ri, m2)| {
        w.len() >= m1.len() + m2.len()
            && w.starts_with(m1)
            && w.ends_with(m2)
            && gens[*ri].terms().any(|(t, _)| t.len() + m1.len() + m2.len() == w.len() && w[m1.len()..m1.len() + t.len()] == t[..])
    })
}

/// True iff every element of `targets` lies in the two-sided ideal
/// generated by `gens`, witnessed with flanks of total length at most
/// `degree_bound`.
pub fn ideal_contains(gens: &[NCPoly], targets: &[NCPoly], degree_bound: usize) -> bool {
    ideal_membership(gens, targets, degree_bound).all_contained()
}

/// Bounded check of whether the second multiplicativity family follows
/// from the relations read off the coaction axioms.
pub fn family2_status(n: usize, degree_bound: usize) -> Result<Membership> {
    let w = wang_relations(n)?;
    let d = derive_from_coaction(n)?;
    Ok(ideal_membership(&d.all(), &w.family2, degree_bound))
}

/// JSON-friendly form: each relation as a list of `(coefficient, letters)`.
pub fn export_relations(a: &QAutAlphabet, ps: &[NCPoly]) -> Vec<Vec<(String, Vec<String>)>> {
    ps.iter()
        .map(|p| p.terms().map(|(w, c)| (c.to_string(), a.alphabet().word_names(w))).collect())
        .collect()
}
