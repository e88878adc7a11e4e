//! Free *-algebras over Q(q) and terminating rewriting systems on them.
//!
//! A [`RewriteSystem`] carries an alphabet, oriented rules `word → poly` and
//! a well-founded term order. Construction rejects any rule that does not
//! strictly decrease the order, so [`RewriteSystem::normalize`] always
//! terminates. [`check_confluence`] resolves every overlap and inclusion
//! ambiguity between left-hand sides; an empty report plus termination
//! gives a unique normal form.

mod poly;
mod suq2;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::scalars::ScalarQ;

pub use poly::{Gen, NCPoly, Word};
pub use suq2::{suq2, suq2_presentation, A, AS, G, GS};

/// Named generators with a star involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    star: Vec<Gen>,
}

impl Alphabet {
    /// `star[i]` is the index of the adjoint of generator `i`.
    pub fn new(names: Vec<String>, star: Vec<Gen>) -> Result<Self> {
        if names.len() != star.len() {
            return Err(Error::Shape("star pairing must cover every generator".into()));
        }
        if names.len() > Gen::MAX as usize {
            return Err(Error::ResourceBound("too many generators".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Precondition(format!("duplicate generator name `{n}`")));
            }
        }
        for (i, &s) in star.iter().enumerate() {
            if s as usize >= names.len() || star[s as usize] as usize != i {
                return Err(Error::Precondition("star pairing is not an involution".into()));
            }
        }
        Ok(Alphabet { names, star })
    }

    /// Alphabet whose generators are all self-adjoint.
    pub fn self_adjoint(names: Vec<String>) -> Result<Self> {
        let star = (0..names.len() as Gen).collect();
        Self::new(names, star)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn star_of(&self, g: Gen) -> Gen {
        self.star[g as usize]
    }

    pub fn word_names(&self, w: &[Gen]) -> Vec<String> {
        w.iter().map(|&g| self.name(g).to_string()).collect()
    }

    /// Renders a polynomial with `*`-free juxtaposition, e.g. `(q^-1) a g + 1`.
    pub fn render(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in p.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let word = self.word_names(w).join(" ");
            if w.is_empty() {
                out.push_str(&format!("({c})"));
            } else if c.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("({c}) {word}"));
            }
        }
        out
    }
}

/// Weighted-degree then lexicographic order on words.
///
/// Words are compared first by the sum of generator weights, then
/// letter-by-letter by generator rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    weights: Vec<u32>,
    rank: Vec<u32>,
}

impl TermOrder {
    pub fn new(weights: Vec<u32>, rank: Vec<u32>) -> Result<Self> {
        if weights.len() != rank.len() {
            return Err(Error::Shape("weights and ranks differ in length".into()));
        }
        if weights.contains(&0) {
            return Err(Error::Precondition("generator weights must be positive".into()));
        }
        let mut sorted = rank.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != rank.len() {
            return Err(Error::Precondition("generator ranks must be distinct".into()));
        }
        Ok(TermOrder { weights, rank })
    }

    /// Plain degree-lexicographic order with precedence = generator index.
    pub fn deglex(n: usize) -> Self {
        TermOrder { weights: vec![1; n], rank: (0..n as u32).collect() }
    }

    pub fn weight(&self, w: &[Gen]) -> u32 {
        w.iter().map(|&g| self.weights[g as usize]).sum()
    }

    pub fn cmp(&self, a: &[Gen], b: &[Gen]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| {
            let ra = a.iter().map(|&g| self.rank[g as usize]);
            let rb = b.iter().map(|&g| self.rank[g as usize]);
            ra.cmp(rb)
        })
    }

    fn key(&self, w: &[Gen]) -> (u32, Vec<u32>) {
        (self.weight(w), w.iter().map(|&g| self.rank[g as usize]).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Where to apply a rule when a word contains several redexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    order: TermOrder,
    by_first: HashMap<Gen, Vec<usize>>,
    cache: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        Self::build(self.alphabet.clone(), self.rules.clone(), self.order.clone())
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("alphabet", &self.alphabet)
            .field("rules", &self.rules)
            .field("order", &self.order)
            .finish()
    }
}

impl RewriteSystem {
    /// Validates the termination invariant: every left-hand side has length
    /// at least 2 and every right-hand word is strictly below it.
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>, order: TermOrder) -> Result<Self> {
        if order.weights.len() != alphabet.len() {
            return Err(Error::Shape("term order does not match alphabet".into()));
        }
        for r in &rules {
            if r.lhs.len() < 2 {
                return Err(Error::Precondition("rule left-hand sides need length >= 2".into()));
            }
            let in_range = |w: &[Gen]| w.iter().all(|&g| (g as usize) < alphabet.len());
            if !in_range(&r.lhs) || !r.rhs.terms().all(|(w, _)| in_range(w)) {
                return Err(Error::Precondition("rule uses a generator outside the alphabet".into()));
            }
            for (w, _) in r.rhs.terms() {
                if order.cmp(w, &r.lhs) != Ordering::Less {
                    return Err(Error::Precondition(format!(
                        "rule {} -> {} does not decrease the term order",
                        alphabet.word_names(&r.lhs).join(" "),
                        alphabet.render(&r.rhs)
                    )));
                }
            }
        }
        Ok(Self::build(alphabet, rules, order))
    }

    fn build(alphabet: Alphabet, rules: Vec<Rule>, order: TermOrder) -> Self {
        let mut by_first: HashMap<Gen, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_first.entry(r.lhs[0]).or_default().push(i);
        }
        RewriteSystem { alphabet, rules, order, by_first, cache: Mutex::new(HashMap::new()) }
    }

    /// A system without rules: the free algebra on `alphabet`.
    pub fn free(alphabet: Alphabet) -> Self {
        let order = TermOrder::deglex(alphabet.len());
        Self::build(alphabet, Vec::new(), order)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    fn rule_at(&self, w: &[Gen], pos: usize) -> Option<usize> {
        let cands = self.by_first.get(&w[pos])?;
        cands.iter().copied().find(|&i| w[pos..].starts_with(&self.rules[i].lhs))
    }

    /// First redex `(position, rule)` under the given strategy.
    fn find_redex(&self, w: &[Gen], strategy: Strategy) -> Option<(usize, usize)> {
        match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(|p| self.rule_at(w, p).map(|r| (p, r))),
            Strategy::Rightmost => (0..w.len()).rev().find_map(|p| self.rule_at(w, p).map(|r| (p, r))),
        }
    }

    pub fn is_normal_word(&self, w: &[Gen]) -> bool {
        self.find_redex(w, Strategy::Leftmost).is_none()
    }

    fn apply(&self, w: &[Gen], pos: usize, rule: usize) -> NCPoly {
        let r = &self.rules[rule];
        let (pre, rest) = w.split_at(pos);
        let post = &rest[r.lhs.len()..];
        NCPoly::from_terms(r.rhs.terms().map(|(mid, c)| {
            let mut nw = Vec::with_capacity(pre.len() + mid.len() + post.len());
            nw.extend_from_slice(pre);
            nw.extend_from_slice(mid);
            nw.extend_from_slice(post);
            (nw, c.clone())
        }))
    }

    /// Normal form of a single word, leftmost strategy, memoized.
    pub fn normal_word(&self, w: &[Gen]) -> NCPoly {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(w) {
            return hit.clone();
        }
        let out = match self.find_redex(w, Strategy::Leftmost) {
            None => NCPoly::word(w.to_vec()),
            Some((pos, rule)) => {
                let mut acc = NCPoly::zero();
                for (nw, c) in self.apply(w, pos, rule).into_terms() {
                    acc.add_scaled(&c, &self.normal_word(&nw));
                }
                acc
            }
        };
        self.cache.lock().expect("cache lock").insert(w.to_vec(), out.clone());
        out
    }

    /// Normal form using the leftmost-outermost strategy.
    pub fn normalize(&self, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            if self.rules.is_empty() {
                acc.add_term(w.clone(), c.clone());
            } else {
                acc.add_scaled(c, &self.normal_word(w));
            }
        }
        acc
    }

    /// Uncached rewriting under an explicit strategy. Terms are processed
    /// largest-first so that equal words merge before they are rewritten.
    pub fn normalize_with(&self, p: &NCPoly, strategy: Strategy) -> NCPoly {
        let mut pending: BTreeMap<(u32, Vec<u32>), (Word, ScalarQ)> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<(u32, Vec<u32>), (Word, ScalarQ)>, w: Word, c: ScalarQ| {
            let key = self.order.key(&w);
            match pending.get_mut(&key) {
                Some(slot) => {
                    slot.1 = &slot.1 + &c;
                    if slot.1.is_zero() {
                        pending.remove(&key);
                    }
                }
                None => {
                    if !c.is_zero() {
                        pending.insert(key, (w, c));
                    }
                }
            }
        };
        for (w, c) in p.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut out = NCPoly::zero();
        while let Some((_, (w, c))) = pending.pop_last() {
            match self.find_redex(&w, strategy) {
                None => out.add_term(w, c),
                Some((pos, rule)) => {
                    for (nw, d) in self.apply(&w, pos, rule).into_terms() {
                        push(&mut pending, nw, &c * &d);
                    }
                }
            }
        }
        out
    }

    /// Normalized product.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.normalize(&a.concat(b))
    }

    pub fn mul_all<'a, I: IntoIterator<Item = &'a NCPoly>>(&self, factors: I) -> NCPoly {
        factors.into_iter().fold(NCPoly::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &NCPoly, n: usize) -> NCPoly {
        (0..n).fold(NCPoly::one(), |acc, _| self.mul(&acc, a))
    }

    /// The *-involution: reverse every word, star each letter, keep the
    /// (real) coefficients, normalize.
    pub fn star(&self, p: &NCPoly) -> NCPoly {
        let raw = NCPoly::from_terms(p.terms().map(|(w, c)| {
            let nw: Word = w.iter().rev().map(|&g| self.alphabet.star_of(g)).collect();
            (nw, c.clone())
        }));
        self.normalize(&raw)
    }

    pub fn gen(&self, name: &str) -> Option<NCPoly> {
        self.alphabet.index(name).map(NCPoly::gen)
    }
}

/// A critical pair whose two reductions did not reach the same normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCPoly,
    pub right: NCPoly,
}

/// Enumerates overlap and inclusion ambiguities among the left-hand sides
/// and reports every one whose two one-step reductions normalize to
/// different results. Ambiguity words are capped at
/// `min(degree_bound, 2 · longest lhs)` letters.
pub fn check_confluence(sys: &RewriteSystem, degree_bound: usize) -> Vec<CriticalPair> {
    let longest = sys.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
    let cap = degree_bound.min(2 * longest);
    let mut report = Vec::new();
    for (i, r1) in sys.rules.iter().enumerate() {
        for (j, r2) in sys.rules.iter().enumerate() {
            let l1 = &r1.lhs;
            let l2 = &r2.lhs;
            // overlaps: proper suffix of l1 equals proper prefix of l2
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let mut w = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() <= cap {
                        resolve(sys, &w, (i, 0), (j, l1.len() - k), &mut report);
                    }
                }
            }
            // inclusions: l2 occurs inside l1
            if i != j && l2.len() <= l1.len() && l1.len() <= cap {
                for pos in 0..=l1.len() - l2.len() {
                    if l1[pos..pos + l2.len()] == l2[..] {
                        resolve(sys, l1, (i, 0), (j, pos), &mut report);
                    }
                }
            }
        }
    }
    report
}

fn resolve(
    sys: &RewriteSystem,
    w: &[Gen],
    (r1, p1): (usize, usize),
    (r2, p2): (usize, usize),
    report: &mut Vec<CriticalPair>,
) {
    let left = sys.normalize_with(&sys.apply(w, p1, r1), Strategy::Leftmost);
    let right = sys.normalize_with(&sys.apply(w, p2, r2), Strategy::Leftmost);
    if left != right {
        report.push(CriticalPair { word: w.to_vec(), rules: (r1, r2), left, right });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::self_adjoint(vec!["a".into(), "b".into()]).unwrap()
    }

    #[test]
    fn commuting_rule_has_no_ambiguities() {
        let rules = vec![Rule { lhs: vec![1, 0], rhs: NCPoly::word(vec![0, 1]) }];
        let sys = RewriteSystem::new(ab(), rules, TermOrder::deglex(2)).unwrap();
        assert!(check_confluence(&sys, 10).is_empty());
        let p = NCPoly::word(vec![1, 1, 0, 1, 0]);
        assert_eq!(sys.normalize(&p), NCPoly::word(vec![0, 0, 1, 1, 1]));
    }

    #[test]
    fn non_confluent_system_is_reported() {
        let rules = vec![
            Rule { lhs: vec![0, 0], rhs: NCPoly::gen(1) },
            Rule { lhs: vec![0, 0, 0], rhs: NCPoly::one() },
        ];
        let sys = RewriteSystem::new(ab(), rules, TermOrder::deglex(2)).unwrap();
        let report = check_confluence(&sys, 6);
        assert!(!report.is_empty());
        // aaa reduces to b a, a b or 1 depending on the first step
        let words: Vec<_> = report.iter().map(|c| c.word.clone()).collect();
        assert!(words.contains(&vec![0, 0, 0]));
    }

    #[test]
    fn rejects_non_decreasing_rules() {
        let rules = vec![Rule { lhs: vec![0, 1], rhs: NCPoly::word(vec![1, 0]) }];
        assert!(RewriteSystem::new(ab(), rules, TermOrder::deglex(2)).is_err());
        let short = vec![Rule { lhs: vec![1], rhs: NCPoly::gen(0) }];
        assert!(RewriteSystem::new(ab(), short, TermOrder::deglex(2)).is_err());
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::new(vec!["x".into(), "x".into()], vec![0, 1]).is_err());
        assert!(Alphabet::new(vec!["x".into(), "y".into()], vec![1, 1]).is_err());
    }

    #[test]
    fn strategies_agree_on_commutation() {
        let rules = vec![Rule { lhs: vec![1, 0], rhs: NCPoly::term(ScalarQ::q(), vec![0, 1]) }];
        let sys = RewriteSystem::new(ab(), rules, TermOrder::deglex(2)).unwrap();
        let p = NCPoly::word(vec![1, 1, 0, 0]);
        let l = sys.normalize_with(&p, Strategy::Leftmost);
        let r = sys.normalize_with(&p, Strategy::Rightmost);
        assert_eq!(l, r);
        assert_eq!(l, NCPoly::term(ScalarQ::q_pow(4), vec![0, 0, 1, 1]));
    }
}
