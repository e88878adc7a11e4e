use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::ScalarQ;

/// Generator index into an [`Alphabet`](super::Alphabet).
pub type Gen = u16;

/// A word over the generator indices; the empty word is the unit.
pub type Word = Vec<Gen>;

/// Finite formal sum of scalar-weighted words. Terms are keyed by word in a
/// `BTreeMap`, so the representation is unique and zero coefficients never
/// appear.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, ScalarQ>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(ScalarQ::one())
    }

    pub fn scalar(c: ScalarQ) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(ScalarQ::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(vec![g])
    }

    pub fn term(c: ScalarQ, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, ScalarQ)>>(iter: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &ScalarQ, other: &NCPoly) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, ScalarQ)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> ScalarQ {
        self.terms.get(w).cloned().unwrap_or_else(ScalarQ::zero)
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> ScalarQ {
        self.coeff(&[])
    }

    /// Largest word length among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ScalarQ) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, d)| (w.clone(), c * d)).collect() }
    }

    /// Free-algebra product (word concatenation), not normalized.
    pub fn concat(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Applies a coefficient-wise map, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&ScalarQ) -> ScalarQ) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(&ScalarQ::one(), rhs);
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(&ScalarQ::from_int(-1), rhs);
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&ScalarQ::from_int(-1))
    }
}

/// Free-algebra product; see [`NCPoly::concat`].
impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.concat(rhs)
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}
