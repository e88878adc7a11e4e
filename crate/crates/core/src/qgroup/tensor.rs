use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::ncalg::{NCPoly, RewriteSystem, Word};
use crate::scalars::ScalarQ;

/// Element of a tensor power of a presented algebra: scalar-weighted
/// tuples of words, one word per leg.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly {
    legs: usize,
    terms: BTreeMap<Vec<Word>, ScalarQ>,
}

impl TensorPoly {
    pub fn zero(legs: usize) -> Self {
        TensorPoly { legs, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`
    pub fn one(legs: usize) -> Self {
        let mut t = Self::zero(legs);
        t.add_term(vec![Vec::new(); legs], ScalarQ::one());
        t
    }

    /// A zero-leg tensor is just a scalar.
    pub fn scalar(c: ScalarQ) -> Self {
        let mut t = Self::zero(0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = Self::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// `p₁ ⊗ p₂ ⊗ …`
    pub fn pure(factors: &[&NCPoly]) -> Self {
        let mut acc = TensorPoly::scalar(ScalarQ::one());
        for f in factors {
            acc = acc.outer(&TensorPoly::from_poly(f));
        }
        acc
    }

    pub fn legs(&self) -> usize {
        self.legs
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: ScalarQ) {
        debug_assert_eq!(key.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &ScalarQ, other: &TensorPoly) {
        assert_eq!(self.legs, other.legs, "leg count mismatch");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> TensorPoly {
        let mut out = TensorPoly::zero(self.legs);
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(&ScalarQ::from_int(-1), other);
        out
    }

    /// Value of a zero-leg tensor.
    pub fn as_scalar(&self) -> ScalarQ {
        assert_eq!(self.legs, 0);
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(ScalarQ::zero)
    }

    /// Collapses a one-leg tensor back to a polynomial.
    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.legs, 1);
        NCPoly::from_terms(self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    /// Tensor product `self ⊗ other` (legs concatenated).
    pub fn outer(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.legs + other.legs);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                out.add_term(k, c1 * c2);
            }
        }
        out
    }

    /// Leg-wise product, each leg normalized in `sys`.
    pub fn mul(&self, other: &TensorPoly, sys: &RewriteSystem) -> TensorPoly {
        assert_eq!(self.legs, other.legs, "leg count mismatch");
        let mut out = TensorPoly::zero(self.legs);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut acc = TensorPoly::scalar(c1 * c2);
                for (w1, w2) in k1.iter().zip(k2) {
                    let mut w = w1.clone();
                    w.extend_from_slice(w2);
                    acc = acc.outer(&TensorPoly::from_poly(&sys.normal_word(&w)));
                }
                out.add_scaled(&ScalarQ::one(), &acc);
            }
        }
        out
    }

    /// Replaces leg `leg` by the tensor `f(word)`, which may have any
    /// number of legs (0 for a functional, 2 for a coproduct, …).
    pub fn map_leg(&self, leg: usize, out_legs: usize, f: impl Fn(&Word) -> TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(self.legs - 1 + out_legs);
        for (k, c) in &self.terms {
            let image = f(&k[leg]);
            debug_assert_eq!(image.legs, out_legs);
            for (ik, ic) in &image.terms {
                let mut nk = Vec::with_capacity(out.legs);
                nk.extend(k[..leg].iter().cloned());
                nk.extend(ik.iter().cloned());
                nk.extend(k[leg + 1..].iter().cloned());
                out.add_term(nk, c * ic);
            }
        }
        out
    }

    /// Multiplies legs `leg` and `leg + 1` into one, normalized in `sys`.
    pub fn multiply_legs(&self, leg: usize, sys: &RewriteSystem) -> TensorPoly {
        let mut out = TensorPoly::zero(self.legs - 1);
        for (k, c) in &self.terms {
            let mut w = k[leg].clone();
            w.extend_from_slice(&k[leg + 1]);
            for (nw, d) in sys.normal_word(&w).into_terms() {
                let mut nk = Vec::with_capacity(out.legs);
                nk.extend(k[..leg].iter().cloned());
                nk.push(nw);
                nk.extend(k[leg + 2..].iter().cloned());
                out.add_term(nk, c * &d);
            }
        }
        out
    }

    /// Reorders legs: new leg `i` is old leg `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> TensorPoly {
        assert_eq!(perm.len(), self.legs);
        let mut out = TensorPoly::zero(self.legs);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&i| k[i].clone()).collect(), c.clone());
        }
        out
    }
}
