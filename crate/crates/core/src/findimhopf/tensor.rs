use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::linalg::SparseRow;
use crate::scalars::Field;

/// Sparse coefficient vector in a fixed basis.
pub type Vector<F> = SparseRow<F>;

pub(crate) fn vec_add_scaled<F: Field>(acc: &mut Vector<F>, c: &F, v: &Vector<F>) {
    for (&i, x) in v {
        let d = c.times(x);
        match acc.entry(i) {
            Entry::Vacant(e) => {
                if !d.is_zero() {
                    e.insert(d);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&d);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

pub(crate) fn basis_vector<F: Field>(i: usize) -> Vector<F> {
    let mut v = Vector::new();
    v.insert(i, F::one());
    v
}

/// Sparse element of `V₁ ⊗ … ⊗ V_legs`, indexed by basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tens<F> {
    legs: usize,
    terms: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> Tens<F> {
    pub fn zero(legs: usize) -> Self {
        Tens { legs, terms: BTreeMap::new() }
    }

    pub fn scalar(c: F) -> Self {
        let mut t = Self::zero(0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn basis(index: Vec<usize>) -> Self {
        let mut t = Self::zero(index.len());
        t.add_term(index, F::one());
        t
    }

    pub fn from_vector(v: &Vector<F>) -> Self {
        let mut t = Self::zero(1);
        for (&i, c) in v {
            t.add_term(vec![i], c.clone());
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &[usize]) -> F {
        self.terms.get(index).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, index: Vec<usize>, c: F) {
        debug_assert_eq!(index.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &F, other: &Tens<F>) {
        assert_eq!(self.legs, other.legs, "leg count mismatch");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c.times(v));
        }
    }

    pub fn sub(&self, other: &Tens<F>) -> Tens<F> {
        let mut out = self.clone();
        out.add_scaled(&F::from_i64(-1), other);
        out
    }

    pub fn as_scalar(&self) -> F {
        assert_eq!(self.legs, 0);
        self.coeff(&[])
    }

    pub fn to_vector(&self) -> Vector<F> {
        assert_eq!(self.legs, 1);
        self.terms.iter().map(|(k, c)| (k[0], c.clone())).collect()
    }

    pub fn outer(&self, other: &Tens<F>) -> Tens<F> {
        let mut out = Tens::zero(self.legs + other.legs);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, c1.times(c2));
            }
        }
        out
    }

    /// New leg `i` is old leg `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Tens<F> {
        assert_eq!(perm.len(), self.legs);
        let mut out = Tens::zero(self.legs);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&i| k[i]).collect(), c.clone());
        }
        out
    }

    /// Swaps legs `i` and `i + 1`.
    pub fn flip(&self, i: usize) -> Tens<F> {
        let mut perm: Vec<usize> = (0..self.legs).collect();
        perm.swap(i, i + 1);
        self.permute(&perm)
    }

    /// Replaces leg `leg` by `f(index)`, a tensor with `out_legs` legs.
    pub fn map_leg(&self, leg: usize, out_legs: usize, f: impl Fn(usize) -> Tens<F>) -> Tens<F> {
        self.map_legs(leg, 1, out_legs, |k| f(k[0]))
    }

    /// Replaces the `width` legs starting at `leg` by `f(indices)`.
    pub fn map_legs(&self, leg: usize, width: usize, out_legs: usize, f: impl Fn(&[usize]) -> Tens<F>) -> Tens<F> {
        let mut out = Tens::zero(self.legs - width + out_legs);
        let mut cache: BTreeMap<&[usize], Tens<F>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let key = &k[leg..leg + width];
            let image = cache.entry(key).or_insert_with(|| f(key));
            debug_assert_eq!(image.legs, out_legs);
            for (ik, ic) in &image.terms {
                let mut nk = Vec::with_capacity(out.legs);
                nk.extend_from_slice(&k[..leg]);
                nk.extend_from_slice(ik);
                nk.extend_from_slice(&k[leg + width..]);
                out.add_term(nk, c.times(ic));
            }
        }
        out
    }
}
