//! Exact Gaussian elimination over any [`Field`].

use std::collections::BTreeMap;

use crate::scalars::Field;

/// Sparse row: column → nonzero entry.
pub type SparseRow<F> = BTreeMap<usize, F>;

/// Incremental row echelon form. Each stored row has leading entry 1 in
/// its pivot column and no entries left of it.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    /// Reduces `row` against the stored pivots; the residue has no entries
    /// in pivot columns.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut from = 0usize;
        loop {
            let next = row
                .range(from..)
                .map(|(c, _)| *c)
                .find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { return row };
            let factor = row.remove(&c).expect("present");
            for (col, v) in self.pivots[&c].iter().skip(1) {
                let delta = factor.times(v);
                let slot = row.entry(*col).or_insert_with(F::zero);
                *slot = slot.minus(&delta);
                if slot.is_zero() {
                    row.remove(col);
                }
            }
            from = c + 1;
        }
    }

    /// Adds a row; returns true when it was independent of the stored rows.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else { return false };
        let inv = lv.inverse().expect("nonzero leading entry");
        let normed: SparseRow<F> = row.into_iter().map(|(c, v)| (c, v.times(&inv))).collect();
        self.pivots.insert(lead, normed);
        true
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of the solution space of `rows · x = 0`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let rref = self.reduced_rows();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !rref.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.ncols];
                v[f] = F::one();
                for (&p, row) in &rref {
                    if let Some(x) = row.get(&f) {
                        v[p] = x.negated();
                    }
                }
                v
            })
            .collect()
    }

    /// Fully reduced rows keyed by pivot column.
    pub fn reduced_rows(&self) -> BTreeMap<usize, SparseRow<F>> {
        let mut out: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let cols: Vec<usize> = r.keys().copied().filter(|c| *c != p && out.contains_key(c)).collect();
            for c in cols {
                let Some(factor) = r.remove(&c) else { continue };
                for (col, v) in out[&c].iter().skip(1) {
                    let delta = factor.times(v);
                    let slot = r.entry(*col).or_insert_with(F::zero);
                    *slot = slot.minus(&delta);
                    if slot.is_zero() {
                        r.remove(col);
                    }
                }
            }
            out.insert(p, r);
        }
        out
    }
}

pub fn dense_to_sparse<F: Field>(row: &[F]) -> SparseRow<F> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(dense_to_sparse(r));
    }
    e.rank()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inverse().expect("nonzero pivot");
        for v in a[col].iter_mut() {
            *v = v.times(&inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x = x.minus(&f.times(p));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `A x = b`, returning one solution if the system is consistent.
/// Unknowns in free columns are set to zero.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    let mut e = Echelon::new(ncols + 1);
    for (row, rhs) in a.iter().zip(b) {
        let mut r = dense_to_sparse(row);
        if !rhs.is_zero() {
            r.insert(ncols, rhs.clone());
        }
        e.insert(r);
    }
    let rref = e.reduced_rows();
    if rref.contains_key(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (&p, row) in &rref {
        x[p] = row.get(&ncols).cloned().unwrap_or_else(F::zero);
    }
    Some(x)
}
