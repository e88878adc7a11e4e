use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::ncalg::{suq2, NCPoly, Word, A, G};
use crate::scalars::ScalarQ;

use super::hopf::{comultiply, comultiply_word, counit};
use super::{Spin, TensorPoly};

/// Spins above this are refused by [`build_corep`].
pub const DEFAULT_SPIN_BOUND: Spin = Spin::from_twice(6);

/// Square matrix of matrix coefficients of a spin-`l` corepresentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorepMatrix {
    pub spin: Spin,
    pub entries: Vec<Vec<NCPoly>>,
}

impl CorepMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i][j]
    }

    /// Checks `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`.
    pub fn satisfies_comultiplication(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut rhs = TensorPoly::zero(2);
                for k in 0..n {
                    let t = TensorPoly::pure(&[&self.entries[i][k], &self.entries[k][j]]);
                    rhs.add_scaled(&ScalarQ::one(), &t);
                }
                comultiply(&self.entries[i][j]) == rhs
            })
        })
    }

    /// Checks `ε(u_ij) = δ_ij`.
    pub fn satisfies_counit(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let want = if i == j { ScalarQ::one() } else { ScalarQ::zero() };
                counit(&self.entries[i][j]) == want
            })
        })
    }
}

/// Basis vector `α^(2l−j) γ^j` of the left coideal carrying spin `l`.
fn coideal_basis(spin: Spin, j: usize) -> Word {
    let n = spin.twice() as usize;
    std::iter::repeat_n(A, n - j).chain(std::iter::repeat_n(G, j)).collect()
}

fn corep_cache() -> &'static Mutex<HashMap<Spin, Arc<CorepMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<Spin, Arc<CorepMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Spin-`l` corepresentation with the default bound.
pub fn build_corep(spin: Spin) -> Result<Arc<CorepMatrix>> {
    build_corep_bounded(spin, DEFAULT_SPIN_BOUND)
}

/// Spin-`l` corepresentation.
///
/// The multiplication map `V^{⊗2l} → A` sends the `2l`-th tensor power of
/// the fundamental corepresentation onto the span of `α^(2l−j) γ^j`, which
/// is a left coideal: `Δ(v_j) = Σ_k u_jk ⊗ v_k`. The coefficients `u_jk`
/// read off from this expansion form the matrix. Irreducibility is what
/// [`intertwiner_dim`] checks.
pub fn build_corep_bounded(spin: Spin, bound: Spin) -> Result<Arc<CorepMatrix>> {
    if spin > bound {
        return Err(Error::ResourceBound(format!("spin {spin} exceeds the configured bound {bound}")));
    }
    if let Some(hit) = corep_cache().lock().expect("cache lock").get(&spin) {
        return Ok(hit.clone());
    }
    let n = spin.dim();
    let index: BTreeMap<Word, usize> = (0..n).map(|j| (coideal_basis(spin, j), j)).collect();
    let mut entries = vec![vec![NCPoly::zero(); n]; n];
    for (j, row) in entries.iter_mut().enumerate() {
        let d = comultiply_word(&coideal_basis(spin, j));
        for (key, c) in d.terms() {
            let k = *index.get(&key[1]).ok_or_else(|| {
                Error::Verification(format!("spin {spin}: second leg left the coideal"))
            })?;
            row[k].add_term(key[0].clone(), c.clone());
        }
    }
    let m = Arc::new(CorepMatrix { spin, entries });
    corep_cache().lock().expect("cache lock").insert(spin, m.clone());
    Ok(m)
}

/// Matrix of the tensor product corepresentation:
/// `(u ⊠ v)_{(a,b),(c,d)} = u_ac v_bd`.
pub fn tensor_corep(u: &CorepMatrix, v: &CorepMatrix) -> Vec<Vec<NCPoly>> {
    let (n, m) = (u.dim(), v.dim());
    let sys = suq2();
    let mut out = vec![vec![NCPoly::zero(); n * m]; n * m];
    for a in 0..n {
        for b in 0..m {
            for c in 0..n {
                for d in 0..m {
                    out[a * m + b][c * m + d] = sys.mul(&u.entries[a][c], &v.entries[b][d]);
                }
            }
        }
    }
    out
}

/// Dimension of `{T : u(l3) T = T (u(l1) ⊠ u(l2))}`, by an exact rank
/// computation over Q(q) on PBW coordinates.
pub fn intertwiner_dim(l1: Spin, l2: Spin, l3: Spin) -> Result<usize> {
    intertwiner_dim_bounded(l1, l2, l3, DEFAULT_SPIN_BOUND)
}

pub fn intertwiner_dim_bounded(l1: Spin, l2: Spin, l3: Spin, bound: Spin) -> Result<usize> {
    let u1 = build_corep_bounded(l1, bound)?;
    let u2 = build_corep_bounded(l2, bound)?;
    let u3 = build_corep_bounded(l3, bound)?;
    let w = tensor_corep(&u1, &u2);
    let rows = u3.dim();
    let cols = w.len();
    let unknown = |i: usize, k: usize| i * cols + k;
    let mut ech: Echelon<ScalarQ> = Echelon::new(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            // word → linear form in the unknowns
            let mut eqs: BTreeMap<Word, SparseRow<ScalarQ>> = BTreeMap::new();
            let mut push = |word: &Word, var: usize, c: ScalarQ| {
                let row = eqs.entry(word.clone()).or_default();
                let slot = row.entry(var).or_insert_with(ScalarQ::zero);
                *slot = &*slot + &c;
                if slot.is_zero() {
                    row.remove(&var);
                }
            };
            for k in 0..rows {
                for (wd, c) in u3.entries[i][k].terms() {
                    push(wd, unknown(k, j), c.clone());
                }
            }
            for (k, wk) in w.iter().enumerate() {
                for (wd, c) in wk[j].terms() {
                    push(wd, unknown(i, k), -c);
                }
            }
            for (_, row) in eqs {
                if !row.is_empty() {
                    ech.insert(row);
                }
                if ech.is_full() {
                    return Ok(0);
                }
            }
        }
    }
    Ok(rows * cols - ech.rank())
}
