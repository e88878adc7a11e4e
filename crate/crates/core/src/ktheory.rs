//! Integer matrices, Smith normal form, finitely generated abelian
//! groups, and the exact-sequence solvers built on them. Also the spin
//! fusion rules and torus characters of SU_q(2) corepresentations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qgroup::Spin;
use crate::scalars::LaurentPoly;

/// Dense matrix of unbounded integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    /// `rows` is needed separately only for `0 × n` matrices.
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!("expected a {rows}×{cols} matrix")));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::new(rows.len(), cols, rows)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i][j] += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("cannot subtract matrices of different shapes".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    /// Parses a whitespace grid (one row per line) or a JSON array of rows.
    /// JSON entries may be numbers or decimal strings.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let v: Vec<Vec<serde_json::Value>> =
                serde_json::from_str(t).map_err(|e| Error::Syntax { pos: e.column(), msg: e.to_string() })?;
            let rows = v
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| {
                            let s = match x {
                                serde_json::Value::Number(n) => n.to_string(),
                                serde_json::Value::String(s) => s,
                                other => return Err(Error::Domain(format!("`{other}` is not an integer"))),
                            };
                            s.trim().parse::<BigInt>().map_err(|_| Error::Domain(format!("`{s}` is not an integer")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::from_rows(rows);
        }
        let rows = t
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|s| s.parse::<BigInt>().map_err(|_| Error::Domain(format!("`{s}` is not an integer"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.entries.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.entries {
            r.swap(i, j);
        }
    }

    /// row_i += c · row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let d = c * &self.entries[j][k];
            self.entries[i][k] += d;
        }
    }

    /// col_i += c · col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for r in &mut self.entries {
            let d = c * &r[j];
            r[i] += d;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.entries[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// `U·M·V = S` with `U`, `V` unimodular and `S` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.entries[i][i].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = &a.entries[i][j];
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.entries[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form, pivoting on the entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    for t in 0..m.rows.min(m.cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                return SmithForm { s: a, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = a.entries[t][t].clone();
            let mut dirty = false;
            for i in t + 1..a.rows {
                let q = -a.entries[i][t].div_floor(&p);
                if !q.is_zero() {
                    a.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                }
                dirty |= !a.entries[i][t].is_zero();
            }
            for j in t + 1..a.cols {
                let q = -a.entries[t][j].div_floor(&p);
                if !q.is_zero() {
                    a.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                }
                dirty |= !a.entries[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility: pull a non-multiple into row t
            let bad = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.entries[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.entries[t][t].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { s: a, u, v }
}

/// `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `2 ≤ d₁ | d₂ | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical form of `Z^r ⊕ ⊕ Z/n_i` for arbitrary nonzero `n_i`.
    pub fn new(free_rank: usize, orders: &[BigInt]) -> Result<Self> {
        if orders.iter().any(Zero::is_zero) {
            return Err(Error::Domain("cyclic factors must have nonzero order".into()));
        }
        let n = orders.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, d) in orders.iter().enumerate() {
            m.entries[i][i] = d.abs();
        }
        let torsion = smith_normal_form(&m).invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        Ok(AbelianGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        AbelianGroup::new(self.free_rank + other.free_rank, &orders).expect("torsion orders are nonzero")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AbelianGroup", 3)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &self.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

/// `ker M` as a subgroup of `Z^cols`; always free.
pub fn kernel(m: &IntMatrix) -> AbelianGroup {
    AbelianGroup::free(m.cols - smith_normal_form(m).rank())
}

/// `Z^rows / im M`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let torsion = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    AbelianGroup { free_rank: m.rows - factors.len(), torsion }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KGroups {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
}

/// Unrolls `0 → K₁ → Z^a --∂--> Z^b → K₀ → 0`: `K₁ = ker ∂`, `K₀ = coker ∂`.
pub fn resolve_five_term(boundary: &IntMatrix) -> KGroups {
    KGroups { k0: cokernel(boundary), k1: kernel(boundary) }
}

/// K-groups of a crossed product by Z from the Pimsner-Voiculescu sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PvResult {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    /// How each group was assembled from kernels and cokernels.
    pub report: Vec<String>,
}

/// `K_i = coker(id − α_i) ⊕ ker(id − α_{1−i})`, where `α_i` is the
/// automorphism induced on `K_i(A) ≅ Z^{n_i}`.
pub fn pv_solve(alpha0: &IntMatrix, alpha1: &IntMatrix) -> Result<PvResult> {
    for (name, a) in [("alpha0", alpha0), ("alpha1", alpha1)] {
        if !a.is_square() {
            return Err(Error::Shape(format!("{name} must be square, got {}×{}", a.rows, a.cols)));
        }
    }
    let d0 = IntMatrix::identity(alpha0.rows).sub(alpha0)?;
    let d1 = IntMatrix::identity(alpha1.rows).sub(alpha1)?;
    let (c0, k0) = (cokernel(&d0), kernel(&d0));
    let (c1, k1) = (cokernel(&d1), kernel(&d1));
    let report = vec![
        format!("coker(id − α₀) = {c0}, ker(id − α₀) = {k0}"),
        format!("coker(id − α₁) = {c1}, ker(id − α₁) = {k1}"),
        "the kernels are subgroups of free groups, hence free, so both extensions split".into(),
        format!("K₀ = coker(id − α₀) ⊕ ker(id − α₁) = {}", c0.direct_sum(&k1)),
        format!("K₁ = coker(id − α₁) ⊕ ker(id − α₀) = {}", c1.direct_sum(&k0)),
    ];
    Ok(PvResult { k0: c0.direct_sum(&k1), k1: c1.direct_sum(&k0), report })
}

/// `l₁ ⊗ l₂ = |l₁ − l₂| ⊕ … ⊕ (l₁ + l₂)`.
pub fn fusion(l1: Spin, l2: Spin) -> Vec<Spin> {
    let (a, b) = (l1.twice(), l2.twice());
    (a.abs_diff(b)..=a + b).step_by(2).map(Spin::from_twice).collect()
}

/// True iff fusing any two labels of the set never leaves the parity
/// class (integral or half-integral) that the set occupies. The integral
/// spins form such a class; `{1/2}` does not, since `1/2 ⊗ 1/2 = 0 ⊕ 1`.
pub fn integral_labels_closed(labels: &[Spin]) -> bool {
    let parities: Vec<u32> = labels.iter().map(|l| l.twice() % 2).collect();
    labels.iter().all(|&a| {
        labels
            .iter()
            .all(|&b| fusion(a, b).iter().all(|l| parities.contains(&(l.twice() % 2))))
    })
}

/// Character of the restriction of spin `l` to the torus:
/// `Σ_{j=−l}^{l} z^{2j}`. Displayed with [`LaurentPoly::to_string_with`]`("z")`.
pub fn restriction_character(l: Spin) -> LaurentPoly {
    let n = l.twice() as i64;
    LaurentPoly::from_terms((0..=n).map(|k| (2 * k - n, BigInt::one())))
}

#[cfg(test)]
mod tests {
    use num_traits::ToPrimitive;

    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        (0..m.rows.min(m.cols)).map(|i| m.get(i, i).to_i64().unwrap()).collect()
    }

    fn check(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(f.u.mul(m).unwrap().mul(&f.v).unwrap(), f.s);
        assert!(f.u.det().unwrap().abs().is_one());
        assert!(f.v.det().unwrap().abs().is_one());
        f
    }

    #[test]
    fn snf_examples() {
        let f = check(&IntMatrix::from_i64(&[&[5, -5], &[-5, 5]]));
        assert_eq!(diag(&f.s), vec![5, 0]);
        let f = check(&IntMatrix::identity(3));
        assert_eq!(f.s, IntMatrix::identity(3));
        let f = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(diag(&f.s), vec![1, 6]);
        let f = check(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(diag(&f.s), vec![2, 6, 12]);
    }

    #[test]
    fn groups() {
        let m = IntMatrix::from_i64(&[&[4, -4], &[-4, 4]]);
        assert_eq!(kernel(&m).to_string(), "Z^1");
        assert_eq!(cokernel(&m).to_string(), "Z^1 + Z/4");
        assert_eq!(cokernel(&IntMatrix::zero(2, 2)).to_string(), "Z^2");
        assert_eq!(kernel(&IntMatrix::identity(2)).to_string(), "0");
        let g = AbelianGroup::new(0, &[2.into(), 3.into()]).unwrap();
        assert_eq!(g.to_string(), "Z/6");
        let g = AbelianGroup::new(1, &[2.into(), 4.into(), 1.into()]).unwrap();
        assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn five_term() {
        let k = resolve_five_term(&IntMatrix::from_i64(&[&[3, -3], &[-3, 3]]));
        assert_eq!((k.k0.to_string(), k.k1.to_string()), ("Z^1 + Z/3".into(), "Z^1".into()));
        let k = resolve_five_term(&IntMatrix::from_i64(&[&[1]]));
        assert!(k.k0.is_trivial() && k.k1.is_trivial());
    }

    #[test]
    fn pv() {
        let r = pv_solve(&IntMatrix::identity(1), &IntMatrix::zero(0, 0)).unwrap();
        assert_eq!((r.k0.to_string(), r.k1.to_string()), ("Z^1".into(), "Z^1".into()));
        let r = pv_solve(&IntMatrix::from_i64(&[&[-1]]), &IntMatrix::zero(0, 0)).unwrap();
        assert_eq!((r.k0.to_string(), r.k1.to_string()), ("Z/2".into(), "0".into()));
        let r = pv_solve(&IntMatrix::zero(0, 0), &IntMatrix::zero(0, 0)).unwrap();
        assert!(r.k0.is_trivial() && r.k1.is_trivial());
        assert!(pv_solve(&IntMatrix::zero(1, 2), &IntMatrix::zero(0, 0)).is_err());
    }

    #[test]
    fn parse_inputs() {
        let m = IntMatrix::parse("1 2\n3 4\n").unwrap();
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert_eq!(IntMatrix::parse("[[1, 2], [3, \"4\"]]").unwrap(), m);
        assert!(IntMatrix::parse("1 2\n3").is_err());
        assert!(IntMatrix::parse("[[1.5]]").is_err());
    }

    #[test]
    fn spins() {
        let s = |t| Spin::from_twice(t);
        assert_eq!(fusion(s(1), s(1)), vec![s(0), s(2)]);
        assert_eq!(fusion(s(0), s(3)), vec![s(3)]);
        assert_eq!(fusion(s(2), s(2)), vec![s(0), s(2), s(4)]);
        assert!(integral_labels_closed(&[s(0), s(2), s(4)]));
        assert!(!integral_labels_closed(&[s(1)]));
        assert!(integral_labels_closed(&[s(0)]));
        assert_eq!(restriction_character(s(1)).to_string_with("z"), "z^-1+z");
        assert_eq!(restriction_character(s(0)).to_string_with("z"), "1");
        assert_eq!(restriction_character(s(2)).to_string_with("z"), "z^-2+1+z^2");
    }
}
