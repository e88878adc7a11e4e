//! Small Hopf algebras used as test instances.

use num_rational::BigRational;

use super::{basis_vector, dual_cop, Algebra, FinHopf, Tens, Vector, YDAlgebra, YDModule};
use crate::scalars::Field;

type Q = BigRational;

fn scaled(i: usize, c: i64) -> Vector<Q> {
    let mut v = Vector::new();
    if c != 0 {
        v.insert(i, Q::from_i64(c));
    }
    v
}

/// Group algebra of the cyclic group Z_n, basis `g^0, …, g^(n−1)`.
pub fn group_algebra(n: usize) -> FinHopf<Q> {
    assert!(n > 0);
    FinHopf {
        name: format!("C[Z{n}]"),
        algebra: Algebra {
            dim: n,
            mult: (0..n).map(|i| (0..n).map(|j| basis_vector((i + j) % n)).collect()).collect(),
            unit: basis_vector(0),
        },
        comult: (0..n).map(|i| Tens::basis(vec![i, i])).collect(),
        counit: vec![Q::from_i64(1); n],
        antipode: (0..n).map(|i| basis_vector((n - i) % n)).collect(),
    }
}

/// Function algebra on Z_n, obtained as `(C[Z_n]*)^cop`.
pub fn function_algebra(n: usize) -> FinHopf<Q> {
    let mut h = dual_cop(&group_algebra(n)).expect("group algebras have invertible antipode");
    h.name = format!("C(Z{n})");
    h
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler() -> FinHopf<Q> {
    // e_(a + 2b) = g^a x^b
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = vec![vec![Vector::new(); 4]; 4];
    for (a, b, c, d) in bits4() {
        if b + d < 2 {
            // g^a x^b g^c x^d = (−1)^(bc) g^(a+c) x^(b+d)
            let sign = if b * c == 1 { -1 } else { 1 };
            mult[idx(a, b)][idx(c, d)] = scaled(idx((a + c) % 2, b + d), sign);
        }
    }
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut comult = vec![Tens::zero(2); 4];
    comult[one] = Tens::basis(vec![one, one]);
    comult[g] = Tens::basis(vec![g, g]);
    comult[x].add_term(vec![x, one], Q::from_i64(1));
    comult[x].add_term(vec![g, x], Q::from_i64(1));
    comult[gx].add_term(vec![gx, g], Q::from_i64(1));
    comult[gx].add_term(vec![one, gx], Q::from_i64(1));
    FinHopf {
        name: "Sweedler".into(),
        algebra: Algebra { dim: 4, mult, unit: basis_vector(one) },
        comult,
        counit: [1, 1, 0, 0].into_iter().map(Q::from_i64).collect(),
        antipode: vec![basis_vector(one), basis_vector(g), scaled(gx, -1), basis_vector(x)],
    }
}

fn bits4() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n & 1, (n >> 1) & 1, (n >> 2) & 1, (n >> 3) & 1))
}

/// Z₂, Z₃, Z₄ group algebras, their duals, and Sweedler's algebra.
pub fn zoo() -> Vec<FinHopf<Q>> {
    let mut out: Vec<FinHopf<Q>> = (2..=4).map(group_algebra).collect();
    out.extend((2..=4).map(function_algebra));
    out.push(sweedler());
    out
}

/// The function algebra on Z₂ in its character basis `{1, s}`, `s² = 1`,
/// as a Yetter-Drinfeld algebra over `C[Z₂]`: `g·s = −s`, `δ(s) = g⊗s`.
pub fn graded_function_algebra() -> YDAlgebra<Q> {
    let algebra = Algebra {
        dim: 2,
        mult: vec![vec![basis_vector(0), basis_vector(1)], vec![basis_vector(1), basis_vector(0)]],
        unit: basis_vector(0),
    };
    let module = YDModule {
        dim: 2,
        action: vec![vec![basis_vector(0), basis_vector(1)], vec![basis_vector(0), scaled(1, -1)]],
        coaction: vec![Tens::basis(vec![0, 0]), Tens::basis(vec![1, 1])],
    };
    YDAlgebra { algebra, module }
}

/// Looks up a zoo member by name: `Z2`, `Z3`, `Z4` (group algebras),
/// `C(Z2)`, `C(Z3)`, `C(Z4)`, `sweedler`.
pub fn by_name(name: &str) -> Option<FinHopf<Q>> {
    let lower = name.to_ascii_lowercase();
    let cyclic = |s: &str| s.strip_prefix('z').and_then(|n| n.parse::<usize>().ok()).filter(|n| (2..=4).contains(n));
    if lower == "sweedler" {
        return Some(sweedler());
    }
    if let Some(n) = cyclic(&lower).or_else(|| lower.strip_prefix("c[").and_then(|s| s.strip_suffix(']')).and_then(cyclic)) {
        return Some(group_algebra(n));
    }
    lower
        .strip_prefix("c(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(cyclic)
        .map(function_algebra)
}
