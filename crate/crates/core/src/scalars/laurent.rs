use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse Laurent polynomial with integer coefficients, stored as an
/// exponent → coefficient table without zero entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Single-term polynomial `c·q^e`, if that is what this is.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn div_exact_int(&self, c: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v / c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q ↦ 1/q`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let inv = if x.is_zero() { None } else { Some(x.recip()) };
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { x.clone() } else { inv.clone().expect("nonzero point") };
            let p = num_traits::pow::pow(base, e.unsigned_abs() as usize);
            acc += BigRational::from_integer(c.clone()) * p;
        }
        acc
    }

    /// Formats with an arbitrary variable name; ascending exponents.
    pub fn fmt_with(&self, var: &str, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            match *e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *e == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_string_with(&self, var: &str) -> String {
        let mut s = String::new();
        self.fmt_with(var, &mut s).expect("formatting to a String");
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_string_with("q");
        f.write_str(&s)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Dense polynomial over Q in nonnegative powers, lowest degree first.
/// Only used for gcd computations.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct DenseQ(pub Vec<BigRational>);

impl DenseQ {
    /// Drops the lowest exponent: `p = q^shift · dense`.
    pub fn from_laurent(p: &LaurentPoly) -> (i64, DenseQ) {
        let lo = p.min_exp().unwrap_or(0);
        let hi = p.max_exp().unwrap_or(0);
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            v[(e - lo) as usize] = BigRational::from_integer(c.clone());
        }
        let mut d = DenseQ(v);
        d.trim();
        (lo, d)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(&self) -> DenseQ {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => {
                let lc = lc.clone();
                DenseQ(self.0.iter().map(|c| c / &lc).collect())
            }
        }
    }

    pub fn div_rem(&self, d: &DenseQ) -> (DenseQ, DenseQ) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        if rem.0.len() < d.0.len() {
            return (DenseQ(Vec::new()), rem);
        }
        let dl = d.0.last().unwrap().clone();
        let mut quot = vec![BigRational::zero(); rem.0.len() - d.0.len() + 1];
        while !rem.is_zero() && rem.0.len() >= d.0.len() {
            let shift = rem.degree() - d.degree();
            let factor = rem.0.last().unwrap() / &dl;
            for (i, c) in d.0.iter().enumerate() {
                let t = c * &factor;
                rem.0[i + shift] -= t;
            }
            quot[shift] = factor;
            rem.0.pop();
            rem.trim();
        }
        let mut q = DenseQ(quot);
        q.trim();
        (q, rem)
    }

    pub fn gcd(&self, other: &DenseQ) -> DenseQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Converts back to an integer Laurent polynomial scaled by `q^shift`,
    /// together with the common denominator that was cleared.
    pub fn to_integer_laurent(&self, shift: i64) -> (LaurentPoly, BigInt) {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let v = c.numer() * (&lcm / c.denom());
            (i as i64 + shift, v)
        });
        (LaurentPoly::from_terms(terms), lcm)
    }
}
