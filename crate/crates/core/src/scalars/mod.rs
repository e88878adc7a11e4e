//! Exact arithmetic in Q(q), the field of rational functions in the
//! deformation parameter, plus q-integers.
//!
//! A [`ScalarQ`] is kept in a canonical reduced form at all times: the
//! numerator and denominator share no nonconstant factor, the denominator
//! has nonnegative exponents with a nonzero constant term and positive
//! leading coefficient, and the integer content of the pair is 1. Equality
//! is therefore structural.

mod field;
mod laurent;
mod parse;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use field::Field;
pub use laurent::LaurentPoly;
pub use parse::{parse_rational, parse_scalar};

use laurent::DenseQ;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ { num: LaurentPoly::constant(BigInt::from(n)), den: LaurentPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        ScalarQ { num: LaurentPoly::monomial(BigInt::one(), k), den: LaurentPoly::one() }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        ScalarQ { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial
    /// with integer coefficients.
    pub fn is_integral_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Re-runs canonicalization. Identity on values built through the public API.
    pub fn renormalize(&self) -> Self {
        reduce(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &ScalarQ) -> Result<ScalarQ> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.inv_unchecked())
    }

    pub fn inv(&self) -> Result<ScalarQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> ScalarQ {
        // a reduced fraction stays reduced when flipped; only shift and sign move
        reduce(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i64) -> Result<ScalarQ> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = ScalarQ::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `q ↦ 1/q`.
    pub fn bar(&self) -> ScalarQ {
        reduce(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Exact specialization at a nonzero rational `q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::Domain("cannot specialize at q = 0".into()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole { point: q0.to_string() });
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Returns the value as a rational constant when it does not depend on q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_monomial();
        let d = self.den.as_monomial()?;
        if d.0 != 0 {
            return None;
        }
        match n {
            None if self.num.is_zero() => Some(BigRational::zero()),
            Some((0, c)) => Some(BigRational::new(c.clone(), d.1.clone())),
            _ => None,
        }
    }
}

/// `scalar_arith` as a single entry point.
pub fn scalar_arith(a: &ScalarQ, b: &ScalarQ, op: ArithOp) -> Result<ScalarQ> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// The q-integer `[n] = (q^n − q^-n)/(q − q^-1)`.
pub fn qint(n: i64) -> ScalarQ {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    // q^(m-1) + q^(m-3) + ... + q^(1-m)
    let terms = (0..m).map(|i| (m - 1 - 2 * i, BigInt::from(sign)));
    ScalarQ::from_laurent(LaurentPoly::from_terms(terms))
}

/// `eval_at` as a free function.
pub fn eval_at(s: &ScalarQ, q0: &BigRational) -> Result<BigRational> {
    s.eval_at(q0)
}

fn reduce(num: LaurentPoly, den: LaurentPoly) -> ScalarQ {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return ScalarQ::zero();
    }
    let (num, den) = if let Some((e, _)) = den.as_monomial() {
        (num.shift(-e), den.shift(-e))
    } else {
        let (sn, n) = DenseQ::from_laurent(&num);
        let (sd, d) = DenseQ::from_laurent(&den);
        let g = n.gcd(&d);
        let (n, d) = if g.0.len() > 1 {
            (n.div_rem(&g).0, d.div_rem(&g).0)
        } else {
            (n, d)
        };
        let (ni, ln) = n.to_integer_laurent(sn - sd);
        let (di, ld) = d.to_integer_laurent(0);
        (ni.scale(&ld), di.scale(&ln))
    };
    let mut g = num.content().gcd(&den.content());
    if den.leading_coeff().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_one() {
        ScalarQ { num, den }
    } else {
        ScalarQ { num: num.div_exact_int(&g), den: den.div_exact_int(&g) }
    }
}

impl<'a> Add<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return ScalarQ { num, den: self.den.clone() };
            }
            return reduce(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        reduce(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`ScalarQ::checked_div`] for fallible code.
impl<'a> Div<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        self.checked_div(rhs).expect("ScalarQ division by zero")
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: ScalarQ) -> ScalarQ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl From<i64> for ScalarQ {
    fn from(n: i64) -> Self {
        ScalarQ::from_int(n)
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let simple_num = self.num.terms().count() == 1 && self.num.min_exp() == Some(0);
        if simple_num {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        let simple_den = self.den.as_monomial().is_some_and(|(e, c)| e == 0 && c.is_positive());
        if simple_den {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarQ({self})")
    }
}

impl std::str::FromStr for ScalarQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> ScalarQ {
        text.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn monomial_product() {
        let r = scalar_arith(&ScalarQ::q(), &ScalarQ::q(), ArithOp::Mul).unwrap();
        assert_eq!(r, ScalarQ::q_pow(2));
    }

    #[test]
    fn division_cancels_common_factor() {
        let r = scalar_arith(&s("1-q^2"), &s("1-q^4"), ArithOp::Div).unwrap();
        assert_eq!(r, s("1/(1+q^2)"));
        assert_eq!(r.numer(), &LaurentPoly::one());
        assert_eq!(r.denom().to_string(), "1+q^2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = scalar_arith(&ScalarQ::q(), &ScalarQ::zero(), ArithOp::Div);
        assert_eq!(r, Err(Error::DivisionByZero));
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(0), ScalarQ::zero());
        assert_eq!(qint(1), ScalarQ::one());
        assert_eq!(qint(2), s("q + q^-1"));
        assert_eq!(qint(-3), -qint(3));
        // [2] as the defining quotient
        let by_def = (ScalarQ::q_pow(2) - ScalarQ::q_pow(-2)) / (ScalarQ::q() - ScalarQ::q_pow(-1));
        assert_eq!(qint(2), by_def);
    }

    #[test]
    fn evaluation() {
        assert_eq!(s("1/(1+q^2)").eval_at(&rat(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(s("q+q^-1").eval_at(&rat(1, 2)).unwrap(), rat(5, 2));
        assert!(matches!(s("1/(1-q)").eval_at(&rat(1, 1)), Err(Error::Pole { .. })));
        assert!(matches!(s("q").eval_at(&rat(0, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn canonical_denominator() {
        // q / (2q - 2q^3)  ==  1 / (2 - 2q^2)  ==  -1/(2q^2 - 2)
        let v = s("q / (2*q - 2*q^3)");
        assert_eq!(v.denom().min_exp(), Some(0));
        assert!(v.denom().leading_coeff().unwrap().is_positive());
        assert_eq!(v, s("-1/(2*q^2-2)"));
        assert_eq!(v.renormalize(), v);
    }

    #[test]
    fn rational_constants() {
        let v = s("6/4");
        assert_eq!(v.as_rational(), Some(rat(3, 2)));
        assert_eq!(v.to_string(), "3/2");
        assert_eq!(s("q").as_rational(), None);
    }

    #[test]
    fn bar_involution() {
        let v = s("(1+2*q^3)/(1-q)");
        assert_eq!(v.bar().bar(), v);
        assert_eq!(qint(4).bar(), qint(4));
    }
}
