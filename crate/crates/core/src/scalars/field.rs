use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_rational, parse_scalar, ScalarQ};
use crate::error::Result;

/// Exact field used for structure tensors of finite-dimensional Hopf algebras.
pub trait Field: Clone + PartialEq + Debug + Display + Zero + One + Send + Sync + 'static {
    /// Tag used in serialized structure tables.
    const KIND: &'static str;
    fn from_i64(n: i64) -> Self;
    fn parse_str(text: &str) -> Result<Self>;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Field for BigRational {
    const KIND: &'static str = "rational";
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn parse_str(text: &str) -> Result<Self> {
        parse_rational(text)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Zero for ScalarQ {
    fn zero() -> Self {
        ScalarQ::zero()
    }
    fn is_zero(&self) -> bool {
        ScalarQ::is_zero(self)
    }
}

impl One for ScalarQ {
    fn one() -> Self {
        ScalarQ::one()
    }
}

impl Field for ScalarQ {
    const KIND: &'static str = "q";
    fn from_i64(n: i64) -> Self {
        ScalarQ::from_int(n)
    }
    fn parse_str(text: &str) -> Result<Self> {
        parse_scalar(text)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        ScalarQ::inv(self).ok()
    }
}
