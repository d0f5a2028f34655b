//! Exact coefficient arithmetic: Laurent polynomials in `t`, the rational
//! function field over them, and exact linear solving.

mod laurent;
mod linalg;
mod ratfunc;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use laurent::LaurentT;
pub use linalg::{nullspace, solve_linear, LinearSolution, Matrix};
pub use ratfunc::RatFuncT;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("cannot specialize at t = 0: negative powers of t are undefined")]
    ZeroSpecialization,
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization hits a pole of the rational function")]
    Pole,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficient rings used by the algebra containers.
///
/// Implemented by [`LaurentT`] (the default everywhere) and [`RatFuncT`]
/// (used once a division by a non-monomial has happened).
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_laurent(l: LaurentT) -> Self;
    fn times_laurent(&self, l: &LaurentT) -> Self;
    /// `t -> t^{-1}`.
    fn mirror(&self) -> Self;
    fn to_ratfunc(&self) -> RatFuncT;

    fn t_pow(k: i64) -> Self {
        Self::from_laurent(LaurentT::t_pow(k))
    }

    fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentT::constant(c))
    }
}

impl Coeff for LaurentT {
    fn zero() -> Self {
        LaurentT::zero()
    }
    fn one() -> Self {
        LaurentT::one()
    }
    fn is_zero(&self) -> bool {
        LaurentT::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_laurent(l: LaurentT) -> Self {
        l
    }
    fn times_laurent(&self, l: &LaurentT) -> Self {
        self * l
    }
    fn mirror(&self) -> Self {
        LaurentT::mirror(self)
    }
    fn to_ratfunc(&self) -> RatFuncT {
        RatFuncT::from_laurent(self.clone())
    }
}

impl Coeff for RatFuncT {
    fn zero() -> Self {
        RatFuncT::zero()
    }
    fn one() -> Self {
        RatFuncT::one()
    }
    fn is_zero(&self) -> bool {
        RatFuncT::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn from_laurent(l: LaurentT) -> Self {
        RatFuncT::from_laurent(l)
    }
    fn times_laurent(&self, l: &LaurentT) -> Self {
        self.mul_laurent(l)
    }
    fn mirror(&self) -> Self {
        RatFuncT::mirror(self)
    }
    fn to_ratfunc(&self) -> RatFuncT {
        self.clone()
    }
}
