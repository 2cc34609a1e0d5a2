//! Exact linear algebra over the rationals and over cyclotomic fields.
//!
//! Everything here is exact; there is no floating point anywhere in the crate.

mod cyclotomic;
mod matrix;
mod poly;
mod projector;

pub use cyclotomic::{CycloField, Cyclotomic};
pub use matrix::{Matrix, RrefResult, Subspace};
pub use poly::{char_poly, cyclotomic_factor, cyclotomic_polynomial, CycloFactorization, Poly};
pub use projector::{eigen_projector, embed, fixed_projector, matrix_order};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};

/// Reduced rational number with positive denominator.
pub type Rational = num_rational::BigRational;

pub type QMatrix = Matrix<Rational>;
pub type CycMatrix = Matrix<Cyclotomic>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Field operations needed by the generic matrix code.
///
/// Zero and one are produced from an existing element so that cyclotomic
/// values can carry their conductor along.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero_of(&self) -> Self;
    fn one_of(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn recip(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_rational(&self, r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn zero_of(&self) -> Self {
        Rational::zero()
    }
    fn one_of(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
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
    fn recip(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        num_traits::Inv::inv(self)
    }
    fn from_rational(&self, r: &Rational) -> Self {
        r.clone()
    }
}
