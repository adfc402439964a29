//! The coefficient rings series and Bell evaluation run over.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::poly::LaurentPoly;
use crate::rational::Rational;

/// A commutative ring containing the rationals, with exact division by units.
///
/// Implemented for [`Rational`] and [`LaurentPoly`]; the latter lets the same
/// series and Bell machinery run over indeterminates.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    /// `self / divisor` when `divisor` is a unit of the ring, `None` otherwise.
    fn div_unit(&self, divisor: &Self) -> Option<Self>;

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn div_unit(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
    fn pow(&self, exp: usize) -> Self {
        num_traits::pow(self.clone(), exp)
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_rational(r: Rational) -> Self {
        LaurentPoly::constant(r)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        LaurentPoly::scaled(self, c)
    }
    fn div_unit(&self, divisor: &Self) -> Option<Self> {
        divisor.unit_inverse().map(|inv| self * &inv)
    }
}
