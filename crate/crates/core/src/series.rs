//! Truncated formal power series in the exponential convention.
//!
//! A [`Series`] of order `N` stores `f_0..f_N` with `f_n = D^n(f)(0)`, i.e.
//! `f = sum f_n x^n / n!`. Binary operations require equal orders; callers
//! truncate explicitly.

use num_traits::{One, Zero};

use crate::bell::{bell_eval, FamilyError};
use crate::combinatorics::{binomial_q, factorial_q};
use crate::rational::Rational;
use crate::ring::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation needs order at least {needed}, got {got}")]
    OrderTooLow { needed: usize, got: usize },
    #[error("inner series of a composition has a nonzero constant term")]
    InnerConstantTerm,
    #[error("series is not compositionally invertible")]
    NotInvertible,
    #[error("constant term is not a unit")]
    NoReciprocal,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<R: Coeff = Rational> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Series<R> {
    /// Takes `f_0..f_N`. Panics on an empty vector; a series has order `>= 0`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `id(x) = x`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    /// `c * x^n / n!` (coefficient `c` at index `n`), zero when `n > order`.
    pub fn monomial(c: R, n: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `f_n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderTooLow {
                needed: order,
                got: self.order(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// `c_0 = 0` and `c_1` a unit of the coefficient ring.
    pub fn is_invertible(&self) -> bool {
        self.coeffs[0].is_zero()
            && self.order() >= 1
            && R::one().div_unit(&self.coeffs[1]).is_some()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.scaled(c)).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(Coeff::negated).collect(),
        }
    }

    /// Binomial convolution `(fg)_n = sum_k C(n,k) f_k g_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        let order = self.order();
        let mut coeffs = vec![R::zero(); order + 1];
        for (n, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = R::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(b).scaled(&binomial_q(n, k)));
            }
            *slot = acc;
        }
        Ok(Series { coeffs })
    }

    /// `D f`: order drops by one and `(Df)_n = f_{n+1}`.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::OrderTooLow { needed: 1, got: 0 });
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `f(-x)`: coefficient `n` picks up `(-1)^n`.
    pub fn negate_argument(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// `g^k / k!` by repeated multiplication; `g_0` must vanish.
    pub fn power_over_factorial(&self, k: usize) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTerm);
        }
        let mut p = Self::one(self.order());
        for _ in 0..k {
            p = p.mul(self)?;
        }
        Ok(p.scale_rational(&factorial_q(k).recip()))
    }

    /// `f ∘ g` as `sum_k f_k * g^k/k!`, building the powers incrementally.
    ///
    /// This route never touches Bell polynomials, so it serves as the
    /// independent side when checking the partition-sum formula.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTerm);
        }
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        out[0] = self.coeffs[0].clone();
        let mut power = Self::one(order);
        for k in 1..=order {
            power = power
                .mul(inner)?
                .scale_rational(&Rational::from_integer(k.into()).recip());
            let fk = &self.coeffs[k];
            if fk.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&power.coeffs).skip(k) {
                *o = o.plus(&fk.times(p));
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Compositional inverse by order-by-order solution of
    /// `sum_k g_k B_{n,k}(inv_1, ...) = δ_{n,1}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if !self.is_invertible() {
            return Err(SeriesError::NotInvertible);
        }
        let order = self.order();
        let lead = &self.coeffs[1];
        let mut inv = vec![R::zero(); order + 1];
        inv[1] = R::one().div_unit(lead).ok_or(SeriesError::NotInvertible)?;
        for n in 2..=order {
            let mut rest = R::zero();
            for k in 2..=n {
                let gk = &self.coeffs[k];
                if gk.is_zero() {
                    continue;
                }
                rest = rest.plus(&gk.times(&bell_eval(n, k, &inv[1..])?));
            }
            inv[n] = rest
                .negated()
                .div_unit(lead)
                .ok_or(SeriesError::NotInvertible)?;
        }
        Ok(Series { coeffs: inv })
    }

    /// Multiplicative inverse `1/f`; needs a unit constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        let order = self.order();
        let mut r = vec![R::zero(); order + 1];
        r[0] = R::one().div_unit(c0).ok_or(SeriesError::NoReciprocal)?;
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&r[n - k]).scaled(&binomial_q(n, k)));
            }
            r[n] = acc.negated().div_unit(c0).ok_or(SeriesError::NoReciprocal)?;
        }
        Ok(Series { coeffs: r })
    }

    /// `f ∘ f == id` through the truncation order.
    pub fn is_involution(&self) -> Result<bool, SeriesError> {
        if !self.is_invertible() {
            return Err(SeriesError::NotInvertible);
        }
        Ok(self.compose(self)? == Self::identity(self.order()))
    }

    /// All even-index coefficients vanish.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Coeff::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order())
    }
}

impl Series<Rational> {
    /// Ordinary coefficients `f_n / n!`, for display.
    pub fn to_ordinary(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / factorial_q(n))
            .collect()
    }

    pub fn from_ordinary(ordinary: Vec<Rational>) -> Self {
        Series::from_coeffs(
            ordinary
                .into_iter()
                .enumerate()
                .map(|(n, c)| c * factorial_q(n))
                .collect(),
        )
    }

    /// `e^x - 1`: every coefficient from index 1 on is 1.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut coeffs = vec![<Rational as One>::one(); order + 1];
        coeffs[0] = <Rational as Zero>::zero();
        Series::from_coeffs(coeffs)
    }
}
