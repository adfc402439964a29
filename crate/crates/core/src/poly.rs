//! Multivariate Laurent polynomials over the rationals.
//!
//! Indeterminates are `X_1, X_2, ...`; only `X_1` may carry a negative
//! exponent, which is exactly the ring the Stirling and Lah families live in.
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], so structural
//! equality is polynomial equality and iteration follows the canonical
//! graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{display_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("X_1 evaluated at 0 where it appears with a negative exponent")]
    ZeroAtPole,
    #[error("polynomial uses {needed} variables but only {given} values were supplied")]
    ArityError { needed: usize, given: usize },
    #[error("substitution would invert a non-unit image of X_1")]
    NonInvertibleSubstitution,
    #[error("negative exponent on X_{0}; only X_1 may be inverted")]
    NegativeExponent(usize),
}

/// Exponent vector; `exps[j]` is the power of `X_{j+1}`. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn new(mut exps: Vec<i32>) -> Result<Self, AlgebraError> {
        if let Some(j) = exps.iter().skip(1).position(|&e| e < 0) {
            return Err(AlgebraError::NegativeExponent(j + 2));
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Ok(Monomial { exps })
    }

    /// `X_var^exp`, `var` counted from 1.
    pub fn var_pow(var: usize, exp: i32) -> Result<Self, AlgebraError> {
        assert!(var >= 1, "variables are numbered from 1");
        let mut exps = vec![0; var];
        exps[var - 1] = exp;
        Monomial::new(exps)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    /// Exponent of `X_var` (1-based).
    pub fn exponent(&self, var: usize) -> i32 {
        self.exps.get(var - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let mut exps = vec![0; len];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exponent(i + 1) + other.exponent(i + 1);
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    // Graded lex: total degree first, then exponent vectors from X_1 on.
    // Trimmed vectors with non-negative tails compare like zero-padded ones.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The indeterminate `X_var`, numbered from 1.
    pub fn var(var: usize) -> Self {
        LaurentPoly::term(Rational::one(), Monomial::var_pow(var, 1).unwrap())
    }

    /// Collects `(coefficient, monomial)` pairs, merging duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut p = LaurentPoly::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value when the polynomial is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Number of variables in use: the largest index `j` with `X_j` present.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) != 0)
    }

    fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|m| m.exponent(1) < 0)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// `c * X_1^e` has inverse `c^-1 * X_1^-e`; nothing else is a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.num_vars() > 1 {
            return None;
        }
        let inv = Monomial::new(vec![-m.exponent(1)]).unwrap();
        Some(LaurentPoly::term(c.recip(), inv))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Power with a possibly negative exponent; negative powers need a unit.
    fn pow_signed(&self, exp: i32) -> Result<Self, AlgebraError> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            let inv = self
                .unit_inverse()
                .ok_or(AlgebraError::NonInvertibleSubstitution)?;
            Ok(inv.pow(exp.unsigned_abs()))
        }
    }

    /// Exact evaluation at `X_j = args[j-1]`.
    pub fn eval(&self, args: &[Rational]) -> Result<Rational, AlgebraError> {
        let needed = self.num_vars();
        if args.len() < needed {
            return Err(AlgebraError::ArityError {
                needed,
                given: args.len(),
            });
        }
        if self.has_negative_exponent() && args[0].is_zero() {
            return Err(AlgebraError::ZeroAtPole);
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(args[j].clone(), e as usize);
                } else if e < 0 {
                    v /= num_traits::pow(args[j].clone(), e.unsigned_abs() as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Replace each `X_j` by `subs[j-1]` and expand.
    pub fn substitute(&self, subs: &[LaurentPoly]) -> Result<LaurentPoly, AlgebraError> {
        let needed = self.num_vars();
        if subs.len() < needed {
            return Err(AlgebraError::ArityError {
                needed,
                given: subs.len(),
            });
        }
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    t = &t * &subs[j].pow_signed(e)?;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Text form using `prefix` for variable names, e.g. `-3/2*a1^2`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("{prefix}{}", j + 1)
                    } else {
                        format!("{prefix}{}^{e}", j + 1)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&display_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&display_rational(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}
