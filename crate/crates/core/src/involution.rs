//! Involutory series: generation from free even seeds, representation as
//! conjugates `g ∘ (-id) ∘ g⁻¹` through `L_{n,1}`, and recovery of a
//! conjugator from a given involution.

use num_traits::Zero;

use crate::bell::{bell_eval, FamilyError};
use crate::poly::LaurentPoly;
use crate::rational::{rat, Rational};
use crate::report::CheckReport;
use crate::ring::Coeff;
use crate::series::{Series, SeriesError};
use crate::tables::Families;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvolutionError {
    #[error("{needed} even seeds needed for this order, {given} supplied")]
    InsufficientSeeds { needed: usize, given: usize },
    #[error("expected {expected} seeds")]
    SeedKind { expected: &'static str },
    #[error("the leading odd seed g_1 must be nonzero")]
    ZeroLeadingSeed,
    #[error("series is not compositionally invertible")]
    NotInvertible,
    #[error("series is not an involution")]
    NotInvolution,
    #[error("the identity is not conjugate to -id")]
    TrivialInvolution,
    #[error("order must be at least 1")]
    OrderTooLow,
    #[error("involutions agree = {equal} but transfer oddness = {odd}")]
    CentralizerMismatch { equal: bool, odd: bool },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Free parameters of the two constructions.
///
/// `Even` holds `a_1, a_2, ...`, which become `f_2, f_4, ...` of an involution.
/// `Odd` holds `g_1, g_3, g_5, ...` of a conjugator; `g_1` must be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedSpec<R: Coeff = Rational> {
    Even(Vec<R>),
    Odd(Vec<R>),
}

impl<R: Coeff> SeedSpec<R> {
    pub fn even(values: Vec<R>) -> Self {
        SeedSpec::Even(values)
    }

    pub fn odd(values: Vec<R>) -> Result<Self, InvolutionError> {
        match values.first() {
            Some(g1) if !g1.is_zero() => Ok(SeedSpec::Odd(values)),
            _ => Err(InvolutionError::ZeroLeadingSeed),
        }
    }

    pub fn values(&self) -> &[R] {
        match self {
            SeedSpec::Even(v) | SeedSpec::Odd(v) => v,
        }
    }
}

impl SeedSpec<LaurentPoly> {
    /// Indeterminates `a_1..a_count`, realised as `X_1..X_count`.
    pub fn symbolic_even(count: usize) -> Self {
        SeedSpec::Even((1..=count).map(LaurentPoly::var).collect())
    }
}

/// The involution with `f_1 = -1` and `f_{2k} = a_k`; odd coefficients are
/// forced: `f_n = 1/2 * sum_{k=2}^{n-1} f_k B_{n,k}(-1, f_2, ..., f_{n-k+1})`.
///
/// Runs over any coefficient ring, so symbolic seeds give the odd
/// coefficients as polynomials in the `a_k`.
pub fn involution_from_even_seeds<R: Coeff>(
    seeds: &SeedSpec<R>,
    order: usize,
) -> Result<Series<R>, InvolutionError> {
    let SeedSpec::Even(a) = seeds else {
        return Err(InvolutionError::SeedKind { expected: "even" });
    };
    if order == 0 {
        return Err(InvolutionError::OrderTooLow);
    }
    let needed = order / 2;
    if a.len() < needed {
        return Err(InvolutionError::InsufficientSeeds {
            needed,
            given: a.len(),
        });
    }
    let half = rat(1, 2);
    let mut f = vec![R::zero(); order + 1];
    f[1] = R::one().negated();
    for n in 2..=order {
        if n % 2 == 0 {
            f[n] = a[n / 2 - 1].clone();
        } else {
            let mut sum = R::zero();
            for k in 2..n {
                if f[k].is_zero() {
                    continue;
                }
                sum = sum.plus(&f[k].times(&bell_eval(n, k, &f[1..])?));
            }
            f[n] = sum.scaled(&half);
        }
    }
    Ok(Series::from_coeffs(f))
}

/// Checks `sum_{k=1}^n f_k B_{n,k}(f_1, ..., f_{n-k+1}) = δ_{n,1}` for each
/// `n <= order`, recording every failing `n`. Empty iff `f ∘ f = id`.
pub fn involution_check_report(f: &Series) -> Result<CheckReport, InvolutionError> {
    if !f.is_invertible() {
        return Err(InvolutionError::NotInvertible);
    }
    let mut report = CheckReport::new("involution");
    let args = &f.coeffs()[1..];
    for n in 1..=f.order() {
        let mut sum = <Rational as Zero>::zero();
        for k in 1..=n {
            sum += &f.coeffs()[k] * bell_eval(n, k, args)?;
        }
        let expected = if n == 1 { rat(1, 1) } else { <Rational as Zero>::zero() };
        report.record(sum == expected, n, None, || {
            format!("sum = {}", crate::rational::display_rational(&sum))
        });
    }
    Ok(report)
}

/// `g ∘ (-id) ∘ g⁻¹` by direct composition.
pub fn conjugate_of_negation<R: Coeff>(g: &Series<R>) -> Result<Series<R>, InvolutionError> {
    if !g.is_invertible() {
        return Err(InvolutionError::NotInvertible);
    }
    Ok(g.negate_argument().compose(&g.inverse()?)?)
}

/// The involution conjugate to `-id` by `g`, coefficientwise
/// `f_n = L_{n,1}(g_1, ..., g_{2[n/2]})`.
pub fn involution_from_conjugator(g: &Series) -> Result<Series, InvolutionError> {
    involution_from_conjugator_in(Families::shared(), g)
}

pub fn involution_from_conjugator_in(fam: &Families, g: &Series) -> Result<Series, InvolutionError> {
    if !g.is_invertible() {
        return Err(InvolutionError::NotInvertible);
    }
    let args = &g.coeffs()[1..];
    let mut f = vec![<Rational as Zero>::zero(); g.order() + 1];
    for (n, slot) in f.iter_mut().enumerate().skip(1) {
        *slot = fam.lah_eval(n, 1, args)?;
    }
    Ok(Series::from_coeffs(f))
}

/// A conjugator `g` with `g ∘ (-id) ∘ g⁻¹ = f`.
///
/// Odd coefficients `g_1, g_3, ...` come from `odd_seeds` (missing ones are
/// zero); even ones solve `g_n = 1/2 * sum_{k=2}^n f_k B_{n,k}(g_1, ..., g_{n-k+1})`.
pub fn conjugator_from_involution(f: &Series, odd_seeds: &SeedSpec) -> Result<Series, InvolutionError> {
    let SeedSpec::Odd(odd) = odd_seeds else {
        return Err(InvolutionError::SeedKind { expected: "odd" });
    };
    if odd.first().is_none_or(<Rational as Zero>::is_zero) {
        return Err(InvolutionError::ZeroLeadingSeed);
    }
    if !f.is_invertible() {
        return Err(InvolutionError::NotInvertible);
    }
    if f.is_identity() {
        return Err(InvolutionError::TrivialInvolution);
    }
    if !f.is_involution()? {
        return Err(InvolutionError::NotInvolution);
    }
    let half = rat(1, 2);
    let order = f.order();
    let mut g = vec![<Rational as Zero>::zero(); order + 1];
    for n in 1..=order {
        if n % 2 == 1 {
            g[n] = odd.get(n / 2).cloned().unwrap_or_else(<Rational as Zero>::zero);
        } else {
            let mut sum = <Rational as Zero>::zero();
            for k in 2..=n {
                let fk = &f.coeffs()[k];
                if Zero::is_zero(fk) {
                    continue;
                }
                sum += fk * bell_eval(n, k, &g[1..])?;
            }
            g[n] = sum * &half;
        }
    }
    Ok(Series::from_coeffs(g))
}

/// Whether `g` and `h` conjugate `-id` to the same involution, together with
/// the transfer `ψ = g⁻¹ ∘ h`. The two agree exactly when `ψ` is odd; a
/// disagreement is reported as [`InvolutionError::CentralizerMismatch`].
pub fn same_involution_iff_odd_transfer(g: &Series, h: &Series) -> Result<(bool, Series), InvolutionError> {
    if !g.is_invertible() || !h.is_invertible() {
        return Err(InvolutionError::NotInvertible);
    }
    let psi = g.inverse()?.compose(h)?;
    let equal = involution_from_conjugator(g)? == involution_from_conjugator(h)?;
    let odd = psi.is_odd();
    if equal != odd {
        return Err(InvolutionError::CentralizerMismatch { equal, odd });
    }
    Ok((equal, psi))
}

/// For a nontrivial involution, a witness `g` with `f_n = L_{n,1}(g)` for all
/// `n` through the order, built with odd seeds `(-f_1, 0, 0, ...)`. `None`
/// when `f` is not invertible, is the identity, or is not an involution.
pub fn coefficient_form_check(f: &Series) -> Option<Series> {
    if !f.is_invertible() || f.is_identity() || !f.is_involution().ok()? {
        return None;
    }
    let seeds = SeedSpec::odd(vec![-f.coeff(1)]).ok()?;
    let g = conjugator_from_involution(f, &seeds).ok()?;
    let rebuilt = involution_from_conjugator(&g).ok()?;
    (rebuilt == *f).then_some(g)
}
