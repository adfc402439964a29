//! Multivariate Stirling polynomials of the first kind `A_{n,k}` and
//! multivariable Lah polynomials `L_{n,k}`, plus the identities tying them
//! to the Bell family.
//!
//! `A` is obtained by solving `sum_{j=k}^n A_{n,j} B_{j,k} = δ_{n,k}` for
//! descending `k`; each step divides by `B_{k,k} = X_1^k`, a unit in the
//! Laurent ring. `L_{n,k} = sum_{j=k}^n (-1)^j A_{n,j} B_{j,k}`.

use num_traits::{One, Zero};

use crate::bell::FamilyError;
use crate::poly::{AlgebraError, LaurentPoly, Monomial};
use crate::rational::{int, Rational};
use crate::report::CheckReport;
use crate::series::Series;
use crate::tables::Families;

fn x1_pow(e: i32) -> LaurentPoly {
    LaurentPoly::term(Rational::one(), Monomial::var_pow(1, e).unwrap())
}

fn delta(n: usize, k: usize) -> LaurentPoly {
    if n == k {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

fn sign(j: usize) -> Rational {
    if j.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

pub(crate) fn build_stirling_first_poly(
    fam: &Families,
    n: usize,
    k: usize,
) -> Result<LaurentPoly, FamilyError> {
    if k == n {
        return Ok(x1_pow(-(n as i32)));
    }
    let mut rest = LaurentPoly::zero();
    for j in k + 1..=n {
        rest = &rest + &(&*fam.stirling_first(n, j)? * &*fam.bell(j, k)?);
    }
    Ok(&(&delta(n, k) - &rest) * &x1_pow(-(k as i32)))
}

pub(crate) fn build_lah_poly(fam: &Families, n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    let mut sum = LaurentPoly::zero();
    for j in k..=n {
        let term = &*fam.stirling_first(n, j)? * &*fam.bell(j, k)?;
        sum = &sum + &term.scaled(&sign(j));
    }
    Ok(sum)
}

/// The generic series `sum_j X_j x^j / j!` of the given order.
pub fn generic_series(order: usize) -> Series<LaurentPoly> {
    let mut coeffs = vec![LaurentPoly::zero()];
    coeffs.extend((1..=order).map(LaurentPoly::var));
    Series::from_coeffs(coeffs)
}

impl Families {
    /// `A_{n,k}` rebuilt as `B_{n,k}(A_{1,1}, ..., A_{n-k+1,1})`, where the
    /// `A_{j,1}` come from symbolically inverting the generic series.
    /// Shares nothing with the triangular solve except `B`.
    pub fn stirling_first_via_inverse(&self, n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
        if k == 0 || k > n {
            return Err(FamilyError::Range { n, k });
        }
        let width = n - k + 1;
        let inv = generic_series(width)
            .inverse()
            .map_err(|_| FamilyError::Algebra(AlgebraError::NonInvertibleSubstitution))?;
        let firsts = &inv.coeffs()[1..];
        Ok(self.bell(n, k)?.substitute(firsts)?)
    }

    /// `L_{n,k}(args)`; `args[0]` must be nonzero.
    pub fn lah_eval(&self, n: usize, k: usize, args: &[Rational]) -> Result<Rational, FamilyError> {
        let poly = self.lah(n, k)?;
        match args.first() {
            None => Err(FamilyError::Arity { needed: 1, given: 0 }),
            Some(a) if a.is_zero() => Err(AlgebraError::ZeroAtPole.into()),
            Some(_) => Ok(poly.eval(args)?),
        }
    }

    /// `L_{1,1}, ..., L_{m,1}`, the arguments for Bell-representability.
    fn lah_first_column(&self, m: usize) -> Result<Vec<LaurentPoly>, FamilyError> {
        (1..=m).map(|j| self.lah(j, 1).map(|p| (*p).clone())).collect()
    }

    /// `sum_{j=k}^n A_{n,j} B_{j,k} = δ_{n,k}` for all `1 <= k <= n <= max_n`.
    pub fn check_ortho_inversion(&self, max_n: usize) -> Result<CheckReport, FamilyError> {
        let mut report = CheckReport::new("ortho");
        for n in 1..=max_n {
            for k in 1..=n {
                let mut sum = LaurentPoly::zero();
                for j in k..=n {
                    sum = &sum + &(&*self.stirling_first(n, j)? * &*self.bell(j, k)?);
                }
                report.record(sum == delta(n, k), n, Some(k), || format!("sum = {sum}"));
            }
        }
        Ok(report)
    }

    /// `sum_{j=k}^n L_{n,j} L_{j,k} = δ_{n,k}`.
    pub fn check_lah_selfinverse(&self, max_n: usize) -> Result<CheckReport, FamilyError> {
        let mut report = CheckReport::new("selfinv");
        for n in 1..=max_n {
            for k in 1..=n {
                let mut sum = LaurentPoly::zero();
                for j in k..=n {
                    sum = &sum + &(&*self.lah(n, j)? * &*self.lah(j, k)?);
                }
                report.record(sum == delta(n, k), n, Some(k), || format!("sum = {sum}"));
            }
        }
        Ok(report)
    }

    /// `L_{n,k} = B_{n,k}(L_{1,1}, ..., L_{n-k+1,1})`.
    pub fn check_lah_bell_representability(&self, max_n: usize) -> Result<CheckReport, FamilyError> {
        let mut report = CheckReport::new("bellrep");
        let column = self.lah_first_column(max_n)?;
        for n in 1..=max_n {
            for k in 1..=n {
                let lhs = self.lah(n, k)?;
                let rhs = self.bell(n, k)?.substitute(&column)?;
                report.record(*lhs == rhs, n, Some(k), || {
                    format!("L = {lhs}, B(L) = {rhs}")
                });
            }
        }
        Ok(report)
    }

    /// `sum_{k=2}^{n-1} L_{k,1} B_{n,k}(L_{1,1}, ...) = (1 + (-1)^{n+1}) L_{n,1}`
    /// for `2 <= n <= max_n`.
    pub fn check_lah_lemma(&self, max_n: usize) -> Result<CheckReport, FamilyError> {
        let mut report = CheckReport::new("lemma");
        let column = self.lah_first_column(max_n)?;
        for n in 2..=max_n {
            let mut lhs = LaurentPoly::zero();
            for k in 2..n {
                let bell_at_lah = self.bell(n, k)?.substitute(&column)?;
                lhs = &lhs + &(&column[k - 1] * &bell_at_lah);
            }
            let factor = if n % 2 == 1 { int(2) } else { int(0) };
            let rhs = column[n - 1].scaled(&factor);
            report.record(lhs == rhs, n, None, || format!("lhs = {lhs}, rhs = {rhs}"));
        }
        Ok(report)
    }

    /// `sum_{k=1}^n L_{k,1} B_{n,k} = (-1)^n X_n`.
    pub fn check_inversion_of_sequences(&self, max_n: usize) -> Result<CheckReport, FamilyError> {
        let mut report = CheckReport::new("seqinv");
        for n in 1..=max_n {
            let mut lhs = LaurentPoly::zero();
            for k in 1..=n {
                lhs = &lhs + &(&*self.lah(k, 1)? * &*self.bell(n, k)?);
            }
            let rhs = LaurentPoly::var(n).scaled(&sign(n));
            report.record(lhs == rhs, n, None, || format!("lhs = {lhs}"));
        }
        Ok(report)
    }

    /// `L_{n,1}` involves only `X_1..X_{2[n/2]}`; in particular no `X_n` for odd `n`.
    pub fn lah_parity_support_check(&self, n: usize) -> Result<bool, FamilyError> {
        Ok(self.lah(n, 1)?.num_vars() <= 2 * (n / 2))
    }
}

/// `A_{n,k}` from the shared tables.
pub fn stirling_first_poly(n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    Families::shared().stirling_first(n, k).map(|p| (*p).clone())
}

pub fn stirling_first_via_inverse(n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    Families::shared().stirling_first_via_inverse(n, k)
}

/// `L_{n,k}` from the shared tables.
pub fn lah_poly(n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    Families::shared().lah(n, k).map(|p| (*p).clone())
}

pub fn lah_eval(n: usize, k: usize, args: &[Rational]) -> Result<Rational, FamilyError> {
    Families::shared().lah_eval(n, k, args)
}

pub fn check_ortho_inversion(max_n: usize) -> Result<CheckReport, FamilyError> {
    Families::shared().check_ortho_inversion(max_n)
}

pub fn check_lah_selfinverse(max_n: usize) -> Result<CheckReport, FamilyError> {
    Families::shared().check_lah_selfinverse(max_n)
}

pub fn check_lah_bell_representability(max_n: usize) -> Result<CheckReport, FamilyError> {
    Families::shared().check_lah_bell_representability(max_n)
}

pub fn check_lah_lemma(max_n: usize) -> Result<CheckReport, FamilyError> {
    Families::shared().check_lah_lemma(max_n)
}

pub fn check_inversion_of_sequences(max_n: usize) -> Result<CheckReport, FamilyError> {
    Families::shared().check_inversion_of_sequences(max_n)
}

pub fn lah_parity_support_check(n: usize) -> Result<bool, FamilyError> {
    Families::shared().lah_parity_support_check(n)
}
