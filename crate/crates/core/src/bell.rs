//! Partial Bell polynomials via integer-partition enumeration.
//!
//! `B_{n,k}` is the sum over multiplicity vectors `c` with `sum c_j = k` and
//! `sum j*c_j = n` of `n! / prod(c_j! * (j!)^c_j) * prod X_j^c_j`. The
//! symbolic form is memoized in [`crate::tables::Families`]; [`bell_eval`]
//! streams the same sum over any [`Coeff`] ring without building it.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::factorial;
use crate::poly::{AlgebraError, LaurentPoly, Monomial};
use crate::rational::Rational;
use crate::ring::Coeff;
use crate::tables::Families;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("index (n={n}, k={k}) outside the triangle")]
    Range { n: usize, k: usize },
    #[error("{needed} arguments required, {given} supplied")]
    Arity { needed: usize, given: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Multiplicities `c_1..c_{n-k+1}` of one partition of `n` into `k` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionMultiplicity {
    counts: Vec<usize>,
}

impl PartitionMultiplicity {
    /// `counts[j-1]` is the number of parts equal to `j`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of parts equal to `j` (1-based).
    pub fn count(&self, j: usize) -> usize {
        self.counts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, c)| (i + 1) * c).sum()
    }

    /// `n! / prod(c_j! (j!)^c_j)`, the number of set partitions of this shape.
    pub fn bell_coefficient(&self) -> BigInt {
        let mut den = BigInt::one();
        for (i, &c) in self.counts.iter().enumerate() {
            den *= factorial(c) * num_traits::pow(factorial(i + 1), c);
        }
        factorial(self.total()) / den
    }
}

fn check_triangle(n: usize, k: usize) -> Result<(), FamilyError> {
    if k == 0 || k > n {
        Err(FamilyError::Range { n, k })
    } else {
        Ok(())
    }
}

/// Calls `visit` once per multiplicity vector of `(n, k)`, `1 <= k <= n`.
///
/// Descends on the largest part size, trying the largest multiplicity first,
/// so emission order is fixed.
pub fn for_each_partition<F>(n: usize, k: usize, mut visit: F) -> Result<(), FamilyError>
where
    F: FnMut(&PartitionMultiplicity),
{
    check_triangle(n, k)?;
    let width = n - k + 1;
    let mut current = PartitionMultiplicity {
        counts: vec![0; width],
    };
    descend(width, n, k, &mut current, &mut visit);
    Ok(())
}

fn descend<F>(part: usize, rem_n: usize, rem_k: usize, cur: &mut PartitionMultiplicity, visit: &mut F)
where
    F: FnMut(&PartitionMultiplicity),
{
    if part == 1 {
        if rem_n == rem_k {
            cur.counts[0] = rem_k;
            visit(cur);
            cur.counts[0] = 0;
        }
        return;
    }
    let max_c = rem_k.min(rem_n / part);
    for c in (0..=max_c).rev() {
        let n_left = rem_n - c * part;
        let k_left = rem_k - c;
        // remaining parts all lie in 1..part-1
        if k_left > n_left || n_left > k_left * (part - 1) {
            continue;
        }
        cur.counts[part - 1] = c;
        descend(part - 1, n_left, k_left, cur, visit);
        cur.counts[part - 1] = 0;
    }
}

pub fn enumerate_partitions(n: usize, k: usize) -> Result<Vec<PartitionMultiplicity>, FamilyError> {
    let mut out = Vec::new();
    for_each_partition(n, k, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Symbolic `B_{n,k}` built directly from the partition sum (no memoization).
pub(crate) fn build_bell_poly(n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    if k == 0 {
        return Ok(if n == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        });
    }
    if k > n {
        return Err(FamilyError::Range { n, k });
    }
    let mut terms = Vec::new();
    for_each_partition(n, k, |p| {
        let exps = p.counts().iter().map(|&c| c as i32).collect();
        let m = Monomial::new(exps).expect("non-negative exponents");
        terms.push((Rational::from_integer(p.bell_coefficient()), m));
    })?;
    Ok(LaurentPoly::from_terms(terms))
}

/// `B_{n,k}` from the shared memo table; `0 <= k <= n`.
pub fn bell_poly(n: usize, k: usize) -> Result<LaurentPoly, FamilyError> {
    Families::shared().bell(n, k).map(|p| (*p).clone())
}

/// `B_{n,k}(args[0], args[1], ...)` by streaming the partition sum.
///
/// Only `args[0..n-k+1]` are read. Works over any coefficient ring, which is
/// what lets series inversion and the involution recurrences run symbolically.
pub fn bell_eval<R: Coeff>(n: usize, k: usize, args: &[R]) -> Result<R, FamilyError> {
    if k == 0 {
        return if n == 0 {
            Ok(R::one())
        } else {
            Ok(R::zero())
        };
    }
    check_triangle(n, k)?;
    let needed = n - k + 1;
    if args.len() < needed {
        return Err(FamilyError::Arity {
            needed,
            given: args.len(),
        });
    }
    let mut total = R::zero();
    for_each_partition(n, k, |p| {
        let mut term = R::from_rational(Rational::from_integer(p.bell_coefficient()));
        for (j, &c) in p.counts().iter().enumerate() {
            if c > 0 {
                term = term.times(&args[j].pow(c));
            }
        }
        total = total.plus(&term);
    })?;
    Ok(total)
}

/// Whether `B_{n,k}(lambda * args) == lambda^k * B_{n,k}(args)`.
pub fn bell_homogeneity_check(
    n: usize,
    k: usize,
    lambda: &Rational,
    args: &[Rational],
) -> Result<bool, FamilyError> {
    let scaled: Vec<Rational> = args.iter().map(|a| a * lambda).collect();
    let lhs = bell_eval(n, k, &scaled)?;
    let rhs = bell_eval(n, k, args)? * num_traits::pow(lambda.clone(), k);
    Ok(lhs == rhs)
}
