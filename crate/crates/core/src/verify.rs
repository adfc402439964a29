//! Identity suites: symbolic checks on the family tables plus numeric checks
//! at reproducible random rational points.

use std::fmt;
use std::str::FromStr;
use std::thread;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bell::{bell_eval, bell_homogeneity_check, FamilyError};
use crate::random::{self, SuiteRng};
use crate::rational::{display_rational, int, Rational};
use crate::report::CheckReport;
use crate::series::SeriesError;
use crate::tables::{Families, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Ortho,
    SelfInv,
    BellRep,
    Lemma,
    SeqInv,
    FaaDiBruno,
    Dual,
    Jabotinsky,
    Homogeneity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Ortho,
        Suite::SelfInv,
        Suite::BellRep,
        Suite::Lemma,
        Suite::SeqInv,
        Suite::FaaDiBruno,
        Suite::Dual,
        Suite::Jabotinsky,
        Suite::Homogeneity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ortho => "ortho",
            Suite::SelfInv => "selfinv",
            Suite::BellRep => "bellrep",
            Suite::Lemma => "lemma",
            Suite::SeqInv => "seqinv",
            Suite::FaaDiBruno => "faadibruno",
            Suite::Dual => "dual",
            Suite::Jabotinsky => "jabotinsky",
            Suite::Homogeneity => "homogeneity",
        }
    }

    fn stream(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Parse `name`, `a,b,c` or `all`.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>, String> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out: Vec<Suite> = text.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Upper `n` for symbolic identity checks.
    pub max_n: usize,
    /// Upper `n` (and series order) for numeric checks.
    pub numeric_max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            numeric_max_n: 12,
            trials: 25,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub passed: bool,
    pub suites: Vec<CheckReport>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(
            f,
            "{}: {} of {} suites passed",
            if self.passed { "OK" } else { "FAILED" },
            self.suites.len() - failed,
            self.suites.len()
        )
    }
}

#[derive(Debug, thiserror::Error)]
enum SuiteError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Algebra(#[from] crate::poly::AlgebraError),
}

/// Run `suites` against `fam`. Suites run on separate threads; the report
/// lists them in the order requested.
pub fn run_suites(fam: &Families, suites: &[Suite], config: &VerifyConfig) -> VerifyReport {
    let top = config.max_n.max(config.numeric_max_n);
    for family in [Family::Bell, Family::StirlingFirst, Family::Lah] {
        // failures here surface again inside the suites
        let _ = fam.populate(family, top);
    }
    let reports: Vec<CheckReport> = thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| scope.spawn(move || run_suite(fam, suite, config)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    VerifyReport {
        config: config.clone(),
        passed: reports.iter().all(CheckReport::passed),
        suites: reports,
    }
}

pub fn run_suite(fam: &Families, suite: Suite, config: &VerifyConfig) -> CheckReport {
    let mut report = CheckReport::new(suite.name());
    let mut rng = random::stream_rng(config.seed, suite.stream());
    if let Err(e) = suite_body(fam, suite, config, &mut rng, &mut report) {
        report.fail(0, None, format!("error: {e}"));
    }
    report
}

fn suite_body(
    fam: &Families,
    suite: Suite,
    cfg: &VerifyConfig,
    rng: &mut SuiteRng,
    report: &mut CheckReport,
) -> Result<(), SuiteError> {
    let symbolic = |r: CheckReport, report: &mut CheckReport| {
        let mut r = r;
        for f in &mut r.failures {
            f.detail = format!("symbolic: {}", f.detail);
        }
        report.merge(r);
    };
    match suite {
        Suite::Ortho => symbolic(fam.check_ortho_inversion(cfg.max_n)?, report),
        Suite::SelfInv => symbolic(fam.check_lah_selfinverse(cfg.max_n)?, report),
        Suite::BellRep => symbolic(fam.check_lah_bell_representability(cfg.max_n)?, report),
        Suite::Lemma => symbolic(fam.check_lah_lemma(cfg.max_n)?, report),
        Suite::SeqInv => symbolic(fam.check_inversion_of_sequences(cfg.max_n)?, report),
        Suite::Dual => {
            for n in 1..=cfg.max_n {
                for k in 1..=n {
                    let a = fam.stirling_first(n, k)?;
                    let alt = fam.stirling_first_via_inverse(n, k)?;
                    report.record(*a == alt, n, Some(k), || {
                        format!("symbolic: solve gives {a}, inverse route gives {alt}")
                    });
                }
            }
        }
        Suite::Homogeneity => {
            for n in 1..=cfg.max_n {
                for k in 1..=n {
                    let b = fam.bell(n, k)?;
                    let ok = b.terms().all(|(m, _)| m.degree() == k as i64);
                    report.record(ok, n, Some(k), || format!("symbolic: B not of degree k: {b}"));
                }
            }
        }
        Suite::FaaDiBruno | Suite::Jabotinsky => {}
    }
    let top = cfg.numeric_max_n;
    for trial in 0..cfg.trials {
        let tag = |s: String| format!("trial {trial}: {s}");
        match suite {
            Suite::Ortho | Suite::SelfInv | Suite::BellRep | Suite::Lemma | Suite::SeqInv => {
                let x = random::args(rng, top);
                let pt = Point::eval(fam, top, &x)?;
                pt.check(suite, &x, report, trial)?;
            }
            Suite::FaaDiBruno => {
                let f = random::any_series(rng, top);
                let g = random::invertible_series(rng, top);
                let h = f.compose(&g)?;
                let gargs = &g.coeffs()[1..];
                report.record(h.coeff(0) == f.coeff(0), 0, None, || tag("constant term".into()));
                for n in 1..=top {
                    let mut sum = Rational::zero();
                    for k in 1..=n {
                        sum += f.coeff(k) * bell_eval(n, k, gargs)?;
                    }
                    report.record(sum == h.coeff(n), n, None, || {
                        tag(format!("compose {} vs Bell sum {}", display_rational(&h.coeff(n)), display_rational(&sum)))
                    });
                }
                for k in 1..=top {
                    let p = g.power_over_factorial(k)?;
                    for n in k..=top {
                        let streamed = bell_eval(n, k, gargs)?;
                        let stored = fam.bell(n, k)?.eval(gargs)?;
                        report.record(p.coeff(n) == streamed && streamed == stored, n, Some(k), || {
                            tag(format!(
                                "g^k/k! gives {}, streamed {}, table {}",
                                display_rational(&p.coeff(n)),
                                display_rational(&streamed),
                                display_rational(&stored)
                            ))
                        });
                    }
                }
            }
            Suite::Dual => {
                let f = random::any_series(rng, top);
                let g = random::invertible_series(rng, top);
                let ginv = g.inverse()?;
                let h = f.compose(&ginv)?;
                let gargs = &g.coeffs()[1..];
                let a = |n: usize, k: usize| -> Result<Rational, SuiteError> {
                    Ok(fam.stirling_first(n, k)?.eval(gargs)?)
                };
                for n in 1..=top {
                    let mut sum = Rational::zero();
                    for k in 1..=n {
                        sum += f.coeff(k) * a(n, k)?;
                    }
                    report.record(sum == h.coeff(n), n, None, || {
                        tag(format!("compose with inverse {} vs A sum {}", display_rational(&h.coeff(n)), display_rational(&sum)))
                    });
                    let neg = -ginv.coeff(n);
                    let a1 = a(n, 1)?;
                    report.record(neg == -&a1, n, Some(1), || tag("(-id) o inverse vs -A_{n,1}".into()));
                }
                for k in 1..=top {
                    let p = ginv.power_over_factorial(k)?;
                    for n in k..=top {
                        let v = a(n, k)?;
                        report.record(p.coeff(n) == v, n, Some(k), || {
                            tag(format!("inverse^k/k! gives {}, A gives {}", display_rational(&p.coeff(n)), display_rational(&v)))
                        });
                    }
                }
            }
            Suite::Jabotinsky => {
                let u = random::invertible_series(rng, top);
                let v = random::invertible_series(rng, top);
                let p = v.compose(&u)?;
                let (ua, va, pa) = (&u.coeffs()[1..], &v.coeffs()[1..], &p.coeffs()[1..]);
                for n in 1..=top {
                    let bu: Vec<Rational> = (1..=n).map(|j| bell_eval(n, j, ua)).collect::<Result<_, _>>()?;
                    for k in 1..=n {
                        let lhs = bell_eval(n, k, pa)?;
                        let mut rhs = Rational::zero();
                        for j in k..=n {
                            rhs += &bu[j - 1] * bell_eval(j, k, va)?;
                        }
                        report.record(lhs == rhs, n, Some(k), || {
                            tag(format!("{} vs {}", display_rational(&lhs), display_rational(&rhs)))
                        });
                    }
                }
            }
            Suite::Homogeneity => {
                let lambda = random::nonzero_rational(rng);
                let x = random::args(rng, top);
                for n in 1..=top {
                    for k in 1..=n {
                        let ok = bell_homogeneity_check(n, k, &lambda, &x)?;
                        report.record(ok, n, Some(k), || tag(format!("lambda = {}", display_rational(&lambda))));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Table values `A_{n,k}`, `B_{n,k}`, `L_{n,k}` at one point, `1 <= k <= n <= top`.
struct Point {
    a: Vec<Vec<Rational>>,
    b: Vec<Vec<Rational>>,
    l: Vec<Vec<Rational>>,
}

impl Point {
    fn eval(fam: &Families, top: usize, x: &[Rational]) -> Result<Self, SuiteError> {
        let grid = |family: Family| -> Result<Vec<Vec<Rational>>, SuiteError> {
            let mut rows = vec![Vec::new()];
            for n in 1..=top {
                let mut row = vec![Rational::zero()];
                for k in 1..=n {
                    row.push(fam.get(family, n, k)?.eval(x)?);
                }
                rows.push(row);
            }
            Ok(rows)
        };
        Ok(Point {
            a: grid(Family::StirlingFirst)?,
            b: grid(Family::Bell)?,
            l: grid(Family::Lah)?,
        })
    }

    fn check(&self, suite: Suite, x: &[Rational], report: &mut CheckReport, trial: usize) -> Result<(), SuiteError> {
        let top = self.a.len() - 1;
        let delta = |n: usize, k: usize| if n == k { Rational::one() } else { Rational::zero() };
        let column: Vec<Rational> = (1..=top).map(|j| self.l[j][1].clone()).collect();
        let fail = |what: &str, v: &Rational| format!("trial {trial}: {what} = {}", display_rational(v));
        for n in 1..=top {
            match suite {
                Suite::Ortho | Suite::SelfInv | Suite::BellRep => {
                    for k in 1..=n {
                        let (value, target) = match suite {
                            Suite::Ortho => (
                                (k..=n).map(|j| &self.a[n][j] * &self.b[j][k]).sum::<Rational>(),
                                delta(n, k),
                            ),
                            Suite::SelfInv => (
                                (k..=n).map(|j| &self.l[n][j] * &self.l[j][k]).sum(),
                                delta(n, k),
                            ),
                            _ => (bell_eval(n, k, &column)?, self.l[n][k].clone()),
                        };
                        report.record(value == target, n, Some(k), || fail("value", &value));
                    }
                }
                Suite::Lemma if n >= 2 => {
                    let mut lhs = Rational::zero();
                    for k in 2..n {
                        lhs += &column[k - 1] * bell_eval(n, k, &column)?;
                    }
                    let factor = if n % 2 == 1 { int(2) } else { int(0) };
                    let rhs = &column[n - 1] * factor;
                    report.record(lhs == rhs, n, None, || fail("lhs - rhs", &(&lhs - &rhs)));
                }
                Suite::SeqInv => {
                    let lhs: Rational = (1..=n).map(|k| &column[k - 1] * &self.b[n][k]).sum();
                    let rhs = if n % 2 == 0 { x[n - 1].clone() } else { -&x[n - 1] };
                    report.record(lhs == rhs, n, None, || fail("lhs", &lhs));
                }
                _ => {}
            }
        }
        Ok(())
    }
}
