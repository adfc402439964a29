//! Exact partial Bell, multivariate Stirling and multivariable Lah polynomial
//! families, truncated power series in the exponential convention, and tools
//! for generating, checking and decomposing involutory series.

pub mod bell;
pub mod combinatorics;
pub mod expr;
pub mod involution;
pub mod json;
pub mod poly;
pub mod random;
pub mod rational;
pub mod report;
pub mod reproduce;
pub mod ring;
pub mod series;
pub mod stirling_lah;
pub mod tables;
pub mod verify;

pub use bell::{bell_eval, bell_poly, enumerate_partitions, FamilyError, PartitionMultiplicity};
pub use poly::{AlgebraError, LaurentPoly, Monomial};
pub use rational::Rational;
pub use report::{CheckFailure, CheckReport};
pub use ring::Coeff;
pub use series::{Series, SeriesError};
pub use tables::{Families, Family, TriangleTable};
pub use expr::{eval_series, parse, ExprError, ExprNode, Func};
pub use involution::{InvolutionError, SeedSpec};
pub use json::{Convention, JsonError};
pub use reproduce::{Fixtures, ItemOutcome, ReproduceError};
pub use verify::{run_suites, Suite, VerifyConfig, VerifyReport};
