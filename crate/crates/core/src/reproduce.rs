//! Regenerates the reference values stored in `fixtures/reference_values.json`
//! and compares them item by item.
//!
//! Polynomial items are rendered in canonical form on both sides, so the
//! fixture's term order does not matter; sequences render one value per line.

use serde::{Deserialize, Serialize};

use crate::bell::FamilyError;
use crate::expr::{series_from_text, ExprError};
use crate::involution::{involution_from_even_seeds, InvolutionError, SeedSpec};
use crate::json::{JsonError, PolyJson};
use crate::poly::LaurentPoly;
use crate::rational::{display_rational, int, parse_rational, rat, Rational};
use crate::tables::Families;

pub const DEFAULT_FIXTURES: &str = include_str!("../fixtures/reference_values.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureItem {
    pub id: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixtures {
    pub items: Vec<FixtureItem>,
}

impl Fixtures {
    pub fn parse(text: &str) -> Result<Self, JsonError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_FIXTURES).expect("bundled fixtures parse")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReproduceError {
    #[error("unknown item {0:?}")]
    UnknownItem(String),
    #[error("fixture item {0:?} must carry exactly one of poly or sequence")]
    MalformedItem(String),
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// Identifiers of every reproducible item, in report order.
pub const ITEMS: [&str; 19] = [
    "f1",
    "f3",
    "f5",
    "f7",
    "f9",
    "lah1",
    "lah2",
    "lah3",
    "lah4",
    "lah5",
    "lah6",
    "expsin",
    "neg-x-over-1-plus-x",
    "lah-ones",
    "lah-expsin",
    "lah-pow-2",
    "lah-pow-3",
    "lah-pow-minus-half",
    "lah-numbers",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ItemOutcome {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

enum Value {
    Poly(LaurentPoly),
    Sequence(Vec<Rational>),
}

fn prefix(id: &str) -> &'static str {
    if id.starts_with('f') {
        "a"
    } else {
        "X"
    }
}

fn render(id: &str, v: &Value) -> String {
    match v {
        Value::Poly(p) => format!("{}\n", p.display_with(prefix(id))),
        Value::Sequence(s) => s.iter().map(|r| format!("{}\n", display_rational(r))).collect(),
    }
}

fn lah_column(fam: &Families, args: &[Rational], top: usize) -> Result<Vec<Rational>, FamilyError> {
    (1..=top).map(|n| fam.lah_eval(n, 1, args)).collect()
}

fn powers(c: Rational, top: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(top);
    let mut acc = c.clone();
    for _ in 0..top {
        out.push(acc.clone());
        acc *= &c;
    }
    out
}

fn compute(fam: &Families, id: &str) -> Result<Value, ReproduceError> {
    const TOP: usize = 10;
    let tail = |text: &str| -> Result<Vec<Rational>, ReproduceError> {
        Ok(series_from_text(text, TOP)?.coeffs()[1..].to_vec())
    };
    Ok(match id {
        "f1" | "f3" | "f5" | "f7" | "f9" => {
            let n: usize = id[1..].parse().unwrap();
            let f = involution_from_even_seeds(&SeedSpec::symbolic_even(4), 9)?;
            Value::Poly(f.coeff(n))
        }
        "lah1" | "lah2" | "lah3" | "lah4" | "lah5" | "lah6" => {
            let n: usize = id[3..].parse().unwrap();
            Value::Poly((*fam.lah(n, 1)?).clone())
        }
        "expsin" => Value::Sequence(tail("exp(sin(x))-1")?),
        "neg-x-over-1-plus-x" => Value::Sequence(tail("-x/(1+x)")?),
        "lah-ones" => Value::Sequence(lah_column(fam, &vec![int(1); TOP], TOP)?),
        "lah-expsin" => Value::Sequence(lah_column(fam, &tail("exp(sin(x))-1")?, TOP)?),
        "lah-pow-2" => Value::Sequence(lah_column(fam, &powers(int(2), TOP), TOP)?),
        "lah-pow-3" => Value::Sequence(lah_column(fam, &powers(int(3), TOP), TOP)?),
        "lah-pow-minus-half" => Value::Sequence(lah_column(fam, &powers(rat(-1, 2), TOP), TOP)?),
        "lah-numbers" => {
            let ones = vec![int(1); 6];
            let mut out = Vec::new();
            for n in 1..=6 {
                for k in 1..=n {
                    out.push(fam.lah_eval(n, k, &ones)?);
                }
            }
            Value::Sequence(out)
        }
        other => return Err(ReproduceError::UnknownItem(other.to_string())),
    })
}

fn expected(item: &FixtureItem) -> Result<Value, ReproduceError> {
    match (&item.poly, &item.sequence) {
        (Some(p), None) => Ok(Value::Poly(LaurentPoly::try_from(p)?)),
        (None, Some(s)) => Ok(Value::Sequence(
            s.iter()
                .map(|v| parse_rational(v).map_err(JsonError::from))
                .collect::<Result<_, _>>()?,
        )),
        _ => Err(ReproduceError::MalformedItem(item.id.clone())),
    }
}

/// Recompute each item (or just `only`) and compare with `fixtures`. An item
/// with no fixture entry fails with an empty expectation.
pub fn reproduce(fam: &Families, fixtures: &Fixtures, only: Option<&str>) -> Result<Vec<ItemOutcome>, ReproduceError> {
    if let Some(item) = fixtures.items.iter().find(|i| !ITEMS.contains(&i.id.as_str())) {
        return Err(ReproduceError::UnknownItem(item.id.clone()));
    }
    let ids: Vec<&str> = match only {
        Some(id) if ITEMS.contains(&id) => vec![id],
        Some(id) => return Err(ReproduceError::UnknownItem(id.to_string())),
        None => ITEMS.to_vec(),
    };
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let actual = render(id, &compute(fam, id)?);
        let (description, expected) = match fixtures.items.iter().find(|i| i.id == id) {
            Some(item) => (item.description.clone(), render(id, &expected(item)?)),
            None => ("missing from fixtures".to_string(), String::new()),
        };
        out.push(ItemOutcome {
            id: id.to_string(),
            description,
            passed: expected == actual,
            expected,
            actual,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixtures_cover_every_item() {
        let fx = Fixtures::builtin();
        assert_eq!(fx.items.len(), ITEMS.len());
        for id in ITEMS {
            assert!(fx.items.iter().any(|i| i.id == id), "{id}");
        }
    }

    #[test]
    fn every_item_reproduces() {
        let out = reproduce(Families::shared(), &Fixtures::builtin(), None).unwrap();
        for o in &out {
            assert!(o.passed, "{}: expected {} got {}", o.id, o.expected, o.actual);
        }
    }

    #[test]
    fn single_item() {
        let out = reproduce(Families::shared(), &Fixtures::builtin(), Some("f3")).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].passed);
        assert_eq!(out[0].actual, "-3/2*a1^2\n");
    }

    #[test]
    fn mismatch_is_reported() {
        let mut fx = Fixtures::builtin();
        let item = fx.items.iter_mut().find(|i| i.id == "expsin").unwrap();
        item.sequence.as_mut().unwrap()[9] = "-2950".into();
        let out = reproduce(Families::shared(), &fx, Some("expsin")).unwrap();
        assert!(!out[0].passed);
        assert!(out[0].expected.ends_with("-2950\n"));
        assert!(out[0].actual.ends_with("-2951\n"));
    }

    #[test]
    fn unknown_items_are_errors() {
        assert!(matches!(
            reproduce(Families::shared(), &Fixtures::builtin(), Some("f2")),
            Err(ReproduceError::UnknownItem(_))
        ));
    }
}
