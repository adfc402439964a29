//! JSON encodings for polynomials, series and family tables.
//!
//! Polynomial: `{"terms":[{"coef":"p/q","exps":[e1,...,em]}]}` with terms in
//! canonical order. Series: `{"convention":"exponential","order":N,"coeffs":["p/q",...]}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::poly::{AlgebraError, LaurentPoly, Monomial};
use crate::rational::{parse_rational, to_fraction_string, ParseRationalError, Rational};
use crate::series::Series;
use crate::tables::Family;

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error(transparent)]
    Monomial(#[from] AlgebraError),
    #[error("{0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coef: to_fraction_string(c),
                    exps: m.exponents().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = JsonError;

    fn try_from(j: &PolyJson) -> Result<Self, JsonError> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            terms.push((parse_rational(&t.coef)?, Monomial::new(t.exps.clone())?));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("plain data serializes")
}

pub fn poly_from_json(text: &str) -> Result<LaurentPoly, JsonError> {
    let j: PolyJson = serde_json::from_str(text)?;
    LaurentPoly::try_from(&j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Coefficients are `f_n = D^n f(0)`.
    #[default]
    Exponential,
    /// Coefficients are `f_n / n!`.
    Ordinary,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Exponential => "exponential",
            Convention::Ordinary => "ordinary",
        })
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exponential" => Ok(Convention::Exponential),
            "ordinary" => Ok(Convention::Ordinary),
            other => Err(format!("unknown convention {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub convention: Convention,
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesJson {
    pub fn encode(s: &Series, convention: Convention) -> Self {
        let values = match convention {
            Convention::Exponential => s.coeffs().to_vec(),
            Convention::Ordinary => s.to_ordinary(),
        };
        SeriesJson {
            convention,
            order: s.order(),
            coeffs: values.iter().map(to_fraction_string).collect(),
        }
    }

    /// Back to the exponential-convention series, whatever was stored.
    pub fn decode(&self) -> Result<Series, JsonError> {
        if self.coeffs.len() != self.order + 1 {
            return Err(JsonError::Shape(format!(
                "order {} needs {} coefficients, found {}",
                self.order,
                self.order + 1,
                self.coeffs.len()
            )));
        }
        let values = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<Rational>, _>>()?;
        Ok(match self.convention {
            Convention::Exponential => Series::from_coeffs(values),
            Convention::Ordinary => Series::from_ordinary(values),
        })
    }
}

pub fn series_to_json(s: &Series, convention: Convention) -> String {
    serde_json::to_string(&SeriesJson::encode(s, convention)).expect("plain data serializes")
}

pub fn series_from_json(text: &str) -> Result<Series, JsonError> {
    let j: SeriesJson = serde_json::from_str(text)?;
    j.decode()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub n: usize,
    pub k: usize,
    pub poly: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub family: String,
    pub max_n: usize,
    pub entries: Vec<TableEntryJson>,
}

impl TableJson {
    pub fn family(&self) -> Result<Family, JsonError> {
        Family::from_tag(&self.family)
            .ok_or_else(|| JsonError::Shape(format!("unknown family tag {:?}", self.family)))
    }

    pub fn polys(&self) -> Result<Vec<(usize, usize, LaurentPoly)>, JsonError> {
        self.entries
            .iter()
            .map(|e| Ok((e.n, e.k, LaurentPoly::try_from(&e.poly)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn poly_encoding_is_exact() {
        let p = LaurentPoly::from_terms([
            (int(2), Monomial::new(vec![-2, 1]).unwrap()),
            (rat(-3, 2), Monomial::one()),
        ]);
        let text = poly_to_json(&p);
        assert_eq!(
            text,
            r#"{"terms":[{"coef":"2/1","exps":[-2,1]},{"coef":"-3/2","exps":[]}]}"#
        );
        assert_eq!(poly_from_json(&text).unwrap(), p);
    }

    #[test]
    fn series_encoding_is_exact() {
        let s = Series::exp_minus_one(3);
        let text = series_to_json(&s, Convention::Exponential);
        assert_eq!(
            text,
            r#"{"convention":"exponential","order":3,"coeffs":["0/1","1/1","1/1","1/1"]}"#
        );
        assert_eq!(series_from_json(&text).unwrap(), s);
        let ord = series_to_json(&s, Convention::Ordinary);
        assert!(ord.contains(r#""1/6""#));
        assert_eq!(series_from_json(&ord).unwrap(), s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(series_from_json(r#"{"convention":"exponential","order":2,"coeffs":["0"]}"#).is_err());
        assert!(series_from_json(r#"{"convention":"weird","order":0,"coeffs":["0"]}"#).is_err());
        assert!(poly_from_json(r#"{"terms":[{"coef":"1/0","exps":[]}]}"#).is_err());
        assert!(poly_from_json(r#"{"terms":[{"coef":"1","exps":[0,-1]}]}"#).is_err());
        // plain integers are accepted on input
        assert_eq!(
            poly_from_json(r#"{"terms":[{"coef":"5","exps":[]}]}"#).unwrap(),
            LaurentPoly::constant(int(5))
        );
    }
}
