//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export takes plain strings and numbers and returns a JSON string; the
//! work happens in [`api`], which is ordinary Rust and tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use invol_core::expr;
    use invol_core::involution::{
        conjugator_from_involution, involution_from_conjugator, involution_from_even_seeds,
    };
    use invol_core::rational::{parse_rational, to_fraction_string};
    use invol_core::{Rational, SeedSpec, Series};
    use num_traits::ToPrimitive;
    use serde_json::{json, Value};

    /// Orders above this are refused; exact coefficients grow quickly.
    pub const MAX_ORDER: usize = 16;
    const SAMPLES: usize = 81;

    fn check_order(order: usize) -> Result<(), String> {
        if (1..=MAX_ORDER).contains(&order) {
            Ok(())
        } else {
            Err(format!("order must be between 1 and {MAX_ORDER}"))
        }
    }

    fn parse_list(text: &str) -> Result<Vec<Rational>, String> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| parse_rational(s).map_err(|e| e.to_string()))
            .collect()
    }

    fn strings(values: &[Rational]) -> Vec<String> {
        values.iter().map(to_fraction_string).collect()
    }

    /// Truncated Taylor polynomial at `x`, in floating point for plotting.
    fn eval_f64(ordinary: &[f64], x: f64) -> f64 {
        ordinary.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn floats(s: &Series) -> Vec<f64> {
        s.to_ordinary().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Points `(x, f(x), f(f(x)))` on `[-radius, radius]`.
    fn samples(s: &Series, radius: f64) -> Value {
        let ord = floats(s);
        let xs: Vec<f64> = (0..SAMPLES)
            .map(|i| -radius + 2.0 * radius * i as f64 / (SAMPLES - 1) as f64)
            .collect();
        let fx: Vec<f64> = xs.iter().map(|&x| eval_f64(&ord, x)).collect();
        let ffx: Vec<f64> = fx.iter().map(|&y| eval_f64(&ord, y)).collect();
        json!({ "x": xs, "f": fx, "ff": ffx })
    }

    pub fn expand(text: &str, order: usize) -> Result<Value, String> {
        check_order(order)?;
        let s = expr::series_from_text(text, order).map_err(|e| e.to_string())?;
        Ok(json!({
            "expr": expr::parse(text).map_err(|e| e.to_string())?.to_string(),
            "coeffs": strings(s.coeffs()),
            "ordinary": strings(&s.to_ordinary()),
            "samples": samples(&s, 0.8),
        }))
    }

    pub fn involution(even_seeds: &str, order: usize, radius: f64) -> Result<Value, String> {
        check_order(order)?;
        let seeds = parse_list(even_seeds)?;
        let f = involution_from_even_seeds(&SeedSpec::even(seeds), order).map_err(|e| e.to_string())?;
        let ok = f.is_involution().map_err(|e| e.to_string())?;
        Ok(json!({
            "coeffs": strings(f.coeffs()),
            "involution": ok,
            "samples": samples(&f, radius),
        }))
    }

    pub fn decompose(even_seeds: &str, odd_seeds: &str, order: usize) -> Result<Value, String> {
        check_order(order)?;
        let seeds = parse_list(even_seeds)?;
        let f = involution_from_even_seeds(&SeedSpec::even(seeds), order).map_err(|e| e.to_string())?;
        let odd = SeedSpec::odd(parse_list(odd_seeds)?).map_err(|e| e.to_string())?;
        let g = conjugator_from_involution(&f, &odd).map_err(|e| e.to_string())?;
        let back = involution_from_conjugator(&g).map_err(|e| e.to_string())?;
        Ok(json!({
            "f": strings(f.coeffs()),
            "g": strings(g.coeffs()),
            "round_trip": back == f,
        }))
    }
}

fn finish(result: Result<serde_json::Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// Series coefficients of a closed-form expression in `x`.
#[wasm_bindgen]
pub fn expand(expr: &str, order: usize) -> Result<String, JsError> {
    finish(api::expand(expr, order))
}

/// Involution with even coefficients from a comma-separated list, plus plot samples.
#[wasm_bindgen]
pub fn involution(even_seeds: &str, order: usize, radius: f64) -> Result<String, JsError> {
    finish(api::involution(even_seeds, order, radius))
}

/// Conjugator for the involution built from `even_seeds`, with chosen odd coefficients.
#[wasm_bindgen]
pub fn decompose(even_seeds: &str, odd_seeds: &str, order: usize) -> Result<String, JsError> {
    finish(api::decompose(even_seeds, odd_seeds, order))
}
