//! Text and JSON forms shared by every polynomial-like type.
//!
//! Text: terms in ascending exponent order, `coeff*q^exp`, with the
//! coefficient 1 elided before `q` and the exponent 1 elided after it, e.g.
//! `1 + 2*q + 2*q^2 + q^3 + q^4` or `-q^-2 - q^-1`. The zero polynomial
//! prints as `0`.
//!
//! JSON: `{"coeffs": ["1", "2"], "min_exp": 0}` with decimal-string
//! coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{IntPoly, LaurentPoly, LaurentSeries};
use crate::error::{Error, Result};

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    min_exp: i64,
    coeffs: &[BigInt],
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = min_exp + k as i64;
        let neg = c.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mag = c.abs();
        if exp == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        f.write_str("q")?;
        if exp != 1 {
            write!(f, "^{exp}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parse the text form back into a Laurent polynomial.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    for i in 1..=bytes.len() {
        // A sign starts a new term unless it follows '^' (negative exponent).
        let boundary =
            i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
        if boundary {
            terms.push(parse_term(&s[start..i])?);
            start = i;
        }
    }
    let lo = terms.iter().map(|t| t.0).min().unwrap();
    let hi = terms.iter().map(|t| t.0).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in terms {
        coeffs[(e - lo) as usize] += c;
    }
    Ok(LaurentPoly::new(lo, coeffs))
}

fn parse_term(term: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("malformed term {term:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    let (coeff, var) = match body.find('q') {
        None => (body, None),
        Some(pos) => {
            let c = match body[..pos].strip_suffix('*') {
                Some("") => return Err(bad()),
                Some(c) => c,
                None => &body[..pos],
            };
            (c, Some(&body[pos + 1..]))
        }
    };
    let c: BigInt = if coeff.is_empty() {
        if var.is_none() {
            return Err(bad());
        }
        BigInt::one()
    } else {
        coeff.parse().map_err(|_| bad())?
    };
    let exp = match var {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse::<i64>()
            .map_err(|_| bad())?,
    };
    Ok((exp, c * sign))
}

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    parse_laurent(text)?
        .to_int_poly()
        .ok_or_else(|| Error::Parse(format!("{text:?} has negative exponents")))
}

fn coeffs_json(coeffs: &[BigInt]) -> Value {
    Value::Array(
        coeffs
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    json!({ "min_exp": p.min_exp(), "coeffs": coeffs_json(p.coeffs()) })
}

pub fn poly_to_json(p: &IntPoly) -> Value {
    json!({ "min_exp": 0, "coeffs": coeffs_json(p.coeffs()) })
}

pub fn series_to_json(s: &LaurentSeries) -> Value {
    json!({ "min_exp": s.min_exp(), "order": s.order(), "coeffs": coeffs_json(s.coeffs()) })
}

pub(crate) fn parse_coeffs(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("coeffs must be an array".into()))?
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| Error::Parse(format!("bad coefficient {c}")))
        })
        .collect()
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let min_exp = v["min_exp"]
        .as_i64()
        .ok_or_else(|| Error::Parse("min_exp must be an integer".into()))?;
    Ok(LaurentPoly::new(min_exp, parse_coeffs(&v["coeffs"])?))
}
