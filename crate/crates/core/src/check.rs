//! Exhaustive property sweeps over bounded ranges, run in parallel and
//! reported in a canonical order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cfrac::{cf_hj, cf_regular, rationals_up_to, Rational};
use crate::error::{Error, Result};
use crate::frieze::{
    catalan, enumerate_triangulations, frieze_quiddities, quiddity_from_triangulation,
    rotation_canonical, MAX_NGON,
};
use crate::qrat::{
    farey_neighbors, q_rational_hj, q_rational_matrix, q_rational_regular, unimodality_check,
    x_polynomial, QRational,
};

pub const MAX_POSITIVITY_HEIGHT: u64 = 60;
pub const MAX_COINCIDENCE_HEIGHT: u64 = 200;
pub const MAX_UNIMODALITY_DEN: u64 = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    TotalPositivity,
    Unimodality,
    FriezeBijection,
    DefinitionCoincidence,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::TotalPositivity => "total-positivity",
            Suite::Unimodality => "unimodality",
            Suite::FriezeBijection => "frieze-bijection",
            Suite::DefinitionCoincidence => "definition-coincidence",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::TotalPositivity,
            Suite::Unimodality,
            Suite::FriezeBijection,
            Suite::DefinitionCoincidence,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown check suite {s:?}")))
    }
}

/// Outcome of a sweep. `violations` lists counterexamples in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub suite: Suite,
    pub bound: u64,
    /// What was counted, e.g. `pairs` or `fractions`.
    pub unit: &'static str,
    pub checked: u64,
    pub violations: Vec<Value>,
    /// Suite-specific figures, reported alongside the summary.
    pub details: Map<String, Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "bound": self.bound,
            self.unit: self.checked,
            "violations": self.violations.len(),
            "counterexamples": self.violations,
            "details": self.details,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}={}, violations={}",
            self.unit,
            self.checked,
            self.violations.len()
        )?;
        for (k, v) in &self.details {
            match v {
                Value::String(s) => write!(f, ", {k}={s}")?,
                Value::Array(_) | Value::Object(_) => {}
                other => write!(f, ", {k}={other}")?,
            }
        }
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

fn limit(name: &str, bound: u64, max: u64) -> Result<()> {
    if bound == 0 || bound > max {
        return Err(Error::SizeLimit(format!(
            "{name} bound must lie in 1..={max}, got {bound}"
        )));
    }
    Ok(())
}

/// Coefficients of `X` are positive from its lowest to its highest power,
/// and `X` is a monomial exactly for Farey neighbours.
pub fn total_positivity(max_height: u64) -> Result<CheckReport> {
    limit("total-positivity", max_height, MAX_POSITIVITY_HEIGHT)?;
    let xs = rationals_up_to(max_height, max_height);
    let qs: Vec<QRational> = xs.par_iter().map(QRational::new).collect::<Result<_>>()?;
    // Pairs (a, b) with a > b; xs is sorted ascending.
    let found: Vec<(Rational, Rational, Value)> = (0..qs.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let qs = &qs;
            (0..i).filter_map(move |j| {
                let (a, b) = (&qs[i], &qs[j]);
                let x = match x_polynomial(a, b) {
                    Ok(x) => x,
                    Err(e) => return Some((a.x().clone(), b.x().clone(), json!({ "a": a.x().to_string(), "b": b.x().to_string(), "error": e.to_string() }))),
                };
                let lo = x.valuation().unwrap_or(0);
                let positive = !x.is_zero() && x.coeffs()[lo..].iter().all(Signed::is_positive);
                let monomial = x.as_monomial().is_some();
                let neighbours = farey_neighbors(a.x(), b.x());
                if positive && monomial == neighbours {
                    None
                } else {
                    Some((
                        a.x().clone(),
                        b.x().clone(),
                        json!({
                            "a": a.x().to_string(),
                            "b": b.x().to_string(),
                            "x": x.to_string(),
                            "positive": positive,
                            "monomial": monomial,
                            "farey_neighbors": neighbours,
                        }),
                    ))
                }
            })
        })
        .collect();
    let n = qs.len() as u64;
    Ok(report(
        Suite::TotalPositivity,
        max_height,
        "pairs",
        n * (n - 1) / 2,
        found,
        Map::new(),
    ))
}

/// Numerators and denominators of `[r/s]_q` for `s <= max_den`,
/// `r <= 2 max_den`, checked for unimodality. A counterexample is
/// reported, never raised.
pub fn unimodality(max_den: u64) -> Result<CheckReport> {
    limit("unimodality", max_den, MAX_UNIMODALITY_DEN)?;
    let xs = rationals_up_to(2 * max_den, max_den);
    let found: Vec<(Rational, Rational, Value)> = xs
        .par_iter()
        .map(|x| {
            let v = QRational::new(x)?;
            let r = unimodality_check(&v);
            Ok((!r.both()).then(|| {
                (
                    x.clone(),
                    x.clone(),
                    json!({
                        "x": x.to_string(),
                        "num_unimodal": r.num_unimodal,
                        "den_unimodal": r.den_unimodal,
                        "value": v.to_string(),
                    }),
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut details = Map::new();
    details.insert("max_num".into(), json!(2 * max_den));
    Ok(report(
        Suite::Unimodality,
        max_den,
        "fractions",
        xs.len() as u64,
        found,
        details,
    ))
}

/// Quiddities of triangulated `n`-gons are exactly the closing frieze
/// quiddities, for every `3 <= n <= max_ngon`.
pub fn frieze_bijection(max_ngon: u64) -> Result<CheckReport> {
    if !(3..=MAX_NGON as u64).contains(&max_ngon) {
        return Err(Error::SizeLimit(format!(
            "frieze-bijection bound must lie in 3..={MAX_NGON}, got {max_ngon}"
        )));
    }
    let per_ngon: Vec<(usize, Value, Option<Value>)> = (3..=max_ngon as usize)
        .into_par_iter()
        .map(|n| {
            let tris = enumerate_triangulations(n)?;
            let from_tri: BTreeSet<Vec<u64>> = tris
                .iter()
                .map(|t| Ok(quiddity_from_triangulation(t)?.cycle().to_vec()))
                .collect::<Result<_>>()?;
            let friezes = frieze_quiddities(n)?;
            let classes = |s: &BTreeSet<Vec<u64>>| s.iter().map(|c| rotation_canonical(c)).collect::<BTreeSet<_>>();
            let (tri_classes, frieze_classes) = (classes(&from_tri), classes(&friezes));
            let summary = json!({
                "ngon": n,
                "triangulations": tris.len(),
                "catalan": catalan(n - 2),
                "quiddities": from_tri.len(),
                "rotation_classes": tri_classes.len(),
            });
            let ok = tris.len() as u64 == catalan(n - 2)
                && from_tri.len() == tris.len()
                && from_tri == friezes
                && tri_classes == frieze_classes;
            let bad = (!ok).then(|| {
                json!({
                    "ngon": n,
                    "triangulations": tris.len(),
                    "distinct_quiddities": from_tri.len(),
                    "frieze_quiddities": friezes.len(),
                    "only_from_triangulations": from_tri.difference(&friezes).map(|c| format!("{c:?}")).collect::<Vec<_>>(),
                    "only_from_friezes": friezes.difference(&from_tri).map(|c| format!("{c:?}")).collect::<Vec<_>>(),
                })
            });
            Ok((n, summary, bad))
        })
        .collect::<Result<_>>()?;
    let mut details = Map::new();
    details.insert(
        "catalan_counts".into(),
        Value::String(
            per_ngon
                .iter()
                .map(|(n, _, _)| catalan(n - 2).to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    );
    details.insert(
        "per_ngon".into(),
        Value::Array(per_ngon.iter().map(|(_, s, _)| s.clone()).collect()),
    );
    let violations: Vec<Value> = per_ngon.iter().filter_map(|(_, _, b)| b.clone()).collect();
    Ok(CheckReport {
        suite: Suite::FriezeBijection,
        bound: max_ngon,
        unit: "polygons",
        checked: per_ngon.len() as u64,
        violations,
        details,
    })
}

/// The regular and Hirzebruch–Jung continued fractions and the matrix
/// product give the same q-rational for every `r/s` with `r, s <= max_height`.
pub fn definition_coincidence(max_height: u64) -> Result<CheckReport> {
    limit("definition-coincidence", max_height, MAX_COINCIDENCE_HEIGHT)?;
    let xs = rationals_up_to(max_height, max_height);
    let found: Vec<(Rational, Rational, Value)> = xs
        .par_iter()
        .map(|x| {
            let reg = q_rational_regular(&cf_regular(x)?)?;
            let hj = q_rational_hj(&cf_hj(x)?)?;
            let (_, mat) = q_rational_matrix(&cf_regular(x)?)?;
            let at_one = reg.value().eval_at_one();
            let ok = reg == hj && reg == mat && at_one.as_ref() == Some(x.as_big_rational());
            Ok((!ok).then(|| {
                (
                    x.clone(),
                    x.clone(),
                    json!({
                        "x": x.to_string(),
                        "regular": reg.to_string(),
                        "hj": hj.to_string(),
                        "matrix": mat.to_string(),
                    }),
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(report(
        Suite::DefinitionCoincidence,
        max_height,
        "fractions",
        xs.len() as u64,
        found,
        Map::new(),
    ))
}

fn report(
    suite: Suite,
    bound: u64,
    unit: &'static str,
    checked: u64,
    mut found: Vec<(Rational, Rational, Value)>,
    details: Map<String, Value>,
) -> CheckReport {
    found.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    CheckReport {
        suite,
        bound,
        unit,
        checked,
        violations: found.into_iter().map(|(_, _, v)| v).collect(),
        details,
    }
}

pub fn run_suite(suite: Suite, bound: u64) -> Result<CheckReport> {
    match suite {
        Suite::TotalPositivity => total_positivity(bound),
        Suite::Unimodality => unimodality(bound),
        Suite::FriezeBijection => frieze_bijection(bound),
        Suite::DefinitionCoincidence => definition_coincidence(bound),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let r = total_positivity(8).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.to_string().starts_with("pairs="));
        assert!(definition_coincidence(15).unwrap().passed());
        assert!(unimodality(10).unwrap().passed());
        let f = frieze_bijection(7).unwrap();
        assert!(f.passed(), "{f}");
        assert_eq!(f.details["catalan_counts"], json!("1,2,5,14,42"));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(total_positivity(0), Err(Error::SizeLimit(_))));
        assert!(matches!(total_positivity(61), Err(Error::SizeLimit(_))));
        assert!(matches!(frieze_bijection(13), Err(Error::SizeLimit(_))));
        assert!(matches!(frieze_bijection(2), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            "total-positivity",
            "unimodality",
            "frieze-bijection",
            "definition-coincidence",
        ] {
            assert_eq!(s.parse::<Suite>().unwrap().name(), s);
        }
        assert!("other".parse::<Suite>().is_err());
    }
}
