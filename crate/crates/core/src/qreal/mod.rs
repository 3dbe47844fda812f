//! q-deformed real numbers: Taylor coefficients stabilized along
//! continued-fraction convergents, Laurent series for negative reals, and
//! closed forms for quadratic irrationals.

mod quadratic;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::cfrac::{eval_regular_terms, Rational};
use crate::error::{Error, Result};
use crate::exactalg::format::series_to_json;
use crate::exactalg::{series_expand, LaurentPoly, LaurentSeries};
use crate::qrat::QRational;

pub use quadratic::{
    closed_form_series, periodic_cf, quadratic_closed_form, quadratic_closed_form_cf,
    radius_of_convergence, stream_closed_form, QQuadraticForm, QuadraticIrrational,
};

/// Convergent depth explored before giving up on an infinite stream,
/// in addition to the requested order.
const EXTRA_DEPTH: usize = 200;

/// A source of regular continued-fraction terms `a_1, a_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CFStream {
    /// A rational number, given exactly.
    Finite(Vec<u64>),
    /// Eventually periodic: `pre` followed by `per` repeated forever.
    Periodic { pre: Vec<u64>, per: Vec<u64> },
    /// The first terms of an irrational number; nothing beyond is known.
    Truncated(Vec<u64>),
}

fn check_terms(terms: &[u64], from: usize) -> Result<()> {
    if let Some(k) = terms.iter().skip(from).position(|&a| a == 0) {
        return Err(Error::Parse(format!(
            "term {} is zero; only the first term may be 0",
            k + from + 1
        )));
    }
    Ok(())
}

impl CFStream {
    pub fn periodic(pre: Vec<u64>, per: Vec<u64>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::Parse("the period must be nonempty".into()));
        }
        check_terms(&pre, 1)?;
        check_terms(&per, if pre.is_empty() { 1 } else { 0 })?;
        Ok(CFStream::Periodic { pre, per })
    }

    pub fn finite(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse(
                "a continued fraction needs at least one term".into(),
            ));
        }
        check_terms(&terms, 1)?;
        Ok(CFStream::Finite(terms))
    }

    pub fn truncated(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse(
                "a continued fraction needs at least one term".into(),
            ));
        }
        check_terms(&terms, 1)?;
        Ok(CFStream::Truncated(terms))
    }

    /// The term `a_{k+1}`, if the stream has one.
    pub fn term(&self, k: usize) -> Option<u64> {
        match self {
            CFStream::Finite(t) | CFStream::Truncated(t) => t.get(k).copied(),
            CFStream::Periodic { pre, per } => Some(if k < pre.len() {
                pre[k]
            } else {
                per[(k - pre.len()) % per.len()]
            }),
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<u64> {
        (0..n).map_while(|k| self.term(k)).collect()
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self, CFStream::Periodic { .. })
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
    inner
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad term {t:?}")))
        })
        .collect()
}

/// `pre=[..];per=[..]`, `per=[..]`, `terms=[..]` (truncated) or `[..]` (finite).
impl FromStr for CFStream {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            return CFStream::finite(parse_list(s)?);
        }
        let mut pre = None;
        let mut per = None;
        let mut terms = None;
        for part in s.split(';').filter(|p| !p.trim().is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=[...], got {part:?}")))?;
            let list = parse_list(val)?;
            match key.trim() {
                "pre" => pre = Some(list),
                "per" => per = Some(list),
                "terms" => terms = Some(list),
                k => return Err(Error::Parse(format!("unknown key {k:?}"))),
            }
        }
        match (pre, per, terms) {
            (pre, Some(per), None) => CFStream::periodic(pre.unwrap_or_default(), per),
            (None, None, Some(t)) => CFStream::truncated(t),
            _ => Err(Error::Parse(format!(
                "cannot read a continued fraction from {s:?}"
            ))),
        }
    }
}

impl fmt::Display for CFStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |t: &[u64]| {
            format!(
                "[{}]",
                t.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
        };
        match self {
            CFStream::Finite(t) => f.write_str(&list(t)),
            CFStream::Truncated(t) => write!(f, "terms={}", list(t)),
            CFStream::Periodic { pre, per } if pre.is_empty() => write!(f, "per={}", list(per)),
            CFStream::Periodic { pre, per } => write!(f, "pre={};per={}", list(pre), list(per)),
        }
    }
}

/// A q-real known to a certified order: every coefficient below
/// `stabilized_upto` is final.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QReal {
    pub series: LaurentSeries,
    pub stabilized_upto: i64,
}

impl QReal {
    pub fn new(series: LaurentSeries) -> Self {
        let stabilized_upto = series.order();
        QReal {
            series,
            stabilized_upto,
        }
    }

    pub fn coeff(&self, k: i64) -> Option<num_bigint::BigInt> {
        self.series.coeff(k)
    }

    pub fn to_json(&self) -> Value {
        json!({ "series": series_to_json(&self.series), "stabilized_upto": self.stabilized_upto })
    }
}

impl fmt::Display for QReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.series)
    }
}

/// Taylor coefficients `kappa_0 .. kappa_{order-1}` of `[x]_q`.
///
/// A finite stream is expanded exactly. Otherwise `kappa_k` is certified
/// once three consecutive convergents agree on it and each has depth
/// greater than `k + 2`.
pub fn stabilize(x: &CFStream, order: usize) -> Result<QReal> {
    if order == 0 {
        return Err(Error::OutOfRange("order must be at least 1".into()));
    }
    if let CFStream::Finite(terms) = x {
        let v = QRational::new(&eval_regular_terms(terms)?)?;
        return Ok(QReal::new(series_expand(v.value(), order as i64)?));
    }
    let cap = match x {
        CFStream::Truncated(t) => t.len(),
        _ => order + EXTRA_DEPTH,
    };
    let convergents = (1..=cap).map(|depth| Ok((depth, eval_regular_terms(&x.prefix(depth))?)));
    stabilize_sequence(convergents, order)
}

/// Stabilization along any sequence of `(depth, rational)` approximations,
/// using the same certification rule as [`stabilize`].
pub fn stabilize_sequence<I>(seq: I, order: usize) -> Result<QReal>
where
    I: IntoIterator<Item = Result<(usize, Rational)>>,
{
    let order_i = order as i64;
    let mut window: Vec<(usize, LaurentSeries)> = Vec::with_capacity(3);
    let mut last_depth = 0;
    for item in seq {
        let (depth, r) = item?;
        last_depth = depth;
        let s = series_expand(QRational::new(&r)?.value(), order_i)?;
        window.push((depth, s));
        if window.len() > 3 {
            window.remove(0);
        }
        if window.len() == 3 && certified(&window, order) >= order {
            return Ok(QReal::new(window[2].1.clone()));
        }
    }
    Err(Error::StreamExhausted {
        depth: last_depth,
        order,
    })
}

/// Number of leading coefficients certified by a window of three series.
fn certified(window: &[(usize, LaurentSeries)], order: usize) -> usize {
    let min_depth = window.iter().map(|(d, _)| *d).min().unwrap_or(0);
    (0..order)
        .take_while(|&k| {
            let c = window[0].1.coeff(k as i64);
            min_depth > k + 2 && window.iter().all(|(_, s)| s.coeff(k as i64) == c)
        })
        .count()
}

/// `[x + k]_q` from `[x]_q`, via `[x + 1]_q = q [x]_q + 1` and
/// `[x - 1]_q = q^-1 ([x]_q - 1)`.
pub fn qreal_translate(v: &QReal, k: i64) -> QReal {
    let one = LaurentPoly::one();
    let mut s = v.series.clone();
    for _ in 0..k.max(0) {
        s = s.shift(1).add_laurent(&one);
    }
    for _ in 0..(-k).max(0) {
        s = s.add_laurent(&-&one).shift(-1);
    }
    QReal::new(s)
}
