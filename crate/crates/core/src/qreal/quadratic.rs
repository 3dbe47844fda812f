use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::CFStream;
use crate::error::{Error, Result};
use crate::exactalg::format::poly_to_json;
use crate::exactalg::{roots_minmax_modulus, IntPoly, LaurentPoly, LaurentSeries, DEFAULT_TOL};
use crate::qcore::q_int_poly;
use crate::qrat::QMatrix;

/// Longest period searched for before declaring a bug.
const MAX_CF_STEPS: usize = 1 << 20;

/// `(a + sqrt(b)) / c` with `b > 0` not a perfect square and `c != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadraticIrrational {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if !b.is_positive() {
            return Err(Error::NotQuadratic(format!("radicand {b} is not positive")));
        }
        if b.sqrt().pow(2) == b {
            return Err(Error::NotQuadratic(format!(
                "radicand {b} is a perfect square"
            )));
        }
        if c.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(QuadraticIrrational { a, b, c })
    }

    pub fn to_f64(&self) -> f64 {
        let f = |n: &BigInt| n.to_f64().unwrap_or(f64::NAN);
        (f(&self.a) + f(&self.b).sqrt()) / f(&self.c)
    }

    /// `floor(x)`, exact.
    pub fn floor(&self) -> BigInt {
        let (p, q, d) = self.normalized();
        floor_quadratic(&p, &q, &d)
    }

    /// `(P + sqrt(D)) / Q` with `Q | D - P^2`.
    fn normalized(&self) -> (BigInt, BigInt, BigInt) {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        if (b - a * a).is_multiple_of(c) {
            (a.clone(), c.clone(), b.clone())
        } else {
            let m = c.abs();
            (a * &m, c * &m, b * c * c)
        }
    }
}

fn floor_quadratic(p: &BigInt, q: &BigInt, d: &BigInt) -> BigInt {
    let s = d.sqrt();
    if q.is_positive() {
        (p + &s).div_floor(q)
    } else {
        -(p + &s).div_floor(&-q) - BigInt::one()
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt{})/{}", self.a, self.b, self.c)
    }
}

/// `(a+sqrtb)/c`, `(a-sqrtb)/c`, `a+sqrtb`, `sqrtb`, with `sqrt(b)` also accepted.
impl FromStr for QuadraticIrrational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected (a+sqrtb)/c, got {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (num, den) = match s.rsplit_once('/') {
            Some((n, d)) => (n.to_string(), d.parse::<BigInt>().map_err(|_| bad())?),
            None => (s.clone(), BigInt::one()),
        };
        let num = num
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(&num);
        let (head, rad) = num.split_once("sqrt").ok_or_else(bad)?;
        let rad = rad
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(rad);
        let b: BigInt = rad.parse().map_err(|_| bad())?;
        let (a_text, sign) = match head.chars().last() {
            None => ("", 1),
            Some('+') => (&head[..head.len() - 1], 1),
            Some('-') => (&head[..head.len() - 1], -1),
            Some(_) => return Err(bad()),
        };
        let a: BigInt = if a_text.is_empty() {
            BigInt::zero()
        } else {
            a_text.parse().map_err(|_| bad())?
        };
        if sign == 1 {
            QuadraticIrrational::new(a, b, den)
        } else {
            QuadraticIrrational::new(-a, b, -den)
        }
    }
}

/// Eventually periodic regular continued fraction of a positive quadratic
/// irrational, as `(preperiod, period)`.
pub fn periodic_cf(x: &QuadraticIrrational) -> Result<(Vec<u64>, Vec<u64>)> {
    if x.to_f64() <= 0.0 {
        return Err(Error::NonPositive(x.to_string()));
    }
    let (mut p, mut q, d) = x.normalized();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut terms: Vec<u64> = Vec::new();
    for _ in 0..MAX_CF_STEPS {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let per = terms.split_off(start);
            return Ok((terms, per));
        }
        seen.insert((p.clone(), q.clone()), terms.len());
        let a = floor_quadratic(&p, &q, &d);
        terms.push(
            a.to_u64()
                .ok_or_else(|| Error::OutOfRange(format!("partial quotient {a}")))?,
        );
        p = &a * &q - &p;
        q = (&d - &p * &p) / &q;
    }
    Err(Error::NotQuadratic(format!("no period found for {x}")))
}

/// `[x]_q = (A + sqrt(B)) / C` with `B` monic and palindromic, `B(0) = 1`,
/// together with the fixed-point equation `e2 v^2 + e1 v + e0 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct QQuadraticForm {
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: IntPoly,
    /// `[e2, e1, e0]`.
    pub equation: [IntPoly; 3],
    /// Classical value at `q = 1`.
    pub value: f64,
}

impl QQuadraticForm {
    pub fn equation_string(&self) -> String {
        let [e2, e1, e0] = &self.equation;
        format!("({e2})*v^2 + ({e1})*v + ({e0}) = 0")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "A": poly_to_json(&self.a),
            "B": poly_to_json(&self.b),
            "C": poly_to_json(&self.c),
            "equation": self.equation.iter().map(poly_to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}) + sqrt({})) / ({})", self.a, self.b, self.c)
    }
}

/// `R^t0 L^t1 R^t2 ...`
fn alternating(terms: &[u64]) -> QMatrix {
    let (r, l) = (QMatrix::r_q(), QMatrix::l_q());
    terms
        .iter()
        .enumerate()
        .fold(QMatrix::identity(), |m, (i, &t)| {
            m.mul(&if i % 2 == 0 { r.pow(t) } else { l.pow(t) })
        })
}

/// Strip the common power of `q` and the common polynomial factor.
fn primitive_triple(ps: [LaurentPoly; 3]) -> [IntPoly; 3] {
    let lo = ps
        .iter()
        .filter(|p| !p.is_zero())
        .map(LaurentPoly::min_exp)
        .min()
        .unwrap_or(0);
    let polys: Vec<IntPoly> = ps
        .iter()
        .map(|p| p.shift(-lo).to_int_poly().expect("shifted to nonnegative"))
        .collect();
    let g = polys.iter().fold(IntPoly::zero(), |g, p| g.gcd(p));
    let mut out: Vec<IntPoly> = polys
        .iter()
        .map(|p| p.div_exact(&g).expect("gcd divides"))
        .collect();
    let content = out.iter().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
    if !content.is_zero() && !content.is_one() {
        out = out.iter().map(|p| p.div_scalar_exact(&content)).collect();
    }
    if out[0].leading_coeff().is_some_and(|c| c.is_negative()) {
        out = out.iter().map(|p| -p).collect();
    }
    [out[0].clone(), out[1].clone(), out[2].clone()]
}

/// Closed form of a positive quadratic irrational from its eventually
/// periodic continued fraction `pre, per, per, ...` with classical value
/// `value` (used only to choose the branch of the square root).
pub fn quadratic_closed_form_cf(pre: &[u64], per: &[u64], value: f64) -> Result<QQuadraticForm> {
    if per.is_empty() {
        return Err(Error::NotQuadratic("empty period".into()));
    }
    // The period must start on an R-block and have even length.
    let (mut pre, mut per) = (pre.to_vec(), per.to_vec());
    if pre.len() % 2 == 1 {
        pre.push(per[0]);
        per.rotate_left(1);
    }
    if per.len() % 2 == 1 {
        per.extend_from_within(..);
    }
    let m_pre = alternating(&pre);
    let n = m_pre.mul(&alternating(&per)).mul(&m_pre.inverse()?);
    let equation = primitive_triple([n.c.clone(), &n.d - &n.a, -&n.b]);
    if equation[0].is_zero() {
        return Err(Error::NotQuadratic(
            "fixed-point equation degenerates".into(),
        ));
    }
    solve(equation, value)
}

/// Turn `e2 v^2 + e1 v + e0 = 0` into `(A + sqrt(B)) / C`.
fn solve(equation: [IntPoly; 3], value: f64) -> Result<QQuadraticForm> {
    let [e2, e1, e0] = &equation;
    let disc = &(e1 * e1) - &(&(e2 * e0) * &IntPoly::constant(BigInt::from(4)));
    let v = disc
        .valuation()
        .ok_or_else(|| Error::NotQuadratic("zero discriminant".into()))?;
    if v % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "discriminant {disc} has an odd power of q"
        )));
    }
    let content = disc.content();
    let s = content.sqrt();
    if &s * &s != content {
        return Err(Error::Unsupported(format!(
            "discriminant content {content} is not a square"
        )));
    }
    let b = disc.unshift(v).div_scalar_exact(&content);
    let b = if b.coeff(0).is_negative() { -&b } else { b };
    if !b.coeff(0).is_one() || !b.leading_coeff().is_some_and(One::is_one) {
        return Err(Error::Unsupported(format!(
            "radicand {b} is not monic with constant term 1"
        )));
    }
    // v = (-e1 + sigma s q^k sqrt(B)) / (2 e2); pick sigma from the value at q = 1.
    let sqrt_b1 = b.eval_at_one().to_f64().unwrap_or(f64::NAN).sqrt();
    let f = |p: &IntPoly| p.eval_at_one().to_f64().unwrap_or(f64::NAN);
    let s_f = s.to_f64().unwrap_or(f64::NAN);
    let at_one = |sigma: f64| (-f(e1) + sigma * s_f * sqrt_b1) / (2.0 * f(e2));
    let sigma = if (at_one(1.0) - value).abs() <= (at_one(-1.0) - value).abs() {
        1
    } else {
        -1
    };
    let scale = IntPoly::monomial(&s * sigma, v / 2);
    let unsupported =
        || Error::Unsupported("closed form does not clear to integer polynomials".into());
    let a = (-e1).div_exact(&scale).map_err(|_| unsupported())?;
    let c = e2
        .scale(&BigInt::from(2))
        .div_exact(&scale)
        .map_err(|_| unsupported())?;
    Ok(QQuadraticForm {
        a,
        b,
        c,
        equation,
        value,
    })
}

/// Closed form of `[x]_q` for any quadratic irrational. Negative values are
/// reached through `[x]_q = q^-m ([x + m]_q - [m]_q)`.
pub fn quadratic_closed_form(x: &QuadraticIrrational) -> Result<QQuadraticForm> {
    let value = x.to_f64();
    if value > 0.0 {
        let (pre, per) = periodic_cf(x)?;
        return quadratic_closed_form_cf(&pre, &per, value);
    }
    let m = -x.floor();
    let shifted = QuadraticIrrational::new(&x.a + &m * &x.c, x.b.clone(), x.c.clone())?;
    let pos = quadratic_closed_form(&shifted)?;
    let m = m
        .to_usize()
        .ok_or_else(|| Error::OutOfRange(format!("shift {m} is too large")))?;
    let a = &pos.a - &(&pos.c * &q_int_poly(m));
    let c = pos.c.shift(m);
    // (C v - A)^2 = B
    let a_l = LaurentPoly::from(&a);
    let c_l = LaurentPoly::from(&c);
    let equation = primitive_triple([
        &c_l * &c_l,
        -(&(&a_l * &c_l) * &LaurentPoly::from_i64s(0, &[2])),
        &(&a_l * &a_l) - &LaurentPoly::from(&pos.b),
    ]);
    Ok(QQuadraticForm {
        a,
        b: pos.b,
        c,
        equation,
        value,
    })
}

/// Closed form for an eventually periodic stream.
pub fn stream_closed_form(x: &CFStream) -> Result<QQuadraticForm> {
    match x {
        CFStream::Periodic { pre, per } => {
            let value =
                crate::cfrac::eval_regular_terms(&x.prefix(pre.len() + 40 * per.len()))?.to_f64();
            quadratic_closed_form_cf(pre, per, value)
        }
        _ => Err(Error::NotQuadratic(format!(
            "{x} is not eventually periodic"
        ))),
    }
}

/// Power series of `sqrt(B)` with `sqrt(B)(0) = 1`, `n` terms.
fn sqrt_series(b: &IntPoly, n: usize) -> Vec<BigRational> {
    let two = BigRational::from_integer(2.into());
    let mut s: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            s.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::from_integer(b.coeff(k));
        for i in 1..k {
            acc -= &s[i] * &s[k - i];
        }
        s.push(acc / &two);
    }
    s
}

/// Laurent expansion of `(A + sqrt(B)) / C` below `order`; every
/// coefficient must come out integral.
pub fn closed_form_series(f: &QQuadraticForm, order: i64) -> Result<LaurentSeries> {
    let v = f.c.valuation().ok_or(Error::ZeroDenominator)? as i64;
    let n = order + v;
    if n <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let n = n as usize;
    let root = sqrt_series(&f.b, n);
    let num: Vec<BigRational> = (0..n)
        .map(|k| BigRational::from_integer(f.a.coeff(k)) + &root[k])
        .collect();
    let c = f.c.unshift(v as usize);
    let c0 = BigRational::from_integer(c.coeff(0));
    let mut out: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num[k].clone();
        for i in 1..=k.min(c.degree().unwrap_or(0)) {
            acc -= BigRational::from_integer(c.coeff(i)) * &out[k - i];
        }
        out.push(acc / &c0);
    }
    let coeffs = out
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            if r.is_integer() {
                Ok(r.to_integer())
            } else {
                Err(Error::NotDivisible(format!(
                    "closed form has coefficient {r} at q^{}",
                    k as i64 - v
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentSeries::new(-v, coeffs, order))
}

/// Smallest and largest root moduli of `B`; the Taylor series of `[x]_q`
/// converges in the disc of the smaller one.
pub fn radius_of_convergence(f: &QQuadraticForm) -> Result<(f64, f64)> {
    roots_minmax_modulus(&f.b, DEFAULT_TOL)
}
