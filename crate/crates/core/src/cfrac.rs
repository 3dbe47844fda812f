//! Regular and Hirzebruch–Jung continued fractions of positive rationals.
//!
//! The regular expansion `[a_1, ..., a_2m]` is always normalized to even
//! length: an odd-length Euclidean expansion ending in `a_n` is rewritten
//! as `[..., a_n - 1, 1]`. In particular `1/1 = [0, 1]` and
//! `n/1 = [n - 1, 1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number `r/s` with `s >= 1` and `gcd(r, s) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let s = s.into();
        if s.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(r.into(), s)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn add_int(&self, k: i64) -> Rational {
        Rational(&self.0 + BigRational::from_integer(k.into()))
    }

    pub fn neg(&self) -> Rational {
        Rational(-&self.0)
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.0.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Floor as an integer.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }
}

impl From<BigRational> for Rational {
    fn from(x: BigRational) -> Self {
        Rational(x)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `r/s` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((r, d)) => {
                let r: BigInt = r.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(r, d)
            }
            None => Ok(Rational::from_integer(
                s.parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

/// Regular continued fraction of even length, `a_1 >= 0`, `a_i >= 1` after.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularCF {
    terms: Vec<u64>,
}

/// Hirzebruch–Jung (minus-sign) continued fraction, `c_1 >= 1`, `c_j >= 2` after.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HJCF {
    terms: Vec<u64>,
}

impl RegularCF {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() || !terms.len().is_multiple_of(2) {
            return Err(Error::OutOfRange(format!(
                "regular continued fraction must have even length, got {terms:?}"
            )));
        }
        if terms[1..].contains(&0) {
            return Err(Error::OutOfRange(format!(
                "terms after the first must be >= 1: {terms:?}"
            )));
        }
        Ok(RegularCF { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn value(&self) -> Rational {
        eval_regular_terms(&self.terms).expect("validated terms never divide by zero")
    }
}

impl HJCF {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() || terms[0] == 0 || terms[1..].iter().any(|&c| c < 2) {
            return Err(Error::OutOfRange(format!(
                "Hirzebruch-Jung terms need c_1 >= 1 and c_j >= 2: {terms:?}"
            )));
        }
        Ok(HJCF { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn value(&self) -> Rational {
        eval_hj_terms(&self.terms).expect("validated terms never divide by zero")
    }
}

impl fmt::Display for RegularCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.terms))
    }
}

impl fmt::Display for HJCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}]]", join(&self.terms))
    }
}

fn join(terms: &[u64]) -> String {
    terms
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_terms(body: &str) -> Result<Vec<u64>> {
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad term {t:?}")))
        })
        .collect()
}

impl FromStr for RegularCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .filter(|b| !b.starts_with('['))
            .ok_or_else(|| Error::Parse(format!("expected [a1,...], got {s:?}")))?;
        RegularCF::new(parse_terms(body)?)
    }
}

impl FromStr for HJCF {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("[[")
            .and_then(|b| b.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("expected [[c1,...]], got {s:?}")))?;
        HJCF::new(parse_terms(body)?)
    }
}

fn require_positive(x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(x.to_string()))
    }
}

fn to_term(n: BigInt) -> u64 {
    n.to_u64()
        .expect("continued fraction term exceeds machine width")
}

/// Euclidean expansion `r/s = [a_1, ..., a_n]`, not length-normalized.
pub fn euclid_terms(x: &Rational) -> Vec<u64> {
    let (mut r, mut s) = (x.numer().clone(), x.denom().clone());
    let mut out = Vec::new();
    while !s.is_zero() {
        let (a, rem) = r.div_mod_floor(&s);
        out.push(to_term(a));
        r = s;
        s = rem;
    }
    out
}

pub fn cf_regular(x: &Rational) -> Result<RegularCF> {
    require_positive(x)?;
    let mut terms = euclid_terms(x);
    if terms.len() % 2 == 1 {
        let last = terms.last_mut().unwrap();
        *last -= 1;
        terms.push(1);
    }
    RegularCF::new(terms)
}

pub fn cf_hj(x: &Rational) -> Result<HJCF> {
    require_positive(x)?;
    let mut terms = Vec::new();
    let mut cur = x.clone();
    loop {
        let c = cur.ceil();
        let rest = Rational(BigRational::from_integer(c.clone()) - cur.as_big_rational());
        terms.push(to_term(c));
        if rest.is_zero() {
            break;
        }
        cur = rest.recip()?;
    }
    HJCF::new(terms)
}

/// `a_1 + 1/(a_2 + 1/(... + 1/a_n))`, evaluated bottom-up.
pub fn eval_regular_terms(terms: &[u64]) -> Result<Rational> {
    eval_terms(terms, BigInt::one())
}

/// `c_1 - 1/(c_2 - 1/(... - 1/c_k))`, evaluated bottom-up.
pub fn eval_hj_terms(terms: &[u64]) -> Result<Rational> {
    eval_terms(terms, -BigInt::one())
}

fn eval_terms(terms: &[u64], sign: BigInt) -> Result<Rational> {
    let Some((&last, rest)) = terms.split_last() else {
        return Err(Error::DivisionByZero("empty continued fraction".into()));
    };
    // value = num / den
    let (mut num, mut den) = (BigInt::from(last), BigInt::one());
    for &t in rest.iter().rev() {
        if num.is_zero() {
            return Err(Error::DivisionByZero(format!("{terms:?}")));
        }
        // t + sign * den / num
        let new_num = BigInt::from(t) * &num + &sign * &den;
        den = num;
        num = new_num;
    }
    Rational::new(num, den)
}

/// Prefix values `[a_1]`, `[a_1, a_2]`, ... of a regular continued fraction.
pub fn convergents(cf: &RegularCF, upto: usize) -> Result<Vec<Rational>> {
    if upto > cf.terms.len() {
        return Err(Error::OutOfRange(format!(
            "requested {upto} convergents of a {}-term expansion",
            cf.terms.len()
        )));
    }
    Ok(convergents_of(&cf.terms[..upto]))
}

/// Convergents of an arbitrary term sequence via the three-term recurrence.
pub fn convergents_of(terms: &[u64]) -> Vec<Rational> {
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    terms
        .iter()
        .map(|&a| {
            let a = BigInt::from(a);
            let h_next = &a * &h + &h_prev;
            let k_next = &a * &k + &k_prev;
            h_prev = std::mem::replace(&mut h, h_next);
            k_prev = std::mem::replace(&mut k, k_next);
            Rational::new(h.clone(), k.clone()).expect("convergent denominators are positive")
        })
        .collect()
}

/// Reduced positive rationals `r/s` with `1 <= r <= max_num`, `1 <= s <= max_den`,
/// in increasing order of value.
pub fn rationals_up_to(max_num: u64, max_den: u64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=max_num)
        .flat_map(|r| {
            (1..=max_den)
                .filter(move |&s| r.gcd(&s) == 1)
                .map(move |s| (r, s))
        })
        .map(|(r, s)| Rational::new(r, s).unwrap())
        .collect();
    out.sort();
    out
}
