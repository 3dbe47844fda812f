use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{LaurentPoly, RationalFunc};
use crate::error::{Error, Result};

/// Truncated Laurent series `sum_{min_exp <= k < order} coeffs[k - min_exp] q^k + O(q^order)`.
///
/// Every coefficient at exponent `>= order` is unknown, and no operation
/// reports one. Leading zero coefficients are stripped, so an all-zero
/// series has `min_exp == order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<BigInt>,
    order: i64,
}

impl LaurentSeries {
    /// Panics if `coeffs.len() != order - min_exp`.
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>, order: i64) -> Self {
        assert!(min_exp <= order, "min_exp {min_exp} exceeds order {order}");
        assert_eq!(
            coeffs.len() as i64,
            order - min_exp,
            "coefficient count must equal order - min_exp"
        );
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        let mut coeffs = coeffs;
        coeffs.drain(..lead);
        LaurentSeries {
            min_exp: min_exp + lead as i64,
            coeffs,
            order,
        }
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        let order = min_exp + coeffs.len() as i64;
        Self::new(
            min_exp,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            order,
        )
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            min_exp: order,
            coeffs: Vec::new(),
            order,
        }
    }

    /// Known part of a Laurent polynomial below `order`.
    pub fn from_laurent(p: &LaurentPoly, order: i64) -> Self {
        if p.is_zero() || p.min_exp() >= order {
            return Self::zero(order);
        }
        let coeffs = (p.min_exp()..order).map(|e| p.coeff(e)).collect();
        Self::new(p.min_exp(), coeffs, order)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^exp`, or `None` when `exp` is at or beyond the
    /// truncation order.
    pub fn coeff(&self, exp: i64) -> Option<BigInt> {
        if exp >= self.order {
            return None;
        }
        if exp < self.min_exp {
            return Some(BigInt::zero());
        }
        Some(self.coeffs[(exp - self.min_exp) as usize].clone())
    }

    /// Coefficients of `q^from .. q^(order-1)`, zero-padded below `min_exp`.
    pub fn coeffs_from(&self, from: i64) -> Vec<BigInt> {
        (from..self.order).map(|e| self.coeff(e).unwrap()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        if order <= self.min_exp {
            return Self::zero(order);
        }
        let keep = (order - self.min_exp) as usize;
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs[..keep].to_vec(),
            order,
        }
    }

    /// Multiply by `q^k`; the order moves with it.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, other: &LaurentSeries) -> Self {
        let order = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp).min(order);
        let coeffs = (lo..order)
            .map(|e| self.coeff(e).unwrap() + other.coeff(e).unwrap())
            .collect();
        Self::new(lo, coeffs, order)
    }

    pub fn sub(&self, other: &LaurentSeries) -> Self {
        self.add(&other.neg())
    }

    pub fn add_laurent(&self, p: &LaurentPoly) -> Self {
        self.add(&LaurentSeries::from_laurent(p, self.order))
    }

    /// Product; the result is known up to
    /// `min(order_a + min_exp_b, order_b + min_exp_a)`.
    pub fn mul(&self, other: &LaurentSeries) -> Self {
        let lo = self.min_exp + other.min_exp;
        let order = (self.order + other.min_exp).min(other.order + self.min_exp);
        if order <= lo {
            return Self::zero(order);
        }
        let n = (order - lo) as usize;
        let mut acc = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                acc[i + j] += a * b;
            }
        }
        Self::new(lo, acc, order)
    }

    pub fn to_laurent_poly(&self) -> LaurentPoly {
        LaurentPoly::new(self.min_exp, self.coeffs.clone())
    }
}

/// Laurent expansion of `f` at `q = 0`, exact below `order`.
///
/// Fails with `NotDivisible` when the expansion has non-integer
/// coefficients (the lowest nonzero denominator coefficient is not a unit
/// for the numerator at hand).
pub fn series_expand(f: &RationalFunc, order: i64) -> Result<LaurentSeries> {
    if f.is_zero() {
        return Ok(LaurentSeries::zero(order));
    }
    let den = f.den();
    let m = den.valuation().expect("nonzero denominator");
    let d = den.unshift(m);
    // Power series of num / d up to exponent order + m, then shift by -m.
    let terms = order + m as i64;
    if terms <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let terms = terms as usize;
    let d0 = &d.coeffs()[0];
    let mut out: Vec<BigInt> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = f.num().coeff(k);
        for (i, di) in d.coeffs().iter().enumerate().skip(1).take(k) {
            acc -= di * &out[k - i];
        }
        let (c, r) = acc.div_rem(d0);
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!(
                "expansion of {f} has a non-integer coefficient at q^{}",
                k as i64 - m as i64
            )));
        }
        out.push(c);
    }
    Ok(LaurentSeries::new(-(m as i64), out, order))
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_zero() {
            super::format::write_terms(f, self.min_exp, &self.coeffs)?;
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.order)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries({self})")
    }
}
