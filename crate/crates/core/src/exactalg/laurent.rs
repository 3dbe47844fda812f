use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

/// Laurent polynomial `sum_k coeffs[k] q^(min_exp + k)`.
///
/// Normalized so that the coefficients at both ends are nonzero; the zero
/// polynomial has no coefficients and `min_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.min_exp))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Self::new(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// The ordinary polynomial this Laurent polynomial equals, if it has no
    /// negative exponents.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        (self.min_exp >= 0).then(|| IntPoly::new(self.coeffs.clone()).shift(self.min_exp as usize))
    }

    /// Split as `q^k * p(q)` with `p(0) != 0` (or `p = 0`).
    pub fn split_power(&self) -> (i64, IntPoly) {
        if self.is_zero() {
            return (0, IntPoly::zero());
        }
        (self.min_exp, IntPoly::new(self.coeffs.clone()))
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        Self::new(0, p.into_coeffs())
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        Self::from_int_poly(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, self.min_exp, &self.coeffs)
    }
}

fn add_into(min_exp: i64, acc: &mut [BigInt], other: &LaurentPoly, negate: bool) {
    for (k, c) in other.coeffs.iter().enumerate() {
        let idx = (other.min_exp + k as i64 - min_exp) as usize;
        if negate {
            acc[idx] -= c;
        } else {
            acc[idx] += c;
        }
    }
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, negate: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
    add_into(lo, &mut acc, a, false);
    add_into(lo, &mut acc, b, negate);
    LaurentPoly::new(lo, acc)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
