use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` with arbitrary-precision integer
/// coefficients, stored in ascending exponent order.
///
/// The representation is always normalized: no trailing zero coefficients,
/// and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial (the `-inf` sentinel).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// If the polynomial is `c * q^k`, return `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, usize)> {
        let v = self.valuation()?;
        if v + 1 == self.coeffs.len() {
            Some((&self.coeffs[v], v))
        } else {
            None
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * q + bigint_to_f64(c))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divide by `q^k`; the caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        IntPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// gcd of the coefficients, sign-free; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `c`, which must divide each one.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// The primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// `q^shift * p(1/q)`; an ordinary polynomial whenever `shift >= deg p`.
    pub fn mirror(&self, shift: i64) -> super::LaurentPoly {
        match self.degree() {
            None => super::LaurentPoly::zero(),
            Some(d) => {
                let reversed: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
                super::LaurentPoly::new(shift - d as i64, reversed)
            }
        }
    }

    /// Coefficient sequence read back to front.
    pub fn reversed(&self) -> Self {
        let v = self.valuation().unwrap_or(0);
        IntPoly::new(self.coeffs[v..].iter().rev().cloned().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i])
    }

    /// Exact division `self / divisor` with an integer quotient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!(
                "({self}) / ({divisor}) leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Long division over the integers. Fails when a quotient coefficient
    /// would not be an integer.
    fn div_rem_integral(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let Some(db) = divisor.degree() else {
            return Err(Error::ZeroDenominator);
        };
        let Some(da) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if da < db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let lead = &divisor.coeffs[db];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "({self}) / ({divisor}): quotient coefficient of q^{k} is not an integer"
                )));
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qk * b;
            }
            quot[k] = qk;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lead = &b.coeffs[db];
        let mut rem = self.coeffs.clone();
        while rem.len() > db {
            let k = rem.len() - 1 - db;
            let top = rem.pop().unwrap();
            for c in rem.iter_mut() {
                *c *= lead;
            }
            if !top.is_zero() {
                for (i, bc) in b.coeffs[..db].iter().enumerate() {
                    rem[k + i] -= &top * bc;
                }
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Primitive gcd over `Z[q]` (hence also the gcd over `Q[q]` up to a
    /// unit), normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        // Powers of q are handled separately; they are the common case.
        let v = self.valuation().unwrap().min(other.valuation().unwrap());
        let a = self.unshift(self.valuation().unwrap());
        let b = other.unshift(other.valuation().unwrap());
        let core = if coprime_mod_p(&a, &b) {
            IntPoly::one()
        } else {
            primitive_prs_gcd(a.primitive_part(), b.primitive_part())
        };
        core.shift(v)
    }
}

/// Primitive polynomial remainder sequence.
fn primitive_prs_gcd(mut a: IntPoly, mut b: IntPoly) -> IntPoly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

const GCD_PRIME: u64 = 0x1fff_ffff_ffff_ffff; // 2^61 - 1

fn reduce_mod_p(p: &IntPoly) -> Vec<u64> {
    let m = BigInt::from(GCD_PRIME);
    let mut v: Vec<u64> = p
        .coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(&m);
            u64::try_from(r).expect("residue fits in u64")
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % GCD_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Certifies coprimality over `Q` by a gcd computation modulo a large prime.
///
/// If the prime does not divide a leading coefficient, the degree of the
/// modular gcd bounds the degree of the rational gcd from above, so a
/// constant modular gcd proves the polynomials coprime. A `false` answer is
/// inconclusive.
fn coprime_mod_p(a: &IntPoly, b: &IntPoly) -> bool {
    let mut x = reduce_mod_p(a);
    let mut y = reduce_mod_p(b);
    if x.len() != a.coeffs.len() || y.len() != b.coeffs.len() {
        return false;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let inv = pow_mod(*y.last().unwrap(), GCD_PRIME - 2);
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let factor = mul_mod(*x.last().unwrap(), inv);
            for (i, &yc) in y.iter().enumerate() {
                let sub = mul_mod(factor, yc);
                let xc = &mut x[shift + i];
                *xc = (*xc + GCD_PRIME - sub) % GCD_PRIME;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, 0, &self.coeffs)
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &IntPoly, b: &IntPoly, op: PolyOp) -> IntPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

pub fn poly_divexact(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    a.div_exact(b)
}
