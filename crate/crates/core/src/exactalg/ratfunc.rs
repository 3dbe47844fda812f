use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPoly, LaurentPoly};
use crate::error::{Error, Result};

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit over `Q`, the combined integer
/// content of numerator and denominator is 1, and the denominator has a
/// positive leading coefficient. Two equal rational functions therefore
/// have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        rf_reduce(&num, &den)
    }

    pub fn from_poly(p: IntPoly) -> Self {
        // Already canonical: denominator 1 and any content stays in num.
        RationalFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// The quotient `num / den` of two Laurent polynomials, cleared of
    /// negative exponents.
    pub fn from_laurent(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (kn, pn) = num.split_power();
        let (kd, pd) = den.split_power();
        let k = kn - kd;
        let (n, d) = if k >= 0 {
            (pn.shift(k as usize), pd)
        } else {
            (pn, pd.shift((-k) as usize))
        };
        rf_reduce(&n, &d)
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `q = 1`, if the denominator does not vanish there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_at_one();
        (!d.is_zero()).then(|| BigRational::new(self.num.eval_at_one(), d))
    }

    pub fn add(&self, other: &RationalFunc) -> RationalFunc {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        rf_reduce(&num, &(&self.den * &other.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunc) -> RationalFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunc) -> RationalFunc {
        rf_reduce(&(&self.num * &other.num), &(&self.den * &other.den))
            .expect("nonzero denominators")
    }

    pub fn neg(&self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RationalFunc> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        rf_reduce(&self.den, &self.num)
    }

    pub fn div(&self, other: &RationalFunc) -> Result<RationalFunc> {
        Ok(self.mul(&other.recip()?))
    }

    /// Multiply by `q^k`, `k` possibly negative.
    pub fn mul_q_pow(&self, k: i64) -> RationalFunc {
        let (n, d) = if k >= 0 {
            (self.num.shift(k as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift((-k) as usize))
        };
        rf_reduce(&n, &d).expect("nonzero denominator")
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_variable(&self) -> RationalFunc {
        let n = LaurentPoly::from(&self.num).invert_variable();
        let d = LaurentPoly::from(&self.den).invert_variable();
        Self::from_laurent(&n, &d).expect("nonzero denominator")
    }
}

/// Reduce `num / den` to the canonical representative.
pub fn rf_reduce(num: &IntPoly, den: &IntPoly) -> Result<RationalFunc> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFunc::zero());
    }
    let g = num.gcd(den);
    let (mut n, mut d) = if g.degree() == Some(0) {
        (num.clone(), den.clone())
    } else {
        (num.div_exact(&g)?, den.div_exact(&g)?)
    };
    let mut c = n.content().gcd(&d.content());
    if d.leading_coeff().is_some_and(Signed::is_negative) {
        c = -c;
    }
    if c != BigInt::from(1) {
        n = n.div_scalar_exact(&c);
        d = d.div_scalar_exact(&c);
    }
    Ok(RationalFunc { num: n, den: d })
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn cancels_common_factor() {
        let r = rf_reduce(&p(&[0, 1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[0, 1]));
        assert_eq!(r.den(), &p(&[1]));
    }

    #[test]
    fn coprime_input_is_unchanged() {
        let r = rf_reduce(&p(&[1, 2, 1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[1, 2, 1, 1]));
        assert_eq!(r.den(), &p(&[1, 1]));
    }

    #[test]
    fn zero_and_errors() {
        let z = rf_reduce(&IntPoly::zero(), &p(&[1, 1])).unwrap();
        assert_eq!(z, RationalFunc::zero());
        assert_eq!(z.den(), &p(&[1]));
        assert_eq!(
            rf_reduce(&p(&[1]), &IntPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn canonical_sign_and_content() {
        let r = rf_reduce(&p(&[2, 2]), &p(&[-4])).unwrap();
        assert_eq!(r.num(), &p(&[-1, -1]));
        assert_eq!(r.den(), &p(&[2]));
    }

    #[test]
    fn laurent_clearing() {
        // -q^-2 - q^-1 = -(1 + q) / q^2
        let r =
            RationalFunc::from_laurent(&LaurentPoly::from_i64s(-2, &[-1, -1]), &LaurentPoly::one())
                .unwrap();
        assert_eq!(r.num(), &p(&[-1, -1]));
        assert_eq!(r.den(), &p(&[0, 0, 1]));
    }

    #[test]
    fn variable_inversion_of_half() {
        // q/(1+q) at 1/q is 1/(1+q)
        let r = rf_reduce(&p(&[0, 1]), &p(&[1, 1]))
            .unwrap()
            .invert_variable();
        assert_eq!(r, rf_reduce(&p(&[1]), &p(&[1, 1])).unwrap());
    }
}
