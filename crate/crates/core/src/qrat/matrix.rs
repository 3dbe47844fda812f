use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RationalFunc};

/// 2x2 matrix over Laurent polynomials in `q`, row-major `(a b; c d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

impl QMatrix {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        QMatrix { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    /// `R_q = (q 1; 0 1)`
    pub fn r_q() -> Self {
        Self::new(
            LaurentPoly::q_pow(1),
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    /// `L_q = (q 0; q 1)`
    pub fn l_q() -> Self {
        Self::new(
            LaurentPoly::q_pow(1),
            LaurentPoly::zero(),
            LaurentPoly::q_pow(1),
            LaurentPoly::one(),
        )
    }

    /// `S_q = (0 -q^-1; 1 0)`
    pub fn s_q() -> Self {
        Self::new(
            LaurentPoly::zero(),
            LaurentPoly::monomial(-BigInt::one(), -1),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        )
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        QMatrix {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    pub fn pow(&self, mut e: u64) -> QMatrix {
        let mut base = self.clone();
        let mut acc = QMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Inverse, defined when the determinant is a unit monomial `±q^k`.
    pub fn inverse(&self) -> Result<QMatrix> {
        let det = self.det();
        let (c, k) = det
            .as_monomial()
            .filter(|(c, _)| c.abs().is_one())
            .ok_or_else(|| {
                Error::Unsupported(format!("matrix determinant {det} is not a unit monomial"))
            })?;
        let inv = LaurentPoly::monomial(c.clone(), -k);
        Ok(QMatrix {
            a: &self.d * &inv,
            b: -(&self.b * &inv),
            c: -(&self.c * &inv),
            d: &self.a * &inv,
        })
    }

    /// Möbius action `v -> (a v + b) / (c v + d)`.
    pub fn apply(&self, v: &RationalFunc) -> Result<RationalFunc> {
        let n = LaurentPoly::from(v.num());
        let d = LaurentPoly::from(v.den());
        RationalFunc::from_laurent(
            &(&(&self.a * &n) + &(&self.b * &d)),
            &(&(&self.c * &n) + &(&self.d * &d)),
        )
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix{self}")
    }
}
