//! Jones polynomials of two-bridge knots from q-rationals.

use std::fmt;

use crate::cfrac::Rational;
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::qrat::QRational;

/// The two-bridge knot (or link) encoded by a positive fraction `r/s`.
///
/// No topological normalization is applied: which knot, mirror image or
/// framing a fraction denotes is left to the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBridgeKnot {
    fraction: Rational,
}

impl TwoBridgeKnot {
    pub fn new(fraction: Rational) -> Result<Self> {
        if !fraction.is_positive() {
            return Err(Error::NonPositive(fraction.to_string()));
        }
        Ok(TwoBridgeKnot { fraction })
    }

    pub fn fraction(&self) -> &Rational {
        &self.fraction
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({})", self.fraction)
    }
}

/// `q R(q) + (1 - q) S(q)` where `[r/s]_q = R/S`.
pub fn jones(k: &TwoBridgeKnot) -> Result<IntPoly> {
    let v = QRational::new(&k.fraction)?;
    Ok(jones_from(&v))
}

pub fn jones_from(v: &QRational) -> IntPoly {
    &v.num().shift(1) + &(&IntPoly::from_i64s(&[1, -1]) * v.den())
}
