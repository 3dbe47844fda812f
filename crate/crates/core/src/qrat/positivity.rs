use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::QRational;
use crate::cfrac::Rational;
use crate::error::{Error, Result};
use crate::exactalg::IntPoly;

/// `|r s' - r' s| = 1`.
pub fn farey_neighbors(a: &Rational, b: &Rational) -> bool {
    let d: BigInt = a.numer() * b.denom() - b.numer() * a.denom();
    d.abs().is_one()
}

/// `X = R S' - S R'` for `[a]_q = R/S` and `[b]_q = R'/S'` with `a > b > 0`.
pub fn x_polynomial(a: &QRational, b: &QRational) -> Result<IntPoly> {
    if !b.x().is_positive() {
        return Err(Error::NonPositive(b.x().to_string()));
    }
    if a.x() <= b.x() {
        return Err(Error::OrderViolation(a.x().to_string(), b.x().to_string()));
    }
    Ok(&(a.num() * b.den()) - &(a.den() * b.num()))
}

/// Weakly rising then weakly falling.
pub fn is_unimodal(coeffs: &[BigInt]) -> bool {
    let mut falling = false;
    for w in coeffs.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnimodalityReport {
    pub num_unimodal: bool,
    pub den_unimodal: bool,
}

impl UnimodalityReport {
    pub fn both(&self) -> bool {
        self.num_unimodal && self.den_unimodal
    }
}

pub fn unimodality_check(v: &QRational) -> UnimodalityReport {
    UnimodalityReport {
        num_unimodal: is_unimodal(v.num().coeffs()),
        den_unimodal: is_unimodal(v.den().coeffs()),
    }
}
