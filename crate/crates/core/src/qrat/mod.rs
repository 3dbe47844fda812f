//! q-deformed rationals: continued-fraction evaluations, the matrix
//! presentation, the PSL(2,Z) action, the weighted Stern–Brocot tree and
//! total positivity.

mod matrix;
mod positivity;
mod stern_brocot;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use crate::cfrac::{cf_hj, Rational, RegularCF, HJCF};
use crate::error::{Error, Result};
use crate::exactalg::format::poly_to_json;
use crate::exactalg::{LaurentPoly, RationalFunc};
use crate::qcore::{q_int, q_int_inverse};

pub use matrix::QMatrix;
pub use positivity::{
    farey_neighbors, is_unimodal, unimodality_check, x_polynomial, UnimodalityReport,
};
pub use stern_brocot::{stern_brocot_enumerate, SternBrocotNode};

/// A rational number together with its q-deformation `R(q)/S(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QRational {
    x: Rational,
    value: RationalFunc,
}

/// Which continued-fraction route to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfForm {
    Regular,
    HJ,
    Matrix,
}

impl QRational {
    /// The q-deformation of any rational number.
    pub fn new(x: &Rational) -> Result<Self> {
        if x.is_positive() {
            return q_rational_hj(&cf_hj(x)?);
        }
        // Translate a positive representative back down.
        let m = -x.floor() + BigInt::one();
        let m = m
            .to_i64()
            .ok_or_else(|| Error::OutOfRange(format!("{x} is too large in magnitude")))?;
        let pos = Self::new(&x.add_int(m))?;
        Ok(psl2_translate(&pos, -m))
    }

    pub fn with_form(x: &Rational, form: CfForm) -> Result<Self> {
        if !x.is_positive() {
            return Self::new(x);
        }
        match form {
            CfForm::Regular => q_rational_regular(&crate::cfrac::cf_regular(x)?),
            CfForm::HJ => q_rational_hj(&cf_hj(x)?),
            CfForm::Matrix => Ok(q_rational_matrix(&crate::cfrac::cf_regular(x)?)?.1),
        }
    }

    pub(crate) fn from_parts(x: Rational, value: RationalFunc) -> Self {
        QRational { x, value }
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn value(&self) -> &RationalFunc {
        &self.value
    }

    pub fn num(&self) -> &crate::exactalg::IntPoly {
        self.value.num()
    }

    pub fn den(&self) -> &crate::exactalg::IntPoly {
        self.value.den()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "x": self.x.to_string(),
            "num": poly_to_json(self.num()),
            "den": poly_to_json(self.den()),
        })
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_q = {}", self.x, self.value)
    }
}

/// A fraction of Laurent polynomials, kept uncleared during bottom-up folds.
struct Frac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Frac {
    /// `head + weight / self`
    fn fold(self, head: &LaurentPoly, weight: &LaurentPoly) -> Result<Frac> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero(
                "continued fraction tail vanishes".into(),
            ));
        }
        Ok(Frac {
            num: &(head * &self.num) + &(weight * &self.den),
            den: self.num,
        })
    }

    fn finish(self, x: Rational) -> Result<QRational> {
        if self.den.is_zero() {
            return Err(Error::DivisionByZero(
                "continued fraction denominator vanishes".into(),
            ));
        }
        Ok(QRational::from_parts(
            x,
            RationalFunc::from_laurent(&self.num, &self.den)?,
        ))
    }
}

/// Regular-CF deformation: odd positions use `[a]_q` with weight `q^a`,
/// even positions use `[a]_{1/q}` with weight `q^-a`.
pub fn q_rational_regular(cf: &RegularCF) -> Result<QRational> {
    q_regular_terms(cf.terms())
}

pub(crate) fn q_regular_terms(terms: &[u64]) -> Result<QRational> {
    let x = crate::cfrac::eval_regular_terms(terms)?;
    let head = |i: usize| -> (LaurentPoly, LaurentPoly) {
        let a = terms[i];
        if i.is_multiple_of(2) {
            (q_int(a as i64).value, LaurentPoly::q_pow(a as i64))
        } else {
            (q_int_inverse(a as usize), LaurentPoly::q_pow(-(a as i64)))
        }
    };
    let n = terms.len();
    let mut t = Frac {
        num: head(n - 1).0,
        den: LaurentPoly::one(),
    };
    for i in (0..n - 1).rev() {
        let (h, w) = head(i);
        t = t.fold(&h, &w)?;
    }
    t.finish(x)
}

/// Hirzebruch–Jung deformation `[c1]_q - q^(c1-1) / ([c2]_q - q^(c2-1) / ...)`.
pub fn q_rational_hj(cf: &HJCF) -> Result<QRational> {
    q_hj_terms(cf.terms())
}

pub(crate) fn q_hj_terms(terms: &[u64]) -> Result<QRational> {
    let x = crate::cfrac::eval_hj_terms(terms)?;
    let n = terms.len();
    let mut t = Frac {
        num: q_int(terms[n - 1] as i64).value,
        den: LaurentPoly::one(),
    };
    for &c in terms[..n - 1].iter().rev() {
        let w = LaurentPoly::monomial(-BigInt::one(), c as i64 - 1);
        t = t.fold(&q_int(c as i64).value, &w)?;
    }
    t.finish(x)
}

/// `R^a1 L^a2 ... R^a(2m-1) L^a(2m)`, whose first column is `(qR, qS)`.
pub fn regular_matrix(cf: &RegularCF) -> QMatrix {
    let r = QMatrix::r_q();
    let l = QMatrix::l_q();
    cf.terms()
        .iter()
        .enumerate()
        .fold(QMatrix::identity(), |m, (i, &a)| {
            m.mul(&if i % 2 == 0 { r.pow(a) } else { l.pow(a) })
        })
}

/// `R^c1 S R^c2 S ... R^ck S`, whose first column is `(R, S)`.
pub fn hj_matrix(cf: &HJCF) -> QMatrix {
    hj_matrix_terms(cf.terms())
}

pub(crate) fn hj_matrix_terms(terms: &[u64]) -> QMatrix {
    let r = QMatrix::r_q();
    let s = QMatrix::s_q();
    terms
        .iter()
        .fold(QMatrix::identity(), |m, &c| m.mul(&r.pow(c)).mul(&s))
}

/// Matrix route: the product of generators and the q-rational read off it.
pub fn q_rational_matrix(cf: &RegularCF) -> Result<(QMatrix, QRational)> {
    let m = regular_matrix(cf);
    let value = RationalFunc::from_laurent(&m.a.shift(-1), &m.c.shift(-1))?;
    Ok((m, QRational::from_parts(cf.value(), value)))
}

/// `[x + k]_q = q^k [x]_q + [k]_q`.
pub fn psl2_translate(v: &QRational, k: i64) -> QRational {
    let n = LaurentPoly::from(v.num());
    let d = LaurentPoly::from(v.den());
    let num = &n.shift(k) + &(&q_int(k).value * &d);
    let value = RationalFunc::from_laurent(&num, &d).expect("denominator is nonzero");
    QRational::from_parts(v.x.add_int(k), value)
}

/// `[-1/x]_q = -1 / (q [x]_q)`.
pub fn psl2_neg_inv(v: &QRational) -> Result<QRational> {
    if v.x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let value = v.value.mul_q_pow(1).recip()?.neg();
    Ok(QRational::from_parts(v.x.recip()?.neg(), value))
}

/// `[-x]_q = -q^-1 [x]_{1/q}`.
pub fn psl2_negate(v: &QRational) -> QRational {
    let value = v.value.invert_variable().mul_q_pow(-1).neg();
    QRational::from_parts(v.x.neg(), value)
}
