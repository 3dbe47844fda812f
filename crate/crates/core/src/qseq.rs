//! q-Fibonacci and q-Pell polynomials, their mirrors and coefficient
//! triangles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cfrac::Rational;
use crate::error::{Error, Result};
use crate::exactalg::{rf_reduce, IntPoly, LaurentPoly};
use crate::qcore::{q_binomial, q_int_poly};
use crate::qrat::QRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Fibonacci,
    Pell,
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(SeqKind::Fibonacci),
            "pell" => Ok(SeqKind::Pell),
            _ => Err(Error::Parse(format!("unknown sequence kind {s:?}"))),
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::Fibonacci => "fibonacci",
            SeqKind::Pell => "pell",
        })
    }
}

impl SeqKind {
    /// Step multiplier `m` and tail exponent `e` in `X_{n+2} = m X_n - q^e X_{n-2}`.
    fn recurrence(self) -> (IntPoly, usize) {
        match self {
            SeqKind::Fibonacci => (q_int_poly(3), 2),
            SeqKind::Pell => (q_binomial(4, 2), 4),
        }
    }

    fn seeds(self) -> [IntPoly; 4] {
        match self {
            SeqKind::Fibonacci => [
                IntPoly::zero(),
                IntPoly::one(),
                IntPoly::one(),
                IntPoly::from_i64s(&[1, 1]),
            ],
            SeqKind::Pell => [
                IntPoly::zero(),
                IntPoly::one(),
                IntPoly::from_i64s(&[1, 1]),
                IntPoly::from_i64s(&[1, 1, 2, 1]),
            ],
        }
    }

    /// Shift `s(n)` in the mirror `q^s(n) X_n(1/q)`.
    fn mirror_shift(self, n: usize) -> i64 {
        match self {
            SeqKind::Fibonacci => n as i64 - 2,
            SeqKind::Pell => 2 * n as i64 - 3,
        }
    }

    /// Continued-fraction term repeated in `X_{n+1} / X_n`.
    fn cf_term(self) -> u64 {
        match self {
            SeqKind::Fibonacci => 1,
            SeqKind::Pell => 2,
        }
    }
}

/// `X_0, ..., X_n`.
pub fn q_sequence(kind: SeqKind, n: usize) -> Vec<IntPoly> {
    let (m, e) = kind.recurrence();
    let tail = IntPoly::q_pow(e);
    let mut out: Vec<IntPoly> = kind.seeds().into_iter().take(n + 1).collect();
    for k in 4..=n {
        let next = &(&m * &out[k - 2]) - &(&tail * &out[k - 4]);
        out.push(next);
    }
    out
}

pub fn q_fibonacci(n: usize) -> IntPoly {
    q_sequence(SeqKind::Fibonacci, n).pop().unwrap()
}

pub fn q_pell(n: usize) -> IntPoly {
    q_sequence(SeqKind::Pell, n).pop().unwrap()
}

/// `q^{n-2} F_n(1/q)` or `q^{2n-3} P_n(1/q)`.
pub fn mirror(kind: SeqKind, n: usize) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("mirror needs n >= 2, got {n}")));
    }
    let p = q_sequence(kind, n).pop().unwrap();
    Ok(p.mirror(kind.mirror_shift(n)))
}

/// Whether `[X_{n+1}/X_n]_q` equals mirror(`X_{n+1}`) / `X_n` with the
/// q-rational computed independently from the continued fraction.
pub fn quotient_identity_check(kind: SeqKind, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "quotient identity needs n >= 2, got {n}"
        )));
    }
    let seq = q_sequence(kind, n + 1);
    let num = mirror(kind, n + 1)?
        .to_int_poly()
        .ok_or_else(|| Error::InternalMismatch("mirror has negative exponents".into()))?;
    let den = &seq[n];
    let x = Rational::new(seq[n + 1].eval_at_one(), den.eval_at_one())?;
    let direct = QRational::new(&x)?;
    let quotient = rf_reduce(&num, den)?;
    Ok(&quotient == direct.value() && quotient.num() == &num && quotient.den() == den)
}

/// Classical values `X_n(1)`.
pub fn classical(kind: SeqKind, n: usize) -> BigInt {
    q_sequence(kind, n).pop().unwrap().eval_at_one()
}

/// The regular continued fraction `[t, t, ..., t]` (`n` terms) of `X_{n+1}/X_n`.
pub fn ratio_terms(kind: SeqKind, n: usize) -> Vec<u64> {
    vec![kind.cf_term(); n]
}

/// Coefficient rows in the classical table layout.
///
/// Fibonacci rows are `F_2, ..., F_{upto}` ascending (or their mirrors
/// with `mirrored`). Pell rows are `P_1, ..., P_{upto}` read from the top
/// degree down, which is how the classical table prints them; with
/// `mirrored` they are read ascending instead.
pub fn triangle(kind: SeqKind, upto: usize, mirrored: bool) -> Vec<Vec<BigInt>> {
    let seq = q_sequence(kind, upto);
    let first = match kind {
        SeqKind::Fibonacci => 2,
        SeqKind::Pell => 1,
    };
    let reverse = match kind {
        SeqKind::Fibonacci => mirrored,
        SeqKind::Pell => !mirrored,
    };
    seq.iter()
        .skip(first)
        .map(|p| {
            let mut c = p.coeffs().to_vec();
            if reverse {
                c.reverse();
            }
            c
        })
        .collect()
}
