//! Exact arithmetic kernel: integer polynomials, Laurent polynomials,
//! reduced rational functions and truncated Laurent series in `q`.
//!
//! Everything here is exact except [`roots_minmax_modulus`], the single
//! floating-point operation in the crate.

pub mod format;
mod laurent;
mod poly;
mod ratfunc;
mod roots;
mod series;

pub use laurent::LaurentPoly;
pub use poly::{poly_arith, poly_divexact, IntPoly, PolyOp};
pub use ratfunc::{rf_reduce, RationalFunc};
pub use roots::{certified_roots, roots_minmax_modulus, DEFAULT_TOL};
pub use series::{series_expand, LaurentSeries};

/// `q^shift * p(1/q)`.
pub fn poly_mirror(p: &IntPoly, shift: i64) -> LaurentPoly {
    p.mirror(shift)
}
