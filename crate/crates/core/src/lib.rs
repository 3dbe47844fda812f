//! Exact computer algebra for q-deformed integers, rationals and quadratic
//! irrationals, Conway–Coxeter friezes and their q-analogues, and the
//! polynomial families and knot invariants built from them.
//!
//! The variable is always `q`. Polynomials have arbitrary-precision integer
//! coefficients; the only floating-point computation is the root-modulus
//! finder used for radii of convergence.

pub mod cfrac;
pub mod check;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod frieze;
pub mod knot;
pub mod qcore;
pub mod qrat;
pub mod qreal;
pub mod qseq;

pub use cfrac::{Rational, RegularCF, HJCF};
pub use error::{Error, Result};
pub use exactalg::{IntPoly, LaurentPoly, LaurentSeries, RationalFunc};
pub use frieze::{ClassicalFrieze, QFrieze, Quiddity, Triangulation};
pub use qrat::{QMatrix, QRational};
pub use qreal::{CFStream, QQuadraticForm, QReal, QuadraticIrrational};
