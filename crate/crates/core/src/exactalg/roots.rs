//! Root moduli via Aberth–Ehrlich iteration with a posteriori inclusion disks.
//!
//! After convergence each approximation `z_i` gets the Weierstrass
//! correction `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`. When the
//! disks `|z - z_i| <= n |W_i|` are pairwise disjoint, each contains exactly
//! one root, so `n |W_i|` bounds the error of `|z_i|` as a root modulus.

use num_complex::Complex64;

use super::poly::bigint_to_f64;
use super::IntPoly;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_ITERS: usize = 500;

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `p`, each with a certified error radius.
pub fn certified_roots(p: &IntPoly, tol: f64) -> Result<Vec<(Complex64, f64)>> {
    let deg = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::OutOfRange("root finding needs degree >= 1".into())),
    };
    let coeffs: Vec<f64> = p.coeffs().iter().map(bigint_to_f64).collect();
    let lead = coeffs[deg];

    // Initial guesses on a circle whose radius is the Cauchy-type bound of
    // the geometric mean of the roots, rotated off the real axis.
    let radius = (coeffs[0].abs() / lead.abs())
        .powf(1.0 / deg as f64)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            Complex64::from_polar(
                radius,
                2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4,
            )
        })
        .collect();

    for _ in 0..MAX_ITERS {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let (pv, dpv) = horner(&coeffs, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    let radii: Vec<f64> = (0..deg)
        .map(|i| {
            let (pv, _) = horner(&coeffs, z[i]);
            let denom: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| z[i] - z[j])
                .product::<Complex64>()
                * lead;
            deg as f64 * (pv / denom).norm()
        })
        .collect();

    let disjoint =
        (0..deg).all(|i| (i + 1..deg).all(|j| (z[i] - z[j]).norm() > radii[i] + radii[j]));
    let worst = radii.iter().cloned().fold(0.0, f64::max);
    if !disjoint || !worst.is_finite() || worst > tol {
        return Err(Error::ToleranceNotReached {
            tol,
            achieved: if disjoint { worst } else { f64::INFINITY },
        });
    }
    Ok(z.into_iter().zip(radii).collect())
}

/// Moduli of the smallest and largest complex roots of `p`, each accurate
/// to `tol`.
pub fn roots_minmax_modulus(p: &IntPoly, tol: f64) -> Result<(f64, f64)> {
    let roots = certified_roots(p, tol)?;
    let moduli = roots.iter().map(|(z, _)| z.norm());
    let rmin = moduli.clone().fold(f64::INFINITY, f64::min);
    let rmax = moduli.fold(0.0, f64::max);
    Ok((rmin, rmax))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn linear() {
        let (lo, hi) = roots_minmax_modulus(&p(&[-1, 1]), DEFAULT_TOL).unwrap();
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn golden_radicand() {
        let b = &p(&[1, 3, 1]) * &p(&[1, -1, 1]);
        let (lo, hi) = roots_minmax_modulus(&b, DEFAULT_TOL).unwrap();
        let expect = (3.0 - 5f64.sqrt()) / 2.0;
        assert!((lo - expect).abs() < 1e-9);
        assert!((hi - 1.0 / expect).abs() < 1e-9);
    }

    #[test]
    fn silver_radicand() {
        let b = &p(&[1, 1, 4, 1, 1]) * &p(&[1, -1, 1]);
        let (lo, _) = roots_minmax_modulus(&b, DEFAULT_TOL).unwrap();
        let s2 = 2f64.sqrt();
        let expect = (1.0 + s2 - (2.0 * s2 - 1.0).sqrt()) / 2.0;
        assert!((lo - expect).abs() < 1e-9, "{lo} vs {expect}");
    }

    #[test]
    fn repeated_root_cannot_be_certified() {
        let sq = &p(&[-1, 1]) * &p(&[-1, 1]);
        assert!(matches!(
            roots_minmax_modulus(&(&sq * &sq), 1e-12),
            Err(Error::ToleranceNotReached { .. })
        ));
    }

    #[test]
    fn constant_is_rejected() {
        assert!(roots_minmax_modulus(&p(&[3]), DEFAULT_TOL).is_err());
    }
}
