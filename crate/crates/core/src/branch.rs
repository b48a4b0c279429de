//! The single branch convention used everywhere.
//!
//! For z in the upper half plane, z/i lies in the right half plane, and all
//! powers (z/i)^k are taken with the branch of log that is real on the
//! positive axis. Every module computes its half-integral (and general real)
//! power factors through this routine so the convention cannot drift.

use crate::scalar::Real;
use num_complex::Complex;

/// log(w) for Re(w) > 0, principal branch (real on the positive axis).
///
/// Panics in debug builds if w is not in the open right half plane.
pub fn log_right_half_plane<R: Real>(w: Complex<R>) -> Complex<R> {
    debug_assert!(
        w.re > R::zero() || (w.re == R::zero() && w.im != R::zero()),
        "argument {w} not in the right half plane"
    );
    Complex::new(w.norm().ln(), w.im.atan2(w.re))
}

/// (z/i)^k for z with Im(z) > 0 and real exponent k.
pub fn z_over_i_pow<R: Real>(z: Complex<R>, k: R) -> Complex<R> {
    // z/i = -i*z = im(z) - i*re(z)
    let w = Complex::new(z.im, -z.re);
    (log_right_half_plane(w) * k).exp()
}

/// (w)^k for w in the right half plane and real exponent k.
pub fn rhp_pow<R: Real>(w: Complex<R>, k: R) -> Complex<R> {
    (log_right_half_plane(w) * k).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_complex::Complex64;

    #[test]
    fn power_of_i_is_one() {
        let z = Complex64::new(0.0, 1.0);
        let p = z_over_i_pow(z, 0.5);
        assert_relative_eq!(p.re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(p.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn square_root_of_2i() {
        // (2i/i)^(-1/2) = 2^(-1/2)
        let z = Complex64::new(0.0, 2.0);
        let p = z_over_i_pow(z, -0.5);
        assert_relative_eq!(p.re, 0.5f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(p.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn branch_is_continuous_across_positive_axis() {
        // values just above and below the positive real axis of w agree
        let wa = Complex64::new(2.0, 1e-12);
        let wb = Complex64::new(2.0, -1e-12);
        let pa = rhp_pow(wa, 0.5);
        let pb = rhp_pow(wb, 0.5);
        assert!((pa - pb).norm() < 1e-10);
    }

    #[test]
    fn mu_inversion_identity() {
        // (z/i)^k * ((-1/z)/i)^k = 1 for any z in H
        let z = Complex64::new(0.7, 1.3);
        let k = 2.5;
        let a = z_over_i_pow(z, k);
        let b = z_over_i_pow(-z.inv(), k);
        assert_relative_eq!((a * b).re, 1.0, epsilon = 1e-12);
        assert_relative_eq!((a * b).im, 0.0, epsilon = 1e-12);
    }
}
