//! Orthonormal complex spherical harmonics with the Condon–Shortley phase.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Fully normalized associated Legendre function `P̄_l^m(x)`, `m ≥ 0`, such
/// that `Y_l^m(θ, φ) = P̄_l^m(cos θ) e^{imφ}`. Includes the `(-1)^m` phase.
pub fn assoc_legendre_normalized(l: usize, m: usize, x: f64) -> f64 {
    debug_assert!(m <= l);
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for k in 1..=m {
        let kf = k as f64;
        pmm *= -((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * s;
    }
    if l == m {
        return pmm;
    }
    let mf = m as f64;
    let mut p_prev = pmm;
    let mut p_cur = x * (2.0 * mf + 3.0).sqrt() * pmm;
    for ll in (m + 2)..=l {
        let lf = ll as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let lp = lf - 1.0;
        let b = ((lp * lp - mf * mf) / (4.0 * lp * lp - 1.0)).sqrt();
        let next = a * (x * p_cur - b * p_prev);
        p_prev = p_cur;
        p_cur = next;
    }
    p_cur
}

/// `Y_l^m(θ, φ)`, θ the polar angle.
pub fn sph_harm(l: usize, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    if m.unsigned_abs() as usize > l {
        return Err(Error::Domain(format!("|m| = {} exceeds l = {l}", m.abs())));
    }
    let am = m.unsigned_abs() as usize;
    let p = assoc_legendre_normalized(l, am, theta.cos());
    let y = Complex64::from_polar(p, am as f64 * phi);
    if m >= 0 {
        Ok(y)
    } else {
        // Y_l^{-m} = (-1)^m conj(Y_l^m)
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(y.conj() * sign)
    }
}
