//! Hermite and generalized Laguerre polynomials with their normalization constants.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;

/// Largest polynomial degree accepted by the recurrences.
pub const MAX_DEGREE: usize = 200;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeCap { degree: n, cap: MAX_DEGREE });
    }
    Ok(())
}

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn hermite(n: usize, x: f64) -> Result<f64> {
    check_degree(n)?;
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Monomial coefficients (ascending) of `H_n`. They are integers and stay
/// exact in `f64` well past degree 20.
pub fn hermite_coeffs(n: usize) -> Result<Vec<f64>> {
    check_degree(n)?;
    let mut prev: Vec<f64> = Vec::new();
    let mut cur = vec![1.0];
    for k in 0..n {
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= 2.0 * k as f64 * c;
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Generalized Laguerre polynomial `L_u^{(α)}(x)`.
pub fn laguerre(u: usize, alpha: f64, x: f64) -> Result<f64> {
    check_degree(u)?;
    check_alpha(alpha)?;
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..u {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Monomial coefficients (ascending) of `L_u^{(α)}`.
pub fn laguerre_coeffs(u: usize, alpha: f64) -> Result<Vec<f64>> {
    check_degree(u)?;
    check_alpha(alpha)?;
    let mut prev: Vec<f64> = Vec::new();
    let mut cur = vec![1.0];
    for k in 0..u {
        let kf = k as f64;
        let mut next = vec![0.0; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i] += (2.0 * kf + 1.0 + alpha) * c;
            next[i + 1] -= c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= (kf + alpha) * c;
        }
        for c in next.iter_mut() {
            *c /= kf + 1.0;
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::Domain(format!("Laguerre parameter must exceed -1, got {alpha}")));
    }
    Ok(())
}

/// `ln n!`
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `ln Γ(k/2)` for a positive integer `k`.
pub fn ln_gamma_half(k: usize) -> f64 {
    assert!(k > 0, "Γ(0) is undefined");
    if k.is_multiple_of(2) {
        ln_factorial(k / 2 - 1)
    } else {
        // Γ(j + 1/2) = sqrt(pi) · Π_{i=1}^{j} (i - 1/2)
        let j = (k - 1) / 2;
        0.5 * PI.ln() + (1..=j).map(|i| (i as f64 - 0.5).ln()).sum::<f64>()
    }
}

/// `Γ(x)` for `x > 0`. Integer and half-integer arguments go through the
/// exact product form; everything else uses a Lanczos approximation.
pub fn gamma(x: f64) -> f64 {
    assert!(x > 0.0, "gamma is only implemented for positive arguments");
    let twice = 2.0 * x;
    if twice.fract() == 0.0 && twice < 400.0 {
        return ln_gamma_half(twice as usize).exp();
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// `A_n = (μω/πħ)^{1/4} (2ⁿ n!)^{-1/2}`, normalizing the Hermite function in
/// the physical coordinate.
pub fn hermite_norm_const(n: usize, params: &PhysicalParams) -> f64 {
    let ln_a = 0.25 * (params.mass * params.omega / (PI * params.hbar)).ln()
        - 0.5 * (n as f64 * std::f64::consts::LN_2 + ln_factorial(n));
    ln_a.exp()
}

/// `N_u = sqrt(2 u! / Γ(u + ℓ + 3/2))`, normalizing `ρ^ℓ e^{-ρ²/2} L_u^{(ℓ+1/2)}(ρ²)`
/// under the measure `ρ² dρ`.
pub fn laguerre_norm_const(u: usize, l: usize) -> f64 {
    let ln_n = 0.5 * (std::f64::consts::LN_2 + ln_factorial(u) - ln_gamma_half(2 * u + 2 * l + 3));
    ln_n.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_values() {
        assert_eq!(hermite(0, 0.37).unwrap(), 1.0);
        assert_eq!(hermite(2, 1.0).unwrap(), 2.0);
        assert_eq!(hermite(3, 0.0).unwrap(), 0.0);
        assert!(hermite(MAX_DEGREE + 1, 0.0).is_err());
    }

    #[test]
    fn hermite_coefficients_match_values() {
        assert_eq!(hermite_coeffs(2).unwrap(), vec![-2.0, 0.0, 4.0]);
        assert_eq!(hermite_coeffs(3).unwrap(), vec![0.0, -12.0, 0.0, 8.0]);
        let c = hermite_coeffs(9).unwrap();
        let x = 0.731;
        let horner = c.iter().rev().fold(0.0, |acc, ci| acc * x + ci);
        assert!((horner - hermite(9, x).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn laguerre_values() {
        assert_eq!(laguerre(0, 0.3, 2.0).unwrap(), 1.0);
        assert!((laguerre(1, 0.5, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((laguerre(2, 0.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(laguerre(1, -1.0, 0.0).is_err());
    }

    #[test]
    fn laguerre_series_oracle() {
        // L_u^α(x) = Σ_k (-1)^k C(u+α, u-k) x^k / k!
        fn series(u: usize, alpha: f64, x: f64) -> f64 {
            let binom = |top: f64, k: usize| (0..k).fold(1.0, |acc, i| acc * (top - i as f64) / (i + 1) as f64);
            (0..=u)
                .map(|k| {
                    let fact: f64 = (1..=k).map(|i| i as f64).product();
                    (-1f64).powi(k as i32) * binom(u as f64 + alpha, u - k) * x.powi(k as i32) / fact
                })
                .sum()
        }
        for u in 0..7 {
            for &alpha in &[0.5, 1.5, 3.5] {
                for &x in &[0.0, 0.4, 2.3] {
                    let r = laguerre(u, alpha, x).unwrap();
                    assert!((r - series(u, alpha, x)).abs() < 1e-12, "u={u} α={alpha} x={x}");
                    let c = laguerre_coeffs(u, alpha).unwrap();
                    let horner = c.iter().rev().fold(0.0, |acc, ci| acc * x + ci);
                    assert!((horner - r).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn norm_constants() {
        let nat = PhysicalParams::default();
        assert!((hermite_norm_const(0, &nat) - 0.7511255444649425).abs() < 1e-15);
        assert!((hermite_norm_const(1, &nat) - 0.7511255444649425 / 2f64.sqrt()).abs() < 1e-15);
        let p = PhysicalParams::new(2.0, 0.7, 1.3).unwrap();
        for n in 0..=20 {
            let a = hermite_norm_const(n, &p);
            let fact: f64 = (1..=n).map(|i| i as f64).product();
            let id = a * a * 2f64.powi(n as i32) * fact * (PI * p.hbar / (p.mass * p.omega)).sqrt();
            assert!((id - 1.0).abs() < 1e-13, "n = {n}");
        }
        let n00 = laguerre_norm_const(0, 0);
        assert!((n00 - (4.0 / PI.sqrt()).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(1.5) - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        // Γ(1/3) = 2.678938534707747...
        assert!((gamma(1.0 / 3.0) - 2.678_938_534_707_747_6).abs() < 1e-13);
        assert!((gamma(2.3) - 1.166_711_905_198_16).abs() < 1e-13);
    }

    #[test]
    fn ln_gamma_half_values() {
        assert!((ln_gamma_half(1) - 0.5 * PI.ln()).abs() < 1e-15);
        assert!((ln_gamma_half(3) - (PI.sqrt() / 2.0).ln()).abs() < 1e-15);
        assert!((ln_gamma_half(8) - 6f64.ln()).abs() < 1e-15);
    }
}
