//! Gaussian quadrature rules. Nodes come from the eigenvalues of the Jacobi
//! matrix (Golub–Welsch) and are then polished by Newton steps on the
//! orthonormal recurrence; weights are Christoffel numbers evaluated from the
//! same recurrence, which keeps the tiny outer Hermite weights relatively
//! accurate.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadratureKind {
    /// `∫ f(x) e^{-x²} dx` over the real line.
    GaussHermite,
    /// `∫ f(x) dx` over `[-1, 1]`.
    GaussLegendre,
    /// `∫ f(ρ) ρ² e^{-ρ²} dρ` over `[0, ∞)`.
    HalfLineGaussian,
    /// `∫ f(φ) dφ` over one period `[0, 2π)`.
    UniformPeriodic,
}

impl fmt::Display for QuadratureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadratureKind::GaussHermite => "gauss_hermite",
            QuadratureKind::GaussLegendre => "gauss_legendre",
            QuadratureKind::HalfLineGaussian => "half_line_gaussian",
            QuadratureKind::UniformPeriodic => "uniform_periodic",
        })
    }
}

impl FromStr for QuadratureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gauss_hermite" => Ok(QuadratureKind::GaussHermite),
            "gauss_legendre" => Ok(QuadratureKind::GaussLegendre),
            "half_line_gaussian" => Ok(QuadratureKind::HalfLineGaussian),
            "uniform_periodic" => Ok(QuadratureKind::UniformPeriodic),
            other => Err(Error::Domain(format!("unsupported quadrature kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `Σ w_i f(x_i)`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Highest polynomial degree integrated exactly against the rule's weight.
    pub fn exact_degree(&self) -> usize {
        match self.kind {
            QuadratureKind::UniformPeriodic => self.order() - 1,
            // the half-line rule is Gaussian in ρ², so exact for even degree ≤ 2(2n-1)
            QuadratureKind::HalfLineGaussian => 4 * self.order() - 1,
            _ => 2 * self.order() - 1,
        }
    }
}

pub fn make_rule(kind: QuadratureKind, order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Domain("quadrature order must be at least 1".into()));
    }
    let (nodes, weights) = match kind {
        QuadratureKind::GaussHermite => {
            let b: Vec<f64> = (1..=order).map(|k| (k as f64 / 2.0).sqrt()).collect();
            gauss_from_recurrence(&vec![0.0; order], &b, PI.sqrt())
        }
        QuadratureKind::GaussLegendre => {
            let b: Vec<f64> = (1..=order)
                .map(|k| {
                    let k = k as f64;
                    k / (4.0 * k * k - 1.0).sqrt()
                })
                .collect();
            gauss_from_recurrence(&vec![0.0; order], &b, 2.0)
        }
        QuadratureKind::HalfLineGaussian => {
            // substitute y = ρ²: ∫ f(ρ) ρ² e^{-ρ²} dρ = ½ ∫ f(√y) y^{1/2} e^{-y} dy
            let (y, w) = gauss_laguerre(order, 0.5)?;
            (y.iter().map(|v| v.sqrt()).collect(), w.iter().map(|v| 0.5 * v).collect())
        }
        QuadratureKind::UniformPeriodic => {
            let h = 2.0 * PI / order as f64;
            ((0..order).map(|k| k as f64 * h).collect(), vec![h; order])
        }
    };
    Ok(QuadratureRule { kind, nodes, weights })
}

/// Generalized Gauss–Laguerre nodes and weights for `∫₀^∞ f(y) y^α e^{-y} dy`.
pub fn gauss_laguerre(order: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if order == 0 {
        return Err(Error::Domain("quadrature order must be at least 1".into()));
    }
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::Domain(format!("Laguerre parameter must exceed -1, got {alpha}")));
    }
    let a: Vec<f64> = (0..order).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let b: Vec<f64> = (1..=order).map(|k| (k as f64 * (k as f64 + alpha)).sqrt()).collect();
    let mu0 = super::orthopoly::gamma(alpha + 1.0);
    Ok(gauss_from_recurrence(&a, &b, mu0))
}

/// Orthonormal recurrence `b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1}`,
/// `p_0 = 1/sqrt(μ0)`. Returns `(p_n(x), p_n'(x), Σ_{k<n} p_k(x)²)`.
fn orthonormal_eval(a: &[f64], b: &[f64], mu0: f64, x: f64) -> (f64, f64, f64) {
    let n = a.len();
    let (mut p_prev, mut p) = (0.0, 1.0 / mu0.sqrt());
    let (mut d_prev, mut d) = (0.0, 0.0);
    let mut sum_sq = 0.0;
    for k in 0..n {
        sum_sq += p * p;
        let b_prev = if k == 0 { 0.0 } else { b[k - 1] };
        let p_next = ((x - a[k]) * p - b_prev * p_prev) / b[k];
        let d_next = ((x - a[k]) * d + p - b_prev * d_prev) / b[k];
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d, sum_sq)
}

/// `a` holds the `n` diagonal recurrence coefficients, `b` holds `b_1..=b_n`.
fn gauss_from_recurrence(a: &[f64], b: &[f64], mu0: f64) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            a[i]
        } else if i + 1 == j {
            b[i]
        } else if j + 1 == i {
            b[j]
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    nodes.sort_by(|x, y| x.total_cmp(y));
    let weights = nodes
        .iter_mut()
        .map(|x| {
            for _ in 0..3 {
                let (p, d, _) = orthonormal_eval(a, b, mu0, *x);
                if d == 0.0 {
                    break;
                }
                let step = p / d;
                *x -= step;
                if step.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, _, sum_sq) = orthonormal_eval(a, b, mu0, *x);
            1.0 / sum_sq
        })
        .collect();
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gaussian_moment;

    #[test]
    fn hermite_rule_integrates_moments() {
        let rule = make_rule(QuadratureKind::GaussHermite, 64).unwrap();
        let q = rule.integrate(|x| x.powi(10));
        assert!((q - gaussian_moment(10)).abs() < 1e-12 * gaussian_moment(10).max(1.0));
        assert!(rule.weights.iter().all(|&w| w > 0.0));
        // symmetric nodes
        for (a, b) in rule.nodes.iter().zip(rule.nodes.iter().rev()) {
            assert!((a + b).abs() < 1e-13);
        }
    }

    #[test]
    fn hermite_rule_exact_to_degree_2k_minus_1() {
        for k in [1usize, 3, 8, 20] {
            let rule = make_rule(QuadratureKind::GaussHermite, k).unwrap();
            for deg in 0..=(2 * k - 1) {
                let q = rule.integrate(|x| x.powi(deg as i32));
                let m = gaussian_moment(deg);
                // odd moments vanish; measure against the size of Σ w|x|^deg
                let scale = rule.integrate(|x| x.abs().powi(deg as i32));
                assert!((q - m).abs() <= 1e-13 * scale.max(1.0), "k={k} deg={deg}: {q} vs {m}");
            }
        }
    }

    #[test]
    fn legendre_rule() {
        let rule = make_rule(QuadratureKind::GaussLegendre, 32).unwrap();
        assert!((rule.integrate(|x| x * x) - 2.0 / 3.0).abs() < 1e-13);
        assert!((rule.weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn periodic_rule() {
        let rule = make_rule(QuadratureKind::UniformPeriodic, 16).unwrap();
        let re = rule.integrate(|p| (3.0 * p).cos());
        let im = rule.integrate(|p| (3.0 * p).sin());
        assert!(re.abs() < 1e-13 && im.abs() < 1e-13);
        assert!((rule.integrate(|_| 1.0) - 2.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn half_line_rule() {
        let rule = make_rule(QuadratureKind::HalfLineGaussian, 20).unwrap();
        for k in 0..10 {
            let q = rule.integrate(|r| r.powi(2 * k as i32));
            let m = crate::specfun::radial_moment(k);
            assert!((q - m).abs() < 1e-12 * m, "k = {k}");
        }
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("gauss_hermite".parse::<QuadratureKind>().unwrap(), QuadratureKind::GaussHermite);
        assert!("lebedev".parse::<QuadratureKind>().is_err());
        assert!(make_rule(QuadratureKind::GaussLegendre, 0).is_err());
    }
}
