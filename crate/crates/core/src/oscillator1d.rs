//! The one-dimensional quaternionic oscillator `Ψ_nm = cos θ ψ_n + sin θ ψ̄_m j`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gram::{parallelism_table, tabulate, GramMatrix};
use crate::quaternion::{Quaternion, PARALLEL_TOL};
use crate::specfun::{hermite_coeffs, hermite_norm_const, ln_factorial};
use crate::wavestate::{inner, Mode, OperatorExpr, PhysicalParams, Poly, Slot, WaveState};

/// `(cos θ, sin θ)`, with exact zeros and units when `θ` is the double
/// nearest a multiple of `π/2`.
pub fn polarization(theta: f64) -> (f64, f64) {
    let k = (theta / FRAC_PI_2).round();
    if k.is_finite() && (theta - k * FRAC_PI_2).abs() <= 4.0 * f64::EPSILON * theta.abs().max(1.0) {
        return match (k as i64).rem_euclid(4) {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
    }
    let (s, c) = theta.sin_cos();
    (c, s)
}

/// Quantum numbers `(n, m)` and polarization angle `θ` (radians) of a basis element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QPair {
    pub n: usize,
    pub m: usize,
    pub theta: f64,
}

impl QPair {
    pub fn new(n: usize, m: usize, theta: f64) -> Self {
        QPair { n, m, theta }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.theta.is_finite() {
            return Err(Error::Validation(format!("theta must be finite, got {}", self.theta)));
        }
        Ok(())
    }
}

/// `E_n = (n + ½)ħω`.
pub fn level_energy(n: usize, params: &PhysicalParams) -> f64 {
    (n as f64 + 0.5) * params.quantum()
}

/// Real Hermite polynomial `H_n` as a mode polynomial.
pub(crate) fn hermite_poly(n: usize) -> Poly {
    Poly::from_real(&hermite_coeffs(n).expect("degree within cap"))
}

/// Complex oscillator eigenfunction `ψ_n = A_n H_n(X) e^{-X²/2} e^{-iE_n t/ħ}`.
pub fn psi_n(n: usize, params: &PhysicalParams) -> WaveState {
    let mode = Mode::new(
        Slot::Z0,
        Complex64::new(hermite_norm_const(n, params), 0.0),
        vec![hermite_poly(n)],
        -level_energy(n, params) / params.hbar,
    );
    WaveState::from_modes(1, *params, vec![mode]).expect("valid mode")
}

/// `Ψ_nm = cos θ ψ_n + sin θ ψ̄_m j`. The `j` component carries the conjugate
/// phase `e^{+iE_m t/ħ}`; its spatial part is real and unchanged.
pub fn psi_nm(q: &QPair, params: &PhysicalParams) -> WaveState {
    let (c, s) = polarization(q.theta);
    let modes = vec![
        Mode::new(
            Slot::Z0,
            Complex64::new(c * hermite_norm_const(q.n, params), 0.0),
            vec![hermite_poly(q.n)],
            -level_energy(q.n, params) / params.hbar,
        ),
        Mode::new(
            Slot::Z1,
            Complex64::new(s * hermite_norm_const(q.m, params), 0.0),
            vec![hermite_poly(q.m)],
            level_energy(q.m, params) / params.hbar,
        ),
    ];
    WaveState::from_modes(1, *params, modes).expect("valid modes")
}

/// `E_nm = (n cos²θ + m sin²θ + ½)ħω`.
pub fn energy_nm(q: &QPair, params: &PhysicalParams) -> f64 {
    let (c, s) = polarization(q.theta);
    (q.n as f64 * c * c + q.m as f64 * s * s + 0.5) * params.quantum()
}

/// The same energy written as a correction to the complex level:
/// `(n + ½ + (m - n) sin²θ)ħω`.
pub fn energy_nm_correction_form(q: &QPair, params: &PhysicalParams) -> f64 {
    let s = polarization(q.theta).1;
    (q.n as f64 + 0.5 + (q.m as f64 - q.n as f64) * s * s) * params.quantum()
}

/// Closed form `<Ψ_a, Ψ_b> = cos θ_a cos θ_b δ_nn' + sin θ_a sin θ_b δ_mm'`.
pub fn gram_closed_form_entry(a: &QPair, b: &QPair) -> f64 {
    let mut v = 0.0;
    if a.n == b.n {
        v += polarization(a.theta).0 * polarization(b.theta).0;
    }
    if a.m == b.m {
        v += polarization(a.theta).1 * polarization(b.theta).1;
    }
    v
}

/// Dimensionless points at which basis elements are tested for parallelism.
pub const PARALLEL_SAMPLE_POINTS: [f64; 5] = [-1.37, -0.52, 0.18, 0.91, 2.04];

/// Gram matrix of `Ψ_nm` states at time `t`, with the closed form and a
/// parallelism table.
///
/// Equal angles alone do not make the matrix diagonal: two elements sharing
/// `n` (or `m`) overlap by `cos²θ` (or `sin²θ`). The identity is recovered
/// when the index pairs are disjoint.
pub fn gram(pairs: &[QPair], t: f64, params: &PhysicalParams) -> Result<GramMatrix<QPair>> {
    for q in pairs {
        q.validate()?;
    }
    let states: Vec<WaveState> = pairs.iter().map(|q| psi_nm(q, params)).collect();
    let entries = tabulate(pairs.len(), |i, j| inner(&states[i], &states[j], t))?;
    let closed = tabulate::<Error>(pairs.len(), |i, j| Ok(gram_closed_form_entry(&pairs[i], &pairs[j])))?;
    let samples: Vec<Vec<Quaternion>> = states
        .iter()
        .map(|s| PARALLEL_SAMPLE_POINTS.iter().map(|&x| s.evaluate_dimensionless(&[x], t)).collect())
        .collect();
    let thetas: Vec<f64> = pairs.iter().map(|q| q.theta).collect();
    Ok(GramMatrix {
        labels: pairs.to_vec(),
        entries,
        closed_form: Some(closed),
        time: t,
        parallelism: parallelism_table(&samples, &thetas, PARALLEL_TOL),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// Ladder operator along dimension 0.
pub fn ladder(which: Ladder) -> OperatorExpr {
    ladder_along(0, which)
}

/// `â = [X + (P̂|i)]/√2` and `â† = [X - (P̂|i)]/√2` along dimension `dim`.
/// Since `(P̂|i)Ψ = -(∂Ψ) i i = ∂Ψ`, these act as `(X ± ∂_X)/√2`.
pub fn ladder_along(dim: usize, which: Ladder) -> OperatorExpr {
    let p_right_i = OperatorExpr::momentum(dim).right_i_of();
    let sign = match which {
        Ladder::Lower => 1.0,
        Ladder::Raise => -1.0,
    };
    OperatorExpr::Compose(vec![
        OperatorExpr::Scale(std::f64::consts::FRAC_1_SQRT_2),
        OperatorExpr::Sum(vec![
            OperatorExpr::MulX(dim),
            OperatorExpr::Compose(vec![OperatorExpr::Scale(sign), p_right_i]),
        ]),
    ])
}

/// Constant normalizing `(â†)ⁿ e^{-X²/2}` in the physical coordinate:
/// `(μω/πħ)^{1/4} / sqrt(n!)`.
pub fn ladder_norm_const(n: usize, params: &PhysicalParams) -> f64 {
    (0.25 * (params.mass * params.omega / (PI * params.hbar)).ln() - 0.5 * ln_factorial(n)).exp()
}

/// Builds `Ψ_nm` algebraically: the creation operator applied `n` times to the
/// Gaussian in the `z0` slot and `m` times in the `z1` slot.
pub fn build_via_ladder(q: &QPair, params: &PhysicalParams) -> Result<WaveState> {
    q.validate()?;
    let raise = ladder(Ladder::Raise);
    let ground = |slot: Slot, coeff: f64, freq: f64| {
        WaveState::from_modes(1, *params, vec![Mode::new(slot, Complex64::new(coeff, 0.0), vec![Poly::one()], freq)])
    };
    let (c, s) = polarization(q.theta);
    let mut z0 = ground(Slot::Z0, c * ladder_norm_const(q.n, params), -level_energy(q.n, params) / params.hbar)?;
    for _ in 0..q.n {
        z0 = raise.apply(&z0)?;
    }
    let mut z1 = ground(Slot::Z1, s * ladder_norm_const(q.m, params), level_energy(q.m, params) / params.hbar)?;
    for _ in 0..q.m {
        z1 = raise.apply(&z1)?;
    }
    z0.add(&z1)
}

/// Default residual grid: 41 uniform points with `X` in `[-6, 6]`, returned as
/// physical coordinates.
pub fn default_residual_grid(params: &PhysicalParams) -> Vec<f64> {
    (0..41).map(|k| params.to_physical(-6.0 + 12.0 * k as f64 / 40.0)).collect()
}

/// `sup_x |ħ (∂Ψ/∂t) i - ℋΨ|` over a grid of physical coordinates.
pub fn schrodinger_residual(s: &WaveState, grid: &[f64], t: f64) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::Validation("residual grid is empty".into()));
    }
    if s.dims() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: s.dims() });
    }
    let params = *s.params();
    let lhs = OperatorExpr::Compose(vec![OperatorExpr::Scale(params.hbar), OperatorExpr::RightI]).apply(&s.time_derivative())?;
    let rhs = OperatorExpr::hamiltonian(0, &params).apply(s)?;
    let residual = lhs.sub(&rhs)?;
    let mut worst: f64 = 0.0;
    for &x in grid {
        worst = worst.max(residual.evaluate(&[x], t)?.norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavestate::{expectation, l2_norm};
    use std::f64::consts::FRAC_PI_2;

    fn nat() -> PhysicalParams {
        PhysicalParams::default()
    }

    #[test]
    fn polarization_snaps_quarter_turns() {
        assert_eq!(polarization(FRAC_PI_2), (0.0, 1.0));
        assert_eq!(polarization(PI), (-1.0, 0.0));
        assert_eq!(polarization(-FRAC_PI_2), (0.0, -1.0));
        assert_eq!(polarization(0.0), (1.0, 0.0));
        let (c, s) = polarization(0.3);
        assert_eq!((c, s), (0.3f64.cos(), 0.3f64.sin()));
    }

    #[test]
    fn ground_state_value() {
        let v = psi_n(0, &nat()).evaluate(&[0.0], 0.0).unwrap();
        assert!((v.x0 - PI.powf(-0.25)).abs() < 1e-15);
        assert_eq!(psi_n(1, &nat()).evaluate(&[0.0], 0.0).unwrap(), Quaternion::ZERO);
    }

    #[test]
    fn pure_j_state() {
        let v = psi_nm(&QPair::new(0, 0, FRAC_PI_2), &nat()).evaluate(&[0.0], 0.0).unwrap();
        assert!(v.x0.abs() < 1e-16);
        assert!((v.x2 - PI.powf(-0.25)).abs() < 1e-15);
    }

    #[test]
    fn energy_examples() {
        let p = nat();
        for th in [0.0, 0.4, 1.3] {
            assert_eq!(energy_nm(&QPair::new(0, 0, th), &p), 0.5);
        }
        assert!((energy_nm(&QPair::new(1, 2, FRAC_PI_2), &p) - 2.5).abs() < 1e-15);
        assert!((energy_nm(&QPair::new(1, 2, PI / 4.0), &p) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn gram_examples() {
        let p = nat();
        let th = 0.9;
        let g = gram(&[QPair::new(0, 1, th), QPair::new(2, 3, th)], 0.0, &p).unwrap();
        assert!(g.max_deviation_from_identity() < 1e-12);
        let g = gram(&[QPair::new(0, 1, PI / 3.0), QPair::new(0, 2, PI / 3.0)], 0.0, &p).unwrap();
        assert!((g.entries[0][1] - 0.25).abs() < 1e-12);
        assert!(g.is_non_orthogonal(1e-10));
        assert!(g.parallelism[0].theta_equal);
        let g = gram(&[QPair::new(3, 1, 0.2)], 0.0, &p).unwrap();
        assert_eq!(g.size(), 1);
        assert!((g.entries[0][0] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn ladder_examples() {
        let p = nat();
        let lowered = ladder(Ladder::Lower).apply(&psi_n(0, &p)).unwrap();
        assert!(l2_norm(&lowered, 0.0) <= 1e-14);

        let g = WaveState::from_modes(1, p, vec![Mode::new(Slot::Z0, Complex64::new(1.0, 0.0), vec![Poly::one()], 0.0)]).unwrap();
        let raised = ladder(Ladder::Raise).apply(&g).unwrap();
        let expect = WaveState::from_modes(1, p, vec![Mode::new(Slot::Z0, Complex64::new(2f64.sqrt(), 0.0), vec![Poly::from_real(&[0.0, 1.0])], 0.0)]).unwrap();
        assert!(l2_norm(&raised.sub(&expect).unwrap(), 0.0) < 1e-14);
    }

    #[test]
    fn ladder_reproduces_basis() {
        let p = nat();
        for q in [QPair::new(0, 0, 0.3), QPair::new(3, 1, 0.7)] {
            let a = build_via_ladder(&q, &p).unwrap();
            let b = psi_nm(&q, &p);
            for k in 0..41 {
                let x = -6.0 + 0.3 * k as f64;
                assert!((a.evaluate(&[x], 0.4).unwrap() - b.evaluate(&[x], 0.4).unwrap()).norm() < 1e-12);
            }
            assert!((l2_norm(&a, 0.0) - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn residual_examples() {
        let p = nat();
        let grid = default_residual_grid(&p);
        assert!(schrodinger_residual(&psi_nm(&QPair::new(2, 5, 0.6), &p), &grid, 0.3).unwrap() < 1e-10);
        assert!(schrodinger_residual(&psi_n(3, &p).scale(2.0), &grid, 1.1).unwrap() < 1e-10);
        let wrong = WaveState::from_modes(
            1,
            p,
            vec![Mode::new(Slot::Z0, Complex64::new(PI.powf(-0.25), 0.0), vec![Poly::one()], -1.6)],
        )
        .unwrap();
        assert!(schrodinger_residual(&wrong, &grid, 0.0).unwrap() >= 0.05);
        assert!(schrodinger_residual(&wrong, &[], 0.0).is_err());
    }

    #[test]
    fn hamiltonian_on_eigenfunctions() {
        let p = PhysicalParams::new(1.7, 0.6, 0.9).unwrap();
        for n in 0..=10 {
            let s = psi_n(n, &p);
            let hs = OperatorExpr::hamiltonian(0, &p).apply(&s).unwrap();
            let diff = hs.sub(&s.scale(level_energy(n, &p))).unwrap();
            assert!(l2_norm(&diff, 0.0) < 1e-12, "n = {n}");
            let e = expectation(&OperatorExpr::hamiltonian(0, &p), &s, 0.0).unwrap();
            assert!((e - level_energy(n, &p)).abs() < 1e-12);
        }
    }
}
