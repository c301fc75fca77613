//! Radial solutions `ℛ_uv(ρ) = ρ^ℓ e^{-ρ²/2} [cos θ N_u L_u(ρ²) + sin θ N_v L_v(ρ²) j]`
//! with `L = L^{(ℓ+1/2)}` and the dimensionless radius `ρ = sqrt(μω/ħ) r`.

use crate::oscillator1d::polarization;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gram::{parallelism_table, tabulate, GramMatrix};
use crate::quaternion::{Quaternion, PARALLEL_TOL};
use crate::specfun::compensated::Dd;
use crate::specfun::{laguerre_coeffs, laguerre_norm_const, radial_moment_dd};
use crate::wavestate::{PhysicalParams, Poly};

#[derive(Debug, Clone, PartialEq)]
pub struct RadialState {
    pub u: usize,
    pub v: usize,
    pub l: usize,
    pub theta: f64,
    params: PhysicalParams,
    /// `(coefficient, polynomial in ρ²)` for the `z0` and `z1` slots.
    slots: [(Complex64, Poly); 2],
}

pub fn radial_state(u: usize, v: usize, l: usize, theta: f64, params: &PhysicalParams) -> Result<RadialState> {
    if !theta.is_finite() {
        return Err(Error::Validation("theta must be finite".into()));
    }
    params.validate()?;
    let alpha = l as f64 + 0.5;
    let (c, s) = polarization(theta);
    let slot = |degree: usize, amp: f64| -> Result<(Complex64, Poly)> {
        Ok((
            Complex64::new(amp * laguerre_norm_const(degree, l), 0.0),
            Poly::from_real(&laguerre_coeffs(degree, alpha)?),
        ))
    };
    Ok(RadialState { u, v, l, theta, params: *params, slots: [slot(u, c)?, slot(v, s)?] })
}

impl RadialState {
    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    /// Slot coefficient and its polynomial in `ρ²`.
    pub fn slot(&self, idx: usize) -> (Complex64, &Poly) {
        (self.slots[idx].0, &self.slots[idx].1)
    }

    /// `ρ^ℓ q(ρ²)` as a polynomial in `ρ`, coefficient folded in.
    fn rho_poly(&self, idx: usize) -> Poly {
        let (c, q) = &self.slots[idx];
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.l + 2 * q.coeffs().len()];
        for (a, qa) in q.coeffs().iter().enumerate() {
            coeffs[self.l + 2 * a] = qa * c;
        }
        Poly::new(coeffs)
    }

    /// Value at dimensionless radius.
    pub fn evaluate(&self, rho: f64) -> Quaternion {
        let env = (-0.5 * rho * rho).exp();
        Quaternion::from_symplectic(self.rho_poly(0).eval(rho) * env, self.rho_poly(1).eval(rho) * env)
    }

    /// Value at physical radius `r`.
    pub fn evaluate_r(&self, r: f64) -> Quaternion {
        self.evaluate(self.params.to_dimensionless(r))
    }
}

/// `∫₀^∞ Sc(ℛ conj ℛ') ρ² dρ`, exact from radial moments.
pub fn radial_inner(a: &RadialState, b: &RadialState) -> Result<f64> {
    if a.l != b.l {
        return Err(Error::Validation(format!("radial states with different ℓ ({} vs {})", a.l, b.l)));
    }
    let mut acc = Dd::ZERO;
    for idx in 0..2 {
        let (ca, pa) = &a.slots[idx];
        let (cb, pb) = &b.slots[idx];
        let scale = ca * cb.conj();
        let mut re = Dd::ZERO;
        let mut im = Dd::ZERO;
        for (i, x) in pa.coeffs().iter().enumerate() {
            for (k, y) in pb.coeffs().iter().enumerate() {
                let m = radial_moment_dd(a.l + i + k);
                re = re.add(Dd::prod(x.re, y.re).add(Dd::prod(x.im, y.im)).mul(m));
                im = im.add(Dd::prod(x.im, y.re).add(Dd::prod(x.re, y.im).neg()).mul(m));
            }
        }
        let overlap = Complex64::new(re.to_f64(), im.to_f64());
        acc = acc.add(Dd::from_f64((scale * overlap).re));
    }
    Ok(acc.to_f64())
}

/// Dimensionless radii at which radial basis elements are tested for parallelism.
const RADIAL_SAMPLE_POINTS: [f64; 5] = [0.31, 0.84, 1.42, 2.07, 2.93];

/// Gram matrix of radial states sharing `ℓ`, with closed form
/// `cos θ cos θ' δ_uu' + sin θ sin θ' δ_vv'`.
pub fn radial_gram(states: &[RadialState]) -> Result<GramMatrix<RadialState>> {
    if let Some(first) = states.first() {
        if let Some(bad) = states.iter().find(|s| s.l != first.l) {
            return Err(Error::Validation(format!("mixed ℓ in radial Gram ({} and {})", first.l, bad.l)));
        }
    }
    let n = states.len();
    let entries = tabulate(n, |i, j| radial_inner(&states[i], &states[j]))?;
    let closed = tabulate::<Error>(n, |i, j| {
        let (a, b) = (&states[i], &states[j]);
        let mut v = 0.0;
        if a.u == b.u {
            v += polarization(a.theta).0 * polarization(b.theta).0;
        }
        if a.v == b.v {
            v += polarization(a.theta).1 * polarization(b.theta).1;
        }
        Ok(v)
    })?;
    let samples: Vec<Vec<Quaternion>> = states
        .iter()
        .map(|s| RADIAL_SAMPLE_POINTS.iter().map(|&r| s.evaluate(r)).collect())
        .collect();
    let thetas: Vec<f64> = states.iter().map(|s| s.theta).collect();
    Ok(GramMatrix {
        labels: states.to_vec(),
        entries,
        closed_form: Some(closed),
        time: 0.0,
        parallelism: parallelism_table(&samples, &thetas, PARALLEL_TOL),
    })
}

/// `E_uℓ = (2u + ℓ + 3/2)ħω`.
pub fn radial_energy(u: usize, l: usize, params: &PhysicalParams) -> f64 {
    (2.0 * u as f64 + l as f64 + 1.5) * params.quantum()
}

/// `cos²θ E_uℓ + sin²θ E_vℓ`.
pub fn full_spherical_energy(u: usize, v: usize, l: usize, theta: f64, params: &PhysicalParams) -> f64 {
    let (c, s) = polarization(theta);
    c * c * radial_energy(u, l, params) + s * s * radial_energy(v, l, params)
}

/// Radial Hamiltonian `-½∇²_ρ + ½ρ² + ℓ(ℓ+1)/2ρ²` applied to `f(ρ) e^{-ρ²/2}`,
/// returned as the polynomial multiplying `e^{-ρ²/2}`. For `f = Σ c_k ρ^k`
/// with `k ≥ ℓ` the centrifugal singularity cancels term by term:
/// `H ρ^k = (k + 3/2) ρ^k + ½(ℓ(ℓ+1) - k(k+1)) ρ^{k-2}`.
fn radial_hamiltonian(f: &Poly, l: usize) -> Poly {
    let mut out = vec![Complex64::new(0.0, 0.0); f.coeffs().len()];
    let centrifugal = (l * (l + 1)) as f64;
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.norm() == 0.0 {
            continue;
        }
        out[k] += c * (k as f64 + 1.5);
        let drop = 0.5 * (centrifugal - (k * (k + 1)) as f64);
        if drop != 0.0 {
            debug_assert!(k >= 2, "power below ρ^ℓ in a radial polynomial");
            out[k - 2] += c * drop;
        }
    }
    Poly::new(out)
}

/// `<ℛ, H ℛ> / <ℛ, ℛ>` in energy units, exact from radial moments.
pub fn full_spherical_energy_expectation(u: usize, v: usize, l: usize, theta: f64, params: &PhysicalParams) -> Result<f64> {
    let state = radial_state(u, v, l, theta, params)?;
    let mut num = Dd::ZERO;
    for idx in 0..2 {
        let f = state.rho_poly(idx);
        let hf = radial_hamiltonian(&f, l);
        for (i, x) in hf.coeffs().iter().enumerate() {
            for (k, y) in f.coeffs().iter().enumerate() {
                if (i + k) % 2 == 1 || x.norm() == 0.0 || y.norm() == 0.0 {
                    continue;
                }
                let m = radial_moment_dd((i + k) / 2);
                num = num.add(Dd::prod(x.re, y.re).add(Dd::prod(x.im, y.im)).mul(m));
            }
        }
    }
    let norm = radial_inner(&state, &state)?;
    Ok(num.to_f64() / norm * params.quantum())
}

/// Default radial grid: `ρ = 0.1, 0.2, …, 6.0`.
pub fn default_radial_grid() -> Vec<f64> {
    (1..=60).map(|k| 0.1 * k as f64).collect()
}

/// `sup |-½ℛ'' - ℛ'/ρ + (½ρ² + ℓ(ℓ+1)/2ρ² - E)ℛ|` over grid and slots, with
/// each slot tested against its own energy (units of `ħω`). Derivatives are
/// exact: for `ℛ = f e^{-ρ²/2}`, `ℛ' = (f' - ρf) e^{-ρ²/2}` and
/// `ℛ'' = (f'' - 2ρf' - f + ρ²f) e^{-ρ²/2}`.
pub fn radial_ode_residual(state: &RadialState, energies: (f64, f64), grid: &[f64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::Validation("radial grid is empty".into()));
    }
    if let Some(bad) = grid.iter().find(|&&r| r.is_nan() || r <= 0.0) {
        return Err(Error::Domain(format!("radial grid point must be positive, got {bad}")));
    }
    let centrifugal = (state.l * (state.l + 1)) as f64;
    let mut worst: f64 = 0.0;
    for (idx, e) in [(0, energies.0), (1, energies.1)] {
        let f = state.rho_poly(idx);
        let df = f.derivative();
        let ddf = df.derivative();
        for &r in grid {
            let env = (-0.5 * r * r).exp();
            let (fv, dfv, ddfv) = (f.eval(r), df.eval(r), ddf.eval(r));
            let g = fv * env;
            let dg = (dfv - fv * r) * env;
            let ddg = (ddfv - dfv * (2.0 * r) - fv + fv * (r * r)) * env;
            let res = ddg * -0.5 - dg / r + g * (0.5 * r * r + centrifugal / (2.0 * r * r) - e);
            worst = worst.max(res.norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn nat() -> PhysicalParams {
        PhysicalParams::default()
    }

    #[test]
    fn unit_norms() {
        for u in 0..=4 {
            for v in 0..=4 {
                for l in 0..=3 {
                    let s = radial_state(u, v, l, 0.7, &nat()).unwrap();
                    assert!((radial_inner(&s, &s).unwrap() - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn theta_zero_is_real_radial_function() {
        let s = radial_state(2, 3, 1, 0.0, &nat()).unwrap();
        for r in [0.2, 1.0, 2.5] {
            let q = s.evaluate(r);
            assert!(q.x1 == 0.0 && q.x2 == 0.0 && q.x3 == 0.0);
        }
    }

    #[test]
    fn ground_radial_value() {
        let s = radial_state(0, 0, 0, 0.0, &nat()).unwrap();
        let n00 = (4.0 / PI.sqrt()).sqrt();
        assert!((s.evaluate(0.0).x0 - n00).abs() < 1e-15);
    }

    #[test]
    fn gram_examples() {
        let p = nat();
        let th = 0.5;
        let g = radial_gram(&[radial_state(0, 1, 2, th, &p).unwrap(), radial_state(2, 3, 2, th, &p).unwrap()]).unwrap();
        assert!(g.max_deviation_from_identity() < 1e-12);
        let g = radial_gram(&[radial_state(0, 1, 0, PI / 3.0, &p).unwrap(), radial_state(0, 2, 0, PI / 3.0, &p).unwrap()]).unwrap();
        assert!((g.entries[0][1] - 0.25).abs() < 1e-12);
        let g = radial_gram(&[radial_state(1, 1, 1, 0.2, &p).unwrap()]).unwrap();
        assert!((g.entries[0][0] - 1.0).abs() < 1e-13);
        let mixed = radial_gram(&[radial_state(0, 0, 0, 0.2, &p).unwrap(), radial_state(0, 0, 1, 0.2, &p).unwrap()]);
        assert!(matches!(mixed, Err(Error::Validation(_))));
    }

    #[test]
    fn energies() {
        let p = nat();
        assert_eq!(radial_energy(0, 0, &p), 1.5);
        assert_eq!(radial_energy(1, 2, &p), 5.5);
        assert!((full_spherical_energy(0, 1, 0, PI / 4.0, &p) - 2.5).abs() < 1e-15);
        assert!((full_spherical_energy(2, 2, 1, 0.77, &p) - radial_energy(2, 1, &p)).abs() < 1e-14);
        for (u, v, l, th) in [(0, 1, 0, PI / 4.0), (2, 0, 3, 0.3), (1, 4, 1, 1.2)] {
            let exact = full_spherical_energy_expectation(u, v, l, th, &p).unwrap();
            assert!((exact - full_spherical_energy(u, v, l, th, &p)).abs() < 1e-12);
        }
    }

    #[test]
    fn residual_vanishes_only_at_the_level() {
        let p = nat();
        let grid = default_radial_grid();
        for (u, v, l) in [(0, 0, 0), (1, 2, 2), (3, 1, 3)] {
            let s = radial_state(u, v, l, 0.8, &p).unwrap();
            let e = (radial_energy(u, l, &p), radial_energy(v, l, &p));
            assert!(radial_ode_residual(&s, e, &grid).unwrap() < 1e-9);
            let max_r = grid.iter().map(|&r| s.evaluate(r).norm()).fold(0.0, f64::max);
            let shifted = radial_ode_residual(&s, (e.0 + 1.0, e.1 + 1.0), &grid).unwrap();
            assert!(shifted >= 0.1 * max_r);
        }
        let s = radial_state(0, 0, 0, 0.0, &p).unwrap();
        assert!(matches!(radial_ode_residual(&s, (1.5, 1.5), &[0.0, 1.0]), Err(Error::Domain(_))));
    }
}
