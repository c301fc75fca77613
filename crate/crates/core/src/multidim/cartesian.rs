use std::collections::BTreeSet;

use crate::oscillator1d::polarization;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator1d::{energy_nm, hermite_poly, level_energy, psi_nm, QPair};
use crate::specfun::hermite_norm_const;
use crate::wavestate::{expectation, Mode, OperatorExpr, PhysicalParams, Poly, Slot, WaveState};

/// `Π_k Ψ^{(k)}(X_k)`, the quaternion product taken left to right with factor
/// `k` living on coordinate `k`.
pub fn product_state(factors: &[QPair], params: &PhysicalParams) -> Result<WaveState> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Validation("a product state needs at least one factor".into()))?;
    first.validate()?;
    rest.iter().try_fold(psi_nm(first, params), |acc, q| {
        q.validate()?;
        acc.tensor(&psi_nm(q, params))
    })
}

/// Sum of per-direction energies `Σ_k E_{n_k m_k}`.
pub fn product_energy_sum(factors: &[QPair], params: &PhysicalParams) -> f64 {
    factors.iter().map(|q| energy_nm(q, params)).sum()
}

/// `<Σ_k ℋ_k>` on a normalized state.
pub fn cartesian_energy(state: &WaveState) -> Result<f64> {
    expectation(&OperatorExpr::total_hamiltonian(state.dims(), state.params()), state, 0.0)
}

/// `cos θ Π_{k∈P} ψ_n(X_k) + sin θ Π_{k∈P'} ψ̄_m(X_k) j` on `p` dimensions.
/// Indices are 1-based. Directions outside a slot's set carry the normalized
/// ground Gaussian so that the state stays normalizable on all `p` axes.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitSpec {
    pub dims: usize,
    pub primary: BTreeSet<usize>,
    pub secondary: BTreeSet<usize>,
    pub n: usize,
    pub m: usize,
    pub theta: f64,
    /// Permit `P` and `P'` to share directions.
    pub allow_overlap: bool,
}

impl SplitSpec {
    pub fn validate(&self) -> Result<()> {
        if self.dims == 0 {
            return Err(Error::Validation("split state needs at least one dimension".into()));
        }
        if !self.theta.is_finite() {
            return Err(Error::Validation("theta must be finite".into()));
        }
        for &k in self.primary.iter().chain(&self.secondary) {
            if k == 0 || k > self.dims {
                return Err(Error::Validation(format!("direction {k} outside 1..={}", self.dims)));
            }
        }
        let union: BTreeSet<usize> = self.primary.union(&self.secondary).copied().collect();
        if union.len() != self.dims {
            return Err(Error::Validation("P ∪ P' must cover every direction".into()));
        }
        if !self.allow_overlap && !self.primary.is_disjoint(&self.secondary) {
            return Err(Error::Validation("P and P' overlap; set allow_overlap to permit this".into()));
        }
        Ok(())
    }
}

pub fn split_state(spec: &SplitSpec, params: &PhysicalParams) -> Result<WaveState> {
    spec.validate()?;
    let (c, s) = polarization(spec.theta);
    let slot_mode = |slot: Slot, set: &BTreeSet<usize>, level: usize, amplitude: f64, freq_sign: f64| {
        let ground = hermite_norm_const(0, params);
        let active = hermite_norm_const(level, params);
        let mut coeff = amplitude;
        let polys = (1..=spec.dims)
            .map(|k| {
                if set.contains(&k) {
                    coeff *= active;
                    hermite_poly(level)
                } else {
                    coeff *= ground;
                    Poly::one()
                }
            })
            .collect();
        let freq = freq_sign * set.len() as f64 * level_energy(level, params) / params.hbar;
        Mode::new(slot, Complex64::new(coeff, 0.0), polys, freq)
    };
    WaveState::from_modes(
        spec.dims,
        *params,
        vec![
            slot_mode(Slot::Z0, &spec.primary, spec.n, c, -1.0),
            slot_mode(Slot::Z1, &spec.secondary, spec.m, s, 1.0),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavestate::norm_sqr;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn nat() -> PhysicalParams {
        PhysicalParams::default()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn complex_product_when_theta_zero() {
        let p = nat();
        let f = [QPair::new(1, 3, 0.0), QPair::new(2, 0, 0.0)];
        let s = product_state(&f, &p).unwrap();
        let a = psi_nm(&f[0], &p);
        let b = psi_nm(&f[1], &p);
        for &(x, y) in &[(0.3, -0.2), (1.1, 0.7), (-2.0, 1.4)] {
            let v = s.evaluate(&[x, y], 0.5).unwrap();
            let za = a.evaluate(&[x], 0.5).unwrap().to_symplectic().z0;
            let zb = b.evaluate(&[y], 0.5).unwrap().to_symplectic().z0;
            let expect = za * zb;
            assert!((v.x0 - expect.re).abs() < 1e-13 && (v.x1 - expect.im).abs() < 1e-13);
            assert!(v.x2.abs() < 1e-16 && v.x3.abs() < 1e-16);
        }
    }

    #[test]
    fn energy_examples() {
        let p = nat();
        let s = product_state(&[QPair::new(1, 2, FRAC_PI_4); 3], &p).unwrap();
        assert!((cartesian_energy(&s).unwrap() - 6.0).abs() < 1e-10);
        let s = product_state(&[QPair::new(0, 0, 0.0); 2], &p).unwrap();
        assert!((cartesian_energy(&s).unwrap() - 1.0).abs() < 1e-12);
        let s = product_state(&[QPair::new(0, 0, 0.4), QPair::new(0, 0, 1.1)], &p).unwrap();
        assert!((norm_sqr(&s, 0.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn split_examples() {
        let p = nat();
        let spec = SplitSpec { dims: 2, primary: set(&[1]), secondary: set(&[2]), n: 0, m: 0, theta: FRAC_PI_4, allow_overlap: false };
        let s = split_state(&spec, &p).unwrap();
        let v = s.evaluate(&[0.0, 0.0], 0.0).unwrap();
        let r = 1.0 / PI.sqrt();
        assert!((v.x0 - r * FRAC_PI_4.cos()).abs() < 1e-15 && (v.x2 - r * FRAC_PI_4.sin()).abs() < 1e-15);
        assert!((norm_sqr(&s, 0.0) - 1.0).abs() < 1e-13);

        // p = 1 with P = P' reduces to Ψ_nm
        let spec = SplitSpec { dims: 1, primary: set(&[1]), secondary: set(&[1]), n: 2, m: 3, theta: 0.6, allow_overlap: true };
        let s = split_state(&spec, &p).unwrap();
        assert_eq!(s, psi_nm(&QPair::new(2, 3, 0.6), &p));
    }

    #[test]
    fn split_validation() {
        let p = nat();
        let mut spec = SplitSpec { dims: 2, primary: set(&[1]), secondary: set(&[1]), n: 0, m: 0, theta: 0.1, allow_overlap: true };
        assert!(split_state(&spec, &p).is_err(), "direction 2 uncovered");
        spec.secondary = set(&[1, 2]);
        assert!(split_state(&spec, &p).is_ok());
        spec.allow_overlap = false;
        assert!(split_state(&spec, &p).is_err());
        spec.secondary = set(&[3]);
        assert!(split_state(&spec, &p).is_err());
    }

    #[test]
    fn split_theta_zero_ignores_secondary_axis_level() {
        let p = nat();
        let a = SplitSpec { dims: 2, primary: set(&[1]), secondary: set(&[2]), n: 2, m: 1, theta: 0.0, allow_overlap: false };
        let b = SplitSpec { m: 4, ..a.clone() };
        let (sa, sb) = (split_state(&a, &p).unwrap(), split_state(&b, &p).unwrap());
        for &(x, y) in &[(0.2, 0.3), (-1.0, 2.0)] {
            assert_eq!(sa.evaluate(&[x, y], 0.0).unwrap(), sb.evaluate(&[x, y], 0.0).unwrap());
        }
    }

    #[test]
    fn empty_product_rejected() {
        assert!(product_state(&[], &nat()).is_err());
    }
}
