//! Quaternionic spherical harmonics `𝒴 = cos θ Y_ℓ^{m1} + sin θ Y_ℓ^{m2} j`.

use crate::oscillator1d::polarization;
use crate::error::{Error, Result};
use crate::gram::{parallelism_table, tabulate, GramMatrix};
use crate::quaternion::{Quaternion, PARALLEL_TOL};
use crate::specfun::{make_rule, sph_harm, QuadratureKind};

/// Default Gauss–Legendre order in `cos(polar)`.
pub const POLAR_ORDER: usize = 64;
/// Default uniform order in azimuth.
pub const AZIMUTH_ORDER: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QSphericalHarmonic {
    pub l: usize,
    pub m1: i64,
    pub m2: i64,
    pub theta: f64,
    /// Put `conj(Y_ℓ^{m2})` in the `j` slot instead of `Y_ℓ^{m2}`.
    pub conjugate_secondary: bool,
}

impl QSphericalHarmonic {
    pub fn new(l: usize, m1: i64, m2: i64, theta: f64) -> Result<Self> {
        let s = QSphericalHarmonic { l, m1, m2, theta, conjugate_secondary: false };
        s.validate()?;
        Ok(s)
    }

    pub fn conjugated(self, on: bool) -> Self {
        QSphericalHarmonic { conjugate_secondary: on, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let l = self.l as i64;
        for m in [self.m1, self.m2] {
            if m < -l || m > l {
                return Err(Error::Validation(format!("m = {m} outside -{l}..={l}")));
            }
        }
        if !self.theta.is_finite() {
            return Err(Error::Validation("theta must be finite".into()));
        }
        Ok(())
    }

    /// Value at polar angle `polar` and azimuth `azimuth`.
    pub fn evaluate(&self, polar: f64, azimuth: f64) -> Result<Quaternion> {
        self.validate()?;
        let (c, s) = polarization(self.theta);
        let z0 = sph_harm(self.l, self.m1, polar, azimuth)? * c;
        let mut y2 = sph_harm(self.l, self.m2, polar, azimuth)?;
        if self.conjugate_secondary {
            y2 = y2.conj();
        }
        Ok(Quaternion::from_symplectic(z0, y2 * s))
    }
}

struct SphereGrid {
    points: Vec<(f64, f64)>,
    weights: Vec<f64>,
}

fn sphere_grid(polar_order: usize, azimuth_order: usize) -> Result<SphereGrid> {
    let gl = make_rule(QuadratureKind::GaussLegendre, polar_order)?;
    let up = make_rule(QuadratureKind::UniformPeriodic, azimuth_order)?;
    let mut points = Vec::with_capacity(gl.order() * up.order());
    let mut weights = Vec::with_capacity(points.capacity());
    for (&x, &wx) in gl.nodes.iter().zip(&gl.weights) {
        for (&phi, &wp) in up.nodes.iter().zip(&up.weights) {
            points.push((x.acos(), phi));
            weights.push(wx * wp);
        }
    }
    Ok(SphereGrid { points, weights })
}

fn sample(spec: &QSphericalHarmonic, grid: &SphereGrid) -> Result<Vec<Quaternion>> {
    grid.points.iter().map(|&(t, p)| spec.evaluate(t, p)).collect()
}

fn sphere_inner(a: &[Quaternion], b: &[Quaternion], w: &[f64]) -> f64 {
    a.iter().zip(b).zip(w).map(|((p, q), w)| w * (*p * q.conj()).sc()).sum()
}

/// `∫ Sc(𝒴 conj 𝒴') dΩ` by Gauss–Legendre × uniform quadrature.
pub fn angular_inner(a: &QSphericalHarmonic, b: &QSphericalHarmonic, polar_order: usize, azimuth_order: usize) -> Result<f64> {
    let grid = sphere_grid(polar_order, azimuth_order)?;
    Ok(sphere_inner(&sample(a, &grid)?, &sample(b, &grid)?, &grid.weights))
}

/// `∫ Y_a Y'` style overlap of the `j` slots, allowing either side conjugated.
fn secondary_overlap(a: &QSphericalHarmonic, b: &QSphericalHarmonic) -> f64 {
    if a.l != b.l {
        return 0.0;
    }
    if a.conjugate_secondary == b.conjugate_secondary {
        return if a.m2 == b.m2 { 1.0 } else { 0.0 };
    }
    // Re ∫ Y_ℓ^m Y_ℓ^{m'} dΩ = (-1)^{m'} δ_{m,-m'}
    if a.m2 == -b.m2 {
        if b.m2.rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        }
    } else {
        0.0
    }
}

/// `cos θ cos θ' δ_ℓℓ' δ_{m1 m1'} + sin θ sin θ' δ_ℓℓ' δ_{m2 m2'}`.
pub fn angular_closed_form_entry(a: &QSphericalHarmonic, b: &QSphericalHarmonic) -> f64 {
    let mut v = 0.0;
    if a.l == b.l && a.m1 == b.m1 {
        v += polarization(a.theta).0 * polarization(b.theta).0;
    }
    v + polarization(a.theta).1 * polarization(b.theta).1 * secondary_overlap(a, b)
}

const ANGULAR_SAMPLE_POINTS: [(f64, f64); 5] = [(0.41, 0.2), (0.97, 1.3), (1.52, 2.9), (2.11, 4.4), (2.73, 5.8)];

pub fn angular_gram(specs: &[QSphericalHarmonic], polar_order: usize, azimuth_order: usize) -> Result<GramMatrix<QSphericalHarmonic>> {
    for s in specs {
        s.validate()?;
    }
    let grid = sphere_grid(polar_order, azimuth_order)?;
    let values: Vec<Vec<Quaternion>> = specs.iter().map(|s| sample(s, &grid)).collect::<Result<_>>()?;
    let n = specs.len();
    let entries = tabulate::<Error>(n, |i, j| Ok(sphere_inner(&values[i], &values[j], &grid.weights)))?;
    let closed = tabulate::<Error>(n, |i, j| Ok(angular_closed_form_entry(&specs[i], &specs[j])))?;
    let samples: Vec<Vec<Quaternion>> = specs
        .iter()
        .map(|s| ANGULAR_SAMPLE_POINTS.iter().map(|&(t, p)| s.evaluate(t, p)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let thetas: Vec<f64> = specs.iter().map(|s| s.theta).collect();
    Ok(GramMatrix {
        labels: specs.to_vec(),
        entries,
        closed_form: Some(closed),
        time: 0.0,
        parallelism: parallelism_table(&samples, &thetas, PARALLEL_TOL),
    })
}
