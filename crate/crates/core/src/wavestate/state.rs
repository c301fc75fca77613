use num_complex::Complex64;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::quaternion::Quaternion;

/// Symplectic component a mode contributes to: `z0` or `z1` in `z0 + z1 j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Z0,
    Z1,
}

/// One Gaussian-enveloped term `coeff · e^{iνt} · Π_k poly_k(X_k) · e^{-Σ X_k²/2}`
/// placed in a symplectic slot. The envelope is shared by the whole state and
/// not stored here.
#[derive(Debug, Clone, PartialEq)]
pub struct Mode {
    pub slot: Slot,
    pub coeff: Complex64,
    pub polys: Vec<Poly>,
    /// Angular frequency `ν` of the time factor `e^{iνt}`.
    pub freq: f64,
}

impl Mode {
    pub fn new(slot: Slot, coeff: Complex64, polys: Vec<Poly>, freq: f64) -> Self {
        Mode { slot, coeff, polys, freq }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == Complex64::new(0.0, 0.0) || self.polys.iter().any(Poly::is_zero)
    }

    /// Value without the Gaussian envelope at dimensionless coordinates.
    pub fn eval_polynomial_part(&self, big_x: &[f64], t: f64) -> Complex64 {
        let phase = Complex64::from_polar(1.0, self.freq * t);
        self.polys
            .iter()
            .zip(big_x)
            .fold(self.coeff * phase, |acc, (p, &x)| acc * p.eval(x))
    }

    /// Pointwise conjugate: conjugates coefficient, polynomials and phase.
    pub fn conj(&self) -> Mode {
        Mode {
            slot: self.slot,
            coeff: self.coeff.conj(),
            polys: self.polys.iter().map(Poly::conj).collect(),
            freq: -self.freq,
        }
    }
}

/// Quaternionic wavefunction over `dims` Cartesian directions, held exactly as
/// a list of modes.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveState {
    dims: usize,
    modes: Vec<Mode>,
    params: PhysicalParams,
}

impl WaveState {
    pub fn zero(dims: usize, params: PhysicalParams) -> Self {
        assert!(dims >= 1, "a state needs at least one dimension");
        WaveState { dims, modes: Vec::new(), params }
    }

    /// Builds a state, checking that every mode carries `dims` polynomials.
    /// Like terms are merged.
    pub fn from_modes(dims: usize, params: PhysicalParams, modes: Vec<Mode>) -> Result<Self> {
        if dims == 0 {
            return Err(Error::Validation("a state needs at least one dimension".into()));
        }
        params.validate()?;
        let mut s = WaveState::zero(dims, params);
        for m in modes {
            if m.polys.len() != dims {
                return Err(Error::DimensionMismatch { expected: dims, got: m.polys.len() });
            }
            if !(m.coeff.is_finite() && m.freq.is_finite() && m.polys.iter().all(Poly::is_finite)) {
                return Err(Error::Validation("mode has non-finite data".into()));
            }
            s.push_mode(m);
        }
        Ok(s)
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// Adds a mode, combining it with an existing one when both share slot and
    /// frequency and their polynomials differ in at most one dimension. The
    /// match is exact; nothing is rounded away.
    pub(crate) fn push_mode(&mut self, m: Mode) {
        if m.is_zero() {
            return;
        }
        let dims = self.dims;
        let target = self.modes.iter().enumerate().find_map(|(idx, e)| {
            if e.slot != m.slot || e.freq.to_bits() != m.freq.to_bits() {
                return None;
            }
            let differing: Vec<usize> = (0..dims).filter(|&k| e.polys[k] != m.polys[k]).take(2).collect();
            match differing.len() {
                0 => Some((idx, None)),
                1 => Some((idx, Some(differing[0]))),
                _ => None,
            }
        });
        if let Some((idx, dim)) = target {
            let existing = &mut self.modes[idx];
            match dim {
                None => existing.coeff += m.coeff,
                Some(d) => {
                    let ratio = m.coeff / existing.coeff;
                    existing.polys[d] = existing.polys[d].add(&m.polys[d].scale(ratio));
                }
            }
            if existing.is_zero() {
                self.modes.remove(idx);
            }
            return;
        }
        self.modes.push(m);
    }

    pub(crate) fn with_modes(&self, modes: Vec<Mode>) -> WaveState {
        let mut s = WaveState::zero(self.dims, self.params);
        for m in modes {
            s.push_mode(m);
        }
        s
    }

    fn check_compatible(&self, other: &WaveState) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch { expected: self.dims, got: other.dims });
        }
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &WaveState) -> Result<WaveState> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for m in &other.modes {
            s.push_mode(m.clone());
        }
        Ok(s)
    }

    pub fn sub(&self, other: &WaveState) -> Result<WaveState> {
        self.add(&other.scale(-1.0))
    }

    /// Multiplication by a real coefficient.
    pub fn scale(&self, s: f64) -> WaveState {
        self.with_modes(
            self.modes
                .iter()
                .map(|m| Mode { coeff: m.coeff * s, ..m.clone() })
                .collect(),
        )
    }

    /// Value at physical coordinates `x` and time `t`.
    pub fn evaluate(&self, x: &[f64], t: f64) -> Result<Quaternion> {
        if x.len() != self.dims {
            return Err(Error::DimensionMismatch { expected: self.dims, got: x.len() });
        }
        let big_x: Vec<f64> = x.iter().map(|&v| self.params.to_dimensionless(v)).collect();
        Ok(self.evaluate_dimensionless(&big_x, t))
    }

    /// Value at dimensionless coordinates `X`.
    pub fn evaluate_dimensionless(&self, big_x: &[f64], t: f64) -> Quaternion {
        let envelope = (-0.5 * big_x.iter().map(|v| v * v).sum::<f64>()).exp();
        let (z0, z1) = self.polynomial_part(big_x, t);
        Quaternion::from_symplectic(z0 * envelope, z1 * envelope)
    }

    /// Symplectic components with the Gaussian envelope divided out.
    pub fn polynomial_part(&self, big_x: &[f64], t: f64) -> (Complex64, Complex64) {
        let mut z = [Complex64::new(0.0, 0.0); 2];
        for m in &self.modes {
            let idx = match m.slot {
                Slot::Z0 => 0,
                Slot::Z1 => 1,
            };
            z[idx] += m.eval_polynomial_part(big_x, t);
        }
        (z[0], z[1])
    }

    /// `∂Ψ/∂t`, exact: each coefficient picks up `iν`.
    pub fn time_derivative(&self) -> WaveState {
        self.with_modes(
            self.modes
                .iter()
                .map(|m| Mode { coeff: m.coeff * Complex64::new(0.0, m.freq), ..m.clone() })
                .collect(),
        )
    }

    /// Quaternion product `self(X_a) · other(X_b)` of states on disjoint
    /// coordinates; the result lives on `self.dims() + other.dims()` dimensions.
    /// Uses `(a₁ + b₁j)(a₂ + b₂j) = (a₁a₂ - b₁b̄₂) + (a₁b₂ + b₁ā₂)j`.
    pub fn tensor(&self, other: &WaveState) -> Result<WaveState> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        let mut out = WaveState::zero(self.dims + other.dims, self.params);
        for ma in &self.modes {
            for mb in &other.modes {
                let (slot, sign, rhs) = match (ma.slot, mb.slot) {
                    (Slot::Z0, Slot::Z0) => (Slot::Z0, 1.0, mb.clone()),
                    (Slot::Z0, Slot::Z1) => (Slot::Z1, 1.0, mb.clone()),
                    (Slot::Z1, Slot::Z0) => (Slot::Z1, 1.0, mb.conj()),
                    (Slot::Z1, Slot::Z1) => (Slot::Z0, -1.0, mb.conj()),
                };
                let mut polys = ma.polys.clone();
                polys.extend(rhs.polys);
                out.push_mode(Mode::new(slot, ma.coeff * rhs.coeff * sign, polys, ma.freq + rhs.freq));
            }
        }
        Ok(out)
    }

    /// Largest polynomial degree along dimension `k`, over all modes.
    pub fn max_degree(&self, k: usize) -> usize {
        self.modes.iter().filter_map(|m| m.polys[k].degree()).max().unwrap_or(0)
    }

    /// Copy of the state keeping only the modes in `slot`.
    pub fn slot_part(&self, slot: Slot) -> WaveState {
        self.with_modes(self.modes.iter().filter(|m| m.slot == slot).cloned().collect())
    }
}
