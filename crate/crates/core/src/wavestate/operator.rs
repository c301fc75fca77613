use num_complex::Complex64;

use super::state::{Mode, Slot, WaveState};
use crate::error::{Error, Result};
use crate::params::PhysicalParams;

/// Operators built from multiplication by `X`, `d/dX`, right multiplication
/// by `i`, real scaling, sums and compositions. All coordinates are the
/// dimensionless `X_k`.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorExpr {
    /// Multiply by `X_k`.
    MulX(usize),
    /// `∂/∂X_k`.
    DdX(usize),
    /// `Ψ ↦ Ψ i`, the `(·|i)` action.
    RightI,
    Scale(f64),
    Sum(Vec<OperatorExpr>),
    /// `Compose([A, B, C])` is `A∘B∘C`: `C` acts first.
    Compose(Vec<OperatorExpr>),
}

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr::Compose(Vec::new())
    }

    /// Dimensionless momentum `P̂ = p̂_x / sqrt(μħω) = -(∂_X | i)`.
    pub fn momentum(dim: usize) -> Self {
        OperatorExpr::Compose(vec![OperatorExpr::Scale(-1.0), OperatorExpr::RightI, OperatorExpr::DdX(dim)])
    }

    pub fn position(dim: usize) -> Self {
        OperatorExpr::MulX(dim)
    }

    pub fn position_squared(dim: usize) -> Self {
        OperatorExpr::Compose(vec![OperatorExpr::MulX(dim), OperatorExpr::MulX(dim)])
    }

    /// Kinetic part `½ħω P̂²`.
    pub fn kinetic(dim: usize, params: &PhysicalParams) -> Self {
        OperatorExpr::Compose(vec![
            OperatorExpr::Scale(0.5 * params.quantum()),
            OperatorExpr::momentum(dim),
            OperatorExpr::momentum(dim),
        ])
    }

    /// Potential part `½ħω X²`.
    pub fn potential(dim: usize, params: &PhysicalParams) -> Self {
        OperatorExpr::Compose(vec![OperatorExpr::Scale(0.5 * params.quantum()), OperatorExpr::position_squared(dim)])
    }

    /// `ℋ_k = ½ħω (P̂_k² + X_k²)`.
    pub fn hamiltonian(dim: usize, params: &PhysicalParams) -> Self {
        OperatorExpr::Sum(vec![OperatorExpr::kinetic(dim, params), OperatorExpr::potential(dim, params)])
    }

    /// `Σ_k ℋ_k` over `dims` directions.
    pub fn total_hamiltonian(dims: usize, params: &PhysicalParams) -> Self {
        OperatorExpr::Sum((0..dims).map(|k| OperatorExpr::hamiltonian(k, params)).collect())
    }

    /// `AB - BA`.
    pub fn commutator(a: OperatorExpr, b: OperatorExpr) -> Self {
        OperatorExpr::Sum(vec![
            OperatorExpr::Compose(vec![a.clone(), b.clone()]),
            OperatorExpr::Compose(vec![OperatorExpr::Scale(-1.0), b, a]),
        ])
    }

    /// `(Ô|i)`: apply `Ô`, then multiply by `i` on the right.
    pub fn right_i_of(self) -> Self {
        OperatorExpr::Compose(vec![OperatorExpr::RightI, self])
    }

    /// Largest dimension index referenced, if any.
    pub fn max_dim(&self) -> Option<usize> {
        match self {
            OperatorExpr::MulX(d) | OperatorExpr::DdX(d) => Some(*d),
            OperatorExpr::RightI | OperatorExpr::Scale(_) => None,
            OperatorExpr::Sum(v) | OperatorExpr::Compose(v) => v.iter().filter_map(OperatorExpr::max_dim).max(),
        }
    }

    /// Exact symbolic action on a state.
    pub fn apply(&self, s: &WaveState) -> Result<WaveState> {
        if let Some(d) = self.max_dim() {
            if d >= s.dims() {
                return Err(Error::DimensionMismatch { expected: s.dims(), got: d + 1 });
            }
        }
        Ok(self.apply_unchecked(s))
    }

    fn apply_unchecked(&self, s: &WaveState) -> WaveState {
        match self {
            OperatorExpr::MulX(d) => map_modes(s, |m| {
                m.polys[*d] = m.polys[*d].mul_x();
            }),
            OperatorExpr::DdX(d) => map_modes(s, |m| {
                m.polys[*d] = m.polys[*d].gaussian_derivative();
            }),
            OperatorExpr::RightI => map_modes(s, |m| {
                m.coeff *= match m.slot {
                    Slot::Z0 => Complex64::new(0.0, 1.0),
                    Slot::Z1 => Complex64::new(0.0, -1.0),
                };
            }),
            OperatorExpr::Scale(c) => s.scale(*c),
            OperatorExpr::Sum(terms) => {
                let mut out = WaveState::zero(s.dims(), *s.params());
                for term in terms {
                    for m in term.apply_unchecked(s).modes() {
                        out.push_mode(m.clone());
                    }
                }
                out
            }
            OperatorExpr::Compose(ops) => ops.iter().rev().fold(s.clone(), |acc, op| op.apply_unchecked(&acc)),
        }
    }
}

fn map_modes(s: &WaveState, f: impl Fn(&mut Mode)) -> WaveState {
    s.with_modes(
        s.modes()
            .iter()
            .map(|m| {
                let mut m = m.clone();
                f(&mut m);
                m
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavestate::Poly;

    fn gaussian() -> WaveState {
        WaveState::from_modes(1, PhysicalParams::default(), vec![Mode::new(Slot::Z0, Complex64::new(1.0, 0.0), vec![Poly::one()], 0.0)]).unwrap()
    }

    #[test]
    fn derivative_of_gaussian() {
        let d = OperatorExpr::DdX(0).apply(&gaussian()).unwrap();
        assert_eq!(d.modes()[0].polys[0], Poly::from_real(&[0.0, -1.0]));
    }

    #[test]
    fn right_i_twice_negates() {
        let s = WaveState::from_modes(
            1,
            PhysicalParams::default(),
            vec![
                Mode::new(Slot::Z0, Complex64::new(0.5, 0.2), vec![Poly::from_real(&[1.0, 3.0])], -0.5),
                Mode::new(Slot::Z1, Complex64::new(-1.0, 0.7), vec![Poly::from_real(&[2.0])], 1.5),
            ],
        )
        .unwrap();
        let twice = OperatorExpr::Compose(vec![OperatorExpr::RightI, OperatorExpr::RightI]).apply(&s).unwrap();
        assert_eq!(twice, s.scale(-1.0));
    }

    #[test]
    fn out_of_range_dimension() {
        assert!(OperatorExpr::MulX(1).apply(&gaussian()).is_err());
    }

    #[test]
    fn identity_is_noop() {
        let g = gaussian();
        assert_eq!(OperatorExpr::identity().apply(&g).unwrap(), g);
    }
}
