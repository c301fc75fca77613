//! Exact representation of quaternionic wavefunctions as Gaussian-enveloped
//! polynomial modes, with the real inner product and operator algebra.
//!
//! A [`WaveState`] over `p` dimensions stands for
//!
//! ```text
//! Ψ(X, t) = Σ_modes coeff · e^{iνt} · Π_k poly_k(X_k) · e^{-Σ X_k²/2}
//! ```
//!
//! with each mode placed in the `z0` or `z1` slot of `Ψ = z0 + z1 j`. All
//! polynomials are in the dimensionless coordinates `X = sqrt(μω/ħ) x`;
//! [`WaveState::evaluate`] takes physical coordinates.
//!
//! The inner product is `<Φ, Ψ> = ∫ Sc(Φ conj Ψ) d^p x`. The symmetrized
//! expression `½(Φ Ψ̄ + Φ̄ Ψ)` is not real for general quaternionic
//! arguments (`Φ = i`, `Ψ = j` gives `-k`); its scalar part is what is
//! computed here, and it agrees with the symmetrized form whenever that form
//! is real.

mod inner;
mod operator;
mod poly;
mod state;

pub use inner::{
    expectation, expectation_quaternionic, expectation_unchecked, inner, inner_quad, l2_norm, norm_sqr,
    QuadEstimate, QuaternionicExpectation, NORMALIZATION_TOL,
};
pub use operator::OperatorExpr;
pub use poly::Poly;
pub use state::{Mode, Slot, WaveState};
pub use crate::params::PhysicalParams;
