//! Quaternionic quantum harmonic oscillator in the real-Hilbert-space formalism.
//!
//! States are quaternion-valued wavefunctions `Ψ = z0 + z1 j` expanded over
//! real coefficients. The crate builds the one-dimensional solutions
//! `Ψ_nm = cos θ ψ_n + sin θ ψ̄_m j`, their Cartesian and spherical
//! generalizations, and evaluates real inner products and expectation values
//! both exactly (Gaussian moments) and by quadrature.
//!
//! ```
//! use hqho::oscillator1d::{energy_nm, psi_nm, QPair};
//! use hqho::wavestate::{expectation, OperatorExpr, PhysicalParams};
//!
//! let params = PhysicalParams::default();
//! let q = QPair::new(1, 2, std::f64::consts::FRAC_PI_4);
//! let state = psi_nm(&q, &params);
//! let e = expectation(&OperatorExpr::hamiltonian(0, &params), &state, 0.0).unwrap();
//! assert!((e - energy_nm(&q, &params)).abs() < 1e-12);
//! assert!((e - 2.0).abs() < 1e-12);
//! ```

pub mod error;
pub mod gram;
pub mod multidim;
pub mod oscillator1d;
mod params;
pub mod quaternion;
pub mod specfun;
pub mod wavestate;

pub use error::{Error, Result};
pub use params::PhysicalParams;
pub use quaternion::{Quaternion, SymplecticPair};
