//! Special functions, exact Gaussian moments and quadrature rules.

pub(crate) mod compensated;
mod moments;
mod orthopoly;
mod quadrature;
mod sphharm;

pub(crate) use moments::{gaussian_moment_table, radial_moment_dd};
pub use moments::{gaussian_moment, radial_moment};
pub use orthopoly::{
    hermite, hermite_coeffs, hermite_norm_const, laguerre, laguerre_coeffs, laguerre_norm_const,
    gamma, ln_factorial, ln_gamma_half, MAX_DEGREE,
};
pub use quadrature::{gauss_laguerre, make_rule, QuadratureKind, QuadratureRule};
pub use sphharm::{assoc_legendre_normalized, sph_harm};
