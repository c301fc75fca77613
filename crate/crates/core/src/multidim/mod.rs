//! Oscillators in several dimensions: Cartesian products, split states whose
//! complex and `j` parts vibrate along different axes, and the spherical
//! radial and angular solutions.

mod angular;
mod cartesian;
mod radial;

pub use angular::{
    angular_closed_form_entry, angular_gram, angular_inner, QSphericalHarmonic, AZIMUTH_ORDER, POLAR_ORDER,
};
pub use cartesian::{cartesian_energy, product_energy_sum, product_state, split_state, SplitSpec};
pub use radial::{
    default_radial_grid, full_spherical_energy, full_spherical_energy_expectation, radial_energy, radial_gram,
    radial_inner, radial_ode_residual, radial_state, RadialState,
};
