#![allow(dead_code)]

use hqho::specfun::{hermite_coeffs, hermite_norm_const};
use hqho::wavestate::{Mode, PhysicalParams, Poly, Slot, WaveState};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random state of a few modes: scaled Hermite functions up to `max_degree`,
/// or small random polynomials, each with a random phase frequency.
pub fn random_state(rng: &mut ChaCha8Rng, dims: usize, max_degree: usize, params: &PhysicalParams) -> WaveState {
    let n_modes = rng.gen_range(1..=4);
    let modes = (0..n_modes)
        .map(|_| {
            let slot = if rng.gen_bool(0.5) { Slot::Z0 } else { Slot::Z1 };
            let mut coeff = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let polys = (0..dims)
                .map(|_| {
                    if rng.gen_bool(0.6) {
                        let k = rng.gen_range(0..=max_degree);
                        coeff *= hermite_norm_const(k, params);
                        Poly::from_real(&hermite_coeffs(k).unwrap())
                    } else {
                        let k = rng.gen_range(0..=max_degree.min(6));
                        let c: Vec<Complex64> = (0..=k)
                            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                            .collect();
                        Poly::new(c)
                    }
                })
                .collect();
            Mode::new(slot, coeff, polys, rng.gen_range(-5.0..5.0))
        })
        .collect();
    WaveState::from_modes(dims, *params, modes).unwrap()
}
