mod common;

use std::f64::consts::PI;

use common::random_state;
use hqho::multidim::{
    angular_gram, cartesian_energy, default_radial_grid, full_spherical_energy, product_energy_sum, product_state,
    radial_energy, radial_gram, radial_ode_residual, radial_state, QSphericalHarmonic, AZIMUTH_ORDER, POLAR_ORDER,
};
use hqho::oscillator1d::QPair;
use hqho::wavestate::{norm_sqr, PhysicalParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn tensor_product_is_pointwise_quaternion_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let p = PhysicalParams::default();
    for _ in 0..30 {
        let a = random_state(&mut rng, 1, 6, &p);
        let b = random_state(&mut rng, 1, 6, &p);
        let ab = a.tensor(&b).unwrap();
        let (x, y, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let lhs = ab.evaluate(&[x, y], t).unwrap();
        let rhs = a.evaluate(&[x], t).unwrap() * b.evaluate(&[y], t).unwrap();
        assert!((lhs - rhs).norm() <= 1e-13 * rhs.norm().max(1.0));
    }
}

#[test]
fn product_states_are_normalized_with_additive_energy() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = PhysicalParams::default();
    for dims in 1..=3 {
        for _ in 0..8 {
            let factors: Vec<QPair> = (0..dims)
                .map(|_| QPair::new(rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0.0..2.0 * PI)))
                .collect();
            let s = product_state(&factors, &p).unwrap();
            assert!((norm_sqr(&s, 0.0) - 1.0).abs() <= 1e-10);
            let e = cartesian_energy(&s).unwrap();
            assert!((e - product_energy_sum(&factors, &p)).abs() <= 1e-10);
            let mut rev = factors.clone();
            rev.reverse();
            let r = product_state(&rev, &p).unwrap();
            assert!((norm_sqr(&r, 0.0) - 1.0).abs() <= 1e-10);
            assert!((cartesian_energy(&r).unwrap() - e).abs() <= 1e-10);
        }
    }
}

#[test]
fn radial_and_angular_grams_match_closed_forms() {
    let p = PhysicalParams::default();
    for l in 0..=3 {
        let states: Vec<_> = (0..=4)
            .flat_map(|u| (0..=4).map(move |v| (u, v)))
            .map(|(u, v)| radial_state(u, v, l, 0.6, &p).unwrap())
            .collect();
        let g = radial_gram(&states).unwrap();
        assert!(g.max_deviation_from_closed_form().unwrap() <= 1e-10);
    }
    let mut specs = Vec::new();
    for l in 0..=3usize {
        let li = l as i64;
        for m1 in -li..=li {
            specs.push(QSphericalHarmonic::new(l, m1, -m1, 0.8).unwrap());
        }
    }
    let g = angular_gram(&specs, POLAR_ORDER, AZIMUTH_ORDER).unwrap();
    assert!(g.max_deviation_from_closed_form().unwrap() <= 1e-9);
}

#[test]
fn radial_residual_only_at_integer_spaced_levels() {
    let p = PhysicalParams::default();
    let grid = default_radial_grid();
    for u in 0..=3 {
        for l in 0..=3 {
            let s = radial_state(u, u, l, 0.4, &p).unwrap();
            let e = radial_energy(u, l, &p);
            assert!(radial_ode_residual(&s, (e, e), &grid).unwrap() <= 1e-9);
            for shift in [-2.0, -1.0, 1.0, 2.0] {
                assert!(radial_ode_residual(&s, (e + shift, e + shift), &grid).unwrap() > 1e-3);
            }
        }
    }
}

#[test]
fn azimuthal_numbers_do_not_enter_the_energy() {
    // the energy depends on (u, v, ℓ, θ) only; every (m1, m2) pairing shares it
    let p = PhysicalParams::default();
    let e = full_spherical_energy(1, 2, 2, 0.5, &p);
    for m1 in -2..=2 {
        for m2 in -2..=2 {
            let y = QSphericalHarmonic::new(2, m1, m2, 0.5).unwrap();
            assert_eq!(full_spherical_energy(1, 2, y.l, y.theta, &p), e);
        }
    }
}
