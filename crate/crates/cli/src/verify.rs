//! Built-in invariant suites for `hqho verify`.

use hqho::multidim::{
    angular_gram, default_radial_grid, radial_energy, radial_gram, radial_inner, radial_ode_residual, radial_state,
    QSphericalHarmonic, AZIMUTH_ORDER, POLAR_ORDER,
};
use hqho::oscillator1d::{
    build_via_ladder, default_residual_grid, energy_nm, energy_nm_correction_form, ladder, psi_n, psi_nm,
    schrodinger_residual, Ladder, QPair,
};
use hqho::wavestate::{expectation, expectation_quaternionic, l2_norm, OperatorExpr, WaveState};
use hqho::{PhysicalParams, Quaternion};

use crate::descriptor::BuildOptions;
use crate::report::{Bound, Check, Results, VerifyReport};
use crate::{CliError, Suite};

const ANGLES: [f64; 5] = [
    0.0,
    std::f64::consts::FRAC_PI_6,
    std::f64::consts::FRAC_PI_4,
    std::f64::consts::FRAC_PI_3,
    std::f64::consts::FRAC_PI_2,
];

fn diff_norm(a: &WaveState, b: &WaveState) -> Result<f64, CliError> {
    Ok(l2_norm(&a.sub(b)?, 0.0))
}

/// Deterministic, well-spread quaternions for the algebra identities.
fn sample_quaternions() -> Vec<Quaternion> {
    (1..=24)
        .map(|k| {
            let t = k as f64;
            Quaternion::new((1.3 * t).sin() * 2.0, (0.7 * t).cos(), (2.1 * t).sin() - 0.5, (0.37 * t * t).cos() * 1.5)
        })
        .collect()
}

fn algebra(params: &PhysicalParams) -> Result<Vec<Check>, CliError> {
    let qs = sample_quaternions();
    let (mut assoc, mut norm_mul, mut sc_sym) = (0.0f64, 0.0f64, 0.0f64);
    for p in &qs {
        for q in &qs {
            let scale = p.norm() * q.norm();
            norm_mul = norm_mul.max(((*p * *q).norm() - scale).abs() / scale.max(1.0));
            sc_sym = sc_sym.max(((*p * *q).sc() - (*q * *p).sc()).abs() / scale.max(1.0));
            for r in qs.iter().take(6) {
                let d = ((*p * *q) * *r - *p * (*q * *r)).norm();
                assoc = assoc.max(d / (scale * r.norm()).max(1.0));
            }
        }
    }
    let h = OperatorExpr::hamiltonian(0, params);
    let quanta = params.quantum();
    let (mut second, mut forms, mut energy, mut virial, mut right_i) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let ops = [h.clone(), OperatorExpr::position(0), OperatorExpr::position_squared(0)];
    let i4 = OperatorExpr::Compose(vec![OperatorExpr::RightI; 4]);
    for n in 0..=5 {
        for m in 0..=5 {
            for th in ANGLES {
                let q = QPair::new(n, m, th);
                let s = psi_nm(&q, params);
                let e = energy_nm(&q, params);
                forms = forms.max((e - energy_nm_correction_form(&q, params)).abs() / e);
                energy = energy.max((expectation(&h, &s, 0.0)? - e).abs() / quanta);
                for op in &ops {
                    second = second.max(expectation_quaternionic(op, &s, 0.0)?.second.abs());
                }
                let t = expectation(&OperatorExpr::kinetic(0, params), &s, 0.0)?;
                let v = expectation(&OperatorExpr::potential(0, params), &s, 0.0)?;
                virial = virial.max(((t - e / 2.0).abs()).max((v - e / 2.0).abs()) / quanta);
                right_i = right_i.max(diff_norm(&i4.apply(&s)?, &s)?);
            }
        }
    }
    let sa = "algebra";
    Ok(vec![
        Check::at_most(sa, "hamilton_product_associative", assoc, 1e-14),
        Check::at_most(sa, "norm_multiplicative", norm_mul, 1e-14),
        Check::at_most(sa, "scalar_part_symmetric", sc_sym, 1e-14),
        Check::at_most(sa, "right_i_fourth_power_is_identity", right_i, 1e-14),
        Check::at_most(sa, "energy_forms_agree", forms, 1e-14),
        Check::at_most(sa, "energy_expectation_matches_closed_form", energy, 1e-10),
        Check::at_most(sa, "hermitian_second_term_vanishes", second, 1e-10),
        Check::at_most(sa, "virial_split", virial, 1e-10),
    ])
}

fn ladder_suite(params: &PhysicalParams) -> Result<Vec<Check>, CliError> {
    let lower = ladder(Ladder::Lower);
    let raise = ladder(Ladder::Raise);
    let ground = l2_norm(&lower.apply(&psi_n(0, params))?, 0.0);
    let comm = OperatorExpr::commutator(lower, raise);
    let mut worst_comm = 0.0f64;
    for n in 0..=20 {
        let s = psi_n(n, params);
        worst_comm = worst_comm.max(diff_norm(&comm.apply(&s)?, &s)?);
    }
    let mut worst_build = 0.0f64;
    for n in 0..=6 {
        for m in 0..=6 {
            let q = QPair::new(n, m, 0.2 + 0.15 * (n + m) as f64);
            worst_build = worst_build.max(diff_norm(&build_via_ladder(&q, params)?, &psi_nm(&q, params))?);
        }
    }
    Ok(vec![
        Check::at_most("ladder", "lowering_annihilates_ground", ground, 1e-13),
        Check::at_most("ladder", "commutator_is_identity", worst_comm, 1e-10),
        Check::at_most("ladder", "ladder_construction_matches", worst_build, 1e-10),
    ])
}

/// The twenty `Ψ_nm` sampled by the residual suite.
pub fn residual_sample() -> Vec<QPair> {
    (0..20).map(|k| QPair::new(k % 6, (3 * k + 1) % 7, 0.13 + 0.29 * k as f64)).collect()
}

fn residual(params: &PhysicalParams) -> Result<Vec<Check>, CliError> {
    let grid = default_residual_grid(params);
    let t0 = 0.37 / params.omega;
    let mut worst = 0.0f64;
    let mut fd = 0.0f64;
    let h = 1e-5 / params.omega;
    for q in residual_sample() {
        let s = psi_nm(&q, params);
        worst = worst.max(schrodinger_residual(&s, &grid, t0)?);
        let ds = s.time_derivative();
        for &x in grid.iter().step_by(4) {
            let num = (s.evaluate(&[x], t0 + h)? - s.evaluate(&[x], t0 - h)?).scale(0.5 / h);
            fd = fd.max((num - ds.evaluate(&[x], t0)?).norm());
        }
    }
    let mut reduction = 0.0f64;
    for n in 0..=8 {
        let a = psi_nm(&QPair::new(n, 3, 0.0), params);
        let b = psi_n(n, params);
        for &x in &grid {
            reduction = reduction.max((a.evaluate(&[x], t0)? - b.evaluate(&[x], t0)?).norm());
        }
    }
    Ok(vec![
        Check::at_most("residual", "schrodinger_residual", worst, 1e-10),
        Check::at_most("residual", "time_derivative_finite_difference", fd, 1e-6),
        Check::at_most("residual", "theta_zero_reduces_to_complex", reduction, 1e-13),
    ])
}

fn radial(params: &PhysicalParams) -> Result<Vec<Check>, CliError> {
    let grid = default_radial_grid();
    let quanta = params.quantum();
    let (mut at_level, mut off_ratio, mut norm) = (0.0f64, f64::INFINITY, 0.0f64);
    for l in 0..=3 {
        for u in 0..=4 {
            let s = radial_state(u, u, l, 0.0, params)?;
            let e = radial_energy(u, l, params) / quanta;
            at_level = at_level.max(radial_ode_residual(&s, (e, e), &grid)?);
            let peak = grid.iter().map(|&r| s.evaluate(r).norm()).fold(0.0, f64::max);
            for shift in [-1.0, 1.0] {
                let off = radial_ode_residual(&s, (e + shift, e + shift), &grid)?;
                off_ratio = off_ratio.min(off / peak);
            }
        }
    }
    let mut gram_dev = 0.0f64;
    for l in 0..=3 {
        let mut states = Vec::new();
        for u in 0..=4 {
            for v in 0..=4 {
                let s = radial_state(u, v, l, 0.35 + 0.1 * (u + v) as f64, params)?;
                norm = norm.max((radial_inner(&s, &s)? - 1.0).abs());
                states.push(s);
            }
        }
        gram_dev = gram_dev.max(radial_gram(&states)?.max_deviation_from_closed_form().unwrap_or(f64::INFINITY));
    }
    Ok(vec![
        Check::at_most("radial", "residual_at_level", at_level, 1e-9),
        Check::at_least("radial", "residual_off_level_relative", off_ratio, 0.05),
        Check::at_most("radial", "unit_norm", norm, 1e-12),
        Check::at_most("radial", "gram_matches_closed_form", gram_dev, 1e-10),
    ])
}

/// Harmonics with `ℓ ≤ 6`: for each `m1` the `j` slot takes `m2 = -m1` and
/// the cyclically next order.
pub fn angular_sample(conjugate: bool) -> Result<Vec<QSphericalHarmonic>, CliError> {
    let mut specs = Vec::new();
    for l in 0..=6usize {
        let li = l as i64;
        for m1 in -li..=li {
            let next = if m1 == li { -li } else { m1 + 1 };
            for m2 in [-m1, next] {
                let th = 0.2 + 0.05 * (l as f64) + 0.03 * m1 as f64;
                specs.push(QSphericalHarmonic::new(l, m1, m2, th)?.conjugated(conjugate));
            }
        }
    }
    Ok(specs)
}

fn angular(conjugate: bool) -> Result<Vec<Check>, CliError> {
    let g = angular_gram(&angular_sample(conjugate)?, POLAR_ORDER, AZIMUTH_ORDER)?;
    Ok(vec![
        Check::at_most("angular", "gram_matches_closed_form", g.max_deviation_from_closed_form().unwrap_or(f64::INFINITY), 1e-9),
        Check::at_most("angular", "gram_symmetric", g.max_asymmetry(), 1e-12),
    ])
}

/// Runs `suite`. `cap`, when given, replaces the bound of every upper-bound check.
pub fn run(suite: Suite, opts: &BuildOptions, cap: Option<f64>) -> Result<Results, CliError> {
    let p = &opts.params;
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Algebra {
        checks.extend(algebra(p)?);
    }
    if all || suite == Suite::Ladder {
        checks.extend(ladder_suite(p)?);
    }
    if all || suite == Suite::Residual {
        checks.extend(residual(p)?);
    }
    if all || suite == Suite::Radial {
        checks.extend(radial(p)?);
    }
    if all || suite == Suite::Angular {
        checks.extend(angular(opts.conjugate_angular)?);
    }
    let name = match suite {
        Suite::Algebra => "algebra",
        Suite::Ladder => "ladder",
        Suite::Residual => "residual",
        Suite::Radial => "radial",
        Suite::Angular => "angular",
        Suite::All => "all",
    };
    if let Some(cap) = cap {
        for c in checks.iter_mut().filter(|c| c.bound == Bound::AtMost) {
            *c = Check::at_most(&c.suite, &c.name, c.measured, cap);
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(Results::Verify(VerifyReport { suite: name.into(), checks, all_pass }))
}
