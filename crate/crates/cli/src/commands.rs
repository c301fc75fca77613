//! `spectrum`, `gram` and `sample`.

use hqho::gram::{max_abs_diff, GramMatrix, ParallelismEntry};
use hqho::multidim::{
    angular_gram, angular_inner, full_spherical_energy, full_spherical_energy_expectation, product_energy_sum, radial_gram,
    RadialState,
};
use hqho::oscillator1d::{energy_nm, gram as ho_gram, polarization, QPair};
use hqho::specfun::{make_rule, QuadratureKind, QuadratureRule};
use hqho::wavestate::{expectation, inner, inner_quad, OperatorExpr, WaveState};
use hqho::PhysicalParams;

use crate::descriptor::{BuildOptions, Built, StateDescriptor};
use crate::report::{GramReport, ParallelismRow, SampleRow, SpectrumRow};
use crate::CliError;

fn hermite_rules(dims: usize, order: usize) -> Result<Vec<QuadratureRule>, CliError> {
    let rule = make_rule(QuadratureKind::GaussHermite, order)?;
    Ok(vec![rule; dims])
}

/// `<ĤΨ, Ψ> / <Ψ, Ψ>` by tensor Gauss–Hermite quadrature.
fn quadrature_energy(s: &WaveState, t: f64, order: usize) -> Result<f64, CliError> {
    let rules = hermite_rules(s.dims(), order)?;
    let h = OperatorExpr::total_hamiltonian(s.dims(), s.params()).apply(s)?;
    let num = inner_quad(&h, s, t, &rules)?.value;
    let den = inner_quad(s, s, t, &rules)?.value;
    Ok(num / den)
}

/// Closed-form energy of a descriptor, in units of `ħω`.
fn closed_form_energy(d: &StateDescriptor, params: &PhysicalParams) -> Result<f64, CliError> {
    let e = match d {
        StateDescriptor::Ho1d(h) => energy_nm(&QPair::new(h.n, h.m, h.theta), params),
        StateDescriptor::Product(p) => {
            let f: Vec<QPair> = p.factors.iter().map(|f| QPair::new(f.n, f.m, f.theta)).collect();
            product_energy_sum(&f, params)
        }
        StateDescriptor::Split(s) => {
            // slot 0 carries level n on |P| axes and ground elsewhere; slot 1 likewise
            let (c, sn) = polarization(s.theta);
            let dims = s.dims as f64;
            let p0 = s.primary.len() as f64;
            let p1 = s.secondary.len() as f64;
            let e0 = s.n as f64 * p0 + 0.5 * dims;
            let e1 = s.m as f64 * p1 + 0.5 * dims;
            (c * c * e0 + sn * sn * e1) * params.quantum()
        }
        StateDescriptor::Radial(r) => full_spherical_energy(r.u, r.v, r.l, r.theta, params),
        StateDescriptor::Spherical(_) => {
            return Err(CliError::Validation("spherical descriptors have no energy; use radial".into()))
        }
    };
    Ok(e / params.quantum())
}

pub fn spectrum(
    states: &[StateDescriptor],
    opts: &BuildOptions,
    t: f64,
    quad_order: usize,
    tol: f64,
) -> Result<Vec<SpectrumRow>, CliError> {
    let mut rows = Vec::with_capacity(states.len());
    for (index, d) in states.iter().enumerate() {
        let params = d.params(&opts.params)?;
        let closed_form = closed_form_energy(d, &params)?;
        let (exact, quadrature) = match d.build(opts)? {
            Built::Wave(s) => {
                let h = OperatorExpr::total_hamiltonian(s.dims(), &params);
                let exact = expectation(&h, &s, t)? / params.quantum();
                (exact, Some(quadrature_energy(&s, t, quad_order)? / params.quantum()))
            }
            Built::Radial(r) => {
                let e = full_spherical_energy_expectation(r.u, r.v, r.l, r.theta, &params)?;
                (e / params.quantum(), None)
            }
            Built::Angular(_) => unreachable!("rejected by closed_form_energy"),
        };
        let delta_exact = (exact - closed_form).abs();
        let delta_quadrature = quadrature.map(|q| (q - closed_form).abs());
        let agrees = delta_exact <= tol && delta_quadrature.is_none_or(|d| d <= tol);
        rows.push(SpectrumRow {
            index,
            kind: d.kind().into(),
            closed_form,
            exact,
            quadrature,
            delta_exact,
            delta_quadrature,
            agrees,
        });
    }
    Ok(rows)
}

fn parallelism_rows(p: &[ParallelismEntry]) -> Vec<ParallelismRow> {
    p.iter()
        .map(|e| ParallelismRow {
            row: e.row,
            col: e.col,
            parallel_at_samples: e.parallel_at_samples,
            theta_equal: e.theta_equal,
        })
        .collect()
}

fn gram_report<L>(kind: &str, g: &GramMatrix<L>, tol: f64) -> GramReport {
    GramReport {
        kind: kind.into(),
        time: g.time,
        matrix: g.entries.clone(),
        closed_form: g.closed_form.clone(),
        max_deviation_closed_form: g.max_deviation_from_closed_form(),
        max_deviation_identity: g.max_deviation_from_identity(),
        max_asymmetry: g.max_asymmetry(),
        max_off_diagonal: g.max_off_diagonal(),
        non_orthogonal: g.is_non_orthogonal(tol),
        quadrature_max_delta: None,
        conjugation_delta: None,
        parallelism: parallelism_rows(&g.parallelism),
    }
}

fn matrix<E>(n: usize, mut f: impl FnMut(usize, usize) -> Result<f64, E>) -> Result<Vec<Vec<f64>>, E> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

fn quadrature_delta(states: &[WaveState], exact: &[Vec<f64>], t: f64, order: usize) -> Result<f64, CliError> {
    let rules = hermite_rules(states[0].dims(), order)?;
    let quad = matrix(states.len(), |i, j| {
        inner_quad(&states[i], &states[j], t, &rules).map(|q| q.value).map_err(CliError::from)
    })?;
    Ok(max_abs_diff(exact, &quad))
}

fn waves(states: &[StateDescriptor], opts: &BuildOptions) -> Result<Vec<WaveState>, CliError> {
    states
        .iter()
        .map(|d| match d.build(opts)? {
            Built::Wave(w) => Ok(w),
            _ => unreachable!("kind checked by caller"),
        })
        .collect()
}

pub fn gram(
    states: &[StateDescriptor],
    opts: &BuildOptions,
    t: f64,
    quad_order: usize,
    tol: f64,
) -> Result<GramReport, CliError> {
    let kind = states[0].kind();
    if let Some(other) = states.iter().find(|d| d.kind() != kind) {
        return Err(CliError::Validation(format!("gram needs one kind of state, got {kind} and {}", other.kind())));
    }
    let params = states[0].params(&opts.params)?;
    for d in states {
        if d.params(&opts.params)? != params {
            return Err(hqho::Error::ParamsMismatch.into());
        }
    }
    match kind {
        "ho1d" => {
            let pairs: Vec<QPair> = states
                .iter()
                .map(|d| match d {
                    StateDescriptor::Ho1d(h) => QPair::new(h.n, h.m, h.theta),
                    _ => unreachable!(),
                })
                .collect();
            let g = ho_gram(&pairs, t, &params)?;
            let mut r = gram_report(kind, &g, tol);
            r.quadrature_max_delta = Some(quadrature_delta(&waves(states, opts)?, &g.entries, t, quad_order)?);
            Ok(r)
        }
        "product" | "split" => {
            let ws = waves(states, opts)?;
            if let Some(w) = ws.iter().find(|w| w.dims() != ws[0].dims()) {
                return Err(hqho::Error::DimensionMismatch { expected: ws[0].dims(), got: w.dims() }.into());
            }
            let entries = matrix(ws.len(), |i, j| inner(&ws[i], &ws[j], t))?;
            let g = GramMatrix {
                labels: vec![(); ws.len()],
                entries,
                closed_form: None,
                time: t,
                parallelism: Vec::new(),
            };
            let mut r = gram_report(kind, &g, tol);
            r.quadrature_max_delta = Some(quadrature_delta(&ws, &g.entries, t, quad_order)?);
            Ok(r)
        }
        "radial" => {
            let rs: Vec<RadialState> = states
                .iter()
                .map(|d| match d.build(opts)? {
                    Built::Radial(r) => Ok(r),
                    _ => unreachable!(),
                })
                .collect::<Result<_, CliError>>()?;
            let g = radial_gram(&rs)?;
            let rule = make_rule(QuadratureKind::HalfLineGaussian, quad_order)?;
            let quad = matrix::<CliError>(rs.len(), |i, j| {
                // strip the envelope so the rule's own weight takes its place
                Ok(rule.integrate(|rho| {
                    let w = (rho * rho).exp();
                    (rs[i].evaluate(rho) * rs[j].evaluate(rho).conj()).sc() * w
                }))
            })?;
            let mut r = gram_report(kind, &g, tol);
            r.time = t;
            r.quadrature_max_delta = Some(max_abs_diff(&g.entries, &quad));
            Ok(r)
        }
        "spherical" => {
            let specs: Vec<_> = states
                .iter()
                .map(|d| match d.build(opts)? {
                    Built::Angular(a) => Ok(a),
                    _ => unreachable!(),
                })
                .collect::<Result<_, CliError>>()?;
            let g = angular_gram(&specs, quad_order, 2 * quad_order)?;
            let mixed = matrix::<CliError>(specs.len(), |i, j| {
                let b = specs[j].conjugated(!specs[j].conjugate_secondary);
                Ok(angular_inner(&specs[i], &b, quad_order, 2 * quad_order)?)
            })?;
            let mut r = gram_report(kind, &g, tol);
            r.time = t;
            r.conjugation_delta = Some(max_abs_diff(&g.entries, &mixed));
            Ok(r)
        }
        _ => unreachable!("descriptor kinds are closed"),
    }
}

pub fn sample(
    states: &[StateDescriptor],
    opts: &BuildOptions,
    t: f64,
    min: f64,
    max: f64,
    count: usize,
) -> Result<Vec<SampleRow>, CliError> {
    if states.len() != 1 {
        return Err(CliError::Usage(format!("sample takes exactly one state, got {}", states.len())));
    }
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(CliError::Validation(format!("grid needs finite min < max, got [{min}, {max}]")));
    }
    if count < 2 {
        return Err(CliError::Validation(format!("grid needs at least 2 points, got {count}")));
    }
    let built = states[0].build(opts)?;
    let step = (max - min) / (count - 1) as f64;
    (0..count)
        .map(|k| {
            let x = if k + 1 == count { max } else { min + step * k as f64 };
            let q = match &built {
                Built::Wave(w) if w.dims() == 1 => w.evaluate(&[x], t)?,
                Built::Radial(r) => r.evaluate_r(x),
                _ => return Err(CliError::Validation("sample needs a one-dimensional or radial state".into())),
            };
            let z = q.to_symplectic();
            Ok(SampleRow { x, re_z0: z.z0.re, im_z0: z.z0.im, re_z1: z.z1.re, im_z1: z.z1.im, abs: q.norm() })
        })
        .collect()
}
