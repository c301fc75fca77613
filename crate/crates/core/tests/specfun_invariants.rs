use std::f64::consts::PI;

use hqho::specfun::{
    gaussian_moment, hermite_coeffs, laguerre, make_rule, radial_moment, sph_harm, QuadratureKind,
};

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[test]
fn hermite_orthogonality_from_moments() {
    for n in 0..=15 {
        let hn = hermite_coeffs(n).unwrap();
        for k in 0..=15 {
            let hk = hermite_coeffs(k).unwrap();
            let mut sum = 0.0;
            for (a, ca) in hn.iter().enumerate() {
                for (b, cb) in hk.iter().enumerate() {
                    sum += ca * cb * gaussian_moment(a + b);
                }
            }
            let scale = (2f64.powi(n as i32) * factorial(n) * 2f64.powi(k as i32) * factorial(k)).sqrt() * PI.sqrt();
            let expect = if n == k { scale } else { 0.0 };
            assert!((sum - expect).abs() <= 1e-10 * scale, "n={n} k={k}: {sum} vs {expect}");
        }
    }
}

#[test]
fn laguerre_orthogonality_on_half_line() {
    // ∫₀^∞ L_u^α(y) L_u'^α(y) y^α e^{-y} dy with α = ℓ + 1/2, written in ρ = sqrt(y)
    // as 2 ∫ L_u(ρ²) L_u'(ρ²) ρ^{2ℓ} ρ² e^{-ρ²} dρ.
    let rule = make_rule(QuadratureKind::HalfLineGaussian, 40).unwrap();
    for l in 0..=3usize {
        let alpha = l as f64 + 0.5;
        for u in 0..=10usize {
            for v in 0..=10usize {
                let q = 2.0
                    * rule.integrate(|r| {
                        let y = r * r;
                        laguerre(u, alpha, y).unwrap() * laguerre(v, alpha, y).unwrap() * y.powi(l as i32)
                    });
                // Γ(u + α + 1) / u!
                let norm = hqho::specfun::gamma(u as f64 + alpha + 1.0) / factorial(u);
                let scale = (norm * hqho::specfun::gamma(v as f64 + alpha + 1.0) / factorial(v)).sqrt();
                let expect = if u == v { norm } else { 0.0 };
                assert!((q - expect).abs() <= 1e-9 * scale, "l={l} u={u} v={v}: {q} vs {expect}");
            }
        }
    }
}

#[test]
fn spherical_harmonics_orthonormal() {
    let gl = make_rule(QuadratureKind::GaussLegendre, 64).unwrap();
    let up = make_rule(QuadratureKind::UniformPeriodic, 128).unwrap();
    let mut labels = Vec::new();
    for l in 0..=8usize {
        for m in -(l as i64)..=(l as i64) {
            labels.push((l, m));
        }
    }
    let samples: Vec<Vec<num_complex::Complex64>> = labels
        .iter()
        .map(|&(l, m)| {
            gl.nodes
                .iter()
                .flat_map(|&x| up.nodes.iter().map(move |&p| sph_harm(l, m, x.acos(), p).unwrap()))
                .collect()
        })
        .collect();
    let weights: Vec<f64> = gl.weights.iter().flat_map(|&wx| up.weights.iter().map(move |&wp| wx * wp)).collect();
    for (i, a) in samples.iter().enumerate() {
        for (j, b) in samples.iter().enumerate().skip(i) {
            let s: num_complex::Complex64 = a.iter().zip(b).zip(&weights).map(|((ya, yb), w)| ya * yb.conj() * *w).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            assert!((s.re - expect).abs() < 1e-10 && s.im.abs() < 1e-10, "{:?} vs {:?}: {s}", labels[i], labels[j]);
        }
    }
}

#[test]
fn gauss_hermite_quadrature_confirms_moments() {
    let rule = make_rule(QuadratureKind::GaussHermite, 30).unwrap();
    for k in (0..=40).step_by(2) {
        let q = rule.integrate(|x| x.powi(k as i32));
        assert!((q - gaussian_moment(k)).abs() <= 1e-12 * gaussian_moment(k), "k = {k}");
    }
    assert!((radial_moment(3) - 0.5 * gaussian_moment(8)).abs() < 1e-14);
}
