//! Real inner product `∫ Sc(Φ conj Ψ)` and expectation values.

use num_complex::Complex64;

use super::operator::OperatorExpr;
use super::poly::Poly;
use super::state::WaveState;
use crate::error::{Error, Result};
use crate::specfun::compensated::Dd;
use crate::specfun::{gaussian_moment_table, QuadratureKind, QuadratureRule};

/// Tolerance on `|<Ψ,Ψ> - 1|` before an expectation value is taken.
pub const NORMALIZATION_TOL: f64 = 1e-8;

fn check_pair(a: &WaveState, b: &WaveState) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch { expected: a.dims(), got: b.dims() });
    }
    if a.params() != b.params() {
        return Err(Error::ParamsMismatch);
    }
    Ok(())
}

/// `∫ p(X) conj(q(X)) e^{-X²} dX` in double-word arithmetic.
fn gaussian_overlap(p: &Poly, q: &Poly, moments: &[Dd]) -> Complex64 {
    let (pc, qc) = (p.coeffs(), q.coeffs());
    if pc.is_empty() || qc.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    let mut re = Dd::ZERO;
    let mut im = Dd::ZERO;
    for (a, pa) in pc.iter().enumerate() {
        for (b, qb) in qc.iter().enumerate() {
            if (a + b) % 2 == 1 {
                continue;
            }
            let m = moments[a + b];
            // pa · conj(qb)
            let r = Dd::prod(pa.re, qb.re).add(Dd::prod(pa.im, qb.im));
            let i = Dd::prod(pa.im, qb.re).add(Dd::prod(pa.re, qb.im).neg());
            re = re.add(r.mul(m));
            im = im.add(i.mul(m));
        }
    }
    Complex64::new(re.to_f64(), im.to_f64())
}

/// Jacobian `(ħ/μω)^{p/2}` turning `d^pX` into `d^px`.
fn jacobian(s: &WaveState) -> f64 {
    s.params().length_scale_inv().powi(-(s.dims() as i32))
}

/// Real inner product evaluated exactly from Gaussian moments.
pub fn inner(a: &WaveState, b: &WaveState, t: f64) -> Result<f64> {
    check_pair(a, b)?;
    let max_deg = (0..a.dims()).map(|k| a.max_degree(k) + b.max_degree(k)).max().unwrap_or(0);
    let moments = gaussian_moment_table(max_deg);
    let mut acc = Dd::ZERO;
    for ma in a.modes() {
        for mb in b.modes().iter().filter(|mb| mb.slot == ma.slot) {
            let phase = Complex64::from_polar(1.0, (ma.freq - mb.freq) * t);
            let spatial = ma
                .polys
                .iter()
                .zip(&mb.polys)
                .fold(Complex64::new(1.0, 0.0), |acc, (p, q)| acc * gaussian_overlap(p, q, &moments));
            let term = ma.coeff * mb.coeff.conj() * phase * spatial;
            acc = acc.add(Dd::from_f64(term.re));
        }
    }
    Ok(acc.to_f64() * jacobian(a))
}

/// Quadrature estimate of [`inner`], independent of the moment expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    /// False when some integrand degree exceeds what the rules integrate exactly.
    pub sufficient: bool,
}

/// Evaluates `∫ Sc(a conj b)` on a tensor grid of Gauss–Hermite rules, one per
/// dimension. The `e^{-ΣX²}` weight is absorbed by evaluating only the
/// polynomial parts of both states.
pub fn inner_quad(a: &WaveState, b: &WaveState, t: f64, rules: &[QuadratureRule]) -> Result<QuadEstimate> {
    check_pair(a, b)?;
    if rules.len() != a.dims() {
        return Err(Error::DimensionMismatch { expected: a.dims(), got: rules.len() });
    }
    if let Some(r) = rules.iter().find(|r| r.kind != QuadratureKind::GaussHermite) {
        return Err(Error::Domain(format!("inner_quad needs gauss_hermite rules, got {}", r.kind)));
    }
    let sufficient = (0..a.dims()).all(|k| a.max_degree(k) + b.max_degree(k) <= rules[k].exact_degree());
    let dims = a.dims();
    let mut idx = vec![0usize; dims];
    let mut point = vec![0.0; dims];
    let mut acc = Dd::ZERO;
    'grid: loop {
        let mut w = 1.0;
        for k in 0..dims {
            point[k] = rules[k].nodes[idx[k]];
            w *= rules[k].weights[idx[k]];
        }
        let (a0, a1) = a.polynomial_part(&point, t);
        let (b0, b1) = b.polynomial_part(&point, t);
        let sc = (a0 * b0.conj()).re + (a1 * b1.conj()).re;
        acc = acc.add(Dd::prod(w, sc));
        for k in 0..dims {
            idx[k] += 1;
            if idx[k] < rules[k].order() {
                continue 'grid;
            }
            idx[k] = 0;
        }
        break;
    }
    Ok(QuadEstimate { value: acc.to_f64() * jacobian(a), sufficient })
}

pub fn norm_sqr(s: &WaveState, t: f64) -> f64 {
    inner(s, s, t).expect("a state is always compatible with itself")
}

/// `sqrt(<Ψ,Ψ>)`, clamped at zero against rounding.
pub fn l2_norm(s: &WaveState, t: f64) -> f64 {
    norm_sqr(s, t).max(0.0).sqrt()
}

/// `<Ô> = ∫ Sc((ÔΨ) conj Ψ)`. The state must be normalized to within
/// [`NORMALIZATION_TOL`].
pub fn expectation(op: &OperatorExpr, s: &WaveState, t: f64) -> Result<f64> {
    let n = norm_sqr(s, t);
    if (n - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized { norm: n });
    }
    expectation_unchecked(op, s, t)
}

/// [`expectation`] without the normalization check.
pub fn expectation_unchecked(op: &OperatorExpr, s: &WaveState, t: f64) -> Result<f64> {
    inner(&op.apply(s)?, s, t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionicExpectation {
    pub total: f64,
    /// `<Ô>`
    pub first: f64,
    /// `<(Ô|i)>`
    pub second: f64,
}

/// `<Ô_H> = <Ô> + <(Ô|i)>`.
pub fn expectation_quaternionic(op: &OperatorExpr, s: &WaveState, t: f64) -> Result<QuaternionicExpectation> {
    let first = expectation(op, s, t)?;
    let second = expectation(&op.clone().right_i_of(), s, t)?;
    Ok(QuaternionicExpectation { total: first + second, first, second })
}
