//! Exact Gaussian moment integrals.

use super::compensated::Dd;

/// `sqrt(pi)` split into two words.
pub(crate) const SQRT_PI_DD: Dd = Dd::new(1.772453850905516, -7.666586499825799e-17);

/// `∫ x^k e^{-x²} dx` over the real line: zero for odd `k`, `Γ((k+1)/2)` for even `k`.
pub fn gaussian_moment(k: usize) -> f64 {
    gaussian_moment_dd(k).to_f64()
}

/// `∫₀^∞ ρ^{2k} e^{-ρ²} ρ² dρ = Γ(k + 3/2) / 2`.
pub fn radial_moment(k: usize) -> f64 {
    radial_moment_dd(k).to_f64()
}

pub(crate) fn gaussian_moment_dd(k: usize) -> Dd {
    if k % 2 == 1 {
        return Dd::ZERO;
    }
    // M(k) = (k-1)/2 · M(k-2), M(0) = sqrt(pi)
    let mut m = SQRT_PI_DD;
    let mut j = 2;
    while j <= k {
        m = m.mul_f64((j - 1) as f64 / 2.0);
        j += 2;
    }
    m
}

pub(crate) fn radial_moment_dd(k: usize) -> Dd {
    gaussian_moment_dd(2 * k + 2).mul_f64(0.5)
}

/// Table of `gaussian_moment_dd(0..=max)`, built by one pass of the recursion.
pub(crate) fn gaussian_moment_table(max: usize) -> Vec<Dd> {
    let mut out = Vec::with_capacity(max + 1);
    let mut even = SQRT_PI_DD;
    for k in 0..=max {
        if k % 2 == 1 {
            out.push(Dd::ZERO);
        } else {
            if k > 0 {
                even = even.mul_f64((k - 1) as f64 / 2.0);
            }
            out.push(even);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn low_order_values() {
        assert!((gaussian_moment(0) - PI.sqrt()).abs() < 1e-15);
        assert_eq!(gaussian_moment(1), 0.0);
        assert!((gaussian_moment(2) - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((radial_moment(0) - PI.sqrt() / 4.0).abs() < 1e-15);
        assert!((radial_moment(1) - 3.0 * PI.sqrt() / 8.0).abs() < 1e-15);
    }

    #[test]
    fn radial_is_half_the_even_gaussian_moment() {
        for k in 0..=20 {
            let lhs = radial_moment(k);
            let rhs = 0.5 * gaussian_moment(2 * k + 2);
            assert!((lhs - rhs).abs() <= 1e-15 * rhs, "k = {k}");
        }
    }

    #[test]
    fn table_matches_direct() {
        let table = gaussian_moment_table(30);
        for (k, m) in table.iter().enumerate() {
            assert_eq!(m.to_f64(), gaussian_moment(k));
        }
    }
}
