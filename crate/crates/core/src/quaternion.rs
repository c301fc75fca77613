//! Real quaternions `x0 + x1 i + x2 j + x3 k` and their symplectic split
//! `z0 + z1 j` with complex `z0 = x0 + x1 i`, `z1 = x2 + x3 i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Default absolute tolerance for [`Quaternion::is_parallel`].
pub const PARALLEL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Symplectic components of a quaternion, `q = z0 + z1 j`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymplecticPair {
    pub z0: Complex64,
    pub z1: Complex64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_symplectic(z0: Complex64, z1: Complex64) -> Self {
        Quaternion::new(z0.re, z0.im, z1.re, z1.im)
    }

    pub fn to_symplectic(self) -> SymplecticPair {
        SymplecticPair {
            z0: Complex64::new(self.x0, self.x1),
            z1: Complex64::new(self.x2, self.x3),
        }
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    /// Scalar (real) part.
    pub fn sc(self) -> f64 {
        self.x0
    }

    /// Imaginary part as the vector `(x1, x2, x3)`.
    pub fn im(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn norm_sqr(self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }

    /// Right multiplication by `i`. In symplectic form `(z0, z1) -> (i z0, -i z1)`.
    pub fn right_mul_i(self) -> Self {
        // (x0 + x1 i + x2 j + x3 k) i = -x1 + x0 i + x3 j - x2 k
        Quaternion::new(-self.x1, self.x0, self.x3, -self.x2)
    }

    /// `p` and `q` are parallel when every imaginary component of `p conj(q)`
    /// is within `tol` of zero.
    pub fn is_parallel(self, other: Quaternion, tol: f64) -> bool {
        (self * other.conj()).im().iter().all(|c| c.abs() <= tol)
    }

    pub fn is_finite(self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }
}

impl SymplecticPair {
    pub fn new(z0: Complex64, z1: Complex64) -> Self {
        SymplecticPair { z0, z1 }
    }

    pub fn to_quaternion(self) -> Quaternion {
        Quaternion::from_symplectic(self.z0, self.z1)
    }
}

impl From<SymplecticPair> for Quaternion {
    fn from(p: SymplecticPair) -> Self {
        p.to_quaternion()
    }
}

impl From<f64> for Quaternion {
    fn from(x: f64) -> Self {
        Quaternion::new(x, 0.0, 0.0, 0.0)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 + b.x0, self.x1 + b.x1, self.x2 + b.x2, self.x3 + b.x3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    fn sub(self, b: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 - b.x0, self.x1 - b.x1, self.x2 - b.x2, self.x3 - b.x3)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.x0, self.x1, self.x2, self.x3)
    }
}
