use crate::error::{Error, Result};

/// Mass, angular frequency and reduced Planck constant. Natural units by default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        PhysicalParams { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl PhysicalParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        let p = PhysicalParams { mass, omega, hbar };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("mass", self.mass), ("omega", self.omega), ("hbar", self.hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Validation(format!("{name} must be finite and positive, got {v}")));
            }
        }
        Ok(())
    }

    /// `sqrt(μω/ħ)`: multiplies a physical coordinate to give the dimensionless `X`.
    pub fn length_scale_inv(&self) -> f64 {
        (self.mass * self.omega / self.hbar).sqrt()
    }

    pub fn to_dimensionless(&self, x: f64) -> f64 {
        x * self.length_scale_inv()
    }

    pub fn to_physical(&self, big_x: f64) -> f64 {
        big_x / self.length_scale_inv()
    }

    /// `ħω`, the energy unit.
    pub fn quantum(&self) -> f64 {
        self.hbar * self.omega
    }
}
