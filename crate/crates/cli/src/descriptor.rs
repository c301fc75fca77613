//! Line-delimited JSON state descriptors.
//!
//! One object per line, tagged by `kind`. Blank lines and lines starting with
//! `#` are skipped.
//!
//! ```json
//! {"kind": "ho1d", "n": 1, "m": 2, "theta": 0.785}
//! {"kind": "radial", "u": 0, "v": 1, "l": 2, "theta": 0.3, "params": {"omega": 2.0}}
//! ```

use std::collections::BTreeSet;

use hqho::multidim::{product_state, radial_state, split_state, QSphericalHarmonic, RadialState, SplitSpec};
use hqho::oscillator1d::{psi_nm, QPair};
use hqho::wavestate::WaveState;
use hqho::PhysicalParams;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Per-descriptor override of the command-line physical constants.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsOverride {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
}

impl ParamsOverride {
    fn resolve(&self, base: &PhysicalParams) -> Result<PhysicalParams, CliError> {
        Ok(PhysicalParams::new(
            self.mu.unwrap_or(base.mass),
            self.omega.unwrap_or(base.omega),
            self.hbar.unwrap_or(base.hbar),
        )?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ho1d {
    pub n: usize,
    pub m: usize,
    pub theta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOverride>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Factor {
    pub n: usize,
    pub m: usize,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub factors: Vec<Factor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOverride>,
}

/// Directions in `primary` and `secondary` are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Split {
    pub dims: usize,
    pub primary: Vec<usize>,
    pub secondary: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub theta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub allow_overlap: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOverride>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Radial {
    pub u: usize,
    pub v: usize,
    pub l: usize,
    pub theta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOverride>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spherical {
    pub l: usize,
    pub m1: i64,
    pub m2: i64,
    pub theta: f64,
    /// Conjugate the `j` slot harmonic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugate: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StateDescriptor {
    Ho1d(Ho1d),
    Product(Product),
    Split(Split),
    Radial(Radial),
    Spherical(Spherical),
}

/// A descriptor turned into something the library can compute with.
#[derive(Debug, Clone)]
pub enum Built {
    Wave(WaveState),
    Radial(RadialState),
    Angular(QSphericalHarmonic),
}

/// Settings that apply to every descriptor unless it overrides them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildOptions {
    pub params: PhysicalParams,
    pub allow_overlap: bool,
    pub conjugate_angular: bool,
}

impl StateDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            StateDescriptor::Ho1d(_) => "ho1d",
            StateDescriptor::Product(_) => "product",
            StateDescriptor::Split(_) => "split",
            StateDescriptor::Radial(_) => "radial",
            StateDescriptor::Spherical(_) => "spherical",
        }
    }

    pub fn params(&self, base: &PhysicalParams) -> Result<PhysicalParams, CliError> {
        let over = match self {
            StateDescriptor::Ho1d(d) => d.params,
            StateDescriptor::Product(d) => d.params,
            StateDescriptor::Split(d) => d.params,
            StateDescriptor::Radial(d) => d.params,
            StateDescriptor::Spherical(_) => None,
        };
        over.unwrap_or_default().resolve(base)
    }

    pub fn build(&self, opts: &BuildOptions) -> Result<Built, CliError> {
        let params = self.params(&opts.params)?;
        Ok(match self {
            StateDescriptor::Ho1d(d) => {
                let q = QPair::new(d.n, d.m, d.theta);
                q.validate()?;
                Built::Wave(psi_nm(&q, &params))
            }
            StateDescriptor::Product(d) => {
                let factors: Vec<QPair> = d.factors.iter().map(|f| QPair::new(f.n, f.m, f.theta)).collect();
                Built::Wave(product_state(&factors, &params)?)
            }
            StateDescriptor::Split(d) => Built::Wave(split_state(&d.spec(opts.allow_overlap), &params)?),
            StateDescriptor::Radial(d) => Built::Radial(radial_state(d.u, d.v, d.l, d.theta, &params)?),
            StateDescriptor::Spherical(d) => {
                let conj = d.conjugate.unwrap_or(opts.conjugate_angular);
                Built::Angular(QSphericalHarmonic::new(d.l, d.m1, d.m2, d.theta)?.conjugated(conj))
            }
        })
    }
}

impl Split {
    pub fn spec(&self, allow_overlap: bool) -> SplitSpec {
        SplitSpec {
            dims: self.dims,
            primary: self.primary.iter().copied().collect::<BTreeSet<_>>(),
            secondary: self.secondary.iter().copied().collect::<BTreeSet<_>>(),
            n: self.n,
            m: self.m,
            theta: self.theta,
            allow_overlap: self.allow_overlap.unwrap_or(allow_overlap),
        }
    }
}

pub fn parse_descriptors(text: &str) -> Result<Vec<StateDescriptor>, CliError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let d = serde_json::from_str(line)
            .map_err(|e| CliError::Validation(format!("descriptor on line {}: {e}", idx + 1)))?;
        out.push(d);
    }
    Ok(out)
}
