//! Report types. Field order is the serialization order.

use serde::{Deserialize, Serialize};

use crate::descriptor::StateDescriptor;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandEcho,
    pub params: ParamsEcho,
    /// `None` when each check carries its own bound.
    pub tolerance: Option<f64>,
    pub inputs: Vec<StateDescriptor>,
    pub results: Results,
    /// Not part of the deterministic body.
    pub footer: Footer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub time: f64,
    pub quad_order: usize,
    pub conjugate_angular: bool,
    pub allow_overlap: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub mu: f64,
    pub omega: f64,
    pub hbar: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Footer {
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Results {
    Spectrum { rows: Vec<SpectrumRow> },
    Gram(GramReport),
    Verify(VerifyReport),
    Sample { rows: Vec<SampleRow> },
}

/// Energies in units of `ħω`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub index: usize,
    pub kind: String,
    pub closed_form: f64,
    pub exact: f64,
    pub quadrature: Option<f64>,
    pub delta_exact: f64,
    pub delta_quadrature: Option<f64>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    pub kind: String,
    pub time: f64,
    pub matrix: Vec<Vec<f64>>,
    pub closed_form: Option<Vec<Vec<f64>>>,
    pub max_deviation_closed_form: Option<f64>,
    pub max_deviation_identity: f64,
    pub max_asymmetry: f64,
    pub max_off_diagonal: f64,
    pub non_orthogonal: bool,
    /// Largest gap between the exact matrix and an independent quadrature.
    pub quadrature_max_delta: Option<f64>,
    /// Spherical harmonics only: largest change in an entry when the column
    /// state's `j` slot is conjugated and the row state's is not. Toggling
    /// both sides leaves every entry unchanged.
    pub conjugation_delta: Option<f64>,
    pub parallelism: Vec<ParallelismRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParallelismRow {
    pub row: usize,
    pub col: usize,
    pub parallel_at_samples: bool,
    pub theta_equal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(suite: &str, name: &str, measured: f64, tolerance: f64) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            measured,
            bound: Bound::AtMost,
            tolerance,
            pass: measured <= tolerance,
        }
    }

    pub fn at_least(suite: &str, name: &str, measured: f64, tolerance: f64) -> Self {
        Check {
            suite: suite.into(),
            name: name.into(),
            measured,
            bound: Bound::AtLeast,
            tolerance,
            pass: measured >= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub x: f64,
    pub re_z0: f64,
    pub im_z0: f64,
    pub re_z1: f64,
    pub im_z1: f64,
    pub abs: f64,
}

#[derive(Serialize)]
struct GramCsvRow {
    row: usize,
    col: usize,
    value: f64,
    closed_form: Option<f64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The results table as CSV. The footer is left out.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.results {
            Results::Spectrum { rows } => rows.iter().try_for_each(|r| w.serialize(r))?,
            Results::Sample { rows } => rows.iter().try_for_each(|r| w.serialize(r))?,
            Results::Verify(v) => v.checks.iter().try_for_each(|r| w.serialize(r))?,
            Results::Gram(g) => {
                for (i, row) in g.matrix.iter().enumerate() {
                    for (j, &value) in row.iter().enumerate() {
                        w.serialize(GramCsvRow {
                            row: i,
                            col: j,
                            value,
                            closed_form: g.closed_form.as_ref().map(|c| c[i][j]),
                        })?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
