//! Gram matrices of real inner products over candidate basis states.

/// Whether two basis elements satisfy the parallelism condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallelismEntry {
    pub row: usize,
    pub col: usize,
    /// `Im[Ψ_a conj Ψ_b] = 0` held at every sample point.
    pub parallel_at_samples: bool,
    /// The two polarization angles coincide.
    pub theta_equal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<L> {
    pub labels: Vec<L>,
    /// Computed `<Ψ_a, Ψ_b>`.
    pub entries: Vec<Vec<f64>>,
    /// The same matrix from its closed form, when one is known.
    pub closed_form: Option<Vec<Vec<f64>>>,
    pub time: f64,
    pub parallelism: Vec<ParallelismEntry>,
}

impl<L> GramMatrix<L> {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let n = self.size();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }

    pub fn max_deviation_from_identity(&self) -> f64 {
        max_abs_diff(&self.entries, &identity(self.size()))
    }

    /// `None` if there is no closed form.
    pub fn max_deviation_from_closed_form(&self) -> Option<f64> {
        self.closed_form.as_ref().map(|c| max_abs_diff(&self.entries, c))
    }

    /// Largest `|G_ab|` with `a ≠ b`.
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.size();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.entries[i][j].abs());
                }
            }
        }
        worst
    }

    /// True when some off-diagonal entry exceeds `tol` in magnitude.
    pub fn is_non_orthogonal(&self, tol: f64) -> bool {
        self.max_off_diagonal() > tol
    }
}

pub(crate) fn identity(n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

pub fn max_abs_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max)
}

/// Builds the matrix `f(i, j)` for an `n × n` index range.
pub(crate) fn tabulate<E>(n: usize, mut f: impl FnMut(usize, usize) -> Result<f64, E>) -> Result<Vec<Vec<f64>>, E> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

/// Parallelism table for all unordered pairs, given sampled values per label.
pub(crate) fn parallelism_table(
    samples: &[Vec<crate::Quaternion>],
    thetas: &[f64],
    tol: f64,
) -> Vec<ParallelismEntry> {
    let n = samples.len();
    let mut out = Vec::new();
    for row in 0..n {
        for col in (row + 1)..n {
            let parallel_at_samples = samples[row]
                .iter()
                .zip(&samples[col])
                .all(|(p, q)| p.is_parallel(*q, tol));
            out.push(ParallelismEntry { row, col, parallel_at_samples, theta_equal: thetas[row] == thetas[col] });
        }
    }
    out
}
