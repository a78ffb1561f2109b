//! Spectra of signed graphs, the closed-form spectra of total graphs of
//! regular signed graphs, main eigenvalues, and the largest-eigenvalue bound
//! for total graphs.

use thiserror::Error;

use crate::eigen::decompose;
use crate::graph::SignedGraph;
use crate::matrix::SymMatrix;
use crate::operators::Variant;

/// Eigenvalues closer than this are treated as one eigenvalue.
pub const GROUPING_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {degree} is below the required minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has no edges")]
    Edgeless,
}

/// Multiset of real eigenvalues, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tolerance: GROUPING_TOLERANCE }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Distinct eigenvalues (group means) with multiplicities. Consecutive
    /// values within the tolerance fall into one group.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        group_runs(&self.values, self.tolerance)
            .into_iter()
            .map(|(start, end)| {
                let run = &self.values[start..end];
                (run.iter().sum::<f64>() / run.len() as f64, run.len())
            })
            .collect()
    }

    /// Largest pairwise gap between the sorted multisets, or `None` if the
    /// sizes differ.
    pub fn max_difference(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    pub fn approx_eq(&self, other: &Spectrum, tolerance: f64) -> bool {
        self.max_difference(other).is_some_and(|d| d <= tolerance)
    }

    pub fn negated(&self) -> Spectrum {
        Spectrum::new(self.values.iter().map(|x| -x).collect()).with_tolerance(self.tolerance)
    }
}

/// `[start, end)` index runs of a descending sequence whose neighbors differ
/// by at most `tolerance`.
fn group_runs(values: &[f64], tolerance: f64) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > tolerance {
            if i > start {
                runs.push((start, i));
            }
            start = i;
        }
    }
    runs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Adjacency,
    Laplacian,
}

pub fn eigenvalues(m: &SymMatrix) -> Spectrum {
    Spectrum::new(decompose(m).values)
}

/// Eigenvalues of `A_Σ` or `L_Σ`.
pub fn spectrum(g: &SignedGraph, which: Which) -> Spectrum {
    let m = match which {
        Which::Adjacency => g.adjacency_matrix(),
        Which::Laplacian => g.laplacian_matrix(),
    };
    eigenvalues(&m.to_sym().expect("adjacency and Laplacian are symmetric"))
}

fn regular_degree_at_least(g: &SignedGraph, min: usize) -> Result<usize, SpectralError> {
    if g.vertex_count() == 0 {
        return Err(SpectralError::Empty);
    }
    let r = g.regular_degree().ok_or(SpectralError::NotRegular)?;
    if r < min {
        return Err(SpectralError::DegreeTooSmall { degree: r, min });
    }
    Ok(r)
}

/// Spectrum of a total graph of an `r`-regular signed graph on `n` vertices
/// with spectrum `root`:
///
/// * combinatorial: `2` with multiplicity `m - n` and
///   `(2 + 2λ - r ± sqrt(r² - 4λ + 4)) / 2` for each root eigenvalue `λ`;
/// * spectral: `-2` with multiplicity `m - n` and
///   `(r - 2 ± sqrt((r - 2λ)² + 4(λ + 1))) / 2`.
///
/// `m - n = (r/2 - 1) n`, kept integral for odd `r`.
pub fn total_spectrum_from_root(root: &Spectrum, r: usize, variant: Variant) -> Spectrum {
    let n = root.len();
    let m = r * n / 2;
    let rf = r as f64;
    let constant = match variant {
        Variant::Combinatorial => 2.0,
        Variant::Spectral => -2.0,
    };
    let mut values = vec![constant; m.saturating_sub(n)];
    for &l in root.values() {
        let (centre, radius) = match variant {
            Variant::Combinatorial => (2.0 + 2.0 * l - rf, (rf * rf - 4.0 * l + 4.0).max(0.0).sqrt()),
            Variant::Spectral => (rf - 2.0, spectral_radicand(rf, l).sqrt()),
        };
        values.push((centre + radius) / 2.0);
        values.push((centre - radius) / 2.0);
    }
    Spectrum::new(values)
}

/// `(r - 2λ)² + 4(λ + 1)`, clamped at zero.
fn spectral_radicand(r: f64, l: f64) -> f64 {
    ((r - 2.0 * l).powi(2) + 4.0 * (l + 1.0)).max(0.0)
}

/// Closed-form spectrum of `T_*(Σ)` for an `r`-regular `Σ`, `r >= 2`.
pub fn total_spectrum_formula(g: &SignedGraph, variant: Variant) -> Result<Spectrum, SpectralError> {
    let r = regular_degree_at_least(g, 2)?;
    Ok(total_spectrum_from_root(&spectrum(g, Which::Adjacency), r, variant))
}

/// Interval containing the spectrum of `T_*(Σ)` for `r`-regular `Σ` with
/// extreme eigenvalues `λ_1 >= λ_n`:
///
/// * combinatorial (`r >= 4`):
///   `[(2 + 2λ_n - r - sqrt(r² - 4λ_n + 4)) / 2, (2 + 2λ_1 - r + sqrt(r² - 4λ_1 + 4)) / 2]`;
/// * spectral (`r >= 2`): `[(r - 2 - f(λ_n)) / 2, (r - 2 + f(λ_n)) / 2]` with
///   `f(λ) = sqrt((r - 2λ)² + 4(λ + 1))`.
pub fn spectrum_interval(g: &SignedGraph, variant: Variant) -> Result<(f64, f64), SpectralError> {
    let min = match variant {
        Variant::Combinatorial => 4,
        Variant::Spectral => 2,
    };
    let r = regular_degree_at_least(g, min)?;
    let spec = spectrum(g, Which::Adjacency);
    let rf = r as f64;
    let largest = spec.largest().expect("non-empty");
    let smallest = spec.smallest().expect("non-empty");
    Ok(match variant {
        // The pair of root-eigenvalue branches evaluated at the extreme
        // eigenvalues; both are increasing in λ once r >= 4, and the
        // constant eigenvalue 2 lies inside because λ_1 >= 1.
        Variant::Combinatorial => (
            (2.0 + 2.0 * smallest - rf - (rf * rf - 4.0 * smallest + 4.0).max(0.0).sqrt()) / 2.0,
            (2.0 + 2.0 * largest - rf + (rf * rf - 4.0 * largest + 4.0).max(0.0).sqrt()) / 2.0,
        ),
        Variant::Spectral => {
            let f = spectral_radicand(rf, smallest).sqrt();
            ((rf - 2.0 - f) / 2.0, (rf - 2.0 + f) / 2.0)
        }
    })
}

/// Distinct eigenvalues whose eigenspace is not orthogonal to the all-ones
/// vector, each with `||P j||²`, the squared length of the projection of `j`
/// onto its eigenspace.
#[derive(Clone, Debug, PartialEq)]
pub struct MainSpectrum {
    pub values: Vec<f64>,
    pub projections: Vec<f64>,
}

/// Eigenvalues are grouped within `GROUPING_TOLERANCE`; a group is main
/// when `||P j|| > 1e-6 * sqrt(order)`.
pub fn main_eigenvalues(g: &SignedGraph) -> Result<MainSpectrum, SpectralError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    let a = g.adjacency_matrix().to_sym().expect("adjacency is symmetric");
    let eig = decompose(&a);
    let threshold = 1e-6 * (n as f64).sqrt();
    let mut out = MainSpectrum { values: Vec::new(), projections: Vec::new() };
    for (start, end) in group_runs(&eig.values, GROUPING_TOLERANCE) {
        let weight: f64 = (start..end)
            .map(|k| {
                let dot: f64 = eig.vector(k).iter().sum();
                dot * dot
            })
            .sum();
        if weight.sqrt() > threshold {
            let mean = eig.values[start..end].iter().sum::<f64>() / (end - start) as f64;
            out.values.push(mean);
            out.projections.push(weight);
        }
    }
    Ok(out)
}

/// `max_i (-d_i + sqrt(5 d_i² + 4(d_i m_i - 4))) / 2` over non-isolated
/// vertices, `m_i` the mean degree of the neighbors of `i`. Valid as an upper
/// bound on the largest eigenvalue when every vertex lies on a negative
/// triangle, as in total graphs.
pub fn lambda_max_bound(g: &SignedGraph) -> Result<f64, SpectralError> {
    if g.edge_count() == 0 {
        return Err(SpectralError::Edgeless);
    }
    let degrees = g.degrees();
    let bound = (0..g.vertex_count())
        .filter(|&i| degrees[i] > 0)
        .map(|i| {
            let d = degrees[i] as f64;
            let mean = g.neighbors(i).iter().map(|&(w, _)| degrees[w] as f64).sum::<f64>() / d;
            (-d + (5.0 * d * d + 4.0 * (d * mean - 4.0)).max(0.0).sqrt()) / 2.0
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(bound)
}
