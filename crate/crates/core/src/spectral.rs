//! Dense symmetric eigendecomposition and the vertex energies built on it.
//!
//! The vertex energy of vertex `k` is `sum_i |lambda_i| * u_ik^2` over an
//! orthonormal eigenbasis of the adjacency matrix. It is the `k`-th diagonal
//! entry of `|A| = sum_i |lambda_i| u_i u_i^T`, which [`matrix_abs_diagonal`]
//! computes through a separate path so the two can be checked against each
//! other.

use serde::{Deserialize, Serialize};

use crate::error::SpectralError;

/// Convergence threshold used when callers do not pick one.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;
/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;
/// Negative vertex energies down to this value are treated as roundoff and clamped to 0.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

/// Dense real symmetric matrix, stored row-major. Symmetry is exact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymmetricMatrix {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    /// Evaluates `f` on the upper triangle (`i <= j`) and mirrors it.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                m.set_pair(i, j, f(i, j));
            }
        }
        m
    }

    /// Rejects ragged or non-symmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(SpectralError::DimensionMismatch {
                    expected: dim * dim,
                    got: dim * (dim - 1) + row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        for i in 0..dim {
            for j in 0..i {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(SpectralError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_pair(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.dim + j] = value;
        self.entries[j * self.dim + i] = value;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[f64]>::to_vec)
            .collect()
    }

    /// Largest entrywise absolute difference; `None` when dimensions differ.
    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> Option<f64> {
        (self.dim == other.dim).then(|| {
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Eigenvalues in ascending order with a matching orthonormal eigenbasis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    /// Row-major `dim x dim`; column `i` is the unit eigenvector for `eigenvalues[i]`.
    eigenvectors: Vec<f64>,
    sweeps: usize,
}

impl Spectrum {
    /// Assembles a spectrum from eigenvalues and matching eigenvector columns.
    /// Eigenvalues are sorted ascending and the columns permuted with them;
    /// orthonormality is the caller's responsibility.
    pub fn from_parts(
        eigenvalues: Vec<f64>,
        columns: Vec<Vec<f64>>,
    ) -> Result<Self, SpectralError> {
        let n = eigenvalues.len();
        let got = columns.iter().map(Vec::len).sum::<usize>();
        if columns.len() != n || got != n * n {
            return Err(SpectralError::DimensionMismatch {
                expected: n * n,
                got,
            });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eigenvalues[i].total_cmp(&eigenvalues[j]));
        let mut eigenvectors = vec![0.0; n * n];
        for (col, &src) in order.iter().enumerate() {
            for k in 0..n {
                eigenvectors[k * n + col] = columns[src][k];
            }
        }
        Ok(Spectrum {
            eigenvalues: order.iter().map(|&i| eigenvalues[i]).collect(),
            eigenvectors,
            sweeps: 0,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Component `k` of eigenvector `i`.
    pub fn component(&self, i: usize, k: usize) -> f64 {
        self.eigenvectors[k * self.dim() + i]
    }

    pub fn eigenvector(&self, i: usize) -> Vec<f64> {
        (0..self.dim()).map(|k| self.component(i, k)).collect()
    }

    /// Number of Jacobi sweeps the decomposition took.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// Max-abs entry of `U^T U - I`.
    pub fn orthonormality_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = (0..n)
                    .map(|k| self.component(i, k) * self.component(j, k))
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// Max-abs entry of `A U - U diag(lambda)`.
    pub fn residual(&self, a: &SymmetricMatrix) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for r in 0..n {
                let au: f64 = (0..n).map(|k| a.get(r, k) * self.component(i, k)).sum();
                worst = worst.max((au - self.eigenvalues[i] * self.component(i, r)).abs());
            }
        }
        worst
    }

    /// `U diag(lambda) U^T`.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        let n = self.dim();
        SymmetricMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|i| self.eigenvalues[i] * self.component(i, r) * self.component(i, c))
                .sum()
        })
    }
}

/// Nonnegative per-vertex energies in flat vertex order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexEnergyVector(Vec<f64>);

impl VertexEnergyVector {
    /// Clamps values in `[-NEGATIVE_CLAMP, 0)` to zero. Larger negatives are kept
    /// so that a genuine defect stays visible.
    pub fn new(values: Vec<f64>) -> Self {
        VertexEnergyVector(
            values
                .into_iter()
                .map(|v| {
                    if (-NEGATIVE_CLAMP..0.0).contains(&v) {
                        0.0
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Entrywise absolute differences; `None` on length mismatch.
    pub fn abs_deviations(&self, other: &VertexEnergyVector) -> Option<Vec<f64>> {
        (self.len() == other.len()).then(|| {
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a - b).abs())
                .collect()
        })
    }
}

impl From<Vec<f64>> for VertexEnergyVector {
    fn from(values: Vec<f64>) -> Self {
        VertexEnergyVector::new(values)
    }
}

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps every off-diagonal pair in row order, annihilating each with a plane
/// rotation, until the off-diagonal Frobenius norm is at most `tol` times the
/// Frobenius norm of the input. Rotations are accumulated into the eigenvector
/// matrix, which therefore stays orthonormal to working precision.
pub fn eigendecompose_symmetric(a: &SymmetricMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = a.dim();
    let mut m = a.entries.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = tol * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&m, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].total_cmp(&m[j * n + j]));
    let eigenvalues = order.iter().map(|&i| m[i * n + i]).collect();
    let mut eigenvectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for k in 0..n {
            eigenvectors[k * n + col] = v[k * n + src];
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        sweeps,
    })
}

fn off_diagonal_norm(m: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += m[p * n + q] * m[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// One Jacobi rotation zeroing `m[p][q]`.
fn rotate(m: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t^2 + 2 theta t - 1 = 0, so the rotation angle is at most pi/4.
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        m[k * n + p] = new_kp;
        m[p * n + k] = new_kp;
        m[k * n + q] = new_kq;
        m[q * n + k] = new_kq;
    }
    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

/// `values[k] = sum_i |lambda_i| * u_ik^2`.
pub fn vertex_energies(s: &Spectrum) -> VertexEnergyVector {
    let n = s.dim();
    let values = (0..n)
        .map(|k| {
            (0..n)
                .map(|i| {
                    let u = s.component(i, k);
                    s.eigenvalues[i].abs() * u * u
                })
                .sum()
        })
        .collect();
    VertexEnergyVector::new(values)
}

/// Sum of absolute eigenvalues.
pub fn graph_energy(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().map(|l| l.abs()).sum()
}

/// The full matrix `|A| = sum_i |lambda_i| u_i u_i^T`, accumulated one outer
/// product at a time.
pub fn matrix_abs(s: &Spectrum) -> SymmetricMatrix {
    let n = s.dim();
    let mut acc = vec![0.0; n * n];
    for i in 0..n {
        let weight = s.eigenvalues[i].abs();
        let u = s.eigenvector(i);
        for r in 0..n {
            let wr = weight * u[r];
            for c in 0..n {
                acc[r * n + c] += wr * u[c];
            }
        }
    }
    // Symmetrise explicitly; (wr * u[c]) and (wc * u[r]) round differently.
    SymmetricMatrix::from_fn(n, |r, c| 0.5 * (acc[r * n + c] + acc[c * n + r]))
}

/// Diagonal of [`matrix_abs`]. Agrees with [`vertex_energies`] for any choice
/// of eigenbasis inside degenerate eigenspaces.
pub fn matrix_abs_diagonal(s: &Spectrum) -> VertexEnergyVector {
    let abs = matrix_abs(s);
    VertexEnergyVector::new((0..abs.dim()).map(|k| abs.get(k, k)).collect())
}
