//! m-splitting and m-shadow graphs, and closed-form predictions for their
//! spectra and vertex energies in terms of the base graph.
//!
//! Both constructions use the copy-major flat ordering `copy * n + base`.
//! For `Spl_m(G)` copy 0 holds the original vertices and copies `1..=m` the
//! duplicates; for `D_m(G)` the copies are `0..m` and all play the same role.
//! Under this ordering the adjacency matrix of `Spl_m(G)` is
//!
//! ```text
//! [ A        A A ... A ]
//! [ A        0         ]
//! [ ...         ...    ]
//! [ A                0 ]
//! ```
//!
//! and that of `D_m(G)` is `J_m (x) A`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, VertexLabel};
use crate::spectral::{SymmetricMatrix, VertexEnergyVector};

/// Scalars governing the m-splitting graph.
///
/// Each base eigenvalue `lambda` splits into `lambda * alpha_plus` and
/// `lambda * alpha_minus`, the roots of `mu^2 - lambda mu - m lambda^2 = 0`.
/// Original vertices scale their energy by `original_factor`, duplicates by
/// `copy_factor`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplittingFactors {
    pub m: usize,
    pub original_factor: f64,
    pub copy_factor: f64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
}

impl SplittingFactors {
    pub fn new(m: usize) -> Result<Self, GraphError> {
        check_m(m)?;
        let mf = m as f64;
        let root = (4.0 * mf + 1.0).sqrt();
        Ok(SplittingFactors {
            m,
            original_factor: (2.0 * mf + 1.0) / root,
            copy_factor: 2.0 / root,
            alpha_plus: (1.0 + root) / 2.0,
            alpha_minus: (1.0 - root) / 2.0,
        })
    }

    /// `sqrt(4m + 1)`, the ratio of total energies `E(Spl_m(G)) / E(G)`.
    pub fn energy_ratio(&self) -> f64 {
        (4.0 * self.m as f64 + 1.0).sqrt()
    }
}

fn check_m(m: usize) -> Result<(), GraphError> {
    if m == 0 {
        Err(GraphError::InvalidMultiplicity(m))
    } else {
        Ok(())
    }
}

/// `Spl_m(G)`: every vertex gains `m` duplicates adjacent to its neighbours.
/// Duplicates are never adjacent to each other.
pub fn m_splitting(g: &Graph, m: usize) -> Result<Graph, GraphError> {
    check_m(m)?;
    let n = g.vertex_count();
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    for c in 1..=m {
        for &(i, j) in g.edges() {
            edges.insert((j, c * n + i));
            edges.insert((i, c * n + j));
        }
    }
    Ok(Graph::from_canonical_set(n * (m + 1), edges))
}

/// The splitting graph `S'(G) = Spl_1(G)`.
pub fn splitting_graph(g: &Graph) -> Graph {
    m_splitting(g, 1).expect("m = 1 is valid")
}

/// `D_m(G)`: `m` copies of `G` where every edge `{i, j}` joins `(r, i)` to
/// `(s, j)` for every pair of copies, equal copies included.
pub fn m_shadow(g: &Graph, m: usize) -> Result<Graph, GraphError> {
    check_m(m)?;
    let n = g.vertex_count();
    let mut edges = BTreeSet::new();
    for r in 0..m {
        for s in 0..m {
            for &(i, j) in g.edges() {
                let (u, v) = (r * n + i, s * n + j);
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Ok(Graph::from_canonical_set(n * m, edges))
}

/// Labels of `Spl_m(G)` (`copies = m + 1`) or `D_m(G)` (`copies = m`) in flat order.
pub fn vertex_labels(n: usize, copies: usize) -> Vec<VertexLabel> {
    (0..copies)
        .flat_map(|copy_index| {
            (0..n).map(move |base_index| VertexLabel {
                copy_index,
                base_index,
            })
        })
        .collect()
}

/// Block adjacency of `Spl_m(G)` assembled straight from `A`, without going
/// through the edge construction.
pub fn splitting_block_matrix(
    a: &SymmetricMatrix,
    m: usize,
) -> Result<SymmetricMatrix, GraphError> {
    check_m(m)?;
    let n = a.dim();
    Ok(SymmetricMatrix::from_fn(n * (m + 1), |r, c| {
        let (rb, cb) = (r / n, c / n);
        if rb == 0 || cb == 0 {
            a.get(r % n, c % n)
        } else {
            0.0
        }
    }))
}

/// `J_m (x) A`.
pub fn shadow_kronecker_matrix(
    a: &SymmetricMatrix,
    m: usize,
) -> Result<SymmetricMatrix, GraphError> {
    check_m(m)?;
    let n = a.dim();
    Ok(SymmetricMatrix::from_fn(n * m, |r, c| a.get(r % n, c % n)))
}

/// `{lambda * alpha_plus, lambda * alpha_minus}` for every base eigenvalue,
/// padded with `(m - 1) n` zeros, sorted ascending.
pub fn predicted_splitting_spectrum(
    base_eigenvalues: &[f64],
    m: usize,
) -> Result<Vec<f64>, GraphError> {
    let f = SplittingFactors::new(m)?;
    let n = base_eigenvalues.len();
    let mut out = Vec::with_capacity(n * (m + 1));
    for &lambda in base_eigenvalues {
        out.push(lambda * f.alpha_plus);
        out.push(lambda * f.alpha_minus);
    }
    out.resize(n * (m + 1), 0.0);
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// `{m * lambda}` for every base eigenvalue plus `(m - 1) n` zeros, sorted ascending.
pub fn predicted_shadow_spectrum(
    base_eigenvalues: &[f64],
    m: usize,
) -> Result<Vec<f64>, GraphError> {
    check_m(m)?;
    let n = base_eigenvalues.len();
    let mut out: Vec<f64> = base_eigenvalues.iter().map(|&l| m as f64 * l).collect();
    out.resize(n * m, 0.0);
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Vertex energies of `Spl_m(G)` from those of `G`, in flat order.
pub fn predicted_splitting_vertex_energies(
    base: &VertexEnergyVector,
    m: usize,
) -> Result<VertexEnergyVector, GraphError> {
    let f = SplittingFactors::new(m)?;
    let mut out: Vec<f64> = base
        .values()
        .iter()
        .map(|e| f.original_factor * e)
        .collect();
    for _ in 0..m {
        out.extend(base.values().iter().map(|e| f.copy_factor * e));
    }
    Ok(VertexEnergyVector::new(out))
}

/// Vertex energies of `D_m(G)`: `m` concatenated copies of the base vector.
pub fn predicted_shadow_vertex_energies(
    base: &VertexEnergyVector,
    m: usize,
) -> Result<VertexEnergyVector, GraphError> {
    check_m(m)?;
    Ok(VertexEnergyVector::new(base.values().repeat(m)))
}
