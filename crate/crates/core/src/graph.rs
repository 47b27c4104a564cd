//! Simple undirected graphs, the base object of every construction in this crate.
//!
//! Vertices are `0..n`. Edges are stored canonically as `(i, j)` with `i < j`,
//! sorted and deduplicated, so two graphs with the same edge set compare equal.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::spectral::SymmetricMatrix;

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from a list of index pairs.
    ///
    /// Duplicate pairs and both orientations of the same pair collapse to one
    /// edge. Self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: i.max(j),
                    n,
                });
            }
            if i == j {
                return Err(GraphError::SelfLoop { vertex: i });
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    /// Internal constructor for edge sets already known to be valid.
    pub(crate) fn from_canonical_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(i, j)| i < j && j < n));
        Graph {
            n,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Sorted open neighbourhood of every vertex.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Renames vertex `v` to `perm[v]`.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut seen = vec![false; self.n];
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal vertex count"
        );
        for &p in perm {
            assert!(
                p < self.n && !std::mem::replace(&mut seen[p], true),
                "not a permutation"
            );
        }
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| (perm[i].min(perm[j]), perm[i].max(perm[j])))
            .collect();
        Graph::from_canonical_set(self.n, edges)
    }

    /// The 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        let mut a = SymmetricMatrix::zeros(self.n);
        for &(i, j) in &self.edges {
            a.set_pair(i, j, 1.0);
        }
        a
    }
}

/// Builds a graph from a list of index pairs. See [`Graph::from_edge_list`].
pub fn graph_from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edge_list(n, edges)
}

/// Position of a vertex inside a derived graph: which copy it belongs to and
/// which base vertex it duplicates. Copy 0 is the original copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub copy_index: usize,
    pub base_index: usize,
}

impl VertexLabel {
    /// Copy-major flat index `copy_index * n + base_index`.
    pub fn flat_index(self, n: usize) -> usize {
        self.copy_index * n + self.base_index
    }

    /// Inverse of [`VertexLabel::flat_index`]. `n` must be positive.
    pub fn from_flat(flat: usize, n: usize) -> Self {
        VertexLabel {
            copy_index: flat / n,
            base_index: flat % n,
        }
    }
}

/// Named graph families used by the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedFamily {
    /// Path on `n` vertices, edges `{i, i+1}`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Complete(usize),
    /// Star on `n` vertices with centre 0, i.e. `K_{1,n-1}`.
    Star(usize),
    /// `K_{a,b}`; the first `a` vertices form one side.
    CompleteBipartite(usize, usize),
}

impl NamedFamily {
    pub fn descriptor(&self) -> String {
        match *self {
            NamedFamily::Path(n) => format!("P{n}"),
            NamedFamily::Cycle(n) => format!("C{n}"),
            NamedFamily::Complete(n) => format!("K{n}"),
            NamedFamily::Star(n) => format!("star{n}"),
            NamedFamily::CompleteBipartite(a, b) => format!("K{a}_{b}"),
        }
    }
}

/// Standard construction of a named family with canonical vertex numbering.
pub fn named_graph(family: NamedFamily) -> Result<Graph, GraphError> {
    let mut edges = BTreeSet::new();
    let n = match family {
        NamedFamily::Path(n) => {
            require_size("path", n, 1)?;
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        NamedFamily::Cycle(n) => {
            require_size("cycle", n, 3)?;
            edges.extend((1..n).map(|i| (i - 1, i)));
            edges.insert((0, n - 1));
            n
        }
        NamedFamily::Complete(n) => {
            require_size("complete", n, 1)?;
            for j in 0..n {
                edges.extend((0..j).map(|i| (i, j)));
            }
            n
        }
        NamedFamily::Star(n) => {
            require_size("star", n, 1)?;
            edges.extend((1..n).map(|i| (0, i)));
            n
        }
        NamedFamily::CompleteBipartite(a, b) => {
            require_size("complete_bipartite", a, 1)?;
            require_size("complete_bipartite", b, 1)?;
            for i in 0..a {
                edges.extend((a..a + b).map(|j| (i, j)));
            }
            a + b
        }
    };
    Ok(Graph::from_canonical_set(n, edges))
}

fn require_size(family: &'static str, size: usize, min: usize) -> Result<(), GraphError> {
    if size < min {
        Err(GraphError::InvalidSize { family, size, min })
    } else {
        Ok(())
    }
}

/// Disjoint union; vertices of `b` are shifted by `a.vertex_count()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(i, j)| (i + shift, j + shift)))
        .collect();
    Graph::from_canonical_set(a.vertex_count() + b.vertex_count(), edges)
}

/// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs is an edge
/// independently with probability `p`, drawn in column order.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = BTreeSet::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.insert((i, j));
            }
        }
    }
    Graph::from_canonical_set(n, edges)
}
