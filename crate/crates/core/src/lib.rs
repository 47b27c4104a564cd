//! Vertex energies of simple graphs and of their m-splitting and m-shadow
//! derived graphs.
//!
//! The vertex energy of `v_k` is `sum_i |lambda_i| u_ik^2` for an orthonormal
//! eigenbasis `u_i` of the adjacency matrix; summed over all vertices it gives
//! the graph energy `sum_i |lambda_i|`. For the m-splitting graph the energy
//! of an original vertex scales by `(2m+1)/sqrt(4m+1)` and that of each
//! duplicate by `2/sqrt(4m+1)`; in the m-shadow graph every copy of a vertex
//! keeps its base energy. [`verify`] checks both laws numerically.

pub mod derived;
pub mod error;
pub mod formats;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use derived::{
    m_shadow, m_splitting, predicted_shadow_spectrum, predicted_shadow_vertex_energies,
    predicted_splitting_spectrum, predicted_splitting_vertex_energies, splitting_graph,
    SplittingFactors,
};
pub use error::{GraphError, ParseError, SpectralError};
pub use formats::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{graph_from_edge_list, named_graph, Graph, NamedFamily, VertexLabel};
pub use spectral::{
    eigendecompose_symmetric, graph_energy, matrix_abs_diagonal, vertex_energies, Spectrum,
    SymmetricMatrix, VertexEnergyVector, DEFAULT_EIG_TOL,
};
pub use verify::{
    run_suite, verify_energy_partition, verify_shadow_theorem, verify_spectrum_maps,
    verify_splitting_theorem, verify_total_energy_factors, ClaimId, CorpusEntry, SuiteConfig,
    VerificationReport, Verifier,
};
