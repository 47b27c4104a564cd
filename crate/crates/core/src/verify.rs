//! Numerical certification of the splitting and shadow vertex-energy laws.
//!
//! Every check compares two independently computed sides: a full eigensolve
//! of the derived graph against the closed-form scaling of the base graph's
//! numeric energies (or eigenvalues).

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derived::{
    m_shadow, m_splitting, predicted_shadow_spectrum, predicted_shadow_vertex_energies,
    predicted_splitting_spectrum, predicted_splitting_vertex_energies, SplittingFactors,
};
use crate::error::{GraphError, SpectralError};
use crate::formats::write_graph6;
use crate::graph::{disjoint_union, named_graph, random_gnp, Graph, NamedFamily};
use crate::spectral::{
    eigendecompose_symmetric, graph_energy, vertex_energies, Spectrum, VertexEnergyVector,
    DEFAULT_EIG_TOL,
};

/// Default tolerance for theorem checks; two eigensolves compound error.
pub const DEFAULT_THEOREM_TOL: f64 = 1e-8;
/// Default relative tolerance for the energy partition check.
pub const DEFAULT_PARTITION_TOL: f64 = 1e-10;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    SplittingVertexEnergy,
    SplittingTotalEnergy,
    SplittingSpectrum,
    ShadowVertexEnergy,
    ShadowTotalEnergy,
    ShadowSpectrum,
    EnergyPartition,
}

impl ClaimId {
    pub const ALL: [ClaimId; 7] = [
        ClaimId::SplittingVertexEnergy,
        ClaimId::SplittingTotalEnergy,
        ClaimId::SplittingSpectrum,
        ClaimId::ShadowVertexEnergy,
        ClaimId::ShadowTotalEnergy,
        ClaimId::ShadowSpectrum,
        ClaimId::EnergyPartition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::SplittingVertexEnergy => "splitting_vertex_energy",
            ClaimId::SplittingTotalEnergy => "splitting_total_energy",
            ClaimId::SplittingSpectrum => "splitting_spectrum",
            ClaimId::ShadowVertexEnergy => "shadow_vertex_energy",
            ClaimId::ShadowTotalEnergy => "shadow_total_energy",
            ClaimId::ShadowSpectrum => "shadow_spectrum",
            ClaimId::EnergyPartition => "energy_partition",
        }
    }
}

/// Outcome of one claim on one graph. `m` is 0 for the energy partition, which
/// has no multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    pub graph_descriptor: String,
    pub m: usize,
    pub max_abs_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_vertex_deviations: Option<Vec<f64>>,
    /// Set when the check could not be carried out at all.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl VerificationReport {
    fn new(
        claim_id: ClaimId,
        graph: &Graph,
        m: usize,
        max_abs_deviation: f64,
        tolerance: f64,
        per_vertex_deviations: Option<Vec<f64>>,
    ) -> Self {
        VerificationReport {
            claim_id,
            graph_descriptor: default_descriptor(graph),
            m,
            max_abs_deviation,
            tolerance,
            // NaN deviations fail.
            passed: max_abs_deviation <= tolerance,
            per_vertex_deviations,
            error: None,
        }
    }

    fn from_deviations(
        claim_id: ClaimId,
        graph: &Graph,
        m: usize,
        devs: Vec<f64>,
        tol: f64,
    ) -> Self {
        let max = max_abs(&devs);
        Self::new(claim_id, graph, m, max, tol, Some(devs))
    }

    fn failed(
        claim_id: ClaimId,
        descriptor: &str,
        m: usize,
        tolerance: f64,
        err: &VerifyError,
    ) -> Self {
        VerificationReport {
            claim_id,
            graph_descriptor: descriptor.to_owned(),
            m,
            max_abs_deviation: f64::INFINITY,
            tolerance,
            passed: false,
            per_vertex_deviations: None,
            error: Some(err.to_string()),
        }
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        (&self.graph_descriptor, self.claim_id, self.m).cmp(&(
            &other.graph_descriptor,
            other.claim_id,
            other.m,
        ))
    }
}

/// `g6:<graph6>` identifies a graph exactly when the caller gives no name.
pub fn default_descriptor(g: &Graph) -> String {
    format!("g6:{}", write_graph6(g))
}

fn max_abs(devs: &[f64]) -> f64 {
    // fold with f64::max would swallow NaN.
    devs.iter()
        .fold(0.0, |acc, &d| if d.is_nan() || d > acc { d } else { acc })
}

/// `|got - want| / max(|want|, 1)`. Every nonempty graph has energy at least 2,
/// so the floor only matters for edgeless graphs, where both sides are 0.
fn relative_deviation(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

fn sorted_deviations(got: &[f64], want: &[f64]) -> Vec<f64> {
    debug_assert_eq!(got.len(), want.len());
    got.iter().zip(want).map(|(a, b)| (a - b).abs()).collect()
}

/// Eigendecomposition of a graph together with the derived energies.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub spectrum: Spectrum,
    pub vertex_energies: VertexEnergyVector,
    pub energy: f64,
}

/// Runs verifications with a fixed eigensolver tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verifier {
    pub eig_tol: f64,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            eig_tol: DEFAULT_EIG_TOL,
        }
    }
}

impl Verifier {
    pub fn new(eig_tol: f64) -> Self {
        Verifier { eig_tol }
    }

    pub fn analyze(&self, g: &Graph) -> Result<Analysis, SpectralError> {
        let spectrum = eigendecompose_symmetric(&g.adjacency_matrix(), self.eig_tol)?;
        Ok(Analysis {
            vertex_energies: vertex_energies(&spectrum),
            energy: graph_energy(&spectrum),
            spectrum,
        })
    }

    pub fn splitting_theorem(
        &self,
        g: &Graph,
        m: usize,
        tol: f64,
    ) -> Result<VerificationReport, VerifyError> {
        let base = self.analyze(g)?;
        let derived = self.analyze(&m_splitting(g, m)?)?;
        Ok(splitting_energy_report(g, m, tol, &base, &derived)?)
    }

    pub fn shadow_theorem(
        &self,
        g: &Graph,
        m: usize,
        tol: f64,
    ) -> Result<VerificationReport, VerifyError> {
        let base = self.analyze(g)?;
        let derived = self.analyze(&m_shadow(g, m)?)?;
        Ok(shadow_energy_report(g, m, tol, &base, &derived)?)
    }

    /// `(splitting, shadow)` total-energy reports, relative deviations.
    pub fn total_energy_factors(
        &self,
        g: &Graph,
        m: usize,
        tol: f64,
    ) -> Result<(VerificationReport, VerificationReport), VerifyError> {
        let base = self.analyze(g)?;
        let split = self.analyze(&m_splitting(g, m)?)?;
        let shadow = self.analyze(&m_shadow(g, m)?)?;
        Ok((
            splitting_total_report(g, m, tol, &base, &split)?,
            shadow_total_report(g, m, tol, &base, &shadow),
        ))
    }

    /// `(splitting, shadow)` sorted-spectrum reports, absolute deviations.
    pub fn spectrum_maps(
        &self,
        g: &Graph,
        m: usize,
        tol: f64,
    ) -> Result<(VerificationReport, VerificationReport), VerifyError> {
        let base = self.analyze(g)?;
        let split = self.analyze(&m_splitting(g, m)?)?;
        let shadow = self.analyze(&m_shadow(g, m)?)?;
        Ok((
            splitting_spectrum_report(g, m, tol, &base, &split)?,
            shadow_spectrum_report(g, m, tol, &base, &shadow)?,
        ))
    }

    pub fn energy_partition(&self, g: &Graph, tol: f64) -> Result<VerificationReport, VerifyError> {
        Ok(partition_report(g, tol, &self.analyze(g)?))
    }

    /// All six theorem reports for one `(g, m)`, sharing the three eigensolves.
    pub fn derived_claims(
        &self,
        g: &Graph,
        base: &Analysis,
        m: usize,
        tol: f64,
    ) -> Result<Vec<VerificationReport>, VerifyError> {
        let split = self.analyze(&m_splitting(g, m)?)?;
        let shadow = self.analyze(&m_shadow(g, m)?)?;
        Ok(vec![
            splitting_energy_report(g, m, tol, base, &split)?,
            splitting_total_report(g, m, tol, base, &split)?,
            splitting_spectrum_report(g, m, tol, base, &split)?,
            shadow_energy_report(g, m, tol, base, &shadow)?,
            shadow_total_report(g, m, tol, base, &shadow),
            shadow_spectrum_report(g, m, tol, base, &shadow)?,
        ])
    }
}

fn splitting_energy_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> Result<VerificationReport, GraphError> {
    let predicted = predicted_splitting_vertex_energies(&base.vertex_energies, m)?;
    let devs = derived
        .vertex_energies
        .abs_deviations(&predicted)
        .expect("Spl_m(G) has (m + 1) n vertices");
    Ok(VerificationReport::from_deviations(
        ClaimId::SplittingVertexEnergy,
        g,
        m,
        devs,
        tol,
    ))
}

fn shadow_energy_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> Result<VerificationReport, GraphError> {
    let predicted = predicted_shadow_vertex_energies(&base.vertex_energies, m)?;
    let devs = derived
        .vertex_energies
        .abs_deviations(&predicted)
        .expect("D_m(G) has m n vertices");
    Ok(VerificationReport::from_deviations(
        ClaimId::ShadowVertexEnergy,
        g,
        m,
        devs,
        tol,
    ))
}

fn splitting_total_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> Result<VerificationReport, GraphError> {
    let ratio = SplittingFactors::new(m)?.energy_ratio();
    let dev = relative_deviation(derived.energy, ratio * base.energy);
    Ok(VerificationReport::new(
        ClaimId::SplittingTotalEnergy,
        g,
        m,
        dev,
        tol,
        None,
    ))
}

fn shadow_total_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> VerificationReport {
    let dev = relative_deviation(derived.energy, m as f64 * base.energy);
    VerificationReport::new(ClaimId::ShadowTotalEnergy, g, m, dev, tol, None)
}

fn splitting_spectrum_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> Result<VerificationReport, GraphError> {
    let predicted = predicted_splitting_spectrum(base.spectrum.eigenvalues(), m)?;
    let devs = sorted_deviations(derived.spectrum.eigenvalues(), &predicted);
    Ok(VerificationReport::from_deviations(
        ClaimId::SplittingSpectrum,
        g,
        m,
        devs,
        tol,
    ))
}

fn shadow_spectrum_report(
    g: &Graph,
    m: usize,
    tol: f64,
    base: &Analysis,
    derived: &Analysis,
) -> Result<VerificationReport, GraphError> {
    let predicted = predicted_shadow_spectrum(base.spectrum.eigenvalues(), m)?;
    let devs = sorted_deviations(derived.spectrum.eigenvalues(), &predicted);
    Ok(VerificationReport::from_deviations(
        ClaimId::ShadowSpectrum,
        g,
        m,
        devs,
        tol,
    ))
}

fn partition_report(g: &Graph, tol: f64, analysis: &Analysis) -> VerificationReport {
    let dev = relative_deviation(analysis.vertex_energies.total(), analysis.energy);
    VerificationReport::new(ClaimId::EnergyPartition, g, 0, dev, tol, None)
}

/// Checks the splitting vertex-energy law on `Spl_m(g)`.
pub fn verify_splitting_theorem(
    g: &Graph,
    m: usize,
    tol: f64,
) -> Result<VerificationReport, VerifyError> {
    Verifier::default().splitting_theorem(g, m, tol)
}

/// Checks that every vertex of `D_m(g)` keeps its base vertex energy.
pub fn verify_shadow_theorem(
    g: &Graph,
    m: usize,
    tol: f64,
) -> Result<VerificationReport, VerifyError> {
    Verifier::default().shadow_theorem(g, m, tol)
}

pub fn verify_total_energy_factors(
    g: &Graph,
    m: usize,
    tol: f64,
) -> Result<(VerificationReport, VerificationReport), VerifyError> {
    Verifier::default().total_energy_factors(g, m, tol)
}

pub fn verify_spectrum_maps(
    g: &Graph,
    m: usize,
    tol: f64,
) -> Result<(VerificationReport, VerificationReport), VerifyError> {
    Verifier::default().spectrum_maps(g, m, tol)
}

pub fn verify_energy_partition(g: &Graph, tol: f64) -> Result<VerificationReport, VerifyError> {
    Verifier::default().energy_partition(g, tol)
}

/// A named graph in a verification corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub descriptor: String,
    pub graph: Graph,
}

impl CorpusEntry {
    pub fn new(descriptor: impl Into<String>, graph: Graph) -> Self {
        CorpusEntry {
            descriptor: descriptor.into(),
            graph,
        }
    }
}

/// Sizes of the seeded `G(n, 1/2)` samples in the default corpus.
pub const RANDOM_SIZES: [usize; 3] = [5, 8, 12];
pub const RANDOM_SAMPLES_PER_SIZE: usize = 3;

/// Named families, seeded random graphs and a few degenerate graphs.
///
/// Families: `P1..P8`, `C3..C8`, `K1..K6`, stars with 1 to 5 leaves, and
/// `K_{a,b}` for `a <= b`, `a + b <= 8`. Random graphs are `G(n, 1/2)` with
/// three samples for each `n` in [`RANDOM_SIZES`], drawn from one ChaCha8
/// stream seeded with `seed`. Degenerate cases: `K3 + P2` (disconnected),
/// `P3 + K1` (isolated vertex) and the edgeless `E3`.
pub fn default_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut families = Vec::new();
    families.extend((1..=8).map(NamedFamily::Path));
    families.extend((3..=8).map(NamedFamily::Cycle));
    families.extend((1..=6).map(NamedFamily::Complete));
    families.extend((2..=6).map(NamedFamily::Star));
    for a in 1..=4 {
        families.extend((a..=8 - a).map(|b| NamedFamily::CompleteBipartite(a, b)));
    }
    let mut corpus: Vec<CorpusEntry> = families
        .into_iter()
        .map(|f| {
            CorpusEntry::new(
                f.descriptor(),
                named_graph(f).expect("corpus sizes are valid"),
            )
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in RANDOM_SIZES {
        for sample in 0..RANDOM_SAMPLES_PER_SIZE {
            corpus.push(CorpusEntry::new(
                format!("gnp{n}_s{seed}_{sample}"),
                random_gnp(n, 0.5, &mut rng),
            ));
        }
    }

    let k3 = named_graph(NamedFamily::Complete(3)).expect("valid");
    let p2 = named_graph(NamedFamily::Path(2)).expect("valid");
    let p3 = named_graph(NamedFamily::Path(3)).expect("valid");
    corpus.push(CorpusEntry::new("K3+P2", disjoint_union(&k3, &p2)));
    corpus.push(CorpusEntry::new(
        "P3+K1",
        disjoint_union(&p3, &Graph::empty(1)),
    ));
    corpus.push(CorpusEntry::new("E3", Graph::empty(3)));
    corpus
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub m_values: Vec<usize>,
    /// Tolerance for the six theorem claims.
    pub tol: f64,
    /// Relative tolerance for the energy partition.
    pub partition_tol: f64,
    pub eig_tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            m_values: vec![1, 2, 3, 4],
            tol: DEFAULT_THEOREM_TOL,
            partition_tol: DEFAULT_PARTITION_TOL,
            eig_tol: DEFAULT_EIG_TOL,
        }
    }
}

/// Runs the partition check on every corpus graph and the six theorem claims
/// for every `(graph, m)`. Cases run in parallel; the result is sorted by
/// descriptor, claim and `m`, so it does not depend on scheduling. Failures
/// of individual cases are recorded as failed reports.
pub fn run_suite(corpus: &[CorpusEntry], config: &SuiteConfig) -> Vec<VerificationReport> {
    let verifier = Verifier::new(config.eig_tol);
    let mut reports: Vec<VerificationReport> = corpus
        .par_iter()
        .flat_map_iter(|entry| suite_case(&verifier, entry, config))
        .collect();
    reports.sort_by(VerificationReport::sort_key_cmp);
    reports
}

fn suite_case(
    verifier: &Verifier,
    entry: &CorpusEntry,
    config: &SuiteConfig,
) -> Vec<VerificationReport> {
    let g = &entry.graph;
    let base =
        match verifier.analyze(g) {
            Ok(a) => a,
            Err(e) => {
                let e = VerifyError::from(e);
                let mut out = vec![VerificationReport::failed(
                    ClaimId::EnergyPartition,
                    &entry.descriptor,
                    0,
                    config.partition_tol,
                    &e,
                )];
                for &m in &config.m_values {
                    out.extend(ClaimId::ALL[..6].iter().map(|&c| {
                        VerificationReport::failed(c, &entry.descriptor, m, config.tol, &e)
                    }));
                }
                return out;
            }
        };

    let mut out = vec![partition_report(g, config.partition_tol, &base)];
    for &m in &config.m_values {
        match verifier.derived_claims(g, &base, m, config.tol) {
            Ok(reports) => out.extend(reports),
            Err(e) => out.extend(
                ClaimId::ALL[..6]
                    .iter()
                    .map(|&c| VerificationReport::failed(c, &entry.descriptor, m, config.tol, &e)),
            ),
        }
    }
    for r in &mut out {
        r.graph_descriptor.clone_from(&entry.descriptor);
    }
    out
}

/// Number of passing and failing reports.
pub fn summarize(reports: &[VerificationReport]) -> (usize, usize) {
    let passed = reports.iter().filter(|r| r.passed).count();
    (passed, reports.len() - passed)
}
