//! Worked examples checked three ways: frozen closed-form values, the
//! quadrature oracle for `|A|`, and the library's Jacobi-based path.

mod common;

use common::{assert_close, oracle_vertex_energies};
use vel_core::spectral::matrix_abs_diagonal;
use vel_core::*;

const ORACLE_TOL: f64 = 1e-10;
const IMPL_TOL: f64 = 1e-12;

fn family(f: NamedFamily) -> Graph {
    named_graph(f).unwrap()
}

fn energies(g: &Graph) -> Vec<f64> {
    let s = eigendecompose_symmetric(&g.adjacency_matrix(), DEFAULT_EIG_TOL).unwrap();
    vertex_energies(&s).into_inner()
}

fn spectrum(g: &Graph) -> Vec<f64> {
    eigendecompose_symmetric(&g.adjacency_matrix(), DEFAULT_EIG_TOL)
        .unwrap()
        .eigenvalues()
        .to_vec()
}

/// Each frozen vector is checked against the oracle first, then against the
/// implementation.
fn check_energies(g: &Graph, frozen: &[f64]) {
    assert_close(&oracle_vertex_energies(g), frozen, ORACLE_TOL);
    assert_close(&energies(g), frozen, IMPL_TOL);
    let s = eigendecompose_symmetric(&g.adjacency_matrix(), DEFAULT_EIG_TOL).unwrap();
    assert_close(matrix_abs_diagonal(&s).values(), frozen, IMPL_TOL);
}

#[test]
fn k2_vertex_energies() {
    check_energies(&family(NamedFamily::Complete(2)), &[1.0, 1.0]);
}

#[test]
fn p3_vertex_energies() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    check_energies(&family(NamedFamily::Path(3)), &[h, 2.0 * h, h]);
}

#[test]
fn star_vertex_energies() {
    let r3 = 3f64.sqrt();
    check_energies(
        &family(NamedFamily::Star(4)),
        &[r3, r3 / 3.0, r3 / 3.0, r3 / 3.0],
    );
}

#[test]
fn c4_vertex_energies() {
    check_energies(&family(NamedFamily::Cycle(4)), &[1.0; 4]);
}

#[test]
fn splitting_k2_is_p4_with_m1_energies() {
    let s = splitting_graph(&family(NamedFamily::Complete(2)));
    assert_eq!(s, family(NamedFamily::Path(4)).relabel(&[2, 1, 0, 3]));
    let (a, b) = (3.0 / 5f64.sqrt(), 2.0 / 5f64.sqrt());
    check_energies(&s, &[a, a, b, b]);
}

#[test]
fn splitting_c4_m3_energies() {
    let s = m_splitting(&family(NamedFamily::Cycle(4)), 3).unwrap();
    let r13 = 13f64.sqrt();
    let mut frozen = vec![7.0 / r13; 4];
    frozen.extend(vec![2.0 / r13; 12]);
    check_energies(&s, &frozen);
}

#[test]
fn shadow_p3_m3_energies() {
    let d = m_shadow(&family(NamedFamily::Path(3)), 3).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    check_energies(&d, &[h, 2.0 * h, h].repeat(3));
}

#[test]
fn shadow_k2_m2_is_c4() {
    let d = m_shadow(&family(NamedFamily::Complete(2)), 2).unwrap();
    assert_eq!(d.degrees(), vec![2; 4]);
    check_energies(&d, &[1.0; 4]);
}

#[test]
fn exact_spectra() {
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    // x^3 - 2x
    assert_close(
        &spectrum(&family(NamedFamily::Path(3))),
        &[-r2, 0.0, r2],
        1e-10,
    );
    // x^4 - 4x^2
    assert_close(
        &spectrum(&family(NamedFamily::Cycle(4))),
        &[-2.0, 0.0, 0.0, 2.0],
        1e-10,
    );
    // x^4 - 3x^2
    assert_close(
        &spectrum(&family(NamedFamily::Star(4))),
        &[-r3, 0.0, 0.0, r3],
        1e-10,
    );
    // x^4 - 3x^2 + 1
    let p4 = splitting_graph(&family(NamedFamily::Complete(2)));
    assert_close(&spectrum(&p4), &[-phi, 1.0 - phi, phi - 1.0, phi], 1e-10);
    // P3 with m = 2: alpha = 2, -1.
    let s = m_splitting(&family(NamedFamily::Path(3)), 2).unwrap();
    assert_close(
        &spectrum(&s),
        &[-2.0 * r2, -r2, 0.0, 0.0, 0.0, 0.0, 0.0, r2, 2.0 * r2],
        1e-10,
    );
}

#[test]
fn graph_energies() {
    let e = |g: &Graph| {
        graph_energy(&eigendecompose_symmetric(&g.adjacency_matrix(), DEFAULT_EIG_TOL).unwrap())
    };
    assert!((e(&family(NamedFamily::Complete(2))) - 2.0).abs() < 1e-12);
    assert!((e(&family(NamedFamily::Path(3))) - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    assert!((e(&family(NamedFamily::Cycle(4))) - 4.0).abs() < 1e-12);
    let p4 = splitting_graph(&family(NamedFamily::Complete(2)));
    assert!((e(&p4) - 2.0 * 5f64.sqrt()).abs() < 1e-12);
}

#[test]
fn isolated_vertices_have_zero_energy() {
    let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 1)]).unwrap();
    let got = energies(&g);
    assert!(got[4].abs() <= 1e-12);
    assert_close(&got, &oracle_vertex_energies(&g), ORACLE_TOL);
}

#[test]
fn vertex_energy_ignores_choice_of_degenerate_basis() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for g in [
        family(NamedFamily::Cycle(4)),
        family(NamedFamily::Complete(4)),
        family(NamedFamily::Star(4)),
        m_shadow(&family(NamedFamily::Path(3)), 3).unwrap(),
        m_splitting(&family(NamedFamily::Cycle(6)), 2).unwrap(),
    ] {
        let s = eigendecompose_symmetric(&g.adjacency_matrix(), DEFAULT_EIG_TOL).unwrap();
        let mixed = common::remix_degenerate_basis(&s, 1e-8, &mut rng);
        assert!(mixed.orthonormality_error() < 1e-12);
        assert!(mixed.residual(&g.adjacency_matrix()) < 1e-10);
        // Individual eigenvectors do change...
        let moved = (0..s.dim())
            .map(|i| common::max_abs_diff(&s.eigenvector(i), &mixed.eigenvector(i)))
            .fold(0.0, f64::max);
        assert!(moved > 1e-3);
        // ...but vertex energies and the |A| diagonal do not.
        let base = vertex_energies(&s);
        assert_close(vertex_energies(&mixed).values(), base.values(), 1e-12);
        assert_close(matrix_abs_diagonal(&mixed).values(), base.values(), 1e-12);
    }
}
