//! Test-only oracles that never touch the Jacobi eigensolver.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::Rng;
use vel_core::{Graph, Spectrum};

pub type Dense = Vec<Vec<f64>>;

pub fn adjacency(g: &Graph) -> Dense {
    let n = g.vertex_count();
    let mut a = vec![vec![0.0; n]; n];
    for &(i, j) in g.edges() {
        a[i][j] = 1.0;
        a[j][i] = 1.0;
    }
    a
}

fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0.0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// Solves `m X = rhs` by Gaussian elimination with partial pivoting.
fn solve(mut m: Dense, mut rhs: Dense) -> Dense {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                for k in col..n {
                    m[row][k] -= f * m[col][k];
                }
                for k in 0..n {
                    rhs[row][k] -= f * rhs[col][k];
                }
            }
        }
    }
    for col in (0..n).rev() {
        for k in 0..n {
            let mut acc = rhs[col][k];
            for j in col + 1..n {
                acc -= m[col][j] * rhs[j][k];
            }
            rhs[col][k] = acc / m[col][col];
        }
    }
    rhs
}

/// `|A|` by quadrature of `|x| = (2/pi) int_0^{pi/2} x^2 / (x^2 cos^2 t + sin^2 t) dt`,
/// applied as a matrix function. The integrand is even and pi-periodic, so the
/// midpoint rule converges geometrically when every nonzero eigenvalue is
/// bounded away from 0.
pub fn abs_matrix_by_quadrature(a: &Dense, nodes: usize) -> Dense {
    let n = a.len();
    let a2 = matmul(a, a);
    let h = std::f64::consts::FRAC_PI_2 / nodes as f64;
    let mut acc = vec![vec![0.0; n]; n];
    for j in 0..nodes {
        let t = (j as f64 + 0.5) * h;
        let (s, c) = t.sin_cos();
        let mut sys = a2.clone();
        for (r, row) in sys.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x *= c * c;
            }
            row[r] += s * s;
        }
        // a2 commutes with sys, so sys^{-1} a2 = a2 sys^{-1}.
        let term = solve(sys, a2.clone());
        for r in 0..n {
            for k in 0..n {
                acc[r][k] += term[r][k];
            }
        }
    }
    let scale = 2.0 / std::f64::consts::PI * h;
    acc.iter()
        .map(|row| row.iter().map(|x| x * scale).collect())
        .collect()
}

/// Vertex energies as the diagonal of the quadrature `|A|`.
pub fn oracle_vertex_energies(g: &Graph) -> Vec<f64> {
    let abs = abs_matrix_by_quadrature(&adjacency(g), 4000);
    (0..abs.len()).map(|k| abs[k][k]).collect()
}

pub fn assert_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(
        got.len(),
        want.len(),
        "length mismatch: {got:?} vs {want:?}"
    );
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        assert!(
            (g - w).abs() <= tol,
            "entry {k}: got {g}, want {w} (tol {tol}); {got:?}"
        );
    }
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Re-mixes the eigenbasis inside every cluster of eigenvalues closer than
/// `gap` with random plane rotations. The result spans the same eigenspaces
/// but is a different orthonormal basis.
pub fn remix_degenerate_basis<R: Rng>(s: &Spectrum, gap: f64, rng: &mut R) -> Spectrum {
    let n = s.dim();
    let mut cols: Vec<Vec<f64>> = (0..n).map(|i| s.eigenvector(i)).collect();
    let vals = s.eigenvalues().to_vec();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && vals[end] - vals[end - 1] < gap {
            end += 1;
        }
        for _ in 0..3 * (end - start) {
            if end - start < 2 {
                break;
            }
            let p = rng.gen_range(start..end);
            let q = rng.gen_range(start..end);
            if p == q {
                continue;
            }
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let (sn, cs) = theta.sin_cos();
            for k in 0..n {
                let (a, b) = (cols[p][k], cols[q][k]);
                cols[p][k] = cs * a - sn * b;
                cols[q][k] = sn * a + cs * b;
            }
        }
        start = end;
    }
    Spectrum::from_parts(vals, cols).unwrap()
}
