//! Largest eigenvalues of the adjacency matrix `A(G)` and the signless
//! Laplacian `Q(G) = D(G) + A(G)`.
//!
//! Power iteration runs directly on the adjacency bitsets. The reported value
//! is always the Rayleigh quotient of the final unit iterate, so it is a
//! certified lower bound on the true largest eigenvalue.

use serde::{Deserialize, Serialize};

use crate::error::SpectraError;
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const ORACLE_MAX_ORDER: usize = 12;
const ORACLE_OFF_DIAGONAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Signless,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub value: f64,
    /// Rayleigh quotient of the final unit iterate. Equal to `value`.
    pub lower: f64,
    /// `‖Mx − value·x‖` for the final unit iterate `x`.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Final unit iterate (the Perron vector approximation).
    pub vector: Vec<f64>,
}

pub fn iteration_cap(n: usize) -> usize {
    100 * n + 1000
}

fn check_tol(tol: f64) -> Result<(), SpectraError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(SpectraError::BadTolerance(tol))
    }
}

/// `y = (diag + A) x` where `diag` is the degree for `Q` and 1 for the
/// shifted adjacency matrix.
fn apply(g: &Graph, kind: MatrixKind, x: &[f64], y: &mut [f64]) {
    for (i, yi) in y.iter_mut().enumerate() {
        let mut acc = 0.0;
        let mut deg = 0usize;
        for j in g.neighbors(i) {
            acc += x[j];
            deg += 1;
        }
        let diag = match kind {
            MatrixKind::Signless => deg as f64,
            MatrixKind::Adjacency => 1.0,
        };
        *yi = diag * x[i] + acc;
    }
}

fn shift(kind: MatrixKind) -> f64 {
    match kind {
        MatrixKind::Signless => 0.0,
        MatrixKind::Adjacency => 1.0,
    }
}

fn connected_estimate(g: &Graph, kind: MatrixKind, tol: f64) -> SpectralEstimate {
    let n = g.n();
    let start = 1.0 / (n as f64).sqrt();
    if let Some(k) = g.regular_degree() {
        let value = match kind {
            MatrixKind::Signless => 2.0 * k as f64,
            MatrixKind::Adjacency => k as f64,
        };
        return SpectralEstimate {
            value,
            lower: value,
            residual: 0.0,
            iterations: 0,
            converged: true,
            vector: vec![start; n],
        };
    }

    let cap = iteration_cap(n);
    let mut x = vec![start; n];
    let mut y = vec![0.0; n];
    let mut iterations = 0;
    loop {
        apply(g, kind, &x, &mut y);
        iterations += 1;
        let mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x.iter().zip(&y).map(|(a, b)| (b - mu * a).powi(2)).sum::<f64>().sqrt();
        let converged = residual <= tol;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if converged || iterations >= cap || norm == 0.0 {
            let value = mu - shift(kind);
            return SpectralEstimate {
                value,
                lower: value,
                residual,
                iterations,
                converged,
                vector: x,
            };
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
}

fn estimate(g: &Graph, kind: MatrixKind, tol: f64) -> Result<SpectralEstimate, SpectraError> {
    check_tol(tol)?;
    let comps = g.components();
    if comps.len() == 1 {
        return Ok(connected_estimate(g, kind, tol));
    }
    // Block-diagonal: the radius is the largest component radius.
    let mut best: Option<(SpectralEstimate, &[usize])> = None;
    let mut iterations = 0;
    let mut all_converged = true;
    for comp in &comps {
        let sub = g.induced(comp).expect("component vertices are valid");
        let est = connected_estimate(&sub, kind, tol);
        iterations += est.iterations;
        all_converged &= est.converged;
        if best.as_ref().is_none_or(|(b, _)| est.value > b.value) {
            best = Some((est, comp));
        }
    }
    let (est, comp) = best.expect("at least one component");
    let mut vector = vec![0.0; g.n()];
    for (&v, &xv) in comp.iter().zip(&est.vector) {
        vector[v] = xv;
    }
    Ok(SpectralEstimate { iterations, converged: all_converged, vector, ..est })
}

/// Signless Laplacian spectral radius `q(G)`.
pub fn q_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate, SpectraError> {
    estimate(g, MatrixKind::Signless, tol)
}

/// Adjacency spectral radius `ρ(G)`, iterated on `A + I`.
pub fn adj_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate, SpectraError> {
    estimate(g, MatrixKind::Adjacency, tol)
}

/// `max_u d(u) + (Σ_{v∈Γ(u)} d(v)) / d(u)`, an upper bound on `q(G)`.
pub fn merris_q_bound(g: &Graph) -> Result<f64, SpectraError> {
    let deg: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
    let mut best = f64::NEG_INFINITY;
    for u in 0..g.n() {
        if deg[u] == 0 {
            return Err(SpectraError::IsolatedVertex(u));
        }
        let sum: usize = g.neighbors(u).map(|v| deg[v]).sum();
        best = best.max(deg[u] as f64 + sum as f64 / deg[u] as f64);
    }
    Ok(best)
}

/// Dense matrix of the chosen kind, row-major.
pub fn dense_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = 1.0;
        m[v][u] = 1.0;
    }
    if kind == MatrixKind::Signless {
        for (u, row) in m.iter_mut().enumerate() {
            row[u] = g.degree(u) as f64;
        }
    }
    m
}

/// Full spectrum by cyclic Jacobi rotations, sorted descending.
///
/// Independent of the power iteration: it builds the dense matrix and
/// annihilates off-diagonal entries until their Frobenius norm is at most
/// `1e-12`.
pub fn dense_eigen_oracle(g: &Graph, kind: MatrixKind) -> Result<Vec<f64>, SpectraError> {
    let n = g.n();
    if n > ORACLE_MAX_ORDER {
        return Err(SpectraError::OracleCap { n, max: ORACLE_MAX_ORDER });
    }
    let mut a = dense_matrix(g, kind);
    jacobi_eigenvalues(&mut a);
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

fn jacobi_eigenvalues(a: &mut [Vec<f64>]) {
    let n = a.len();
    for _sweep in 0..100 {
        if off_diagonal_norm(a) <= ORACLE_OFF_DIAGONAL_TOL {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
                let (lo, hi) = a.split_at_mut(q);
                for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    let (xp, yq) = (*x, *y);
                    *x = c * xp - s * yq;
                    *y = s * xp + c * yq;
                }
            }
        }
    }
}
