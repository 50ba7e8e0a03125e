//! Laplacian eigenvalues, the Kirchhoff index via the spectral formula
//! K(G) = n * sum_{i<n} 1/mu_i, and an independent effective-resistance
//! route through the Laplacian pseudoinverse.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Laplacian eigenvalues sorted non-increasing, together with the
/// certified residual bound of the solve.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    residual_tol: f64,
}

impl Spectrum {
    /// Eigenvalues mu_1 >= ... >= mu_n.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Certified bound on max_i ||L v_i - mu_i v_i||.
    pub fn residual_tol(&self) -> f64 {
        self.residual_tol
    }

    pub fn mu(&self, i: usize) -> f64 {
        self.values[i - 1]
    }
}

/// Pairwise effective resistances; symmetric with zero diagonal.
#[derive(Debug, Clone)]
pub struct ResistanceMatrix {
    r: DMatrix<f64>,
}

impl ResistanceMatrix {
    pub fn n(&self) -> usize {
        self.r.nrows()
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.r[(u, v)]
    }

    /// Sum over unordered pairs, which is the Kirchhoff index.
    pub fn upper_triangular_sum(&self) -> f64 {
        let n = self.n();
        let mut total = 0.0;
        for u in 0..n {
            for v in (u + 1)..n {
                total += self.r[(u, v)];
            }
        }
        total
    }
}

/// Scale-aware default residual tolerance: 1e-9 * max(1, 2m).
pub fn default_residual_tol(g: &Graph) -> f64 {
    1e-9 * (2.0 * g.m() as f64).max(1.0)
}

fn eigendecompose(g: &Graph, tol: f64) -> Result<(Spectrum, DMatrix<f64>)> {
    let n = g.n();
    let l = g.laplacian().map(|x| x as f64);
    let eig = SymmetricEigen::try_new(l.clone(), f64::EPSILON, 100_000)
        .ok_or(Error::ConvergenceFailure)?;

    // Certify each eigenpair residual against the requested tolerance.
    let lv = &l * &eig.eigenvectors;
    let mut max_residual: f64 = 0.0;
    for j in 0..n {
        let mut sq = 0.0;
        for i in 0..n {
            let r = lv[(i, j)] - eig.eigenvalues[j] * eig.eigenvectors[(i, j)];
            sq += r * r;
        }
        max_residual = max_residual.max(sq.sqrt());
    }
    if max_residual > tol {
        return Err(Error::ConvergenceFailure);
    }

    // Sort eigenpairs descending by value.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<f64>::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(i));
    }

    let two_m = 2.0 * g.m() as f64;
    let trace_gap = (values.iter().sum::<f64>() - two_m).abs();
    if trace_gap > n as f64 * tol || values[n - 1] < -tol {
        return Err(Error::ConvergenceFailure);
    }

    Ok((Spectrum { values, residual_tol: tol }, vectors))
}

/// Full Laplacian spectrum at the default residual tolerance.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    laplacian_spectrum_with_tol(g, default_residual_tol(g))
}

pub fn laplacian_spectrum_with_tol(g: &Graph, tol: f64) -> Result<Spectrum> {
    eigendecompose(g, tol).map(|(s, _)| s)
}

/// Kirchhoff index K(G) = n * sum_{i=1}^{n-1} 1/mu_i.
///
/// Connectivity is decided combinatorially; exactly the smallest
/// eigenvalue is dropped and asserted to be numerically zero.
pub fn kirchhoff_index(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::DegenerateOrder { n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = laplacian_spectrum(g)?;
    kirchhoff_from_spectrum(g.n(), &s)
}

/// Kirchhoff index from an already-computed spectrum of a connected graph.
pub fn kirchhoff_from_spectrum(n: usize, s: &Spectrum) -> Result<f64> {
    let values = s.values();
    debug_assert_eq!(values.len(), n);
    if values[n - 1].abs() > s.residual_tol() {
        return Err(Error::ConvergenceFailure);
    }
    Ok(n as f64 * values[..n - 1].iter().map(|&mu| 1.0 / mu).sum::<f64>())
}

/// Effective resistances R_uv = L+_uu + L+_vv - 2 L+_uv, with the
/// pseudoinverse assembled from the eigendecomposition.
pub fn effective_resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let (s, vectors) = eigendecompose(g, default_residual_tol(g))?;

    // L+ = sum over nonzero eigenvalues of (1/mu) v v^T.
    let mut pinv = DMatrix::<f64>::zeros(n, n);
    for (j, &mu) in s.values().iter().enumerate() {
        if mu > s.residual_tol() {
            let v = vectors.column(j);
            let w = 1.0 / mu;
            for a in 0..n {
                for b in 0..n {
                    pinv[(a, b)] += w * v[a] * v[b];
                }
            }
        }
    }

    let mut r = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        for v in (u + 1)..n {
            let ruv = pinv[(u, u)] + pinv[(v, v)] - 2.0 * pinv[(u, v)];
            r[(u, v)] = ruv;
            r[(v, u)] = ruv;
        }
    }
    Ok(ResistanceMatrix { r })
}

/// Kirchhoff index as the sum of pairwise effective resistances; the
/// independent oracle for the spectral route.
pub fn kirchhoff_via_resistance(g: &Graph) -> Result<f64> {
    Ok(effective_resistance_matrix(g)?.upper_triangular_sum())
}

/// Outcome of the one-edge interlacing check.
#[derive(Debug, Clone)]
pub struct InterlacingReport {
    pub pass: bool,
    /// Worst slack over all pairwise inequalities (negative means violated).
    pub max_violation: f64,
    /// Sum of eigenvalue increases over j = 1..n-1; should be 2.
    pub delta_sum: f64,
}

/// Verifies the interlacing inequalities mu_j(G) <= mu_j(G+e) <= mu_{j-1}(G)
/// and the total shift sum(delta mu) = 2 after a single edge addition.
pub fn check_interlacing(g: &Graph, g_plus: &Graph) -> Result<InterlacingReport> {
    if g.n() != g_plus.n() || g_plus.m() != g.m() + 1 {
        return Err(Error::NotSingleAddition);
    }
    if !g.edges().all(|(u, v)| g_plus.has_edge(u, v)) {
        return Err(Error::NotSingleAddition);
    }
    let n = g.n();
    let sa = laplacian_spectrum(g)?;
    let sb = laplacian_spectrum(g_plus)?;
    let tol = 2.0 * sa.residual_tol().max(sb.residual_tol());

    let mut max_violation: f64 = 0.0;
    let mut record = |slack: f64| {
        max_violation = max_violation.max(-slack);
    };
    record(sb.mu(1) - sa.mu(1) + tol);
    for j in 2..n {
        record(sb.mu(j) - sa.mu(j) + tol);
        record(sa.mu(j - 1) - sb.mu(j) + tol);
    }
    let delta_sum: f64 = (1..n).map(|j| sb.mu(j) - sa.mu(j)).sum();
    let sum_ok = (delta_sum - 2.0).abs() <= n as f64 * tol;

    Ok(InterlacingReport {
        pass: max_violation == 0.0 && sum_ok,
        max_violation,
        delta_sum,
    })
}

/// Pass/fail record for the classical spectral floors of a connected graph.
#[derive(Debug, Clone)]
pub struct DegreeFloorReport {
    pub mu1_ge_one_plus_d1: bool,
    pub one_plus_d1_ge_mean_degree: bool,
    pub mu2_ge_d2: bool,
    pub mun_is_zero: bool,
    pub mu_n_minus_1_positive: bool,
}

impl DegreeFloorReport {
    pub fn pass(&self) -> bool {
        self.mu1_ge_one_plus_d1
            && self.one_plus_d1_ge_mean_degree
            && self.mu2_ge_d2
            && self.mun_is_zero
            && self.mu_n_minus_1_positive
    }
}

/// Checks mu_1 >= 1 + d1 >= 2m/n, mu_2 >= d2, mu_n = 0 and mu_{n-1} > 0
/// against a spectrum of the same connected graph.
pub fn check_degree_floors(g: &Graph, s: &Spectrum) -> DegreeFloorReport {
    let n = g.n();
    assert!(n >= 2, "degree floors need n >= 2");
    let seq = g.degree_sequence();
    let tol = s.residual_tol();
    DegreeFloorReport {
        mu1_ge_one_plus_d1: s.mu(1) >= (1 + seq.d1()) as f64 - tol,
        // exact integer comparison of 1 + d1 >= 2m/n
        one_plus_d1_ge_mean_degree: n * (1 + seq.d1()) >= 2 * g.m(),
        mu2_ge_d2: s.mu(2) >= seq.d2() as f64 - tol,
        mun_is_zero: s.mu(n).abs() <= tol,
        mu_n_minus_1_positive: s.mu(n - 1) > tol,
    }
}
