//! Majorization order, Schur-convex evaluation, and majorization-minimal
//! elements of sum-constrained box sets.
//!
//! The minimal element of {x non-increasing, sum x = a, m_i <= x_i <= M_i}
//! has the shape [m_1..m_k, rho, ..., rho, M_{n-d+1}..M_n]: a leading block
//! pinned at lower bounds, a constant middle block, and a trailing block
//! pinned at upper bounds. Schur-convex objectives attain their minimum
//! over the set at that point, which is what turns spectral constraints
//! into Kirchhoff-index lower bounds.

use crate::error::{Error, Result};

fn tol_for(scale: f64) -> f64 {
    1e-12 * scale.abs().max(1.0)
}

fn is_non_increasing(x: &[f64], tol: f64) -> bool {
    x.windows(2).all(|w| w[0] >= w[1] - tol)
}

/// True iff y is majorized by z (y "flatter" than z): every prefix sum of
/// y is at most the corresponding prefix sum of z and the totals agree.
pub fn majorizes(y: &[f64], z: &[f64]) -> Result<bool> {
    if y.len() != z.len() {
        return Err(Error::LengthMismatch(y.len(), z.len()));
    }
    let total: f64 = z.iter().sum();
    let tol = tol_for(total);
    if !is_non_increasing(y, tol) || !is_non_increasing(z, tol) {
        return Err(Error::NotSorted);
    }
    let mut py = 0.0;
    let mut pz = 0.0;
    for i in 0..y.len() - 1 {
        py += y[i];
        pz += z[i];
        if py > pz + tol {
            return Ok(false);
        }
    }
    Ok((y.iter().sum::<f64>() - total).abs() <= tol)
}

/// scale * sum(1/x_i); Schur-convex on positive vectors. With scale = n
/// and x the nonzero Laplacian eigenvalues this is the Kirchhoff index.
pub fn schur_eval(x: &[f64], scale: f64) -> Result<f64> {
    for &xi in x {
        if xi <= 0.0 {
            return Err(Error::NonPositiveEntry(xi));
        }
    }
    Ok(scale * x.iter().map(|&xi| 1.0 / xi).sum::<f64>())
}

/// The set {x non-increasing, x_i in [lower_i, upper_i], sum x = a}.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedSet {
    a: f64,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl ConstrainedSet {
    /// Validates the box-and-sum invariants at construction.
    pub fn new(a: f64, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::LengthMismatch(lower.len(), upper.len()));
        }
        assert!(!lower.is_empty(), "constrained set needs at least one coordinate");
        assert!(a > 0.0, "prescribed sum must be positive");
        let tol = tol_for(a);
        if !is_non_increasing(&lower, tol) || !is_non_increasing(&upper, tol) {
            return Err(Error::NotSorted);
        }
        if lower.iter().any(|&l| l < -tol) {
            return Err(Error::NonPositiveEntry(*lower.last().unwrap()));
        }
        if lower.iter().zip(&upper).any(|(&l, &u)| l > u + tol) {
            return Err(Error::Infeasible);
        }
        let lo: f64 = lower.iter().sum();
        let hi: f64 = upper.iter().sum();
        if lo > a + tol || a > hi + tol {
            return Err(Error::Infeasible);
        }
        Ok(ConstrainedSet { a, lower, upper })
    }

    /// Lower bounds only; coordinates are capped at a, the most any
    /// coordinate of a non-negative vector summing to a can hold.
    pub fn with_lower_bounds(a: f64, lower: Vec<f64>) -> Result<Self> {
        let upper = vec![a; lower.len()];
        Self::new(a, lower, upper)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Membership test with the set's own tolerance.
    pub fn contains(&self, x: &[f64]) -> bool {
        let tol = tol_for(self.a);
        x.len() == self.len()
            && is_non_increasing(x, tol)
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&xi, (&l, &u))| xi >= l - tol && xi <= u + tol)
            && (x.iter().sum::<f64>() - self.a).abs() <= self.len() as f64 * tol
    }
}

/// Minimal element of a [`ConstrainedSet`] under the majorization order.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalElement {
    point: Vec<f64>,
    k: usize,
    d: usize,
    rho_flat: f64,
}

impl MinimalElement {
    pub fn point(&self) -> &[f64] {
        &self.point
    }

    /// Leading coordinates pinned at their lower bounds.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Trailing coordinates pinned at their upper bounds.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Constant value of the middle block.
    pub fn rho_flat(&self) -> f64 {
        self.rho_flat
    }
}

/// Constructs the majorization-minimal element of the set.
///
/// Searches (k, d) by increasing k + d, ties broken by increasing k; the
/// first pair whose flat value fits between the adjacent bounds and whose
/// point lies in the set wins. Any feasible pair yields the same point by
/// uniqueness of the minimal element.
pub fn minimal_element(s: &ConstrainedSet) -> Result<MinimalElement> {
    let n = s.len();
    let a = s.a();
    let tol = tol_for(a);
    let lower = s.lower();
    let upper = s.upper();

    let mut prefix_lower = vec![0.0; n + 1];
    for i in 0..n {
        prefix_lower[i + 1] = prefix_lower[i] + lower[i];
    }
    let mut suffix_upper = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix_upper[n - i] = suffix_upper[n - i - 1] + upper[i];
    }

    for total in 0..n {
        for k in 0..=total {
            let d = total - k;
            let rho = (a - prefix_lower[k] - suffix_upper[d]) / (n - k - d) as f64;
            if rho < lower[k] - tol {
                continue;
            }
            if rho > upper[n - d - 1] + tol {
                continue;
            }
            let mut point = Vec::with_capacity(n);
            point.extend_from_slice(&lower[..k]);
            point.extend(std::iter::repeat(rho).take(n - k - d));
            point.extend_from_slice(&upper[n - d..]);
            if s.contains(&point) {
                return Ok(MinimalElement { point, k, d, rho_flat: rho });
            }
        }
    }
    Err(Error::Infeasible)
}

/// Minimal element of {x non-increasing >= 0, sum x = a, x_i >= alpha for
/// i <= h}: the flat vector when alpha is below the mean, otherwise alpha
/// on the first h coordinates and a constant tail.
pub fn minimal_element_uniform_floor(
    a: f64,
    length: usize,
    h: usize,
    alpha: f64,
) -> Result<MinimalElement> {
    assert!(length > 0 && h >= 1 && h <= length, "need 1 <= h <= length");
    assert!(a > 0.0 && alpha > 0.0);
    let limit = a / h as f64;
    if alpha > limit + tol_for(a) {
        return Err(Error::FloorTooLarge { alpha, limit });
    }
    let mean = a / length as f64;
    if alpha <= mean {
        return Ok(MinimalElement {
            point: vec![mean; length],
            k: 0,
            d: 0,
            rho_flat: mean,
        });
    }
    let rho = (a - alpha * h as f64) / (length - h) as f64;
    let mut point = vec![alpha; h];
    point.extend(std::iter::repeat(rho).take(length - h));
    Ok(MinimalElement { point, k: h, d: 0, rho_flat: rho })
}

/// Outcome of the nested-set comparison.
#[derive(Debug, Clone)]
pub struct NestedSetReport {
    /// Outer minimal element is majorized by the inner one.
    pub minimal_elements_ordered: bool,
    /// Schur-convex values are ordered the opposite way.
    pub schur_values_ordered: bool,
    pub outer_value: f64,
    pub inner_value: f64,
}

impl NestedSetReport {
    pub fn pass(&self) -> bool {
        self.minimal_elements_ordered && self.schur_values_ordered
    }
}

/// For inner set contained in outer: the outer minimal element must be
/// majorized by the inner one, so the Schur-convex lower bound from the
/// inner set is at least the one from the outer set.
pub fn nested_set_check(
    s_outer: &ConstrainedSet,
    s_inner: &ConstrainedSet,
    scale: f64,
) -> Result<NestedSetReport> {
    let tol = tol_for(s_outer.a());
    let nested = s_inner.len() == s_outer.len()
        && (s_inner.a() - s_outer.a()).abs() <= tol
        && s_inner
            .lower()
            .iter()
            .zip(s_outer.lower())
            .all(|(&i, &o)| i >= o - tol)
        && s_inner
            .upper()
            .iter()
            .zip(s_outer.upper())
            .all(|(&i, &o)| i <= o + tol);
    if !nested {
        return Err(Error::NotNested);
    }
    let outer_min = minimal_element(s_outer)?;
    let inner_min = minimal_element(s_inner)?;
    let outer_value = schur_eval(outer_min.point(), scale)?;
    let inner_value = schur_eval(inner_min.point(), scale)?;
    Ok(NestedSetReport {
        minimal_elements_ordered: majorizes(outer_min.point(), inner_min.point())?,
        schur_values_ordered: inner_value >= outer_value - 1e-12 * scale,
        outer_value,
        inner_value,
    })
}

/// Draws a random feasible point of the set, sorted non-increasing, by
/// simplex sampling followed by clip-and-redistribute projection into the
/// box. Returns None if the projection fails to settle in 100 rounds.
pub fn sample_feasible<R: rand::Rng>(s: &ConstrainedSet, rng: &mut R) -> Option<Vec<f64>> {
    let n = s.len();
    let a = s.a();
    let tol = tol_for(a);

    // Exponential spacings give a uniform point of the scaled simplex.
    let mut x: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let sum: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v *= a / sum);

    for _ in 0..100 {
        x.sort_by(|p, q| q.total_cmp(p));
        for i in 0..n {
            x[i] = x[i].clamp(s.lower()[i], s.upper()[i]);
        }
        let diff = a - x.iter().sum::<f64>();
        if diff.abs() <= tol {
            if s.contains(&x) {
                return Some(x);
            }
            return None;
        }
        let slack: Vec<usize> = (0..n)
            .filter(|&i| {
                if diff > 0.0 {
                    x[i] < s.upper()[i] - tol
                } else {
                    x[i] > s.lower()[i] + tol
                }
            })
            .collect();
        if slack.is_empty() {
            return None;
        }
        let share = diff / slack.len() as f64;
        for i in slack {
            x[i] += share;
        }
    }
    None
}
