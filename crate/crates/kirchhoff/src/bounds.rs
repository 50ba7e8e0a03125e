//! Lower bounds on the Kirchhoff index after adding or removing h links:
//! the classical one-link Wang bounds and the majorization bounds built
//! from degree floors on the perturbed spectrum.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::majorization::{minimal_element, schur_eval, ConstrainedSet};
use crate::spectral::kirchhoff_index;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundId {
    WangAdd,
    WangRemove,
    MajorizationAdd,
    MajorizationRemove,
}

impl BoundId {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::WangAdd => "wang_add",
            BoundId::WangRemove => "wang_remove",
            BoundId::MajorizationAdd => "majorization_add",
            BoundId::MajorizationRemove => "majorization_remove",
        }
    }
}

/// The graph statistics a bound formula consumed.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundInputs {
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub d1: usize,
    pub d2: usize,
    pub diameter: Option<usize>,
    pub kirchhoff: Option<f64>,
}

/// One bound evaluation: value present iff applicable, otherwise the
/// reason records which precondition failed.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub value: Option<f64>,
    pub applicable: bool,
    pub reason: String,
    pub inputs: BoundInputs,
}

impl BoundReport {
    fn applicable(bound_id: BoundId, value: f64, inputs: BoundInputs) -> Self {
        BoundReport {
            bound_id,
            value: Some(value),
            applicable: true,
            reason: String::new(),
            inputs,
        }
    }

    fn inapplicable(bound_id: BoundId, reason: String, inputs: BoundInputs) -> Self {
        BoundReport {
            bound_id,
            value: None,
            applicable: false,
            reason,
            inputs,
        }
    }
}

fn base_inputs(g: &Graph, h: usize) -> BoundInputs {
    let deg = g.degree_sequence();
    let (d1, d2) = if g.n() >= 2 {
        (deg.d1(), deg.d2())
    } else {
        (deg.d1(), 0)
    };
    BoundInputs {
        n: g.n(),
        m: g.m(),
        h,
        d1,
        d2,
        diameter: None,
        kirchhoff: None,
    }
}

/// Checks the closed form against the constructive minimal-element route;
/// they encode the same point, so disagreement means a logic error.
fn assert_constructive_agreement(closed: f64, set: ConstrainedSet, n: usize) -> Result<()> {
    let me = minimal_element(&set)?;
    let constructive = schur_eval(me.point(), n as f64)?;
    assert!(
        (closed - constructive).abs() <= 1e-10 * closed.abs().max(1.0),
        "closed form {closed} disagrees with constructive value {constructive}"
    );
    Ok(())
}

/// Lower bound on K(G') over all graphs obtained from g by adding h links:
/// n * (1/(d1+1) + 1/d2 + (n-3)^2 / (2m+2h-1-d1-d2)).
///
/// Applicable when 2m+2h <= 1+d1+(n-2)*d2, which makes the constrained
/// spectrum vector non-increasing.
pub fn majorization_addition_bound(g: &Graph, h: usize) -> Result<BoundReport> {
    let n = g.n();
    if n < 4 {
        return Err(Error::DegenerateOrder { n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.m();
    let max_h = n * (n - 1) / 2 - m;
    if h < 1 || h > max_h {
        return Err(Error::HTooLarge { h, max: max_h });
    }
    let inputs = base_inputs(g, h);
    let (d1, d2) = (inputs.d1, inputs.d2);

    if 2 * m + 2 * h > 1 + d1 + (n - 2) * d2 {
        return Ok(BoundReport::inapplicable(
            BoundId::MajorizationAdd,
            format!(
                "assumption 2m+2h <= 1+d1+(n-2)d2 fails: {} > {}",
                2 * m + 2 * h,
                1 + d1 + (n - 2) * d2
            ),
            inputs,
        ));
    }

    let a = (2 * m + 2 * h) as f64;
    let tail = (2 * m + 2 * h - 1 - d1 - d2) as f64;
    let value = n as f64
        * (1.0 / (d1 + 1) as f64 + 1.0 / d2 as f64 + ((n - 3) * (n - 3)) as f64 / tail);

    let mut lower = vec![0.0; n - 1];
    lower[0] = (1 + d1) as f64;
    lower[1] = d2 as f64;
    assert_constructive_agreement(value, ConstrainedSet::with_lower_bounds(a, lower)?, n)?;

    Ok(BoundReport::applicable(BoundId::MajorizationAdd, value, inputs))
}

/// Lower bound on K(G'') over all connected graphs obtained from g by
/// removing h links, h < d2/2:
/// n * (1/(d1+1-2h) + 1/(d2-2h) + (n-3)^2 / (2m+2h-1-d1-d2)).
///
/// Reported inapplicable when the flat middle value exceeds d2-2h, since
/// the constructed vector is then not non-increasing and the minimal
/// element no longer matches the printed formula.
pub fn majorization_removal_bound(g: &Graph, h: usize) -> Result<BoundReport> {
    let n = g.n();
    if n < 4 {
        return Err(Error::DegenerateOrder { n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.m();
    let max_h = m - (n - 1);
    if h < 1 || h > max_h {
        return Err(Error::HTooLarge { h, max: max_h });
    }
    let inputs = base_inputs(g, h);
    let (d1, d2) = (inputs.d1, inputs.d2);
    if 2 * h >= d2 {
        return Err(Error::HalfDegreeViolated { h, d2 });
    }

    let tail = (2 * m + 2 * h - 1 - d1 - d2) as f64;
    let value = n as f64
        * (1.0 / (d1 + 1 - 2 * h) as f64
            + 1.0 / (d2 - 2 * h) as f64
            + ((n - 3) * (n - 3)) as f64 / tail);

    // Ordering condition: the flat middle value must not exceed d2-2h.
    let rho = tail / (n - 3) as f64;
    if rho > (d2 - 2 * h) as f64 {
        return Ok(BoundReport::inapplicable(
            BoundId::MajorizationRemove,
            format!(
                "ordering condition fails: flat value {rho:.6} > d2-2h = {}; raw formula value {value:.6}",
                d2 - 2 * h
            ),
            inputs,
        ));
    }

    let a = (2 * m - 2 * h) as f64;
    let mut lower = vec![0.0; n - 1];
    lower[0] = (1 + d1 - 2 * h) as f64;
    lower[1] = (d2 - 2 * h) as f64;
    assert_constructive_agreement(value, ConstrainedSet::with_lower_bounds(a, lower)?, n)?;

    Ok(BoundReport::applicable(BoundId::MajorizationRemove, value, inputs))
}

/// Diameter-based one-link addition bound: K(G) / (1 + n*diameter/2).
pub fn wang_addition_bound(g: &Graph) -> Result<BoundReport> {
    if g.n() >= 2 && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::AlreadyComplete);
    }
    let diameter = g.diameter()?;
    let k = kirchhoff_index(g)?;
    let value = k / (1.0 + g.n() as f64 * diameter as f64 / 2.0);
    let mut inputs = base_inputs(g, 1);
    inputs.diameter = Some(diameter);
    inputs.kirchhoff = Some(k);
    Ok(BoundReport::applicable(BoundId::WangAdd, value, inputs))
}

/// Edge-count one-link removal bound: n(n-1)^2 / (2(m-1)).
pub fn wang_removal_bound(g: &Graph) -> Result<BoundReport> {
    let (n, m) = (g.n(), g.m());
    if m < 2 {
        return Err(Error::DegenerateSize { m });
    }
    let value = (n * (n - 1) * (n - 1)) as f64 / (2 * (m - 1)) as f64;
    Ok(BoundReport::applicable(
        BoundId::WangRemove,
        value,
        base_inputs(g, 1),
    ))
}

/// Evaluates every bound relevant for the given h; errors are folded into
/// inapplicable reports. The one-link Wang bounds only apply at h = 1.
pub fn bound_suite(g: &Graph, h: usize) -> Vec<BoundReport> {
    let fold = |id: BoundId, r: Result<BoundReport>| match r {
        Ok(rep) => rep,
        Err(e) => BoundReport::inapplicable(id, e.to_string(), base_inputs(g, h)),
    };
    let mut out = vec![
        fold(BoundId::MajorizationAdd, majorization_addition_bound(g, h)),
        fold(BoundId::MajorizationRemove, majorization_removal_bound(g, h)),
    ];
    if h == 1 {
        out.push(fold(BoundId::WangAdd, wang_addition_bound(g)));
        out.push(fold(BoundId::WangRemove, wang_removal_bound(g)));
    }
    out
}
