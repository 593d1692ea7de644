//! Discrepancy and skew discrepancy of vertex sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binom2, Graph, VertexSet};

/// Weight `nu >= 0` of the skew penalty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SkewParams {
    nu: f64,
}

impl SkewParams {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu >= 0.0 {
            Ok(SkewParams { nu })
        } else {
            Err(Error::Domain(format!("skew weight must be finite and >= 0, got {nu}")))
        }
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

impl TryFrom<f64> for SkewParams {
    type Error = Error;
    fn try_from(nu: f64) -> Result<Self> {
        SkewParams::new(nu)
    }
}

impl From<SkewParams> for f64 {
    fn from(p: SkewParams) -> f64 {
        p.nu
    }
}

/// `e - C(m,2)/2` from an edge count and a set size. Exact in `f64` for any
/// realistic size since the value is a half-integer.
#[inline]
pub fn discrepancy_from_counts(edges: u64, m: usize) -> f64 {
    edges as f64 - 0.5 * binom2(m) as f64
}

/// `sqrt(m^3 ln m)`, zero for `m <= 1`.
#[inline]
pub fn skew_penalty(m: usize) -> f64 {
    if m <= 1 {
        return 0.0;
    }
    let m = m as f64;
    (m * m * m * m.ln()).sqrt()
}

/// Skew discrepancy from counts. Every caller that compares skew values goes
/// through this function so that equal `(edges, m)` always give equal values.
#[inline]
pub fn skew_from_counts(edges: u64, m: usize, nu: f64) -> f64 {
    if m <= 1 {
        return 0.0;
    }
    discrepancy_from_counts(edges, m).abs() - nu * skew_penalty(m)
}

/// `D(X) = e(X) - C(|X|,2)/2`; zero for `|X| <= 1`.
pub fn discrepancy(g: &Graph, x: &VertexSet) -> Result<f64> {
    let e = g.edge_count(x)?;
    Ok(discrepancy_from_counts(e, x.len()))
}

/// `D_nu(X) = |D(X)| - nu * sqrt(|X|^3 ln |X|)`; zero for `|X| <= 1`.
pub fn skew_discrepancy(g: &Graph, x: &VertexSet, nu: f64) -> Result<f64> {
    let params = SkewParams::new(nu)?;
    let e = g.edge_count(x)?;
    Ok(skew_from_counts(e, x.len(), params.nu()))
}
