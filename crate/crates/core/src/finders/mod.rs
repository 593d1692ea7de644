//! Homogeneous-set search procedures. Each returns a set that the caller can
//! re-verify against the graph; none of them claims a guarantee beyond what it
//! has checked.

mod peel;
mod pipeline;
mod skew;
mod thin;

pub use peel::{greedy_peel, peel_guarantee_order};
pub use pipeline::{
    denser_side, fixed_pipeline, fixed_pipeline_eps, fixed_pipeline_with, fixed_threshold,
    variable_finder, variable_threshold,
};
pub use skew::{
    eq1_degree_bound, removal_stability_violations, skew_local_search, skew_stable_search,
    SkewOutcome,
};
pub use thin::{good_pair, thin, thin_sampled, ThinOutcome};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};

pub const DEFAULT_MAX_RESTARTS: usize = 200;
pub const DEFAULT_MAX_SAMPLES: u64 = 1000;

/// A positive certificate: `set` induces a subgraph of minimum degree
/// `min_degree >= threshold` on `side`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomogeneityWitness {
    pub set: VertexSet,
    pub side: Side,
    pub min_degree: usize,
    pub threshold: f64,
    pub seed: Option<u64>,
}

impl HomogeneityWitness {
    /// Computes the minimum degree of `set` on `side` and builds the witness
    /// if it meets `threshold`.
    pub fn certify(g: &Graph, set: VertexSet, side: Side, threshold: f64, seed: Option<u64>) -> Result<Self> {
        let min_degree = g
            .min_degree_on(&set, side)?
            .ok_or_else(|| Error::NoWitness("empty set".into()))?;
        if (min_degree as f64) < threshold {
            return Err(Error::NoWitness(format!(
                "minimum degree {min_degree} is below the threshold {threshold}"
            )));
        }
        Ok(HomogeneityWitness {
            set,
            side,
            min_degree,
            threshold,
            seed,
        })
    }

    /// Recomputes the minimum degree and checks both the recorded value and
    /// the threshold.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        let recomputed = g.min_degree_on(&self.set, self.side)?;
        Ok(recomputed == Some(self.min_degree) && self.min_degree as f64 >= self.threshold)
    }
}

/// Parameters shared by the finders; which fields matter depends on the mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FinderConfig {
    /// Peel target ratio, in `[0, 1/2)`.
    pub alpha: f64,
    /// Skew weight, `>= 0`.
    pub nu: f64,
    /// Thinning slack, `> 0`.
    pub eps: f64,
    /// Target order, `>= 2`.
    pub k: usize,
    pub seed: u64,
    pub max_restarts: usize,
    pub max_samples: u64,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig {
            alpha: 0.25,
            nu: 0.0,
            eps: 0.5,
            k: 2,
            seed: 0,
            max_restarts: DEFAULT_MAX_RESTARTS,
            max_samples: DEFAULT_MAX_SAMPLES,
        }
    }
}

impl FinderConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..0.5).contains(&self.alpha) {
            return Err(Error::Domain(format!("alpha must lie in [0, 1/2), got {}", self.alpha)));
        }
        if !(self.nu >= 0.0) {
            return Err(Error::Domain(format!("nu must be >= 0, got {}", self.nu)));
        }
        if !(self.eps > 0.0) {
            return Err(Error::Domain(format!("eps must be > 0, got {}", self.eps)));
        }
        if self.k < 2 {
            return Err(Error::Domain(format!("k must be >= 2, got {}", self.k)));
        }
        Ok(())
    }
}
