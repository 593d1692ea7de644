use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};

use super::peel::greedy_peel;
use super::skew::{eq1_degree_bound, skew_stable_search};
use super::thin::thin_sampled;
use super::{HomogeneityWitness, DEFAULT_MAX_SAMPLES};

/// The side with at least half of all pairs as edges; the graph wins ties.
pub fn denser_side(g: &Graph) -> Side {
    let n = g.order() as u64;
    let pairs = n * n.saturating_sub(1) / 2;
    if 2 * g.edge_total() >= pairs {
        Side::Graph
    } else {
        Side::Complement
    }
}

/// Slack used by the fixed-order pipeline: `sqrt(2 ln(k+1) / (k-1))`.
pub fn fixed_pipeline_eps(k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    let kf = k as f64;
    Ok((2.0 * (kf + 1.0).ln() / (kf - 1.0)).sqrt())
}

/// `(k-1)/2 - 2 sqrt((k-1) ln k)`. Negative below `k` of a few dozen, where
/// every `k`-set qualifies.
pub fn fixed_threshold(k: usize) -> f64 {
    let kf = k as f64;
    0.5 * (kf - 1.0) - 2.0 * ((kf - 1.0) * kf.ln()).sqrt()
}

/// `(l-1)/2 + nu sqrt((l-1) ln l)`.
pub fn variable_threshold(ell: usize, nu: f64) -> f64 {
    let l = ell as f64;
    let tail = if ell <= 1 { 0.0 } else { ((l - 1.0) * l.ln()).sqrt() };
    0.5 * (l - 1.0) + nu * tail
}

pub fn fixed_pipeline(g: &Graph, k: usize, seed: u64) -> Result<HomogeneityWitness> {
    fixed_pipeline_with(g, k, seed, DEFAULT_MAX_SAMPLES)
}

/// Peel the denser side at ratio 1/2, thin the survivors down to exactly `k`
/// vertices, and certify the result against [`fixed_threshold`].
pub fn fixed_pipeline_with(g: &Graph, k: usize, seed: u64, max_samples: u64) -> Result<HomogeneityWitness> {
    let eps = fixed_pipeline_eps(k)?;
    let side = denser_side(g);
    let complemented;
    let dense = match side {
        Side::Graph => g,
        Side::Complement => {
            complemented = g.complement();
            &complemented
        }
    };
    let survivors = greedy_peel(dense, 0.5)?;
    if survivors.len() < k {
        return Err(Error::NoWitness(format!(
            "peeling left {} vertices, fewer than k = {k}",
            survivors.len()
        )));
    }
    let h = dense.induced(&survivors)?;
    let local = thin_sampled(&h, k, eps, seed, max_samples)?;
    let members = survivors.members();
    let set: VertexSet = local.set.iter().map(|i| members[i]).collect();
    HomogeneityWitness::certify(g, set, side, fixed_threshold(k), Some(seed))
}

/// Runs the skew-discrepancy search and certifies its set against
/// [`variable_threshold`] at the set's own order. The vertexwise bound
/// `(l-1)/2 + nu sqrt(l ln l)` that removal stability gives is compared with
/// the target numerically rather than assumed to dominate it.
pub fn variable_finder(g: &Graph, k: usize, nu: f64, seed: u64, max_restarts: usize) -> Result<HomogeneityWitness> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if g.order() < k {
        return Err(Error::NoWitness(format!("graph has {} vertices, fewer than k = {k}", g.order())));
    }
    let (set, side) = skew_stable_search(g, nu, seed, max_restarts)?;
    let ell = set.len();
    if ell < k {
        return Err(Error::NoWitness(format!("best stable set has order {ell} < k = {k}")));
    }
    let threshold = variable_threshold(ell, nu);
    debug_assert!(ell < 3 || eq1_degree_bound(ell, nu) >= threshold);
    HomogeneityWitness::certify(g, set, side, threshold, Some(seed))
}
