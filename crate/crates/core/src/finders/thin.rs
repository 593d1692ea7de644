//! Las Vegas thinning: draw uniform `k`-subsets of a graph with minimum
//! degree `c |V|` until one keeps minimum degree at least `(c - eps)(k - 1)`.

use rand::seq::index;
use rayon::prelude::*;

use crate::bounds::thinning_condition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng;

/// Samples are evaluated in parallel blocks of this size. The accepted sample
/// is always the lowest-indexed success, so the result is thread-independent.
const CHUNK: u64 = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct ThinOutcome {
    pub set: VertexSet,
    /// Index of the accepted sample plus one.
    pub samples_used: u64,
    /// `(c - eps)(k - 1)`.
    pub threshold: f64,
}

/// `deg_T(v) >= (c - eps)(k - 1)` for `|T| = k - 1`, `v` outside `T`.
pub fn good_pair(h: &Graph, v: usize, t_set: &VertexSet, c: f64, eps: f64, k: usize) -> Result<bool> {
    if k == 0 || t_set.len() != k - 1 {
        return Err(Error::Domain(format!("|T| = {} but k - 1 = {}", t_set.len(), k.saturating_sub(1))));
    }
    if t_set.contains(v) {
        return Err(Error::Domain(format!("vertex {v} lies in T")));
    }
    let d = h.deg_in(v, t_set)?;
    Ok(d as f64 >= (c - eps) * (k - 1) as f64)
}

fn min_degree_within(h: &Graph, members: &[usize]) -> usize {
    let mut mask = vec![0u64; h.row_words()];
    for &v in members {
        mask[v / 64] |= 1 << (v % 64);
    }
    members.iter().map(|&v| h.degree_into(v, &mask)).min().unwrap_or(0)
}

pub fn thin_sampled(h: &Graph, k: usize, eps: f64, seed: u64, max_samples: u64) -> Result<ThinOutcome> {
    let n = h.order();
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("eps must be > 0, got {eps}")));
    }
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if n < k {
        return Err(Error::PreconditionFailed(format!("graph has {n} vertices, fewer than k = {k}")));
    }
    if !thinning_condition(k as u64, eps) {
        return Err(Error::PreconditionFailed(format!(
            "exp(eps^2 (k-1) / 2) > k fails for k = {k}, eps = {eps}"
        )));
    }
    let delta = (0..n).map(|v| h.degree(v)).min().unwrap_or(0);
    let c = delta as f64 / n as f64;
    let threshold = (c - eps) * (k - 1) as f64;

    let draw = |i: u64| -> Vec<usize> {
        let mut stream = rng::stream(seed, i);
        let mut s = index::sample(&mut stream, n, k).into_vec();
        s.sort_unstable();
        s
    };

    let mut start = 0;
    while start < max_samples {
        let end = (start + CHUNK).min(max_samples);
        let hit = (start..end)
            .into_par_iter()
            .map(|i| (i, draw(i)))
            .find_first(|(_, s)| min_degree_within(h, s) as f64 >= threshold);
        if let Some((i, s)) = hit {
            let set = VertexSet::new(s);
            let achieved = h.degree_profile(&set)?.min().unwrap_or(0);
            assert!(achieved as f64 >= threshold, "accepted sample violates the degree contract");
            return Ok(ThinOutcome {
                set,
                samples_used: i + 1,
                threshold,
            });
        }
        start = end;
    }
    Err(Error::SamplesExhausted { samples: max_samples })
}

pub fn thin(h: &Graph, k: usize, eps: f64, seed: u64, max_samples: u64) -> Result<VertexSet> {
    thin_sampled(h, k, eps, seed, max_samples).map(|o| o.set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(m: usize) -> Graph {
        let edges: Vec<_> = (0..m).flat_map(|a| (m..2 * m).map(move |b| (a, b))).collect();
        Graph::from_edges(2 * m, &edges).unwrap()
    }

    #[test]
    fn complete_graph_accepts_first_sample() {
        let out = thin_sampled(&Graph::complete(80), 50, 0.5, 3, 10).unwrap();
        assert_eq!(out.samples_used, 1);
        assert_eq!(out.set.len(), 50);
        assert_eq!(Graph::complete(80).degree_profile(&out.set).unwrap().min(), Some(49));
    }

    #[test]
    fn bipartite_threshold_degenerates() {
        let h = complete_bipartite(40);
        let out = thin_sampled(&h, 50, 0.5, 1, 5).unwrap();
        assert_eq!(out.threshold, 0.0);
        assert_eq!(out.samples_used, 1);
    }

    #[test]
    fn preconditions() {
        let h = Graph::complete(10);
        assert!(matches!(thin(&h, 20, 0.5, 0, 5), Err(Error::PreconditionFailed(_))));
        // exp(0.01 * 9 / 2) < 10
        assert!(matches!(thin(&h, 10, 0.1, 0, 5), Err(Error::PreconditionFailed(_))));
        assert!(thin(&h, 5, 0.0, 0, 5).is_err());
    }

    #[test]
    fn exhaustion_is_reported() {
        let h = Graph::complete(60);
        assert_eq!(thin(&h, 50, 0.5, 0, 0), Err(Error::SamplesExhausted { samples: 0 }));
    }

    #[test]
    fn good_pair_examples() {
        let c6 = Graph::cycle(6);
        let t = VertexSet::new(vec![1, 2, 3, 4, 5]);
        assert!(good_pair(&c6, 0, &t, 0.9, 0.5, 6).unwrap());
        let isolated = Graph::empty(6);
        assert!(!good_pair(&isolated, 0, &t, 0.5, 0.1, 6).unwrap());
        assert!(good_pair(&isolated, 0, &t, 0.5, 0.5, 6).unwrap());
        assert!(good_pair(&c6, 0, &VertexSet::new(vec![1, 2]), 0.5, 0.1, 6).is_err());
        assert!(good_pair(&c6, 1, &t, 0.5, 0.1, 6).is_err());
    }

    #[test]
    fn reproducible_across_calls() {
        let h = crate::constructions::sample_gnp_half(120, 2);
        assert_eq!(thin_sampled(&h, 40, 0.6, 9, 200), thin_sampled(&h, 40, 0.6, 9, 200));
    }
}
