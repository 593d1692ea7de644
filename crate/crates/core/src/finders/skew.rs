//! Hill climbing on the skew discrepancy `D_nu(X) = |D(X)| - nu sqrt(|X|^3 ln |X|)`.
//!
//! If `X` has `D(X) >= 0` and some `x in X` has
//! `deg_{G[X]}(x) < (|X|-1)/2 + nu sqrt(|X| ln |X|)`, then deleting `x`
//! strictly increases `D_nu`. So at any set where no single deletion helps,
//! every vertex clears that bound on the side where the discrepancy is
//! positive. The search below only stops at such sets.

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};
use crate::measures::{discrepancy_from_counts, skew_from_counts, SkewParams};
use crate::rng;

/// `(m-1)/2 + nu sqrt(m ln m)`, zero-penalty for `m <= 1`.
pub fn eq1_degree_bound(m: usize, nu: f64) -> f64 {
    let mf = m as f64;
    let tail = if m <= 1 { 0.0 } else { (mf * mf.ln()).sqrt() };
    0.5 * (mf - 1.0) + nu * tail
}

/// Best local maximum over all restarts.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewOutcome {
    pub set: VertexSet,
    pub edges: u64,
    pub discrepancy: f64,
    pub skew: f64,
    /// Index of the restart that produced the set.
    pub restart: usize,
}

struct Climber<'a> {
    g: &'a Graph,
    nu: f64,
    mask: Vec<u64>,
    inside: Vec<bool>,
    /// Neighbours of each vertex inside the current set.
    degree_in: Vec<usize>,
    edges: u64,
    size: usize,
}

impl<'a> Climber<'a> {
    fn new(g: &'a Graph, nu: f64, start: &[usize]) -> Self {
        let n = g.order();
        let set = VertexSet::new(start.to_vec());
        let mask = set.to_mask(n);
        let degree_in: Vec<usize> = (0..n).map(|v| g.degree_into(v, &mask)).collect();
        let mut inside = vec![false; n];
        for v in set.iter() {
            inside[v] = true;
        }
        let edges = set.iter().map(|v| degree_in[v] as u64).sum::<u64>() / 2;
        Climber {
            g,
            nu,
            mask,
            inside,
            degree_in,
            edges,
            size: set.len(),
        }
    }

    fn value(&self) -> f64 {
        skew_from_counts(self.edges, self.size, self.nu)
    }

    fn toggle(&mut self, v: usize) {
        let word = v / 64;
        let bit = 1u64 << (v % 64);
        let adding = !self.inside[v];
        if adding {
            self.edges += self.degree_in[v] as u64;
            self.size += 1;
            self.mask[word] |= bit;
        } else {
            self.edges -= self.degree_in[v] as u64;
            self.size -= 1;
            self.mask[word] &= !bit;
        }
        self.inside[v] = adding;
        for (w, &row) in self.g.row(v).iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let u = w * 64 + bits.trailing_zeros() as usize;
                if adding {
                    self.degree_in[u] += 1;
                } else {
                    self.degree_in[u] -= 1;
                }
                bits &= bits - 1;
            }
        }
    }

    /// First-improvement ascent: scan vertices in index order, apply the first
    /// add/remove that strictly increases the value, rescan from the start.
    fn climb(&mut self) {
        let n = self.g.order();
        let mut current = self.value();
        'scan: loop {
            for v in 0..n {
                let candidate = if self.inside[v] {
                    skew_from_counts(self.edges - self.degree_in[v] as u64, self.size - 1, self.nu)
                } else {
                    skew_from_counts(self.edges + self.degree_in[v] as u64, self.size + 1, self.nu)
                };
                if candidate > current {
                    self.toggle(v);
                    current = candidate;
                    continue 'scan;
                }
            }
            break;
        }
    }

    fn into_outcome(self, restart: usize) -> SkewOutcome {
        let skew = self.value();
        SkewOutcome {
            set: VertexSet::from_mask(&self.mask),
            edges: self.edges,
            discrepancy: discrepancy_from_counts(self.edges, self.size),
            skew,
            restart,
        }
    }
}

fn run_restart(g: &Graph, nu: f64, seed: u64, restart: usize) -> SkewOutcome {
    let n = g.order();
    let mut stream = rng::stream(seed, restart as u64);
    let size = stream.random_range(2..=n);
    let start = index::sample(&mut stream, n, size).into_vec();
    let mut climber = Climber::new(g, nu, &start);
    climber.climb();
    climber.into_outcome(restart)
}

/// Runs `max_restarts` seeded hill climbs and returns the best local maximum
/// (ties go to the lowest restart index). Restarts run in parallel; the result
/// does not depend on the thread count.
pub fn skew_local_search(g: &Graph, nu: f64, seed: u64, max_restarts: usize) -> Result<SkewOutcome> {
    let nu = SkewParams::new(nu)?.nu();
    if g.order() < 2 {
        return Err(Error::NoWitness(format!("graph of order {} has no pair", g.order())));
    }
    if max_restarts == 0 {
        return Err(Error::Domain("need at least one restart".into()));
    }
    let outcomes: Vec<SkewOutcome> = (0..max_restarts)
        .into_par_iter()
        .map(|r| run_restart(g, nu, seed, r))
        .collect();
    let mut best: Option<SkewOutcome> = None;
    for outcome in outcomes {
        if best.as_ref().is_none_or(|b| outcome.skew > b.skew) {
            best = Some(outcome);
        }
    }
    Ok(best.expect("at least one restart"))
}

/// Skew-discrepancy search returning a removal-stable set and the side on
/// which its discrepancy is positive.
pub fn skew_stable_search(g: &Graph, nu: f64, seed: u64, max_restarts: usize) -> Result<(VertexSet, Side)> {
    let outcome = skew_local_search(g, nu, seed, max_restarts)?;
    if outcome.discrepancy > 0.0 {
        Ok((outcome.set, Side::Graph))
    } else if outcome.discrepancy < 0.0 {
        Ok((outcome.set, Side::Complement))
    } else {
        Err(Error::NoWitness("every restart ended at a set with zero discrepancy".into()))
    }
}

/// Vertices of `x` that break the one-step implication: degree (on the side
/// where `D(X)` is non-negative) below `eq1_degree_bound(|X|, nu)` while
/// deleting them does not strictly increase `D_nu`. Empty for every set the
/// implication covers.
pub fn removal_stability_violations(g: &Graph, x: &VertexSet, nu: f64) -> Result<Vec<usize>> {
    let nu = SkewParams::new(nu)?.nu();
    x.validate(g.order())?;
    let m = x.len();
    if m < 2 {
        return Ok(Vec::new());
    }
    let mask = x.to_mask(g.order());
    let degrees: Vec<usize> = x.iter().map(|v| g.degree_into(v, &mask)).collect();
    let edges = degrees.iter().sum::<usize>() as u64 / 2;
    let on_graph_side = discrepancy_from_counts(edges, m) >= 0.0;
    let bound = eq1_degree_bound(m, nu);
    let current = skew_from_counts(edges, m, nu);
    Ok(x.iter()
        .zip(&degrees)
        .filter(|&(_, &d)| {
            let side_degree = if on_graph_side { d } else { m - 1 - d };
            let removal = skew_from_counts(edges - d as u64, m - 1, nu);
            (side_degree as f64) < bound && removal <= current
        })
        .map(|(v, _)| v)
        .collect())
}
