use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_code_rows, graph_of};
use super::enumerate::{level, DEFAULT_CEILING};
use super::verify::{scan, verify_claim, Claim, LowerBoundCertificate, ThresholdFn};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6_string;

/// Graphs are tested in blocks of this many; within a block they run in
/// parallel, and the budget is charged block by block in enumeration order.
const BLOCK: usize = 256;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Limits for an exact computation. The budget counts subsets examined, which
/// does not depend on the machine or the thread count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExactConfig {
    pub budget: u64,
    /// Largest order the enumerator may reach.
    pub ceiling: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            budget: DEFAULT_BUDGET,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactResult {
    pub claim: Claim,
    pub value: usize,
    /// A graph on `value - 1` vertices with no qualifying set.
    pub witness_graph6: String,
    pub witness_certificate: LowerBoundCertificate,
    /// Isomorphism classes generated at each order scanned.
    pub graphs_enumerated: BTreeMap<usize, u64>,
    /// Classes actually tested after dropping the larger of each
    /// complementary pair.
    pub graphs_tested: BTreeMap<usize, u64>,
    pub subsets_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `R*_t(k)`: the least `n` such that every graph on `n` vertices has a
/// `t`-homogeneous set of order exactly `k`.
pub fn exact_fixed(t: usize, k: usize, config: ExactConfig) -> Result<ExactResult> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    if t >= k {
        return Err(Error::Domain(format!("need t < k, got t = {t}, k = {k}")));
    }
    exact(Claim::Fixed { k, t }, config)
}

/// `R_f(k)`: the least `n` such that every graph on `n` vertices has an
/// `f(l)`-homogeneous set of some order `l >= k`.
pub fn exact_variable(threshold: ThresholdFn, k: usize, config: ExactConfig) -> Result<ExactResult> {
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    exact(Claim::Variable { k, threshold }, config)
}

fn complement_rows(rows: &[u32]) -> Vec<u32> {
    let full = ((1u64 << rows.len()) - 1) as u32;
    rows.iter().enumerate().map(|(v, &r)| !r & full & !(1 << v)).collect()
}

fn exact(claim: Claim, config: ExactConfig) -> Result<ExactResult> {
    let start = Instant::now();
    let k = claim.k();
    let mut spent = 0u64;
    let mut enumerated = BTreeMap::new();
    let mut tested = BTreeMap::new();
    // Fewer than k vertices can never hold a set of order >= k.
    let mut witness = Graph::empty(k - 1);

    for n in k.. {
        let lower_bound = n;
        if n > config.ceiling {
            return Err(Error::BudgetExceeded {
                spent,
                lower_bound,
                reason: format!("order {n} is beyond the enumeration ceiling {}", config.ceiling),
            });
        }
        let classes = level(n, config.ceiling)?;
        enumerated.insert(n, classes.len() as u64);
        let graphs: Vec<Graph> = classes
            .into_par_iter()
            .filter(|(rows, code)| *code <= canonical_code_rows(&complement_rows(rows)))
            .map(|(rows, _)| graph_of(&rows))
            .collect();
        tested.insert(n, graphs.len() as u64);

        let mut counterexample = None;
        'blocks: for block in graphs.chunks(BLOCK) {
            let cap = config.budget - spent;
            let scans: Vec<_> = block.par_iter().map(|g| scan(g, &claim, cap)).collect();
            for (g, s) in block.iter().zip(scans) {
                spent += s.checked;
                if s.truncated || spent > config.budget {
                    return Err(Error::BudgetExceeded {
                        spent,
                        lower_bound,
                        reason: format!("budget of {} subsets ran out at order {n}", config.budget),
                    });
                }
                if s.witness.is_none() {
                    counterexample = Some(g.clone());
                    break 'blocks;
                }
            }
        }
        match counterexample {
            Some(g) => witness = g,
            None => {
                let witness_certificate = verify_claim(&witness, claim, u64::MAX)?;
                debug_assert!(witness_certificate.verified);
                return Ok(ExactResult {
                    claim,
                    value: n,
                    witness_graph6: to_graph6_string(&witness)?,
                    witness_certificate,
                    graphs_enumerated: enumerated,
                    graphs_tested: tested,
                    subsets_examined: spent,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the order scan only ends by returning")
}
