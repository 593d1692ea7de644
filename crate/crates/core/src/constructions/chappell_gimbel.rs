use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of the three-block construction; requires `t >= 1`, `k >= 2t - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgParams {
    pub k: usize,
    pub t: usize,
}

impl CgParams {
    pub fn new(k: usize, t: usize) -> Result<Self> {
        if t < 1 || k + 1 < 2 * t {
            return Err(Error::Domain(format!("need t >= 1 and k >= 2t - 1, got k = {k}, t = {t}")));
        }
        Ok(CgParams { k, t })
    }

    /// `k + 2t - 3`.
    pub fn order(&self) -> usize {
        self.k + 2 * self.t - 3
    }
}

/// Vertex ranges of the clique `P`, the coclique `Q` and the coclique `R`.
pub fn chappell_gimbel_parts(params: CgParams) -> (Range<usize>, Range<usize>, Range<usize>) {
    let side = 2 * (params.t - 1);
    (0..side, side..2 * side, 2 * side..params.order())
}

/// Graph on `k + 2t - 3` vertices with no `t`-homogeneous set of order `k`.
///
/// `P` is a clique and `Q`, `R` are cocliques, with `|P| = |Q| = 2(t-1)` and
/// `|R| = k - 2t + 1`. `P` is complete to `R`, `Q` is anticomplete to `R`, and
/// `P`-`Q` is the circulant `(t-1)`-regular bipartite graph
/// `p_i ~ q_{(i+j) mod 2(t-1)}` for `j = 0..t-1`.
pub fn construct_chappell_gimbel(k: usize, t: usize) -> Result<Graph> {
    let params = CgParams::new(k, t)?;
    let (p, q, r) = chappell_gimbel_parts(params);
    let side = p.len();
    let mut g = Graph::empty(params.order());
    for a in p.clone() {
        for b in p.clone().filter(|&b| b > a) {
            g.add_edge(a, b);
        }
        for c in r.clone() {
            g.add_edge(a, c);
        }
        for j in 0..t - 1 {
            g.add_edge(a, q.start + (a + j) % side);
        }
    }
    Ok(g)
}
