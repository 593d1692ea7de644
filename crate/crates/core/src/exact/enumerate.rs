//! Isomorph-free generation by canonical augmentation.
//!
//! A child is a parent plus one new vertex joined to some subset of the
//! parent. Deleting the canonical last vertex `c` of a child gives its
//! canonical parent; the child is kept only when that parent is the one it
//! was built from, and siblings are deduplicated by canonical code. Since `c`
//! has maximum degree, children whose new vertex does not are skipped before
//! any labelling work.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_code_rows, canonical_rows, graph_of, Rows, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CEILING: usize = 10;

fn check_order(n: usize, ceiling: usize) -> Result<()> {
    if n > ceiling.min(MAX_CANON_ORDER) {
        return Err(Error::CeilingExceeded {
            n,
            ceiling: ceiling.min(MAX_CANON_ORDER),
        });
    }
    Ok(())
}

fn delete_vertex(rows: &[u32], c: usize) -> Rows {
    let low = (1u32 << c) - 1;
    rows.iter()
        .enumerate()
        .filter(|&(v, _)| v != c)
        .map(|(_, &r)| (r & low) | ((r >> 1) & !low))
        .collect()
}

/// Canonical children of one parent, in increasing order of the new vertex's
/// neighbourhood mask. `parent_code` must be the parent's canonical code.
pub(crate) fn children(parent: &[u32], parent_code: u128) -> Vec<(Rows, u128)> {
    let m = parent.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let new_degree = mask.count_ones();
        let mut rows: Rows = parent
            .iter()
            .enumerate()
            .map(|(v, &r)| r | ((mask >> v) & 1) << m)
            .collect();
        rows.push(mask);
        if rows.iter().any(|r| r.count_ones() > new_degree) {
            continue;
        }
        let canon = canonical_rows(&rows);
        let c = canon.last_vertex().expect("non-empty child");
        if canonical_code_rows(&delete_vertex(&rows, c)) != parent_code {
            continue;
        }
        if seen.insert(canon.code) {
            out.push((rows, canon.code));
        }
    }
    out
}

struct Frame {
    rows: Rows,
    code: u128,
    /// Filled on first visit.
    pending: Option<std::vec::IntoIter<(Rows, u128)>>,
}

/// Depth-first stream of one representative per isomorphism class of graphs
/// on `n` vertices, each with its canonical code.
pub struct GraphStream {
    target: usize,
    stack: Vec<Frame>,
}

impl GraphStream {
    fn new(target: usize) -> Self {
        GraphStream {
            target,
            stack: vec![Frame {
                rows: Vec::new(),
                code: 0,
                pending: None,
            }],
        }
    }

    /// Like `next`, but also returns the graph's canonical code.
    pub fn next_with_code(&mut self) -> Option<(Graph, u128)> {
        self.next_rows().map(|(rows, code)| (graph_of(&rows), code))
    }

    fn next_rows(&mut self) -> Option<(Rows, u128)> {
        loop {
            let top = self.stack.last_mut()?;
            if top.rows.len() == self.target {
                let frame = self.stack.pop().expect("non-empty");
                return Some((frame.rows, frame.code));
            }
            let pending = top
                .pending
                .get_or_insert_with(|| children(&top.rows, top.code).into_iter());
            match pending.next() {
                Some((rows, code)) => self.stack.push(Frame {
                    rows,
                    code,
                    pending: None,
                }),
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_rows().map(|(rows, _)| graph_of(&rows))
    }
}

/// Every graph on `n` vertices up to isomorphism, with `n` at most
/// [`DEFAULT_CEILING`].
pub fn enumerate_graphs(n: usize) -> Result<GraphStream> {
    enumerate_graphs_with_ceiling(n, DEFAULT_CEILING)
}

/// As [`enumerate_graphs`] with a caller-chosen ceiling (capped at 16).
pub fn enumerate_graphs_with_ceiling(n: usize, ceiling: usize) -> Result<GraphStream> {
    check_order(n, ceiling)?;
    Ok(GraphStream::new(n))
}

/// All representatives of order `n` as `(rows, code)`, in the same order as
/// the sequential stream. The last level is expanded in parallel, one task per
/// parent.
pub(crate) fn level(n: usize, ceiling: usize) -> Result<Vec<(Rows, u128)>> {
    check_order(n, ceiling)?;
    if n == 0 {
        return Ok(vec![(Vec::new(), 0)]);
    }
    let mut parents = GraphStream::new(n - 1);
    let mut list = Vec::new();
    while let Some(p) = parents.next_rows() {
        list.push(p);
    }
    let nested: Vec<Vec<(Rows, u128)>> = list.par_iter().map(|(rows, code)| children(rows, *code)).collect();
    Ok(nested.into_iter().flatten().collect())
}

/// Number of graphs on `n` vertices up to isomorphism.
pub fn count_graphs(n: usize, ceiling: usize) -> Result<u64> {
    Ok(level(n, ceiling)?.len() as u64)
}
