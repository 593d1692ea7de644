//! Canonical labelling for graphs on at most 16 vertices.
//!
//! Individualisation-refinement: refine the unit partition to an equitable
//! ordered partition, branch on every vertex of the first non-singleton cell,
//! and keep the lexicographically smallest adjacency string over all leaves.
//! Refinement only looks at cell indices and neighbour counts, so two
//! isomorphic graphs explore isomorphic trees and reach the same minimum.
//! Branches on twins of an already explored vertex are skipped: swapping twins
//! is an automorphism fixing the current partition, so their subtrees yield the
//! same leaf strings.

use crate::graph::Graph;

/// Largest order whose upper triangle fits the 128-bit code.
pub const MAX_CANON_ORDER: usize = 16;

/// Adjacency rows as bitmasks; bit `j` of row `i` is the edge `ij`.
pub(crate) type Rows = Vec<u32>;

pub(crate) fn rows_of(g: &Graph) -> Rows {
    assert!(g.order() <= MAX_CANON_ORDER, "order {} exceeds {MAX_CANON_ORDER}", g.order());
    (0..g.order())
        .map(|v| g.row(v).first().copied().unwrap_or(0) as u32)
        .collect()
}

pub(crate) fn graph_of(rows: &[u32]) -> Graph {
    let mut g = Graph::empty(rows.len());
    for (i, &row) in rows.iter().enumerate() {
        let mut bits = row >> (i + 1) << (i + 1);
        while bits != 0 {
            g.add_edge(i, bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    g
}

/// Upper triangle of the graph relabelled by `perm` (`perm[label] = vertex`),
/// in graph6 column order `(0,1), (0,2), (1,2), (0,3), ...`, first pair in the
/// most significant position.
fn code_under(rows: &[u32], perm: &[usize]) -> u128 {
    let n = perm.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = rows[perm[j]];
        for &u in &perm[..j] {
            code = code << 1 | ((row >> u) & 1) as u128;
        }
    }
    code
}

/// A canonical code together with one labelling that achieves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub code: u128,
    /// `labelling[label] = vertex`.
    pub labelling: Vec<usize>,
}

impl Canonical {
    /// The vertex carrying the last label; it has maximum degree.
    pub fn last_vertex(&self) -> Option<usize> {
        self.labelling.last().copied()
    }
}

fn split_cell(rows: &[u32], cell: u32, splitter: u32) -> Vec<u32> {
    // Group by neighbour count into `splitter`, ascending.
    let mut groups: Vec<(u32, u32)> = Vec::new();
    let mut bits = cell;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        let count = (rows[v] & splitter).count_ones();
        match groups.iter_mut().find(|(c, _)| *c == count) {
            Some((_, members)) => *members |= 1 << v,
            None => groups.push((count, 1 << v)),
        }
        bits &= bits - 1;
    }
    groups.sort_unstable_by_key(|&(c, _)| c);
    groups.into_iter().map(|(_, members)| members).collect()
}

/// Refines `cells` until every cell has a uniform neighbour count into every
/// other cell.
fn refine(rows: &[u32], cells: &mut Vec<u32>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                if cells[c].count_ones() == 1 {
                    continue;
                }
                let parts = split_cell(rows, cells[c], splitter);
                if parts.len() > 1 {
                    cells.splice(c..=c, parts);
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn are_twins(rows: &[u32], u: usize, v: usize) -> bool {
    let strip = !((1u32 << u) | (1u32 << v));
    rows[u] & strip == rows[v] & strip
}

fn search(rows: &[u32], cells: Vec<u32>, best: &mut Option<Canonical>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let perm: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_under(rows, &perm);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(Canonical { code, labelling: perm });
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    let mut bits = cell;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if explored.iter().any(|&u| are_twins(rows, u, v)) {
            continue;
        }
        explored.push(v);
        let mut child = cells.clone();
        child.splice(target..=target, [1u32 << v, cell & !(1u32 << v)]);
        refine(rows, &mut child);
        search(rows, child, best);
    }
}

pub(crate) fn canonical_rows(rows: &[u32]) -> Canonical {
    let n = rows.len();
    assert!(n <= MAX_CANON_ORDER);
    if n == 0 {
        return Canonical {
            code: 0,
            labelling: Vec::new(),
        };
    }
    let mut cells = vec![((1u64 << n) - 1) as u32];
    refine(rows, &mut cells);
    let mut best = None;
    search(rows, cells, &mut best);
    best.expect("search reaches at least one leaf")
}

pub(crate) fn canonical_code_rows(rows: &[u32]) -> u128 {
    canonical_rows(rows).code
}

/// Canonical labelling of `g` (order at most 16). Two graphs are isomorphic
/// iff their codes are equal.
pub fn canonical_form(g: &Graph) -> Canonical {
    canonical_rows(&rows_of(g))
}

pub fn canonical_code(g: &Graph) -> u128 {
    canonical_form(g).code
}

/// Relabels `g` so that it equals its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    let rows = rows_of(g);
    let canon = canonical_rows(&rows);
    let mut position = vec![0; rows.len()];
    for (label, &v) in canon.labelling.iter().enumerate() {
        position[v] = label;
    }
    let mut out = Graph::empty(rows.len());
    for (u, v) in g.edges() {
        out.add_edge(position[u], position[v]);
    }
    out
}

/// Minimum code over every permutation. Exponential; the reference the
/// refined search is tested against.
pub fn canonical_code_exhaustive(g: &Graph) -> u128 {
    fn permute(rows: &[u32], perm: &mut Vec<usize>, used: u32, best: &mut u128) {
        if perm.len() == rows.len() {
            *best = (*best).min(code_under(rows, perm));
            return;
        }
        for v in 0..rows.len() {
            if used >> v & 1 == 0 {
                perm.push(v);
                permute(rows, perm, used | 1 << v, best);
                perm.pop();
            }
        }
    }
    let rows = rows_of(g);
    let mut best = u128::MAX;
    if rows.is_empty() {
        return 0;
    }
    permute(&rows, &mut Vec::new(), 0, &mut best);
    best
}
