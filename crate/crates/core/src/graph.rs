//! Dense undirected simple graphs stored as adjacency bit-rows.
//!
//! Vertices are the indices `0..n`. Row `i` is a bit-vector of `n` bits with
//! bit `j` set iff `ij` is an edge. All degree queries reduce to popcounts of a
//! row intersected with a vertex mask.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn binom2(m: usize) -> u64 {
    let m = m as u64;
    m * m.saturating_sub(1) / 2
}

/// Which graph a homogeneous set lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Graph,
    Complement,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Graph => Side::Complement,
            Side::Complement => Side::Graph,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Graph => f.write_str("graph"),
            Side::Complement => f.write_str("complement"),
        }
    }
}

/// A sorted set of distinct vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary indices; sorts and drops duplicates.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// The set with `v` removed.
    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    /// Checks every member against a graph order.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Bit mask over `n` vertices. Members must already be validated.
    pub fn to_mask(&self, n: usize) -> Vec<u64> {
        let mut mask = vec![0u64; words_for(n)];
        for &v in &self.0 {
            mask[v / WORD_BITS] |= 1 << (v % WORD_BITS);
        }
        mask
    }

    pub fn from_mask(mask: &[u64]) -> Self {
        let mut out = Vec::new();
        for (w, &word) in mask.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        VertexSet(out)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Per-vertex degrees inside an induced subgraph, aligned with the set's
/// member order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
}

impl DegreeProfile {
    pub fn min(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    pub fn max(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Undirected simple graph on `0..n` with symmetric, loop-free bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_total())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range ends.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Star with `leaves` leaves `0..leaves` and centre `leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 0..leaves {
            g.add_edge(v, leaves);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Adds edge `uv`. Panics on a loop; indices must be in range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        let w = self.words;
        self.adj[u * w + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * w + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.adj[u * w + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.adj[v * w + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of neighbours of `v` inside `mask`.
    #[inline]
    pub fn degree_into(&self, v: usize, mask: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(r, m)| (r & m).count_ones() as usize)
            .sum()
    }

    pub fn edge_total(&self) -> u64 {
        self.adj.iter().map(|w| w.count_ones() as u64).sum::<u64>() / 2
    }

    /// Iterates over edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_mask(self.row(u))
                .into_vec()
                .into_iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph: `ij` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        let tail = self.n % WORD_BITS;
        for v in 0..self.n {
            let row = out.row_mut(v);
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                if let Some(last) = row.last_mut() {
                    *last &= (1u64 << tail) - 1;
                }
            }
            row[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
        out
    }

    /// Induced subgraph on `s`, relabelled `0..|s|` in the set's sort order.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        s.validate(self.n)?;
        let members = s.members();
        let mut out = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.add_edge(i, j);
                }
            }
        }
        Ok(out)
    }

    /// `e(S)`: edges with both ends in `s`.
    pub fn edge_count(&self, s: &VertexSet) -> Result<u64> {
        s.validate(self.n)?;
        let mask = s.to_mask(self.n);
        let twice: usize = s.iter().map(|v| self.degree_into(v, &mask)).sum();
        Ok(twice as u64 / 2)
    }

    /// `e(v, S)`: neighbours of `v` in `s`; `v` need not belong to `s`.
    pub fn deg_in(&self, v: usize, s: &VertexSet) -> Result<usize> {
        if v >= self.n {
            return Err(Error::InvalidVertex { vertex: v, n: self.n });
        }
        s.validate(self.n)?;
        Ok(self.degree_into(v, &s.to_mask(self.n)))
    }

    /// Degrees of the members of `s` inside `G[s]`.
    pub fn degree_profile(&self, s: &VertexSet) -> Result<DegreeProfile> {
        s.validate(self.n)?;
        let mask = s.to_mask(self.n);
        Ok(DegreeProfile {
            degrees: s.iter().map(|v| self.degree_into(v, &mask)).collect(),
        })
    }

    /// Minimum degree of `G[s]` (side `Graph`) or of the complement of `G[s]`.
    /// Returns `None` for the empty set.
    pub fn min_degree_on(&self, s: &VertexSet, side: Side) -> Result<Option<usize>> {
        let profile = self.degree_profile(s)?;
        let m = s.len();
        Ok(match side {
            Side::Graph => profile.min(),
            Side::Complement => profile.max().map(|d| m - 1 - d),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        assert_eq!(Graph::complete(4).edge_total(), 6);
    }

    #[test]
    fn complement_is_an_involution_across_word_boundaries() {
        for n in [0, 1, 63, 64, 65, 130] {
            let g = Graph::cycle(n);
            assert_eq!(g.complement().complement(), g);
            assert_eq!(g.edge_total() + g.complement().edge_total(), binom2(n));
        }
    }

    #[test]
    fn induced_relabels_by_sort_order() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced(&VertexSet::new(vec![2, 0, 1])).unwrap(), Graph::complete(3));
        let p4 = Graph::path(4);
        let h = p4.induced(&VertexSet::new(vec![0, 2, 3])).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(1, 2)]).unwrap());
        assert_eq!(p4.induced(&VertexSet::full(4)).unwrap(), p4);
    }

    #[test]
    fn invalid_vertices_are_rejected() {
        let g = Graph::path(4);
        let bad = VertexSet::new(vec![1, 4]);
        assert_eq!(g.induced(&bad), Err(Error::InvalidVertex { vertex: 4, n: 4 }));
        assert!(g.edge_count(&bad).is_err());
        assert!(g.deg_in(7, &VertexSet::full(4)).is_err());
    }

    #[test]
    fn counts() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(&VertexSet::new(vec![0, 1, 2])).unwrap(), 2);
        let star = Graph::star(4);
        assert_eq!(star.deg_in(4, &VertexSet::new(vec![0, 1, 2, 3])).unwrap(), 4);
        assert_eq!(Graph::complete(4).edge_count(&VertexSet::full(4)).unwrap(), 6);
    }

    #[test]
    fn min_degree_sides() {
        let p3 = Graph::path(3);
        let all = VertexSet::full(3);
        assert_eq!(p3.min_degree_on(&all, Side::Graph).unwrap(), Some(1));
        assert_eq!(p3.min_degree_on(&all, Side::Complement).unwrap(), Some(0));
        assert_eq!(p3.min_degree_on(&VertexSet::empty(), Side::Graph).unwrap(), None);
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::new(vec![0, 5, 63, 64, 100]);
        assert_eq!(VertexSet::from_mask(&s.to_mask(101)), s);
    }
}
