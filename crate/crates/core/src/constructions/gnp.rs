use rand::RngCore;

use crate::graph::Graph;
use crate::rng;

/// `G(n, 1/2)`: every pair is an edge independently with probability 1/2.
///
/// Row `i` draws the bits for its pairs `(i, j > i)` from the random stream
/// `(seed, i)`, so the graph is a pure function of `(n, seed)`.
pub fn sample_gnp_half(n: usize, seed: u64) -> Graph {
    let mut g = Graph::empty(n);
    let words = g.row_words();
    for i in 0..n {
        let mut stream = rng::stream(seed, i as u64);
        let first = (i + 1) / 64;
        for w in first..words {
            let mut bits = stream.next_u64();
            if w == first {
                let low = (i + 1) % 64;
                bits &= u64::MAX.checked_shl(low as u32).unwrap_or(0);
            }
            let hi_end = (w + 1) * 64;
            if hi_end > n {
                bits &= (1u64 << (n % 64)) - 1;
            }
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                g.add_edge(i, j);
                bits &= bits - 1;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_orders_are_edgeless() {
        assert_eq!(sample_gnp_half(0, 3).order(), 0);
        assert_eq!(sample_gnp_half(1, 3).edge_total(), 0);
    }

    #[test]
    fn reproducible_and_seed_sensitive() {
        assert_eq!(sample_gnp_half(70, 9), sample_gnp_half(70, 9));
        for s in 0..100u64 {
            assert_ne!(sample_gnp_half(40, 2 * s), sample_gnp_half(40, 2 * s + 1));
        }
    }

    #[test]
    fn edge_count_within_four_sigma() {
        let n = 1000usize;
        let pairs = (n * (n - 1) / 2) as f64;
        let e = sample_gnp_half(n, 1).edge_total() as f64;
        let sigma = 0.5 * pairs.sqrt();
        assert!((e - pairs / 2.0).abs() < 4.0 * sigma, "e = {e}");
    }

    #[test]
    fn no_loops_and_symmetric_across_words() {
        let g = sample_gnp_half(130, 5);
        for i in 0..130 {
            assert!(!g.has_edge(i, i));
            for j in 0..130 {
                assert_eq!(g.has_edge(i, j), g.has_edge(j, i));
            }
        }
    }
}
