use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Repeatedly deletes the lowest-indexed vertex whose degree is below
/// `alpha` times the current order. The survivors `H` satisfy
/// `delta(G[H]) >= alpha |H|`; an empty result means everything was peeled.
pub fn greedy_peel(g: &Graph, alpha: f64) -> Result<VertexSet> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    let n = g.order();
    let mut alive = vec![true; n];
    let mut alive_mask = VertexSet::full(n).to_mask(n);
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = n;

    while order > 0 {
        let threshold = alpha * order as f64;
        let Some(v) = (0..n).find(|&v| alive[v] && (degree[v] as f64) < threshold) else {
            break;
        };
        alive[v] = false;
        alive_mask[v / 64] &= !(1 << (v % 64));
        order -= 1;
        for (w, (&row, &mask)) in g.row(v).iter().zip(alive_mask.iter()).enumerate() {
            let mut bits = row & mask;
            while bits != 0 {
                degree[w * 64 + bits.trailing_zeros() as usize] -= 1;
                bits &= bits - 1;
            }
        }
    }

    let survivors = VertexSet::from_mask(&alive_mask);
    debug_assert!(survivors
        .iter()
        .all(|v| g.degree_into(v, &alive_mask) as f64 >= alpha * survivors.len() as f64));
    Ok(survivors)
}

/// Smallest `n` with
/// `n >= sqrt(1-a) (1/2-a)^(-1/2) k (1 + 1/(k (1-a) (1/2-a)^(1/2)))^(1/2)`,
/// the order beyond which peeling a graph with at least half of all pairs as
/// edges is guaranteed (for large `k`) to leave at least `k` vertices.
pub fn peel_guarantee_order(k: usize, alpha: f64) -> Result<usize> {
    if !(0.0..0.5).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1/2), got {alpha}")));
    }
    if k < 2 {
        return Err(Error::Domain(format!("need k >= 2, got {k}")));
    }
    let kf = k as f64;
    let gap = (0.5 - alpha).sqrt();
    let bound = (1.0 - alpha).sqrt() / gap * kf * (1.0 + 1.0 / (kf * (1.0 - alpha) * gap)).sqrt();
    Ok(bound.ceil() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sample_gnp_half;

    #[test]
    fn complete_graph_survives() {
        assert_eq!(greedy_peel(&Graph::complete(9), 0.4).unwrap(), VertexSet::full(9));
    }

    #[test]
    fn empty_graph_collapses() {
        assert!(greedy_peel(&Graph::empty(5), 0.25).unwrap().is_empty());
        assert_eq!(greedy_peel(&Graph::empty(5), 0.0).unwrap(), VertexSet::full(5));
    }

    #[test]
    fn star_peels_leaves_in_index_order() {
        // leaves 0..4, centre 4
        let star = Graph::star(4);
        assert_eq!(greedy_peel(&star, 0.5).unwrap(), VertexSet::new(vec![3, 4]));
    }

    #[test]
    fn survivors_meet_the_ratio() {
        for seed in 0..20 {
            let g = sample_gnp_half(60, seed);
            for alpha in [0.1, 0.3, 0.45, 0.5, 0.6] {
                let h = greedy_peel(&g, alpha).unwrap();
                if let Some(d) = g.degree_profile(&h).unwrap().min() {
                    assert!(d as f64 >= alpha * h.len() as f64);
                }
            }
        }
    }

    #[test]
    fn guarantee_order_values() {
        assert_eq!(peel_guarantee_order(100, 0.25).unwrap(), 176);
        for k in [2usize, 10, 57, 1000] {
            let kf = k as f64;
            let expected = (2f64.sqrt() * kf * (1.0 + 2f64.sqrt() / kf).sqrt()).ceil() as usize;
            assert_eq!(peel_guarantee_order(k, 0.0).unwrap(), expected);
        }
        let mut last = 0;
        for i in 0..=49 {
            let n = peel_guarantee_order(100, i as f64 / 100.0).unwrap();
            assert!(n >= last);
            last = n;
        }
        assert!(peel_guarantee_order(100, 0.5).is_err());
        assert!(peel_guarantee_order(1, 0.1).is_err());
    }
}
