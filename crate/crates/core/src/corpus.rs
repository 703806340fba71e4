//! Graph corpora for property checks: every labeled graph of a small order,
//! and seeded random graphs, trees and subtrees.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 7;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices. Bit `i` of the index
/// selects the `i`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(Vertex, Vertex)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).expect("pairs are in range")
    })
}

/// Erdős-Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("pairs are in range")
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    Graph::new(n, &edges).expect("parents precede children")
}

/// A uniformly sized random connected vertex subset of `g`, grown from a
/// random start vertex, returned as an induced (relabeled) subgraph.
pub fn random_connected_subgraph(g: &Graph, rng: &mut impl Rng) -> Graph {
    let n = g.order();
    if n == 0 {
        return g.clone();
    }
    let target = rng.random_range(1..=n);
    let start = rng.random_range(0..n);
    let mut inside = vec![false; n];
    inside[start] = true;
    let mut keep = vec![start];
    while keep.len() < target {
        let frontier: Vec<Vertex> =
            keep.iter().flat_map(|&v| g.neighbors(v).iter().copied()).filter(|&w| !inside[w]).collect();
        let Some(&next) = frontier.choose(rng) else { break };
        inside[next] = true;
        keep.push(next);
    }
    keep.sort_unstable();
    g.induced_subgraph(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(5).count(), 1024);
        assert_eq!(all_labeled_graphs(3).map(|g| g.size()).sum::<usize>(), 12);
    }

    #[test]
    fn trees_and_subtrees() {
        let mut r = rng(DEFAULT_SEED);
        for _ in 0..50 {
            let n = r.random_range(1..=12);
            let t = random_tree(n, &mut r);
            assert!(t.is_tree());
            let s = random_connected_subgraph(&t, &mut r);
            assert!(s.is_tree() && s.order() <= n);
        }
    }

    #[test]
    fn seeded_reproducible() {
        let a = random_graph(9, 0.4, &mut rng(3));
        let b = random_graph(9, 0.4, &mut rng(3));
        assert_eq!(a, b);
    }
}
