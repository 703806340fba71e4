//! Subset-variant resolving: target families, truncated subset distances,
//! resolving checks, and compilation of resolving into hitting-set form.

mod constraints;
mod targets;

pub(crate) use constraints::compile_from;
pub use constraints::{compile_constraints, Constraint, ConstraintSystem};
pub use targets::{parse_custom_targets, TargetFamily, Variant};

use std::collections::HashSet;

use crate::graph::distance::{raw_bfs, RAW_UNREACHABLE};
use crate::graph::{DistanceMatrix, ExtendedDistance, Graph, Vertex};

/// `min_{u in X} dist(u, v)`; unreachable for empty `X`.
pub fn subset_distance(dm: &DistanceMatrix, x: &[Vertex], v: Vertex) -> ExtendedDistance {
    x.iter().map(|&u| dm.get(u, v)).min().unwrap_or(ExtendedDistance::Unreachable)
}

/// `min(d, r + 1)`, with unreachable mapped to `r + 1`.
pub fn truncate(d: ExtendedDistance, r: u32) -> u32 {
    d.truncate(r)
}

/// Untruncated subset distances from every target to every vertex, in raw
/// form (`u32::MAX` for unreachable), laid out target-major.
#[derive(Clone, Debug)]
pub(crate) struct SubsetDistances {
    order: usize,
    raw: Vec<u32>,
}

impl SubsetDistances {
    pub(crate) fn new(dm: &DistanceMatrix, tf: &TargetFamily) -> Self {
        let n = dm.order();
        let mut raw = vec![RAW_UNREACHABLE; tf.len() * n];
        for (t, x) in tf.targets().iter().enumerate() {
            let row = &mut raw[t * n..(t + 1) * n];
            for &u in x {
                for (slot, &d) in row.iter_mut().zip(dm.raw_row(u)) {
                    *slot = (*slot).min(d);
                }
            }
        }
        SubsetDistances { order: n, raw }
    }

    pub(crate) fn row(&self, t: usize) -> &[u32] {
        &self.raw[t * self.order..(t + 1) * self.order]
    }

    pub(crate) fn targets(&self) -> usize {
        self.raw.len().checked_div(self.order).unwrap_or(0)
    }
}

/// Truncated signature of target `x` over `landmarks`, in landmark order.
pub fn signature(dm: &DistanceMatrix, x: &[Vertex], landmarks: &[Vertex], r: u32) -> Vec<u32> {
    landmarks.iter().map(|&l| truncate(subset_distance(dm, x, l), r)).collect()
}

/// True iff every pair of distinct targets gets distinct truncated
/// signatures over `landmarks` at radius `r`.
///
/// Runs one BFS per landmark, so it scales to graphs far larger than an
/// all-pairs matrix would allow.
pub fn is_resolving(g: &Graph, tf: &TargetFamily, landmarks: &[Vertex], r: u32) -> bool {
    let from: Vec<Vec<u32>> = landmarks.iter().map(|&l| raw_bfs(g, l)).collect();
    distinct_signatures(tf, landmarks.len(), r, |x, i| x.iter().map(|&u| from[i][u]).min())
}

/// [`is_resolving`] against a precomputed distance matrix.
pub fn is_resolving_with(dm: &DistanceMatrix, tf: &TargetFamily, landmarks: &[Vertex], r: u32) -> bool {
    distinct_signatures(tf, landmarks.len(), r, |x, i| {
        let row = dm.raw_row(landmarks[i]);
        x.iter().map(|&u| row[u]).min()
    })
}

fn distinct_signatures(tf: &TargetFamily, k: usize, r: u32, dist: impl Fn(&[Vertex], usize) -> Option<u32>) -> bool {
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(tf.len());
    tf.targets().iter().all(|x| {
        let sig: Vec<u32> = (0..k).map(|i| dist(x, i).unwrap_or(RAW_UNREACHABLE).min(r + 1)).collect();
        seen.insert(sig)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, generate, parse_family};

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    #[test]
    fn subset_distance_examples() {
        let p4 = g("path:4");
        let dm = all_pairs_distances(&p4);
        assert_eq!(subset_distance(&dm, &[0, 1], 3), ExtendedDistance::Finite(2));
        assert_eq!(subset_distance(&dm, &[], 3), ExtendedDistance::Unreachable);
        let h = g("complete:2+empty:1");
        let dm = all_pairs_distances(&h);
        assert_eq!(subset_distance(&dm, &[2], 0), ExtendedDistance::Unreachable);
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(truncate(ExtendedDistance::Finite(3), 5), 3);
        assert_eq!(truncate(ExtendedDistance::Finite(7), 3), 4);
        assert_eq!(truncate(ExtendedDistance::Unreachable, 2), 3);
    }

    #[test]
    fn resolving_examples() {
        let p4 = g("path:4");
        let tf = TargetFamily::standard(&p4, Variant::Dim).unwrap();
        assert!(is_resolving(&p4, &tf, &[0], 3));
        assert!(!is_resolving(&p4, &tf, &[0], 1));
        let dm = all_pairs_distances(&p4);
        assert_eq!(signature(&dm, &[3], &[0], 1), vec![2]);
        assert_eq!(signature(&dm, &[2], &[0], 1), vec![2]);

        let k3 = g("complete:3");
        let tf = TargetFamily::standard(&k3, Variant::Dim).unwrap();
        assert!(is_resolving(&k3, &tf, &[0, 1], 1));
        assert!(!is_resolving(&k3, &tf, &[0], 1));
        let dm = all_pairs_distances(&k3);
        assert!(is_resolving_with(&dm, &tf, &[0, 1], 1));
    }

    #[test]
    fn empty_target_reads_all_r_plus_one() {
        let p3 = g("path:3");
        let tf = TargetFamily::new(&p3, Variant::Custom, Some(&[vec![], vec![0]])).unwrap();
        assert!(is_resolving(&p3, &tf, &[0], 0));
        // {2} reads 1 from landmark 0 at r = 0, like the empty target
        let tf = TargetFamily::new(&p3, Variant::Custom, Some(&[vec![], vec![2]])).unwrap();
        assert!(!is_resolving(&p3, &tf, &[0], 0));
        assert!(is_resolving(&p3, &tf, &[0], 2));
    }
}
