use itertools::Itertools;

use super::SolveOutcome;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::resolve::{is_resolving_with, TargetFamily};

/// Default largest order accepted by [`exhaustive_min_resolving`].
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 16;

/// Minimum distance-`r` resolving set by brute force: every vertex subset in
/// increasing cardinality (lexicographic within a size) is checked by
/// comparing signatures directly. Independent of the constraint compiler
/// and the branch-and-bound solver, so it serves as their oracle.
pub fn exhaustive_min_resolving(g: &Graph, tf: &TargetFamily, r: u32) -> Result<SolveOutcome> {
    exhaustive_min_resolving_up_to(g, tf, r, EXHAUSTIVE_ORDER_LIMIT)
}

pub fn exhaustive_min_resolving_up_to(
    g: &Graph,
    tf: &TargetFamily,
    r: u32,
    order_limit: usize,
) -> Result<SolveOutcome> {
    let n = g.order();
    if n > order_limit {
        return Err(Error::OrderGuard { order: n, limit: order_limit });
    }
    let dm = all_pairs_distances(g);
    let mut nodes = 0u64;
    for k in 0..=n {
        for landmarks in (0..n).combinations(k) {
            nodes += 1;
            if is_resolving_with(&dm, tf, &landmarks, r) {
                return Ok(SolveOutcome::optimal(landmarks, nodes));
            }
        }
    }
    Ok(SolveOutcome::infeasible(nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_family};
    use crate::resolve::Variant;

    fn value(s: &str, variant: Variant, r: u32) -> Option<usize> {
        let g = generate(&parse_family(s).unwrap()).unwrap();
        let tf = TargetFamily::standard(&g, variant).unwrap();
        exhaustive_min_resolving(&g, &tf, r).unwrap().value
    }

    #[test]
    fn small_paths() {
        assert_eq!(value("path:5", Variant::Dim, 1), Some(2));
        assert_eq!(value("path:4", Variant::Dim, 2), Some(1));
        assert_eq!(value("complete:2", Variant::Dim, 0), Some(1));
    }

    #[test]
    fn guard() {
        let g = generate(&parse_family("path:17").unwrap()).unwrap();
        let tf = TargetFamily::standard(&g, Variant::Dim).unwrap();
        assert!(matches!(exhaustive_min_resolving(&g, &tf, 1), Err(Error::OrderGuard { order: 17, .. })));
    }
}
