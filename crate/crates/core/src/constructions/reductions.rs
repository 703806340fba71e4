use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::resolve::Variant;

/// A hardness-reduction graph `G'` built from `G`, with the identity
/// `th_variant(G') = offset + variant_dim(G)` it is meant to satisfy.
///
/// `G` keeps vertices `0..base_order`; each attached path occupies a
/// contiguous block listed in `paths` (in path order), followed by the
/// optional extra component in `extra`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionOutput {
    #[serde(skip)]
    pub reduced: Graph,
    pub variant: Variant,
    pub base_order: usize,
    pub offset: usize,
    pub paths: Vec<Range<Vertex>>,
    pub extra: Option<Range<Vertex>>,
}

impl ReductionOutput {
    /// Throttling number predicted for `G'` given the dimension of `G`.
    pub fn predicted(&self, base_dimension: usize) -> usize {
        self.offset + base_dimension
    }
}

fn attach(g: &Graph, path_len: usize, extra_order: usize) -> (Graph, Vec<Range<Vertex>>, Option<Range<Vertex>>) {
    let n = g.order();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut paths = Vec::with_capacity(n);
    let mut next = n;
    for _ in 0..n {
        edges.extend((next..next + path_len - 1).map(|v| (v, v + 1)));
        paths.push(next..next + path_len);
        next += path_len;
    }
    let extra = (extra_order > 0).then(|| {
        if extra_order == 2 {
            edges.push((next, next + 1));
        }
        next..next + extra_order
    });
    let total = next + extra_order;
    (Graph::new(total, &edges).expect("attached components are well formed"), paths, extra)
}

/// `G` plus `n` disjoint paths on `n + 1` vertices and one isolated vertex.
pub fn mdt_reduction(g: &Graph) -> Result<ReductionOutput> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("reduction needs a non-empty graph".into()));
    }
    let (reduced, paths, extra) = attach(g, n + 1, 1);
    Ok(ReductionOutput { reduced, variant: Variant::Dim, base_order: n, offset: 2 * n, paths, extra })
}

/// `G` plus `n` disjoint paths on `n + 2` vertices and a copy of `K_2`.
pub fn emdt_reduction(g: &Graph) -> Result<ReductionOutput> {
    let n = g.order();
    if g.size() == 0 {
        return Err(Error::Domain("edge reduction needs a graph with at least one edge".into()));
    }
    let (reduced, paths, extra) = attach(g, n + 2, 2);
    Ok(ReductionOutput { reduced, variant: Variant::Edim, base_order: n, offset: 2 * n, paths, extra })
}

/// `G` plus `n` disjoint paths on `n + 2` vertices.
pub fn mmdt_reduction(g: &Graph) -> Result<ReductionOutput> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("reduction needs a non-empty graph".into()));
    }
    let (reduced, paths, extra) = attach(g, n + 2, 0);
    Ok(ReductionOutput { reduced, variant: Variant::Mdim, base_order: n, offset: 3 * n, paths, extra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_family};

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    #[test]
    fn orders_and_layout() {
        let out = mdt_reduction(&g("complete:3")).unwrap();
        assert_eq!(out.reduced.order(), 16);
        assert_eq!(out.paths, vec![3..7, 7..11, 11..15]);
        assert_eq!(out.extra, Some(15..16));
        assert_eq!(out.reduced.components().len(), 5);

        let out = emdt_reduction(&g("path:3")).unwrap();
        assert_eq!(out.reduced.order(), 20);
        assert!(out.reduced.has_edge(18, 19));

        let out = mmdt_reduction(&g("complete:2")).unwrap();
        assert_eq!(out.reduced.order(), 10);
        assert_eq!(out.extra, None);
        assert_eq!(out.predicted(2), 8);
    }

    #[test]
    fn edgeless_input_rejected_for_edges() {
        assert!(emdt_reduction(&g("empty:3")).is_err());
        assert!(mdt_reduction(&Graph::empty(0)).is_err());
    }
}
