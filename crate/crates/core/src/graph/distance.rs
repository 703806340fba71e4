use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Graph, Vertex};

/// A shortest-path distance, or `Unreachable` across components.
///
/// `Unreachable` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedDistance {
    Finite(u32),
    Unreachable,
}

impl ExtendedDistance {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedDistance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedDistance::Finite(d) => Some(d),
            ExtendedDistance::Unreachable => None,
        }
    }

    /// `min(self, r + 1)`; `Unreachable` becomes `r + 1`.
    pub fn truncate(self, r: u32) -> u32 {
        match self {
            ExtendedDistance::Finite(d) => d.min(r + 1),
            ExtendedDistance::Unreachable => r + 1,
        }
    }

    pub(crate) fn from_raw(raw: u32) -> Self {
        if raw == RAW_UNREACHABLE {
            ExtendedDistance::Unreachable
        } else {
            ExtendedDistance::Finite(raw)
        }
    }
}

impl fmt::Display for ExtendedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDistance::Finite(d) => write!(f, "{d}"),
            ExtendedDistance::Unreachable => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedDistance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedDistance::Finite(d) => s.serialize_u32(*d),
            ExtendedDistance::Unreachable => s.serialize_none(),
        }
    }
}

// Internal storage marker; never leaks through the public API.
pub(crate) const RAW_UNREACHABLE: u32 = u32::MAX;

/// Single-source BFS distances.
pub fn bfs_from(g: &Graph, source: Vertex) -> Vec<ExtendedDistance> {
    raw_bfs(g, source).into_iter().map(ExtendedDistance::from_raw).collect()
}

pub(crate) fn raw_bfs(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![RAW_UNREACHABLE; g.order()];
    fill_bfs(g, source, &mut dist);
    dist
}

fn fill_bfs(g: &Graph, source: Vertex, dist: &mut [u32]) {
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            if dist[w] == RAW_UNREACHABLE {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// All-pairs shortest-path distances of an unweighted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    raw: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> ExtendedDistance {
        ExtendedDistance::from_raw(self.raw[u * self.order + v])
    }

    pub(crate) fn raw_row(&self, u: Vertex) -> &[u32] {
        &self.raw[u * self.order..(u + 1) * self.order]
    }

    /// Largest finite distance (0 for graphs with at most one vertex).
    pub fn max_finite(&self) -> u32 {
        self.raw.iter().copied().filter(|&d| d != RAW_UNREACHABLE).max().unwrap_or(0)
    }

    pub fn has_unreachable(&self) -> bool {
        self.raw.contains(&RAW_UNREACHABLE)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut raw = vec![RAW_UNREACHABLE; n * n];
    for (s, row) in raw.chunks_mut(n.max(1)).enumerate().take(n) {
        fill_bfs(g, s, row);
    }
    DistanceMatrix { order: n, raw }
}
