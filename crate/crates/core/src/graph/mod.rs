//! Simple undirected graphs, family generators and exact distances.

pub(crate) mod distance;
mod family;

pub use distance::{all_pairs_distances, bfs_from, DistanceMatrix, ExtendedDistance};
pub use family::{generate, parse_family, FactorKind, FamilySpec, GridFactor};

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph on vertices `0..order`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency lists
/// are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, deduplicating repeated edges in either orientation.
    pub fn new(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { index, u, v, order });
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Self::from_normalized(order, norm))
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self::from_normalized(order, Vec::new())
    }

    fn from_normalized(order: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { order, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_normalized(self.order, edges)
    }

    /// `self + other`, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::from_normalized(self.order + other.order, edges)
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                let (a, b) = (index[u], index[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        Self::from_normalized(keep.len(), edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.size() + 1 == self.order && self.is_connected()
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse { line: lineno + 1, msg: e.to_string() })?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected two integers, found {}", nums.len()),
                });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some((n, _)) => {
                    if nums[0] >= n || nums[1] >= n {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("endpoint out of range for order {n}"),
                        });
                    }
                    if nums[0] == nums[1] {
                        return Err(Error::Parse { line: lineno + 1, msg: format!("self-loop at vertex {}", nums[0]) });
                    }
                    edges.push((nums[0], nums[1]));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing 'n m' header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.order, self.size());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Stable content hash (hex, 16 chars) of the order and edge list.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(self.to_edge_list().as_bytes());
        hex::encode(&digest[..8])
    }
}
