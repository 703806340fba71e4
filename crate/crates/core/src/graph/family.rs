//! Generators for every graph family used in the toolkit, plus the family DSL.
//!
//! Vertex numbering is fixed per family so witnesses are reproducible:
//!
//! * paths and cycles: `0..n` in order along the path/cycle;
//! * complete bipartite `K_{s,t}`: part A is `0..s`, part B is `s..s+t`;
//! * star of order `n`: center `0`, leaves `1..n`;
//! * spider: body `0`, then each leg outward from the body, legs in the given order;
//! * circulant: `i ~ j` iff `(i - j) mod n` lies in `S ∪ -S`;
//! * grid: row-major over factor coordinates, the first factor most significant;
//! * hypercube `Q_d`: vertex `b` is the bitstring `b`, adjacent when one bit differs;
//! * disjoint union: operands in order, each shifted by the orders before it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridFactor {
    pub kind: FactorKind,
    pub len: usize,
}

impl GridFactor {
    pub fn path(len: usize) -> Self {
        GridFactor { kind: FactorKind::Path, len }
    }

    pub fn cycle(len: usize) -> Self {
        GridFactor { kind: FactorKind::Cycle, len }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite {
        s: usize,
        t: usize,
    },
    /// Star of the given order, i.e. `K_{1, n-1}`.
    Star(usize),
    /// Spider with the listed leg lengths. With `strict`, fewer than three legs
    /// or a zero-length leg is rejected; otherwise zero-length legs are dropped
    /// and a spider with fewer than three legs is generated as the path it is.
    Spider {
        legs: Vec<usize>,
        strict: bool,
    },
    Circulant {
        n: usize,
        connections: Vec<usize>,
    },
    Grid(Vec<GridFactor>),
    Hypercube(u32),
    Empty(usize),
    DisjointUnion(Vec<FamilySpec>),
    Complement(Box<FamilySpec>),
    EdgeList {
        order: usize,
        edges: Vec<(Vertex, Vertex)>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path(n) => Graph::new(*n, &path_edges(0, *n)),
        Cycle(n) => {
            if *n < 3 {
                return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
            }
            let mut e = path_edges(0, *n);
            e.push((n - 1, 0));
            Graph::new(*n, &e)
        }
        Complete(n) => {
            let mut e = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    e.push((u, v));
                }
            }
            Graph::new(*n, &e)
        }
        CompleteBipartite { s, t } => {
            if *s == 0 || *t == 0 {
                return Err(invalid("complete bipartite parts must be nonempty"));
            }
            let e: Vec<_> = (0..*s).flat_map(|u| (*s..s + t).map(move |v| (u, v))).collect();
            Graph::new(s + t, &e)
        }
        Star(n) => {
            if *n == 0 {
                return Err(invalid("star needs at least one vertex"));
            }
            let e: Vec<_> = (1..*n).map(|v| (0, v)).collect();
            Graph::new(*n, &e)
        }
        Spider { legs, strict } => spider(legs, *strict),
        Circulant { n, connections } => circulant(*n, connections),
        Grid(factors) => grid(factors),
        Hypercube(d) => {
            if *d > 20 {
                return Err(invalid(format!("hypercube dimension {d} too large")));
            }
            let n = 1usize << d;
            let mut e = Vec::new();
            for b in 0..n {
                for i in 0..*d {
                    let c = b ^ (1 << i);
                    if b < c {
                        e.push((b, c));
                    }
                }
            }
            Graph::new(n, &e)
        }
        Empty(n) => Ok(Graph::empty(*n)),
        DisjointUnion(parts) => {
            let mut g = Graph::empty(0);
            for p in parts {
                g = g.disjoint_union(&generate(p)?);
            }
            Ok(g)
        }
        Complement(inner) => Ok(generate(inner)?.complement()),
        EdgeList { order, edges } => Graph::new(*order, edges),
    }
}

fn path_edges(start: Vertex, n: usize) -> Vec<(Vertex, Vertex)> {
    (1..n).map(|i| (start + i - 1, start + i)).collect()
}

fn spider(legs: &[usize], strict: bool) -> Result<Graph> {
    if strict {
        if legs.len() < 3 {
            return Err(invalid(format!("spider needs at least 3 legs, got {}", legs.len())));
        }
        if legs.contains(&0) {
            return Err(invalid("spider legs must have length at least 1"));
        }
    }
    let legs: Vec<usize> = legs.iter().copied().filter(|&l| l > 0).collect();
    let order = 1 + legs.iter().sum::<usize>();
    let mut e = Vec::new();
    let mut next = 1;
    for &len in &legs {
        e.push((0, next));
        e.extend(path_edges(next, len));
        next += len;
    }
    Graph::new(order, &e)
}

fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("circulant needs at least one vertex"));
    }
    for &x in connections {
        if x < 1 || x > n / 2 {
            return Err(invalid(format!("connection {x} outside 1..={} for n={n}", n / 2)));
        }
    }
    let mut e = Vec::new();
    for i in 0..n {
        for &x in connections {
            e.push((i, (i + x) % n));
        }
    }
    Graph::new(n, &e)
}

fn grid(factors: &[GridFactor]) -> Result<Graph> {
    if factors.is_empty() {
        return Err(invalid("grid needs at least one factor"));
    }
    for f in factors {
        match f.kind {
            FactorKind::Cycle if f.len < 3 => {
                return Err(invalid(format!("cycle factor needs length >= 3, got {}", f.len)))
            }
            FactorKind::Path if f.len == 0 => return Err(invalid("path factor needs length >= 1")),
            _ => {}
        }
    }
    let order: usize = factors.iter().map(|f| f.len).product();
    // stride[i] = product of lengths of factors after i
    let mut stride = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * factors[i + 1].len;
    }
    let mut e = Vec::new();
    for v in 0..order {
        for (i, f) in factors.iter().enumerate() {
            let c = (v / stride[i]) % f.len;
            if c + 1 < f.len {
                e.push((v, v + stride[i]));
            } else if f.kind == FactorKind::Cycle {
                e.push((v, v - c * stride[i]));
            }
        }
    }
    Graph::new(order, &e)
}

/// Parses a family DSL string such as `path:50`, `circulant:17:1,2`,
/// `grid:P10xC6`, `kbipartite:3,4`, `complete:3+complete:2` or
/// `complement:path:4`.
pub fn parse_family(s: &str) -> Result<FamilySpec> {
    let s = s.trim();
    if s.contains('+') {
        let parts = s.split('+').map(parse_family).collect::<Result<Vec<_>>>()?;
        return Ok(FamilySpec::DisjointUnion(parts));
    }
    if let Some(rest) = s.strip_prefix("complement:") {
        return Ok(FamilySpec::Complement(Box::new(parse_family(rest)?)));
    }
    let (kind, args) = s.split_once(':').ok_or_else(|| invalid(format!("missing ':' in '{s}'")))?;
    let num = |t: &str| -> Result<usize> {
        t.trim().parse::<usize>().map_err(|_| invalid(format!("bad number '{t}' in '{s}'")))
    };
    let list = |t: &str| -> Result<Vec<usize>> { t.split(',').map(num).collect() };
    Ok(match kind {
        "path" => FamilySpec::Path(num(args)?),
        "cycle" => FamilySpec::Cycle(num(args)?),
        "complete" => FamilySpec::Complete(num(args)?),
        "empty" => FamilySpec::Empty(num(args)?),
        "star" => FamilySpec::Star(num(args)?),
        "hypercube" => FamilySpec::Hypercube(num(args)? as u32),
        "kbipartite" => {
            let v = list(args)?;
            if v.len() != 2 {
                return Err(invalid(format!("kbipartite takes two sizes, got '{args}'")));
            }
            FamilySpec::CompleteBipartite { s: v[0], t: v[1] }
        }
        "spider" => FamilySpec::Spider { legs: list(args)?, strict: true },
        "circulant" => {
            let (n, set) =
                args.split_once(':').ok_or_else(|| invalid(format!("circulant needs 'n:S', got '{args}'")))?;
            FamilySpec::Circulant { n: num(n)?, connections: list(set)? }
        }
        "grid" => {
            let factors = args
                .split(['x', 'X'])
                .map(|f| {
                    let (k, len) = f.split_at(1.min(f.len()));
                    let len = num(len)?;
                    match k {
                        "P" | "p" => Ok(GridFactor::path(len)),
                        "C" | "c" => Ok(GridFactor::cycle(len)),
                        _ => Err(invalid(format!("grid factor '{f}' must start with P or C"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            FamilySpec::Grid(factors)
        }
        "edges" => {
            let (n, list) = args.split_once(':').unwrap_or((args, ""));
            let mut edges = Vec::new();
            for pair in list.split(',').filter(|p| !p.trim().is_empty()) {
                let (u, v) =
                    pair.split_once('-').ok_or_else(|| invalid(format!("edge '{pair}' must look like u-v")))?;
                edges.push((num(u)?, num(v)?));
            }
            FamilySpec::EdgeList { order: num(n)?, edges }
        }
        _ => return Err(invalid(format!("unknown family '{kind}'"))),
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_family(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { s, t } => write!(f, "kbipartite:{s},{t}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Spider { legs, .. } => write!(f, "spider:{}", join(legs)),
            FamilySpec::Circulant { n, connections } => {
                write!(f, "circulant:{n}:{}", join(connections))
            }
            FamilySpec::Grid(factors) => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|g| match g.kind {
                        FactorKind::Path => format!("P{}", g.len),
                        FactorKind::Cycle => format!("C{}", g.len),
                    })
                    .collect();
                write!(f, "grid:{}", parts.join("x"))
            }
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::DisjointUnion(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join("+"))
            }
            FamilySpec::Complement(inner) => write!(f, "complement:{inner}"),
            FamilySpec::EdgeList { order, edges } => {
                let e: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "edges:{order}:{}", e.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    #[test]
    fn closed_form_counts() {
        for d in 0..=6u32 {
            let q = generate(&FamilySpec::Hypercube(d)).unwrap();
            assert_eq!(q.order(), 1 << d);
            assert_eq!(q.size(), (d as usize) * (1usize << d) / 2);
        }
        assert_eq!(g("hypercube:3").size(), 12);
        assert_eq!(g("path:5").size(), 4);
        assert_eq!(g("cycle:7").size(), 7);
        assert_eq!(g("complete:6").size(), 15);
        assert_eq!(g("kbipartite:3,4").size(), 12);
        assert_eq!(g("star:6").size(), 5);
        assert_eq!(g("grid:P3xP4").size(), 3 * 3 + 4 * 2);
        assert_eq!(g("grid:C4xC5").size(), 2 * 20);
    }

    #[test]
    fn circulant_degrees() {
        let c = g("circulant:17:1,2");
        assert_eq!(c.order(), 17);
        assert!(c.vertices().all(|v| c.degree(v) == 4));
        // n/2 connection contributes a single neighbor
        let c8 = g("circulant:8:1,4");
        assert!(c8.vertices().all(|v| c8.degree(v) == 3));
        assert!(parse_family("circulant:8:5").and_then(|s| generate(&s)).is_err());
        assert!(parse_family("circulant:8:0").and_then(|s| generate(&s)).is_err());
    }

    #[test]
    fn spider_numbering() {
        let s = g("spider:2,2,2");
        assert_eq!(s.order(), 7);
        assert_eq!(s.degree(0), 3);
        assert_eq!(s.neighbors(0), &[1, 3, 5]);
        assert!(s.has_edge(1, 2) && s.has_edge(5, 6));
        assert!(parse_family("spider:2,2").and_then(|s| generate(&s)).is_err());
        let lax = generate(&FamilySpec::Spider { legs: vec![2, 0, 3], strict: false }).unwrap();
        assert_eq!(lax, g("path:6").induced_subgraph(&[2, 1, 0, 3, 4, 5]));
    }

    #[test]
    fn grid_row_major() {
        let gr = g("grid:P2xC3");
        // (0,0)=0 (0,1)=1 (0,2)=2 (1,0)=3 ...
        assert!(gr.has_edge(0, 3) && gr.has_edge(0, 1) && gr.has_edge(0, 2));
        assert!(!gr.has_edge(0, 4));
        assert_eq!(g("grid:P2xP2xP2").size(), g("hypercube:3").size());
    }

    #[test]
    fn unions_and_complements() {
        let u = g("complete:3+complete:2");
        assert_eq!((u.order(), u.size()), (5, 4));
        let c = g("complement:complete:3");
        assert_eq!(c.size(), 0);
        let e = g("edges:4:0-1,2-3");
        assert_eq!(e.size(), 2);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "path:4",
            "cycle:9",
            "circulant:17:1,2",
            "grid:P10xC6",
            "hypercube:5",
            "kbipartite:3,4",
            "spider:1,2,3",
            "complete:3+empty:2",
            "complement:star:5",
            "edges:3:0-1",
        ] {
            assert_eq!(parse_family(s).unwrap().to_string(), s);
        }
        assert!(parse_family("moebius:5").is_err());
        assert!(parse_family("grid:Q4").is_err());
    }
}
