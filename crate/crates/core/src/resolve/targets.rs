use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Which objects a landmark set has to tell apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Vertices.
    Dim,
    /// Edges.
    Edim,
    /// Vertices and edges.
    Mdim,
    /// A caller-supplied family of vertex subsets.
    Custom,
}

impl Variant {
    pub const STANDARD: [Variant; 3] = [Variant::Dim, Variant::Edim, Variant::Mdim];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Dim => "dim",
            Variant::Edim => "edim",
            Variant::Mdim => "mdim",
            Variant::Custom => "custom",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dim" => Ok(Variant::Dim),
            "edim" => Ok(Variant::Edim),
            "mdim" => Ok(Variant::Mdim),
            "custom" => Ok(Variant::Custom),
            other => Err(Error::InvalidTargets(format!("unknown variant '{other}'"))),
        }
    }
}

/// The distinct vertex subsets that must receive distinct signatures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetFamily {
    order: usize,
    variant: Variant,
    targets: Vec<Vec<Vertex>>,
}

impl TargetFamily {
    /// Builds the family for `variant`. `custom` is required for
    /// [`Variant::Custom`] and ignored otherwise.
    ///
    /// Vertex targets come first (`{v}` at index `v`), then edges in the
    /// graph's edge order.
    pub fn new(g: &Graph, variant: Variant, custom: Option<&[Vec<Vertex>]>) -> Result<Self> {
        let n = g.order();
        let singletons = || (0..n).map(|v| vec![v]);
        let edges = || g.edges().iter().map(|&(u, v)| vec![u, v]);
        let targets = match variant {
            Variant::Dim => singletons().collect(),
            Variant::Edim => edges().collect(),
            Variant::Mdim => singletons().chain(edges()).collect(),
            Variant::Custom => {
                let custom =
                    custom.ok_or_else(|| Error::InvalidTargets("custom variant needs a target list".into()))?;
                let mut seen = HashSet::new();
                let mut out = Vec::with_capacity(custom.len());
                for (i, t) in custom.iter().enumerate() {
                    let mut t = t.clone();
                    t.sort_unstable();
                    t.dedup();
                    if let Some(&bad) = t.iter().find(|&&v| v >= n) {
                        return Err(Error::InvalidTargets(format!("target {i} contains vertex {bad} outside 0..{n}")));
                    }
                    if !seen.insert(t.clone()) {
                        return Err(Error::InvalidTargets(format!("target {i} duplicates an earlier target {t:?}")));
                    }
                    out.push(t);
                }
                out
            }
        };
        Ok(TargetFamily { order: n, variant, targets })
    }

    pub fn standard(g: &Graph, variant: Variant) -> Result<Self> {
        Self::new(g, variant, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn targets(&self) -> &[Vec<Vertex>] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// All targets have the same cardinality.
    pub fn uniform_size(&self) -> bool {
        self.targets.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

/// Parses the custom-target text format: one target per line as
/// whitespace-separated vertex indices. `#` starts a comment; a line that is
/// empty after stripping comments but contains `{}` denotes the empty target.
pub fn parse_custom_targets(text: &str) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "{}" {
            out.push(Vec::new());
            continue;
        }
        let t = line
            .split_whitespace()
            .map(|tok| tok.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line: lineno + 1, msg: e.to_string() })?;
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_family};

    fn g(s: &str) -> Graph {
        generate(&parse_family(s).unwrap()).unwrap()
    }

    #[test]
    fn standard_families() {
        let p3 = g("path:3");
        assert_eq!(TargetFamily::standard(&p3, Variant::Dim).unwrap().len(), 3);
        let m = TargetFamily::standard(&p3, Variant::Mdim).unwrap();
        assert_eq!(m.targets(), &[vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2]]);
        assert!(!m.uniform_size());
        let e = TargetFamily::standard(&g("complete:2+empty:1"), Variant::Edim).unwrap();
        assert_eq!(e.targets(), &[vec![0, 1]]);
    }

    #[test]
    fn custom_targets_validated() {
        let p3 = g("path:3");
        let ok = TargetFamily::new(&p3, Variant::Custom, Some(&[vec![2, 0], vec![], vec![1]]));
        assert_eq!(ok.unwrap().targets(), &[vec![0, 2], vec![], vec![1]]);
        assert!(TargetFamily::new(&p3, Variant::Custom, Some(&[vec![0, 1], vec![1, 0]])).is_err());
        assert!(TargetFamily::new(&p3, Variant::Custom, Some(&[vec![3]])).is_err());
        assert!(TargetFamily::new(&p3, Variant::Custom, None).is_err());
    }

    #[test]
    fn parses_custom_target_file() {
        let t = parse_custom_targets("0 1\n# comment\n2\n{}\n").unwrap();
        assert_eq!(t, vec![vec![0, 1], vec![2], vec![]]);
        assert!(parse_custom_targets("0 a").is_err());
        assert_eq!("MDIM".parse::<Variant>().unwrap(), Variant::Mdim);
    }
}
