use std::path::Path;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use throttle_core::resolve::parse_custom_targets;
use throttle_core::{generate, parse_family, FamilySpec, Graph, SolveBudget, TargetFamily, Variant};

use crate::args::{BudgetArgs, GraphArgs};

/// A graph together with the family it was generated from, when known.
pub struct Loaded {
    pub descriptor: String,
    pub graph: Graph,
    pub spec: Option<FamilySpec>,
}

/// Reads `source` as an edge-list file if such a file exists, otherwise as
/// a family string.
pub fn load_graph(source: &str) -> Result<Loaded> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        let graph = Graph::parse_edge_list(&text).with_context(|| format!("parsing {source}"))?;
        return Ok(Loaded { descriptor: source.to_string(), graph, spec: None });
    }
    let spec = parse_family(source).with_context(|| format!("{source:?} is neither a file nor a family"))?;
    let graph = generate(&spec)?;
    Ok(Loaded { descriptor: source.to_string(), graph, spec: Some(spec) })
}

pub fn target_family(args: &GraphArgs, graph: &Graph) -> Result<TargetFamily> {
    match (args.variant, &args.custom_targets) {
        (Variant::Custom, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let targets = parse_custom_targets(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(TargetFamily::new(graph, Variant::Custom, Some(&targets))?)
        }
        (Variant::Custom, None) => bail!("--variant custom needs --custom-targets"),
        (variant, Some(_)) => bail!("--custom-targets only applies to --variant custom, not {variant}"),
        (variant, None) => Ok(TargetFamily::standard(graph, variant)?),
    }
}

pub fn budget(args: &BudgetArgs) -> Result<SolveBudget> {
    let wall_limit = match args.budget_secs {
        Some(s) if !(s.is_finite() && s >= 0.0) => bail!("--budget-secs must be a non-negative number"),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    Ok(SolveBudget { node_limit: args.budget_nodes, wall_limit, canonical_witness: args.canonical })
}
