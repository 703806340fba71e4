use std::path::Path;

use anyhow::{Context, Result};
use serde_json::json;
use throttle_core::checks::{
    extremal_characterization, low_throttle, oracle_equivalence, reduction_identity, subtree_monotone, CheckReport,
    Property,
};
use throttle_core::constructions::{
    circulant_config, cycle_variant_config, emdt_reduction, grid_resolving_set, mdt_reduction, min_throttle_tree,
    mmdt_reduction, spider_config,
};
use throttle_core::solver::build_ip;
use throttle_core::{parse_family, throttling_number, truncated_dimension, SolveBudget};

use crate::args::{CheckArgs, ConstructArgs, ConstructKind, ExportArgs, ReduceArgs, ReductionKind};
use crate::input::{load_graph, target_family};
use crate::output::{write_json, ExitStatus};

pub fn export_ip(args: &ExportArgs, json: Option<&Path>) -> Result<ExitStatus> {
    let loaded = load_graph(&args.graph.graph)?;
    let tf = target_family(&args.graph, &loaded.graph)?;
    let model = build_ip(&loaded.graph, &tf, args.r, args.reduced);
    let text = model.to_lp();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {} rows over {} binaries to {}", model.rows.len(), model.order, path.display());
        }
        None => print!("{text}"),
    }
    if let Some(path) = json {
        write_json(path, &model)?;
    }
    Ok(ExitStatus::Success)
}

pub fn check(args: &CheckArgs, json: Option<&Path>) -> Result<ExitStatus> {
    let report: CheckReport = match args.property {
        Property::ExtremalCharacterization => extremal_characterization(args.order)?,
        Property::LowThrottle => low_throttle(args.order)?,
        Property::SubtreeMonotone => subtree_monotone(args.samples.unwrap_or(100), args.max_order, args.seed)?,
        Property::OracleEquivalence => oracle_equivalence(args.samples.unwrap_or(200), args.max_order, args.seed)?,
        Property::ReductionIdentity => {
            let bases = args.bases.iter().map(|b| Ok((b.clone(), load_graph(b)?.graph))).collect::<Result<Vec<_>>>()?;
            reduction_identity(&bases)?
        }
    };
    let verdict = if report.passed { "pass" } else { "FAIL" };
    println!("{}: {verdict} ({} cases, {} failures)", report.property, report.cases, report.failures.len());
    for f in &report.failures {
        println!("  counterexample: {f}");
    }
    if let Some(path) = json {
        write_json(path, &report)?;
    }
    Ok(if report.passed { ExitStatus::Success } else { ExitStatus::PropertyFailure })
}

pub fn construct(args: &ConstructArgs, json: Option<&Path>) -> Result<ExitStatus> {
    let config = match &args.kind {
        ConstructKind::MinTree { n } => min_throttle_tree(*n)?,
        ConstructKind::Cycle { n, variant } => cycle_variant_config(*n, *variant)?,
        ConstructKind::Circulant { n, connections } => circulant_config(*n, connections)?,
        ConstructKind::Grid { graph, r } => grid_resolving_set(&parse_family(graph)?, *r)?,
        ConstructKind::Spider { legs } => spider_config(legs)?,
    };
    let value = config.to_json();
    println!("{}", serde_json::to_string_pretty(&value)?);
    if let Some(path) = json {
        write_json(path, &value)?;
    }
    if let Some(path) = &args.edges {
        std::fs::write(path, config.graph.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitStatus::Success)
}

pub fn reduce(args: &ReduceArgs, json: Option<&Path>) -> Result<ExitStatus> {
    let base = load_graph(&args.graph)?.graph;
    let out = match args.kind {
        ReductionKind::Mdt => mdt_reduction(&base)?,
        ReductionKind::Emdt => emdt_reduction(&base)?,
        ReductionKind::Mmdt => mmdt_reduction(&base)?,
    };
    println!("reduced   n={} m={} ({} attached paths)", out.reduced.order(), out.reduced.size(), out.paths.len());
    println!("identity  th_{}(G') = {} + {}(G)", out.variant, out.offset, out.variant);
    let mut record = json!({ "reduction": out, "graph_hash": out.reduced.content_hash() });
    let mut status = ExitStatus::Success;
    if args.solve {
        let unlimited = SolveBudget::unlimited();
        let dim = truncated_dimension(&base, out.variant, base.order() as u32, &unlimited)?.value;
        let predicted = dim.map(|d| out.predicted(d));
        let actual = throttling_number(&out.reduced, out.variant, &unlimited, 0)?.value;
        let holds = predicted.is_some() && predicted == actual;
        println!("predicted {predicted:?}");
        println!("solver    {actual:?}");
        println!("holds     {holds}");
        record["predicted"] = json!(predicted);
        record["solver"] = json!(actual);
        record["holds"] = json!(holds);
        if !holds {
            status = ExitStatus::PropertyFailure;
        }
    }
    if let Some(path) = &args.out {
        std::fs::write(path, out.reduced.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = json {
        write_json(path, &record)?;
    }
    Ok(status)
}
