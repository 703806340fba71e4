use std::time::Instant;

use anyhow::{bail, Result};
use serde::Serialize;
use throttle_core::{
    th_formula, throttling_number_for, DimValue, FormulaValue, SolveStatus, ThrottlingResult, Variant,
};

use crate::args::{ComputeArgs, Mode};
use crate::input::{budget, load_graph, target_family};
use crate::output::{write_csv, write_json, ExitStatus};

/// Everything `compute` reports, in the shape written by `--json`.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub input: String,
    pub order: usize,
    pub size: usize,
    pub graph_hash: String,
    pub variant: Variant,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<ThrottlingResult>,
    /// Value when radius 0 is excluded, reported when the optimum used it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_r_min_one: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub elapsed_ms: f64,
}

pub fn run(args: &ComputeArgs, json: Option<&std::path::Path>, csv: Option<&std::path::Path>) -> Result<ExitStatus> {
    let start = Instant::now();
    let loaded = load_graph(&args.graph.graph)?;
    let g = &loaded.graph;
    let tf = target_family(&args.graph, g)?;
    let budget = budget(&args.budget)?;

    let solve = (args.mode != Mode::Formula).then(|| throttling_number_for(g, &tf, &budget, args.r_min));
    let value_r_min_one = match &solve {
        Some(res) if res.r_star == Some(0) && args.r_min == 0 => {
            throttling_number_for(g, &tf, &budget, 1).value.filter(|&v| Some(v) != res.value)
        }
        _ => None,
    };
    let formula = if args.mode == Mode::Solve {
        None
    } else {
        let Some(spec) = &loaded.spec else {
            bail!("formula mode needs a family string, not an edge-list file");
        };
        Some(th_formula(spec, args.graph.variant)?)
    };
    let agreement = match (&solve, &formula) {
        (Some(s), Some(f)) if s.status == SolveStatus::Optimal => agreement(s.value.unwrap(), f),
        _ => None,
    };

    let record = RunRecord {
        input: loaded.descriptor.clone(),
        order: g.order(),
        size: g.size(),
        graph_hash: g.content_hash(),
        variant: args.graph.variant,
        mode: match args.mode {
            Mode::Solve => "solve",
            Mode::Formula => "formula",
            Mode::Both => "both",
        },
        solve,
        value_r_min_one,
        formula,
        agreement,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    print_record(&record);
    if let Some(path) = json {
        write_json(path, &record)?;
    }
    if let (Some(path), Some(res)) = (csv, &record.solve) {
        let rows = res.per_r.iter().map(|(r, v)| {
            let (lower, upper, status) = match *v {
                DimValue::Exact(k) => (k.to_string(), k.to_string(), "optimal"),
                DimValue::Bounds { lower, upper } => (lower.to_string(), upper.to_string(), "budget_exhausted"),
                DimValue::Infeasible => (String::new(), String::new(), "infeasible"),
            };
            vec![r.to_string(), lower, upper, status.to_string()]
        });
        write_csv(path, &["r", "lower", "upper", "status"], rows)?;
    }

    Ok(match (&record.solve, record.agreement) {
        (_, Some(false)) => ExitStatus::PropertyFailure,
        (Some(res), _) => ExitStatus::from_solve(res.status),
        (None, _) => ExitStatus::Success,
    })
}

/// Exact formulas must match; envelopes must contain the value within slack.
fn agreement(value: usize, formula: &FormulaValue) -> Option<bool> {
    match *formula {
        FormulaValue::Exact { value: f } | FormulaValue::ExactBySweep { value: f, .. } => Some(f == value),
        FormulaValue::Asymptotic { slack, .. } => {
            let est = formula.estimate()?;
            Some((value as f64 - est).abs() <= slack * est)
        }
    }
}

fn print_record(rec: &RunRecord) {
    println!("graph     {} (n={}, m={}, hash {})", rec.input, rec.order, rec.size, rec.graph_hash);
    println!("variant   {}", rec.variant);
    if let Some(res) = &rec.solve {
        println!("status    {}", res.status);
        match (res.value, res.bounds) {
            (Some(v), _) if res.status == SolveStatus::Optimal => {
                println!("th        {v}  (r* = {}, k* = {})", res.r_star.unwrap(), res.k_star.unwrap());
            }
            (_, Some((lo, hi))) => println!("th        in [{lo}, {hi}]"),
            _ => println!("th        none (some targets cannot be told apart)"),
        }
        if let Some(w) = &res.witness {
            let label = if res.status == SolveStatus::Optimal { "witness" } else { "best    " };
            println!("{label}   {w:?}");
        }
        if let Some(v) = rec.value_r_min_one {
            println!("r >= 1    th = {v}");
        }
        println!("cap       r <= {}{}", res.cap, if res.cap_active { " (diameter below order)" } else { "" });
        println!("  r  dim_r");
        for (r, v) in &res.per_r {
            println!("{r:>3}  {v}");
        }
        println!("nodes     {}", res.nodes);
    }
    if let Some(f) = &rec.formula {
        match f {
            FormulaValue::Exact { value } => println!("formula   {value}"),
            FormulaValue::ExactBySweep { value, r_star, k_star } => {
                println!("formula   {value}  (r* = {r_star}, k* = {k_star})")
            }
            FormulaValue::Asymptotic { scale, exponent, leading_constant, slack } => match leading_constant {
                Some(c) => {
                    println!("formula   ~ {c:.4} * {scale}^{exponent} = {:.2} (slack {slack})", f.estimate().unwrap())
                }
                None => println!("formula   order of {scale}^{exponent}, constant unknown"),
            },
        }
    }
    if let Some(a) = rec.agreement {
        println!("agree     {a}");
    }
    println!("time      {:.1} ms", rec.elapsed_ms);
}
