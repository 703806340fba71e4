use std::path::Path;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde::Serialize;
use throttle_core::families::path_cycle_sweep;
use throttle_core::{generate, throttling_number, FamilySpec, SolveBudget, SolveStatus, Variant};

use crate::args::{SweepArgs, SweepFamily};
use crate::input::budget;
use crate::output::{csv_to_writer, write_csv, write_json, ExitStatus};

const HEADER: [&str; 6] = ["family", "param", "variant", "r_star", "k_star", "th"];

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub family: &'static str,
    pub param: usize,
    pub variant: Variant,
    pub r_star: Option<u32>,
    pub k_star: Option<usize>,
    /// Exact value, `lo..hi` under budget exhaustion, or `infeasible`.
    pub th: String,
    pub source: &'static str,
    pub status: SolveStatus,
    /// Solver value for closed-form rows that were spot-checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_check: Option<usize>,
}

impl SweepRow {
    fn csv(&self) -> Vec<String> {
        let opt = |v: Option<String>| v.unwrap_or_default();
        vec![
            self.family.to_string(),
            self.param.to_string(),
            self.variant.to_string(),
            opt(self.r_star.map(|r| r.to_string())),
            opt(self.k_star.map(|k| k.to_string())),
            self.th.clone(),
        ]
    }

    fn mismatch(&self) -> bool {
        self.solver_check.is_some_and(|s| s.to_string() != self.th)
    }
}

fn spec(family: SweepFamily, param: usize) -> FamilySpec {
    match family {
        SweepFamily::Path => FamilySpec::Path(param),
        SweepFamily::Cycle => FamilySpec::Cycle(param),
        SweepFamily::Complete => FamilySpec::Complete(param),
        SweepFamily::Star => FamilySpec::Star(param),
        SweepFamily::Empty => FamilySpec::Empty(param),
        SweepFamily::Hypercube => FamilySpec::Hypercube(param as u32),
    }
}

fn solver_row(family: SweepFamily, param: usize, variant: Variant, budget: &SolveBudget) -> Result<SweepRow> {
    let g = generate(&spec(family, param))?;
    let res = throttling_number(&g, variant, budget, 0)?;
    let th = match (res.status, res.value, res.bounds) {
        (SolveStatus::Optimal, Some(v), _) => v.to_string(),
        (SolveStatus::BudgetExhausted, _, Some((lo, hi))) => format!("{lo}..{hi}"),
        _ => "infeasible".to_string(),
    };
    let exact = res.status == SolveStatus::Optimal;
    Ok(SweepRow {
        family: family.name(),
        param,
        variant,
        r_star: res.r_star.filter(|_| exact),
        k_star: res.k_star.filter(|_| exact),
        th,
        source: "solver",
        status: res.status,
        solver_check: None,
    })
}

fn row(args: &SweepArgs, param: usize, budget: &SolveBudget) -> Result<SweepRow> {
    let closed_form = args.variant == Variant::Dim && matches!(args.family, SweepFamily::Path | SweepFamily::Cycle);
    if !closed_form {
        return solver_row(args.family, param, args.variant, budget);
    }
    let (value, r_star, k_star) = path_cycle_sweep(param, args.family == SweepFamily::Cycle)?;
    let solver_check = if param <= args.spot_check_up_to {
        let check = solver_row(args.family, param, args.variant, budget)?;
        check.th.parse::<usize>().ok()
    } else {
        None
    };
    Ok(SweepRow {
        family: args.family.name(),
        param,
        variant: args.variant,
        r_star: Some(r_star),
        k_star: Some(k_star),
        th: value.to_string(),
        source: "formula",
        status: SolveStatus::Optimal,
        solver_check,
    })
}

pub fn run(args: &SweepArgs, json: Option<&Path>, csv: Option<&Path>) -> Result<ExitStatus> {
    if args.from > args.to {
        bail!("--from {} exceeds --to {}", args.from, args.to);
    }
    if args.variant == Variant::Custom {
        bail!("sweeps run standard variants only");
    }
    let budget = budget(&args.budget)?;
    let rows: Vec<SweepRow> =
        (args.from..=args.to).into_par_iter().map(|p| row(args, p, &budget)).collect::<Result<_>>()?;

    let lines = rows.iter().map(SweepRow::csv);
    match csv {
        Some(path) => write_csv(path, &HEADER, lines)?,
        None => csv_to_writer(std::io::stdout().lock(), &HEADER, lines)?,
    }
    if let Some(path) = json {
        write_json(path, &rows)?;
    }

    let mut status = ExitStatus::Success;
    for r in &rows {
        if r.mismatch() {
            eprintln!("{}:{} closed form {} but solver {}", r.family, r.param, r.th, r.solver_check.unwrap());
            status = status.worst(ExitStatus::PropertyFailure);
        }
        status = status.worst(ExitStatus::from_solve(r.status));
    }
    Ok(status)
}
