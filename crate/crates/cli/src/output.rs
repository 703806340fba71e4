use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use throttle_core::SolveStatus;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    Infeasible = 2,
    BudgetExhausted = 3,
    PropertyFailure = 4,
}

impl ExitStatus {
    pub fn from_solve(status: SolveStatus) -> Self {
        match status {
            SolveStatus::Optimal => ExitStatus::Success,
            SolveStatus::Infeasible => ExitStatus::Infeasible,
            SolveStatus::BudgetExhausted => ExitStatus::BudgetExhausted,
        }
    }

    /// The more severe of two statuses, usage errors aside.
    pub fn worst(self, other: ExitStatus) -> ExitStatus {
        if (other as u8) > (self as u8) {
            other
        } else {
            self
        }
    }
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn csv_to_writer<W: Write>(out: W, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    csv_to_writer(file, header, rows)
}
