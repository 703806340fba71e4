mod args;
mod compute;
mod input;
mod output;
mod sweep;
mod tools;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use output::ExitStatus;

fn run(cli: &Cli) -> anyhow::Result<ExitStatus> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    let (json, csv) = (cli.json.as_deref(), cli.csv.as_deref());
    match &cli.command {
        Command::Compute(a) => compute::run(a, json, csv),
        Command::Sweep(a) => sweep::run(a, json, csv),
        Command::ExportIp(a) => tools::export_ip(a, json),
        Command::Check(a) => tools::check(a, json),
        Command::Construct(a) => tools::construct(a, json),
        Command::Reduce(a) => tools::reduce(a, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ExitStatus::Usage as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ExitStatus::Usage as u8)
        }
    }
}
