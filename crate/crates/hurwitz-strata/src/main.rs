use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use hurwitz_strata::job::{run_job, JobError, RunOptions, Verdict};

/// Runs a JSON job document against the strata engine and writes the
/// report. Exit code 0 means every checked statement held, 1 means a
/// counterexample was found and serialized, 2 means the input was invalid.
#[derive(Parser)]
#[clap(version, about)]
struct Cli {
    /// Job document (JSON) describing the computation.
    #[clap(long)]
    job: PathBuf,
    /// Write the report here, overriding the job's own `out` field.
    #[clap(long)]
    out: Option<PathBuf>,
    /// Worker threads for per-stratum cover tables.
    #[clap(long, default_value_t = 1)]
    threads: usize,
    /// Abort instead of enumerating more than this many monodromy tuples.
    #[clap(long)]
    max_tuples: Option<u64>,
    /// Restrict a push job to a single braid orbit.
    #[clap(long)]
    orbit: Option<usize>,
}

fn run(cli: &Cli) -> Result<Verdict, JobError> {
    let raw = fs::read_to_string(&cli.job)?;
    let opts = RunOptions {
        threads: cli.threads,
        max_tuples: cli.max_tuples,
        orbit: cli.orbit,
    };
    let outcome = run_job(&raw, &opts)?;
    let mut text = serde_json::to_string_pretty(&outcome.report)?;
    text.push('\n');
    let target = cli
        .out
        .clone()
        .or_else(|| outcome.out_path.as_ref().map(PathBuf::from));
    match target {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(outcome.verdict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(verdict) => ExitCode::from(verdict.exit_code()),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
