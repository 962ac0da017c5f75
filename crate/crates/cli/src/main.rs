use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use orbihh_cli::{builtin, parse_input_file, run, CliError, Outcome, RunConfig, Verb};

/// Hochschild cohomology of linear quotient orbifolds [V/G], exactly.
#[derive(Parser, Debug)]
#[command(name = "orbihh", version)]
struct Cli {
    verb: Verb,
    /// JSON input document.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    input: Option<PathBuf>,
    /// Built-in example: sym_n:k, minus_one:d, cyclic:n, reflection, weyl_b2.
    #[arg(long)]
    builtin: Option<String>,
    /// Write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the flat CSV table here.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    maxdeg: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Test hook: corrupt one SA constant before verifying.
    #[arg(long, hide = true)]
    corrupt_sa: bool,
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Output {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut spec = match (&cli.input, &cli.builtin) {
        (Some(path), _) => parse_input_file(path)?,
        (None, Some(name)) => builtin(name)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    if let Some(d) = cli.maxdeg {
        spec.options.maxdeg = d;
    }
    if let Some(s) = cli.seed {
        spec.options.seed = s;
    }
    if let Some(t) = cli.trials {
        if t == 0 {
            return Err(CliError::Schema {
                field: "--trials".into(),
                message: "must be at least 1".into(),
            });
        }
        spec.options.trials = t;
    }
    let cfg = RunConfig {
        corrupt_sa: cli.corrupt_sa,
    };
    let outcome = run(cli.verb, &spec, &cfg)?;
    if let Some(p) = &cli.json {
        write(p, &outcome.report.to_json())?;
    }
    if let Some(p) = &cli.csv {
        write(p, &outcome.report.to_csv())?;
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.report.to_text());
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("orbihh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
