//! Command-line front end for the selection-game simulator.
//!
//! Exit codes: 0 success, 1 legality or invariant violation, 2 configuration
//! or input error.

use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rothberger::sim::{coverage_summary, duel, inspect, run_suite, RunConfig, Suite};
use rothberger::game::{validate, Transcript};
use rothberger::{Error, Result};

#[derive(Parser)]
#[command(name = "simctl", version, about = "Simulate and check selection games on direct sums of groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Play a configured game and write its transcript.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        innings: Option<usize>,
        /// Defaults to the config's `out`, then `transcript-<seed>.jsonl`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Multiplies the suite's default number of cases.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Play ONE's moves by hand against the configured TWO.
    Duel {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        innings: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print and re-validate a transcript.
    Inspect { transcript: PathBuf },
}

fn load_config(path: &Path, seed: Option<u64>, innings: Option<usize>) -> Result<RunConfig> {
    let mut config = RunConfig::load(path)?;
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(innings) = innings {
        config.innings = innings;
    }
    config.check()?;
    Ok(config)
}

fn report_validation(t: &Transcript) -> u8 {
    let report = validate(t);
    if report.is_valid() {
        0
    } else {
        eprintln!("{report}");
        1
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Cmd::Simulate { config, seed, innings, out } => {
            let config = load_config(&config, seed, innings)?;
            let t = config.run()?;
            let path = out
                .or_else(|| config.out.clone())
                .unwrap_or_else(|| PathBuf::from(format!("transcript-{}.jsonl", config.seed)));
            t.save(&path)?;
            println!("{} innings of {} written to {}", t.innings.len(), t.header.game, path.display());
            print!("{}", coverage_summary(&t));
            Ok(report_validation(&t))
        }
        Cmd::Verify { suite, seed, scale, json } => {
            if !(scale.is_finite() && scale > 0.0) {
                return Err(Error::Config(format!("scale must be positive, got {scale}")));
            }
            let report = run_suite(suite, seed, scale);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
            Ok(report.exit_code() as u8)
        }
        Cmd::Duel { config, innings, out } => {
            let config = load_config(&config, None, innings)?;
            let game = config.game_spec()?;
            let mut two = config.two.build(&game)?;
            let t = duel(
                &game,
                two.as_mut(),
                config.innings,
                config.seed,
                config.probes()?,
                io::stdin().lock(),
                io::stdout().lock(),
            )?;
            if let Some(path) = out.or(config.out) {
                t.save(&path)?;
                println!("transcript written to {}", path.display());
            }
            Ok(report_validation(&t))
        }
        Cmd::Inspect { transcript } => {
            let t = Transcript::load(&transcript)?;
            let (text, report) = inspect(&t);
            print!("{text}");
            Ok(if report.is_valid() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
