//! `cpe`: decide whether correlated equilibria of finite games are correlated
//! perfect, with exact certificates.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cpe::DEFAULT_SUPPORT_CAP;
use serde_json::json;

use crate::commands::Failure;
use crate::report::Report;

#[derive(Parser)]
#[command(name = "cpe", version, about = "Exact correlated perfect equilibrium checks")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Check the correlated equilibrium inequalities.
    CheckCe {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        dist: PathBuf,
    },
    /// Decide whether a correlated equilibrium is correlated perfect.
    CheckCpe {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        /// Also evaluate these deviation plans as a refutation.
        #[arg(long)]
        alpha: Option<PathBuf>,
    },
    /// Build and verify terms of a supporting sequence.
    Sequence {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        /// Comma-separated term indices, each at least 1.
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        k: Vec<u64>,
    },
    /// Classify every product support of a game.
    Enumerate {
        #[arg(long)]
        game: PathBuf,
        /// Maximum number of product supports to examine.
        #[arg(long, env = "CPE_SOLVER_CAP", default_value_t = DEFAULT_SUPPORT_CAP)]
        cap: usize,
    },
    /// Check a correlated strategy against a tremble family.
    CheckPdce {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        trembles: PathBuf,
    },
    /// List weakly dominated strategies with dominating mixtures.
    Dominated {
        #[arg(long)]
        game: PathBuf,
    },
    /// Verify a parametric family of distributions converging to `--dist`.
    CheckFamily {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        #[arg(long)]
        family: PathBuf,
    },
    /// Compare the two certification methods on random games.
    CrossCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        games: usize,
        #[arg(long, env = "CPE_SOLVER_CAP", default_value_t = DEFAULT_SUPPORT_CAP)]
        cap: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckCe { .. } => "check-ce",
            Command::CheckCpe { .. } => "check-cpe",
            Command::Sequence { .. } => "sequence",
            Command::Enumerate { .. } => "enumerate",
            Command::CheckPdce { .. } => "check-pdce",
            Command::Dominated { .. } => "dominated",
            Command::CheckFamily { .. } => "check-family",
            Command::CrossCheck { .. } => "cross-check",
        }
    }

    fn run(&self) -> Result<Report, Failure> {
        match self {
            Command::CheckCe { game, dist } => commands::check_ce(game, dist),
            Command::CheckCpe { game, dist, alpha } => commands::check_cpe(game, dist, alpha.as_deref()),
            Command::Sequence { game, dist, k } => commands::sequence(game, dist, k),
            Command::Enumerate { game, cap } => commands::enumerate(game, *cap),
            Command::CheckPdce { game, dist, trembles } => commands::check_pdce(game, dist, trembles),
            Command::Dominated { game } => commands::dominated(game),
            Command::CheckFamily { game, dist, family } => commands::check_family(game, dist, family),
            Command::CrossCheck { seed, games, cap } => commands::cross_check(*seed, *games, *cap),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = cli.command.run();
    let elapsed = start.elapsed();
    match outcome {
        Ok(report) => {
            match cli.format {
                Format::Human => print!("{}", report.human(elapsed)),
                Format::Structured => println!("{}", report.structured(elapsed)),
            }
            ExitCode::from(report.exit as u8)
        }
        Err(failure) => {
            let code = failure.exit() as u8;
            eprintln!("error: {}", failure.message());
            if let Format::Structured = cli.format {
                let doc = json!({
                    "command": cli.command.name(),
                    "verdict": "error",
                    "exit_code": code,
                    "error": failure.message(),
                    "timing": { "elapsed_micros": elapsed.as_micros().to_string() },
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("error report serializes"));
            }
            ExitCode::from(code)
        }
    }
}
