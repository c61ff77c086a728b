mod commands;
mod config;

use clap::{Args, Parser, Subcommand};
use config::Config;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact computations for ADE quivers and quiver Hecke algebras.
#[derive(Debug, Parser)]
#[command(name = "quiverlab", version)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "dot")]
    pub json: bool,
    /// Emit Graphviz DOT (quiver, kp, lorder).
    #[arg(long, global = true)]
    pub dot: bool,
    /// TOML or JSON file with default type, orientation, height and seed.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct QuiverArgs {
    /// Dynkin type such as A3, D5 or E8.
    #[arg(long = "type", short = 't', value_name = "TYPE")]
    pub type_label: Option<String>,
    /// Arrows as 1-based pairs, e.g. "1>2,3>2".
    #[arg(long, short = 'o')]
    pub orientation: Option<String>,
    /// Height function as a comma list, e.g. "1,0,1".
    #[arg(long)]
    pub height: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The quiver, its Auslander-Reiten quiver and the phi table.
    Quiver(QuiverArgs),
    /// Evaluate phi or its inverse; prints the table when no query is given.
    Phi {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Positive root in simple-root coordinates, e.g. "1,1,0".
        #[arg(long)]
        root: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        /// Vertex "i,p" to invert.
        #[arg(long, conflicts_with = "root", allow_hyphen_values = true)]
        vertex: Option<String>,
    },
    /// Kostant partitions of beta with their order, Hasse diagram and f.
    Kp {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        beta: String,
    },
    /// l-dominance: compare two l-weights, or list lP+ of beta with its order.
    Lorder {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// l-weight as JSON triples [[i,p,c],...].
        #[arg(long, requires = "lambda", allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, requires = "mu", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, conflicts_with_all = ["mu", "lambda"])]
        beta: Option<String>,
    },
    /// Normal form and degree of an expression in the quiver Hecke algebra.
    Klr {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        beta: String,
        /// e.g. "t1 * t1 * e(1,2)" or "(x2 - x1) e(1,2)".
        #[arg(long, short = 'e', allow_hyphen_values = true)]
        expr: String,
    },
    /// Reflection at a sink: f(m) = f'(s_i m), lower sets and order isomorphism.
    Reflect {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// 1-based sink.
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        beta: String,
    },
    /// Run an invariant suite; exits with 1 when any check fails.
    Verify(commands::VerifyArgs),
}

/// How a command ended.
pub enum Outcome {
    Ok(String),
    Failed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let config = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => Config::default(),
    };
    match commands::run(&cli, &config) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
