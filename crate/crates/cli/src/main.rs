//! `nodal` — spectra and nodal domains of Schrödinger operators on finite
//! weighted graphs.
//!
//! Exit codes: 0 when all checks pass, 1 when a mathematical verification
//! fails, 2 on input or usage errors; there are no other codes.

mod commands;
mod dot;
mod format;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Mode, Which, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TAU};

#[derive(Parser)]
#[command(
    name = "nodal",
    version,
    about = "Spectra and nodal domains of Schrödinger operators on finite weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the operator's eigenvalues with multiplicity-group brackets.
    Spectrum {
        /// Graph file (JSON or text format).
        file: PathBuf,
        /// Emit a JSON document instead of the one-line listing.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate nodal domains of the k-th eigenfunction.
    Domains {
        /// Graph file (JSON or text format).
        file: PathBuf,
        /// 1-based eigenvalue index.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Which domain kinds to enumerate.
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Relative zero tolerance for sign classification.
        #[arg(long, default_value_t = DEFAULT_TAU)]
        tau: f64,
        /// Emit a JSON document instead of the listing.
        #[arg(long)]
        json: bool,
    },
    /// Check the nodal-domain bounds and proof identities for every eigenvalue.
    Verify {
        /// Graph file (JSON or text format).
        file: PathBuf,
        /// Random eigenspace samples per degenerate cluster.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Seed for eigenspace sampling.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Relative zero tolerance for sign classification.
        #[arg(long, default_value_t = DEFAULT_TAU)]
        tau: f64,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Certify a counterexample family exactly and report its domain counts.
    Gallery {
        /// Which counterexample: the star or the 7-vertex tree.
        #[arg(value_enum)]
        which: Which,
        /// Vertex count for the star (at least 3, default 5); not accepted
        /// for tree7.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run a randomized verification campaign over generated graphs.
    Suite {
        /// Number of random graphs to generate and verify.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Largest vertex count to draw.
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        /// Master seed for the campaign.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random eigenspace samples per degenerate cluster.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Emit the aggregate report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write a DOT rendering colored by the k-th eigenfunction's signs.
    ExportDot {
        /// Graph file (JSON or text format).
        file: PathBuf,
        /// 1-based eigenvalue index.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Relative zero tolerance for sign classification.
        #[arg(long, default_value_t = DEFAULT_TAU)]
        tau: f64,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum { file, json } => commands::cmd_spectrum(&file, json),
        Command::Domains {
            file,
            k,
            mode,
            tau,
            json,
        } => commands::cmd_domains(&file, k, mode, tau, json),
        Command::Verify {
            file,
            samples,
            seed,
            tau,
            json,
        } => commands::cmd_verify(&file, samples, seed, tau, json),
        Command::Gallery { which, n } => commands::cmd_gallery(which, n),
        Command::Suite {
            cases,
            max_n,
            seed,
            samples,
            json,
        } => commands::cmd_suite(cases, max_n, seed, samples, json),
        Command::ExportDot {
            file,
            k,
            tau,
            output,
        } => commands::cmd_export_dot(&file, k, tau, output.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
