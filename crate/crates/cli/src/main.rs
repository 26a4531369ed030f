//! `qpmut`: quiver and QP mutation, Jacobian dimension profiles and the
//! `X7` checks on the command line. Results go to stdout as JSON, diagnostics
//! to stderr. Exit status 0 on success, 1 when a mathematical check fails,
//! 2 on bad input.

mod commands;
mod poly;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "qpmut",
    version,
    about = "Exact computations with quivers with potentials"
)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mutate a quiver at a vertex.
    QuiverMutate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Mutate a quiver with potential at a vertex.
    QpMutate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: u32,
        /// Matching to use; by default the least one compatible with the potential.
        #[arg(long)]
        matching: Option<PathBuf>,
        #[arg(long, default_value = "Q")]
        ring: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Dimension profile d_0..d_r of a quotient of the free algebra.
    Jacdim {
        /// A series f (uses its Jacobi generators) or an ideal {"n","gens"}.
        #[arg(short, long)]
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        ring: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(short)]
        r: usize,
        /// Keep all n commutators instead of n-1.
        #[arg(long)]
        all_commutators: bool,
        /// Write M_{r+1} in the plain-text matrix format.
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
    },
    /// Recompute the four profiles of f0 and f1 over Q and F2 at r = 6.
    X7Table {
        /// Emit JSON instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// One round of the non-degeneracy checks for W_P on X7.
    X7Verify {
        /// Polynomial P in x without constant term, e.g. "0", "x", "x - 2x^2".
        #[arg(long = "P")]
        poly: String,
        #[arg(long, default_value_t = 12)]
        trunc: usize,
        #[arg(long, default_value = "Q")]
        ring: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Index and bad primes of the completed row lattice of M_{r+1}.
    LatticeCheck {
        #[arg(short, long)]
        file: PathBuf,
        #[arg(short)]
        r: usize,
        /// Words completing the lattice; by default the non-pivot columns.
        #[arg(long)]
        aug: Option<PathBuf>,
        #[arg(long)]
        all_commutators: bool,
    },
    /// Breadth-first search for a reddening sequence of the framed quiver.
    GreenSearch {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Only mutate green vertices.
        #[arg(long)]
        green_only: bool,
    },
    /// Infinite-dimensionality certificate for a graded quiver with potential.
    GradedCheck {
        #[arg(short, long)]
        input: PathBuf,
        /// Degrees at which to count path classes, e.g. "6,12".
        #[arg(long, value_delimiter = ',')]
        class_dims: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            // A closed pipe downstream is not our error.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render(cli.pretty));
            if let Some(msg) = &out.failure {
                eprintln!("qpmut: check failed: {msg}");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(commands::Failure::Input(msg)) => {
            eprintln!("qpmut: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Check(msg)) => {
            eprintln!("qpmut: check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
