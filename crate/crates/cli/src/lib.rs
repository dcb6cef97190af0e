//! Command-line front end for `degseq`: batch verdicts, generators, the
//! pipeline benchmark and the exhaustive oracle run.

pub mod bench;
pub mod check;
pub mod generate;
pub mod input;

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use degseq::oracle::cross_check;

use crate::check::{CheckOptions, Format};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    /// An internal invariant was violated (oracle or baseline disagreement).
    Internal = 1,
    /// Bad input or parameters.
    Input = 2,
}

#[derive(Debug, Parser)]
#[command(
    name = "degseq",
    version,
    about = "Decide whether degree sequences are graphic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify each input line (standard input when FILE is omitted).
    Check {
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Append the full stage trace.
        #[arg(long)]
        trace: bool,
        file: Option<PathBuf>,
    },
    /// Generate sequences.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the pipeline against an Erdős–Gallai-only baseline.
    Bench {
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        file: PathBuf,
    },
    /// Exhaustive cross-validation against the Havel–Hakimi oracle.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// The equality-case sequence for ALPHA1 and its four perturbations.
    Sharpness {
        #[arg(long)]
        alpha1: u64,
    },
    /// Random sequences with fixed largest, smallest, length and sum.
    Random {
        /// a1,an,n,s
        #[arg(long)]
        stats: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleAction {
    CrossCheck {
        #[arg(long)]
        n_max: usize,
    },
}

fn open(path: &Path) -> io::Result<Box<dyn BufRead>> {
    Ok(Box::new(BufReader::new(File::open(path)?)))
}

pub fn cmd_cross_check<W: Write, E: Write>(
    n_max: usize,
    out: &mut W,
    diag: &mut E,
) -> io::Result<Exit> {
    match cross_check(n_max) {
        Ok(report) => {
            writeln!(out, "n_max: {}", report.n_max)?;
            writeln!(out, "sequences: {}", report.sequences)?;
            writeln!(out, "graphic: {}", report.graphic)?;
            for (stage, count) in &report.decided_by {
                writeln!(out, "decided-by {stage}: {count}")?;
            }
            for (stage, count) in &report.bound_hits {
                writeln!(out, "bound-hits {stage}: {count}")?;
            }
            writeln!(out, "disagreements: 0")?;
            Ok(Exit::Success)
        }
        Err(e @ degseq::Error::OracleDisagreement { .. }) => {
            writeln!(diag, "{e}")?;
            Ok(Exit::Internal)
        }
        Err(e) => {
            writeln!(diag, "error: {e}")?;
            Ok(Exit::Input)
        }
    }
}

fn dispatch<W: Write, E: Write>(cli: Cli, out: &mut W, diag: &mut E) -> io::Result<Exit> {
    match cli.command {
        Command::Check {
            format,
            trace,
            file,
        } => {
            let input = match &file {
                Some(path) => open(path)?,
                None => Box::new(io::stdin().lock()),
            };
            check::cmd_check(input, out, diag, CheckOptions { format, trace })
        }
        Command::Gen {
            kind: GenKind::Sharpness { alpha1 },
        } => generate::cmd_sharpness(alpha1, out, diag),
        Command::Gen {
            kind: GenKind::Random { stats, count, seed },
        } => generate::cmd_random(&stats, count, seed, out, diag),
        Command::Bench { repeat, file } => bench::cmd_bench(open(&file)?, out, diag, repeat),
        Command::Oracle {
            action: OracleAction::CrossCheck { n_max },
        } => cmd_cross_check(n_max, out, diag),
    }
}

/// Runs `cli` against the process's standard streams.
pub fn run(cli: Cli) -> Exit {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut diag = io::stderr();
    match dispatch(cli, &mut out, &mut diag).and_then(|exit| out.flush().map(|_| exit)) {
        Ok(exit) => exit,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            Exit::Input
        }
    }
}
