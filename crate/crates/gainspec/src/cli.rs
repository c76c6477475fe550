//! Command-line interface.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gainspec_core::{Mode, Tolerances, VertexOrdering};
use thiserror::Error;

use crate::document::to_csv;
use crate::graph_file::{parse_graph, GraphFile, ParseError};
use crate::report::{
    balance_document, build_matrix, compatible_document, matrices_document, spectrum_document, verify_document,
    MatrixKind,
};
use crate::sweep::{run_sweep, SweepConfig};

/// Environment variable overriding the cospectral tolerance.
pub const TOLERANCE_ENV: &str = "GAINSPEC_TOL";

#[derive(Debug, Parser)]
#[command(name = "gainspec", version, about = "Gain distance Laplacians of complex unit gain graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print gain distance matrices or Laplacians.
    Matrices {
        file: PathBuf,
        #[command(flatten)]
        select: Selection,
        /// Emit CSV with `re+imi` cells instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Sorted eigenvalues, spectral radius and nullity.
    Spectrum {
        file: PathBuf,
        #[command(flatten)]
        select: Selection,
    },
    /// Balance test with a witness cycle or switching function.
    Balance { file: PathBuf },
    /// Distance compatibility and ordering independence.
    Compatible { file: PathBuf },
    /// Run every applicable check on the graph.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderingArg::File)]
        ordering: OrderingArg,
    },
    /// Randomized property sweep.
    Sweep {
        /// Largest vertex count.
        #[arg(long = "n", default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct Selection {
    #[arg(long, value_enum, default_value_t = ModeArg::Max)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = OrderingArg::File)]
    pub ordering: OrderingArg,
    #[arg(long, value_enum, ignore_case = true, default_value_t = KindArg::DL)]
    pub kind: KindArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Max,
    Min,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderingArg {
    /// The file's `order` line, or the standard ordering.
    File,
    Std,
    Rev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(clippy::upper_case_acronyms)]
pub enum KindArg {
    D,
    DL,
    DQ,
    All,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Core(#[from] gainspec_core::Error),
    #[error("{TOLERANCE_ENV}: expected a positive number, found `{0}`")]
    Tolerance(String),
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn report(text: String, holds: bool) -> Self {
        Self { text, code: if holds { 0 } else { 1 } }
    }
}

pub fn tolerances(env: Option<&str>) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    if let Some(raw) = env {
        match raw.trim().parse::<f64>() {
            Ok(x) if x > 0.0 && x.is_finite() => tol.cospectral = x,
            _ => return Err(CliError::Tolerance(raw.to_string())),
        }
    }
    Ok(tol)
}

fn load(path: &Path) -> Result<GraphFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_graph(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn ordering(file: &GraphFile, arg: OrderingArg) -> VertexOrdering {
    let std = VertexOrdering::standard(file.graph.vertex_count());
    match arg {
        OrderingArg::File => file.ordering_or_standard(),
        OrderingArg::Std => std,
        OrderingArg::Rev => std.reverse(),
    }
}

fn modes(arg: ModeArg) -> Vec<Mode> {
    match arg {
        ModeArg::Max => vec![Mode::Max],
        ModeArg::Min => vec![Mode::Min],
        ModeArg::Both => Mode::BOTH.to_vec(),
    }
}

fn kinds(arg: KindArg) -> Vec<MatrixKind> {
    match arg {
        KindArg::D => vec![MatrixKind::Distance],
        KindArg::DL => vec![MatrixKind::Laplacian],
        KindArg::DQ => vec![MatrixKind::Signless],
        KindArg::All => vec![MatrixKind::Distance, MatrixKind::Laplacian, MatrixKind::Signless],
    }
}

/// Runs one command. `tolerance_env` is the value of [`TOLERANCE_ENV`], if set.
pub fn run(cli: &Cli, tolerance_env: Option<&str>) -> Result<Output, CliError> {
    let tol = tolerances(tolerance_env)?;
    let out = match &cli.command {
        Command::Matrices { file, select, csv } => {
            let f = load(file)?;
            let ord = ordering(&f, select.ordering);
            if *csv {
                let mut text = String::new();
                for mode in modes(select.mode) {
                    for kind in kinds(select.kind) {
                        text.push_str(&kind.label(mode));
                        text.push('\n');
                        text.push_str(&to_csv(&build_matrix(&f.graph, &ord, mode, kind)?));
                    }
                }
                Output { text, code: 0 }
            } else {
                let doc = matrices_document(&f.graph, &ord, &modes(select.mode), &kinds(select.kind))?;
                Output { text: doc.to_json(), code: 0 }
            }
        }
        Command::Spectrum { file, select } => {
            let f = load(file)?;
            let ord = ordering(&f, select.ordering);
            let doc = spectrum_document(&f.graph, &ord, &modes(select.mode), &kinds(select.kind))?;
            Output { text: doc.to_json(), code: 0 }
        }
        Command::Balance { file } => Output { text: balance_document(&load(file)?.graph).to_json(), code: 0 },
        Command::Compatible { file } => Output { text: compatible_document(&load(file)?.graph)?.to_json(), code: 0 },
        Command::Verify { file, ordering: arg } => {
            let f = load(file)?;
            let doc = verify_document(&f.graph, &ordering(&f, *arg), &tol)?;
            Output::report(doc.to_json(), doc.all_hold())
        }
        Command::Sweep { max_n, samples, seed } => {
            let report = run_sweep(&SweepConfig { max_n: *max_n, samples: *samples, seed: *seed, tolerances: tol })?;
            Output::report(report.to_json(), report.all_hold())
        }
    };
    Ok(out)
}
