//! Command-line front end for the `supertensor` library.

pub mod algebra_file;
pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use supertensor::catalog::CatalogError;
use supertensor::tensor::TensorError;
use thiserror::Error;

pub use commands::{run, Outcome};
pub use report::{Format, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("{path}: {source}")]
    File { path: String, source: algebra_file::FileError },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("axiom violations:\n  {}", .0.join("\n  "))]
    AxiomViolation(Vec<String>),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "supertensor", version, about = "Tensor and exterior squares of nilpotent Lie superalgebras")]
pub struct Cli {
    /// Seed for `F2(...)` expressions that omit `seed=`; verify also uses seed+1.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural summary of an algebra.
    Info {
        /// Catalog expression such as `H(1,0)+A(0|1)`, or `file:PATH`.
        algebra: String,
    },
    /// Compute one quantity.
    Compute {
        #[arg(value_enum)]
        quantity: Quantity,
        algebra: String,
        /// List coset representatives or basis vectors.
        #[arg(long)]
        basis: bool,
    },
    /// Compare constructive results with the closed forms on every specimen.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_dim: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Quantity {
    Tensor2,
    Ext2,
    Square,
    Gamma,
    Tensor3,
    Multiplier,
    Extcenter,
    Bound,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Tensor2 => "tensor2",
            Quantity::Ext2 => "ext2",
            Quantity::Square => "square",
            Quantity::Gamma => "gamma",
            Quantity::Tensor3 => "tensor3",
            Quantity::Multiplier => "multiplier",
            Quantity::Extcenter => "extcenter",
            Quantity::Bound => "bound",
        }
    }
}
