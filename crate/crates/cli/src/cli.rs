use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::Format;

#[derive(Parser, Debug)]
#[command(
    name = "cgwd",
    version,
    about = "Invariant subspaces of the Cohen-Wales representation of the CGW algebra of type D_n"
)]
pub struct Cli {
    /// Output format; overrides the config file.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file with keys format, r0, seed, n_min, n_max.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every Specht label of rank n with its dimension.
    Dims { n: u32 },
    /// Restriction of a Specht module along the chain of type-D Hecke algebras.
    Restrict {
        /// A label such as "((1,1),(4))" or "((3),(3))+".
        label: String,
        #[arg(long, default_value_t = 1)]
        steps: u32,
    },
    /// Labels of rank n whose dimension is below the bound (default n^2 - n).
    Screen {
        n: u32,
        #[arg(long)]
        bound: Option<u128>,
    },
    /// Low-dimensional screen annotated with the constituent families.
    James { n: u32 },
    /// The values of l at which the space is reducible, with their constituents.
    Table { n: u32 },
    /// Invariant subspaces predicted at rank n and parameter l.
    Classify {
        n: u32,
        /// One of r^k, 1/r^k, -r^k, -1/r^k.
        #[arg(allow_hyphen_values = true)]
        l: String,
        /// Root-of-unity constraint, e.g. 16:-1 for r^16 = -1.
        #[arg(long)]
        root: Option<String>,
    },
    /// Pairwise coincidences of the reducibility values; the config range when n is omitted.
    Coincidences { n: Option<u32> },
    /// Hecke, braid and commuting relations of every embedded representation.
    VerifyReps,
    /// Basis of the commutant of an embedded representation over Q(r).
    Commutant { rep: String },
    /// Splits an embedded representation into certified constituents at r = r0.
    Decompose {
        rep: String,
        #[arg(long)]
        r0: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Every proper nonzero invariant subspace of an embedded representation at r = r0.
    Subspaces {
        rep: String,
        #[arg(long)]
        r0: Option<String>,
    },
    /// Stored orders of r for the root-of-unity cases.
    Ktable,
    /// Converts the parameters (t, r_cw) into (l, m, r).
    ConvertParams {
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        r_cw: String,
    },
    /// Runs the acceptance suite.
    Check {
        /// Run a single check by number.
        #[arg(long)]
        id: Option<u8>,
    },
    /// The embedded corpus as JSON.
    Corpus {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims { .. } => "dims",
            Command::Restrict { .. } => "restrict",
            Command::Screen { .. } => "screen",
            Command::James { .. } => "james",
            Command::Table { .. } => "table",
            Command::Classify { .. } => "classify",
            Command::Coincidences { .. } => "coincidences",
            Command::VerifyReps => "verify-reps",
            Command::Commutant { .. } => "commutant",
            Command::Decompose { .. } => "decompose",
            Command::Subspaces { .. } => "subspaces",
            Command::Ktable => "ktable",
            Command::ConvertParams { .. } => "convert-params",
            Command::Check { .. } => "check",
            Command::Corpus { .. } => "corpus",
        }
    }
}
