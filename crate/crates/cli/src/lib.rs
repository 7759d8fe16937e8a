//! Command-line front end for `lcn-core`.
//!
//! Every subcommand renders its result into an in-memory [`Artifact`] so
//! that output is emitted in one piece and is byte-identical across runs.

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::run;

#[derive(Debug, Parser)]
#[command(name = "lcn", version, about = "Layered Catalan monoids: enumeration, structure and determinants")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Lc,
    Catalan,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Rank of the monoid.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub n: u16,
    /// Output format; each subcommand has its own default.
    #[arg(long, value_enum, alias = "report")]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl Common {
    pub fn rank(&self) -> usize {
        self.n as usize
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every element (csv: the multiplication table by id).
    Elements {
        #[command(flatten)]
        common: Common,
    },
    /// Canonical form of one dotted word, e.g. `a2.a1`.
    Canon {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Product of two dotted words.
    Mult {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
    /// Cayley table; `.` marks a formal zero.
    Cayley {
        #[command(flatten)]
        common: Common,
        /// Drop the zero element's row and column.
        #[arg(long)]
        contracted: bool,
    },
    /// Idempotent elements.
    Idempotents {
        #[command(flatten)]
        common: Common,
    },
    /// Strict `<<` edges and the Möbius function.
    Poset {
        #[command(flatten)]
        common: Common,
    },
    /// Star-product blocks `L~_e x R~_e` for every non-zero idempotent.
    Blocks {
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the semigroup determinant vanishes.
    Det {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = lcn_core::detlab::SYMBOLIC_CAP)]
        symbolic_cap: usize,
    },
    /// Run the structural property suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Sampled chain pairs for the smoothness check when n > 5.
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Congruence classes of short words under a presentation.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Preset::Lc)]
        preset: Preset,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Elements { common }
            | Command::Canon { common, .. }
            | Command::Mult { common, .. }
            | Command::Cayley { common, .. }
            | Command::Idempotents { common }
            | Command::Poset { common }
            | Command::Blocks { common }
            | Command::Det { common, .. }
            | Command::Verify { common, .. }
            | Command::Oracle { common, .. } => common,
        }
    }
}

/// Rendered output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub body: String,
    pub code: u8,
}

impl Artifact {
    fn ok(body: String) -> Self {
        Artifact { body, code: 0 }
    }
}

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
