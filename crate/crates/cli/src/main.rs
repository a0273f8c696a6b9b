//! `modbranch`: crystals, realizations, Hall algebra and branching from the
//! command line.
//!
//! Exit codes: 0 on success, 1 on a domain error (the input is well formed
//! but the operation does not apply), 2 on a usage error or malformed JSON.

mod cache;
mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "modbranch", version, about = "Crystals and branching for affine Hecke algebras of type A")]
pub struct Cli {
    /// The integer e >= 2.
    #[arg(long, global = true)]
    pub e: Option<u32>,
    /// Multicharge, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub charges: Option<Vec<i64>>,
    /// Reading of multisegments in text output and in `mseg` realizations.
    #[arg(long, global = true, value_enum)]
    pub convention: Option<ConvArg>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// `flotw:<v>`, `uglov:<v>`, `kleshchev:<v>` or `mseg:head|tail`.
    #[arg(long, global = true)]
    pub realization: Option<String>,
    /// Read the input from a file instead of the argument or stdin.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvArg {
    Head,
    Tail,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Crystal operators in a realization.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// FLOTW multipartitions.
    #[command(subcommand)]
    Flotw(FlotwCmd),
    /// Kleshchev multipartitions.
    #[command(subcommand)]
    Kleshchev(KleshchevCmd),
    /// Crystal isomorphisms.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// The embedding f_v into aperiodic multisegments.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// The Hall algebra of the cyclic quiver.
    #[command(subcommand)]
    Hall(HallCmd),
    /// Branching of simple modules.
    #[command(subcommand)]
    Branch(BranchCmd),
}

#[derive(Debug, Subcommand)]
pub enum CrystalCmd {
    /// Apply a sequence of operators, left to right.
    Apply {
        /// Tokens f<i> or e<i>, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        ops: Vec<String>,
        element: Option<String>,
    },
    /// ε_i, φ_i, the weight and a path from the highest weight element.
    String { element: Option<String> },
    /// The crystal graph up to a given rank.
    Graph {
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlotwCmd {
    Check { lambda: Option<String> },
    List {
        #[arg(long)]
        rank: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum KleshchevCmd {
    Check {
        /// Rank bound for the asymptotic multicharge; defaults to the rank.
        #[arg(long)]
        n_bound: Option<u32>,
        lambda: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum IsoCmd {
    /// Path transport between two realizations.
    Transport {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        element: Option<String>,
    },
    /// Rotation of the components together with τ(v).
    Tau { lambda: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCmd {
    /// f_v(λ).
    Fv { lambda: Option<String> },
    /// Whether a multisegment lies in the image of f_v, with its preimage.
    InverseCheck { mseg: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum HallCmd {
    /// Product of factors, left to right: f<i>, f<i>^(n), a multisegment
    /// (the PBW element E_ψ) or a PBW vector in JSON.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// F^ψ_{φ1,φ2}(q); three multisegments, or one object
    /// {"psi", "phi1", "phi2"}.
    Polynomial { args: Vec<String> },
    /// Canonical basis of a weight, or the element of one label.
    Canonical {
        #[arg(long, value_delimiter = ',')]
        weight: Option<Vec<u32>>,
        mseg: Option<String>,
    },
    /// Decomposition row of G(ψ) at v = 1 in the u-basis.
    Decomp { mseg: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum BranchCmd {
    /// Socle of the i-restriction of D_ψ.
    Socle {
        #[arg(long, allow_hyphen_values = true)]
        residue: i64,
        mseg: Option<String>,
    },
    /// Socles of all i-restrictions.
    Profile { mseg: Option<String> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
