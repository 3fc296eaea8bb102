//! `semikit`: load finite semirings, semimodules and maps from JSON and run
//! the library's checks on them.
//!
//! Exit status is 0 on success, 1 when the command's verdict is false and 2
//! on any input or resource error. Which verdicts count is listed on each
//! subcommand's help.

mod cache;
mod commands;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semikit::case::ChainKind;
use semikit::Caps;

#[derive(Debug, Parser)]
#[command(name = "semikit", version, about = "Finite semirings, semimodules and subtractive closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest semiring carrier accepted.
    #[arg(long, global = true, value_name = "N", default_value_t = Caps::default().semiring_size)]
    pub cap_semiring: usize,

    /// Largest semimodule carrier whose sublattices may be enumerated.
    #[arg(long, global = true, value_name = "N", default_value_t = Caps::default().module_size)]
    pub cap_module: usize,

    /// Largest number of generator assignments a Hom search may visit.
    #[arg(long, global = true, value_name = "N", default_value_t = Caps::default().hom_search)]
    pub cap_hom: u128,

    /// Largest number of lattice nodes an enumeration may produce.
    #[arg(long, global = true, value_name = "N", default_value_t = Caps::default().lattice_nodes)]
    pub cap_lattice: usize,

    /// Seed for every sampled check.
    #[arg(long, global = true, value_name = "K", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeKind {
    /// Subtractive subsemimodules.
    K,
    /// All subsemimodules.
    Sub,
    /// Direct summands.
    Summands,
}

impl LatticeKind {
    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::K => "k-subsemimodules",
            LatticeKind::Sub => "subsemimodules",
            LatticeKind::Summands => "direct-summands",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChainArg {
    NgeqDesc,
    NgeqAsc,
    Zplus,
}

impl From<ChainArg> for ChainKind {
    fn from(c: ChainArg) -> Self {
        match c {
            ChainArg::NgeqDesc => ChainKind::NGeqDescending,
            ChainArg::NgeqAsc => ChainKind::NGeqAscending,
            ChainArg::Zplus => ChainKind::ZPlusIk,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a semiring or semimodule. Exits 1 when an axiom fails.
    Axioms { file: PathBuf },
    /// k-ideal lattice (or another sublattice) with height, width and a longest chain. Never exits 1.
    Ideals {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LatticeKind::K)]
        lattice: LatticeKind,
    },
    /// Direct summands with complements, cross-checked against Comp(End(M)).
    /// Exits 1 when the two characterizations disagree.
    Summands { file: PathBuf },
    /// Exactness of a sequence of maps. Exits 1 when some junction fails.
    Exact { file: PathBuf },
    /// Injective, i-injective and e-injective verdicts of a module relative to
    /// each `--relative-to` module. Exits 1 when some i-injective verdict fails.
    Injective {
        file: PathBuf,
        #[arg(long = "relative-to", value_name = "FILE", required = true)]
        relative_to: Vec<PathBuf>,
    },
    /// Subtractive closure of the left ideal of 2×2 nonnegative rational
    /// matrices generated by a matrix list. Exits 1 when verification fails.
    Classify { file: PathBuf },
    /// Strictly monotone chains of subtractive ideals. Exits 1 when a step is not strict.
    Chains {
        #[arg(long, value_enum)]
        kind: ChainArg,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Hasse diagram of a lattice as DOT, whatever `--format` says. Never exits 1.
    EmitDot {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LatticeKind::K)]
        lattice: LatticeKind,
    },
}

impl Cli {
    pub fn caps(&self) -> Caps {
        Caps {
            semiring_size: self.cap_semiring,
            module_size: self.cap_module,
            hom_search: self.cap_hom,
            lattice_nodes: self.cap_lattice,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = match cli.command {
        Command::EmitDot { .. } => Format::Dot,
        _ => cli.format,
    };
    let body = match report.render(format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
