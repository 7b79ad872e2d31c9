//! `latspec`: inspect finite ideal lattices, their spectra and support data.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad input.

mod commands;
mod load;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latspec::adjunction::DEFAULT_MAX_ENUM;

use commands::Report;
use load::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    /// Lattice source text, readable by the other subcommands.
    Text,
}

impl Format {
    pub fn label(self) -> &'static str {
        match self {
            Format::Json => "JSON",
            Format::Dot => "DOT",
            Format::Text => "text",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "latspec", version, about = "Spectra, supports and decompositions of finite ideal lattices")]
struct Cli {
    /// Emit Graphviz DOT (same as `--format dot`).
    #[arg(long, global = true)]
    dot: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest number of point maps enumerated by uniqueness checks.
    #[arg(long, global = true, env = "LATSPEC_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM as u64)]
    max_enum: u64,
    /// Print nothing on success; the exit status carries the result.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the ideal lattice axioms, with witnesses for failures.
    Verify { lattice: String },
    /// Prime elements and the Zariski topology on them.
    Spec { lattice: String },
    /// Hochster dual of a spectral space.
    Dual { space: String },
    /// Radical of an element and the primes above it.
    Radical { lattice: String, element: String },
    /// Support of an element: the primes not above it.
    Supp { lattice: String, element: String },
    /// The three classifications of semiprime elements.
    Classify { lattice: String },
    /// Split a semiprime element along its support.
    Decompose { lattice: String, element: String },
    /// Lattice of open sets of a spectral space.
    Openlattice { space: String },
    /// Check a spectrum datum (`delta:` file) against the adjunction.
    AdjointCheck { lattice: String, space: String, datum: String },
    /// Decide whether a support datum (`sigma:` file) is classifying.
    Classifying { datum: String },
    /// Generate lattices.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// Ideals of Z/n, as divisors of n.
    Divisor { n: u64 },
    /// Ideals of a finite commutative semiring given as a table file.
    Semiring { file: String },
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let format = |default: Format| if cli.dot { Format::Dot } else { cli.format.unwrap_or(default) };
    let json = format(Format::Json);
    let max_enum = u128::from(cli.max_enum);
    match &cli.command {
        Command::Verify { lattice } => commands::verify(lattice, json),
        Command::Spec { lattice } => commands::spec(lattice, json),
        Command::Dual { space } => commands::dual(space, json),
        Command::Radical { lattice, element } => commands::radical(lattice, element, json),
        Command::Supp { lattice, element } => commands::supp(lattice, element, json),
        Command::Classify { lattice } => commands::classify_all(lattice, json),
        Command::Decompose { lattice, element } => commands::decompose(lattice, element, json),
        Command::Openlattice { space } => commands::openlattice(space, json),
        Command::AdjointCheck { lattice, space, datum } => {
            commands::adjoint_check(lattice, space, datum, max_enum, json)
        }
        Command::Classifying { datum } => commands::classifying(datum, max_enum, json),
        Command::Gen(Gen::Divisor { n }) => commands::gen_divisor(*n, format(Format::Text)),
        Command::Gen(Gen::Semiring { file }) => commands::gen_semiring(file, format(Format::Text)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if !cli.quiet {
                let mut out = std::io::stdout().lock();
                let _ = out.write_all(report.body.as_bytes());
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("latspec: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
