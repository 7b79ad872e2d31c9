use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use latspec::lattice::{parse_lattice, FiniteIdealLattice, LatticeData, LatticeError};
use latspec::topology::{parse_space, FiniteSpace, TopologyError};
use thiserror::Error;

/// Why a command did not produce a report.
#[derive(Debug, Error)]
pub enum Failure {
    /// Unreadable, malformed or invalid input; exit status 2.
    #[error("{0}")]
    Input(String),
    /// The input is well formed but a mathematical check failed; exit status 1.
    #[error("{0}")]
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

pub fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn display(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

pub fn lattice_data(path: &str) -> Result<LatticeData, Failure> {
    let text = read_source(path)?;
    parse_lattice(&text).map_err(|e| Failure::Input(format!("{}: {e}", display(path))))
}

/// A lattice that fails its axioms is treated as invalid input here; only
/// `verify` reports axiom failures as a verification result.
pub fn lattice(path: &str) -> Result<FiniteIdealLattice, Failure> {
    let data = lattice_data(path)?;
    FiniteIdealLattice::from_data(data).map_err(|e| match e {
        LatticeError::TooManyPrimes { .. } => Failure::Input(format!("{}: {e}", display(path))),
        e => Failure::Input(format!("{}: not an ideal lattice: {e}", display(path))),
    })
}

pub fn space(path: &str) -> Result<FiniteSpace, Failure> {
    let text = read_source(path)?;
    parse_space(&text).map_err(|e| match e {
        TopologyError::Parse(p) => Failure::Input(format!("{}: {p}", display(path))),
        e => Failure::Input(format!("{}: not a topology: {e}", display(path))),
    })
}

pub fn element(lattice: &FiniteIdealLattice, name: &str) -> Result<usize, Failure> {
    lattice
        .index_of(name)
        .ok_or_else(|| Failure::Input(format!("unknown element `{name}`")))
}

/// `target` relative to the directory holding `base`.
pub fn relative_to(base: &str, target: &str) -> String {
    let dir = if base == "-" {
        PathBuf::new()
    } else {
        Path::new(base).parent().map(Path::to_path_buf).unwrap_or_default()
    };
    dir.join(target).to_string_lossy().into_owned()
}
