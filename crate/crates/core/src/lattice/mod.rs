//! Finite ideal lattices: construction, axiom checks, primes, semiprimes,
//! radicals, prime avoidance and the ideal completion of a finite poset.

mod data;
mod error;
mod ideal;
mod poset;
mod text;

/// Index of a lattice element.
pub type Elem = usize;

pub use data::{verify_axioms, Axiom, AxiomReport, LatticeData};
pub use error::LatticeError;
pub use ideal::{FiniteIdealLattice, PrimeFailure};
pub use poset::{Completion, FinitePoset, PosetError, PosetIdeal};
pub use text::{lattice_to_text, parse_lattice};

/// Parses and validates lattice source text.
pub fn build_lattice(text: &str) -> Result<FiniteIdealLattice, LatticeError> {
    FiniteIdealLattice::from_data(parse_lattice(text)?)
}
