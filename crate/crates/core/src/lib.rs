//! Finite ideal lattices and their prime spectra.
//!
//! The crate covers the order-theoretic side of the correspondence between
//! ideal lattices and spectral spaces at finite size: prime and semiprime
//! elements, the Zariski spectrum and its Hochster dual, the open-set lattice
//! of a space, spectrum and support data with their universal maps,
//! closure sublattices and semiring ideal lattices, and the decomposition of
//! semiprime elements along their supports.

pub mod adjunction;
pub mod decomposition;
pub mod dot;
pub mod instances;
pub mod lattice;
mod parse;
pub mod pointset;
pub mod report;
pub mod topology;

pub use lattice::{build_lattice, Elem, FiniteIdealLattice, LatticeData, LatticeError};
pub use parse::{is_valid_name, ParseError};
pub use pointset::PointSet;
pub use report::Check;
