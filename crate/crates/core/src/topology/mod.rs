//! Finite topological spaces, spectrality, the Zariski spectrum of a lattice,
//! Hochster duality, the open-set lattice and the classification tables.

mod classify;
mod map;
mod space;
mod spectral;
mod zariski;

use thiserror::Error;

use crate::lattice::LatticeError;
use crate::parse::ParseError;

pub use classify::{
    classify, classify_closed, classify_open, classify_supp, inverse_assignment, BijectionReport,
    ClassificationKind, ClassificationTable,
};
pub use map::ContinuousMap;
pub use space::{parse_space, FiniteSpace};
pub use spectral::{hochster_dual, verify_spectral, SpectralReport};
pub use zariski::{
    canonical_homeo, open_lattice, open_set_name, spec_star, support, zariski_spectrum,
    CanonicalHomeo, OpenLattice,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0} points given; at most 64 are supported")]
    TooManyPoints(usize),
    #[error("open set {0} mentions a point outside the space")]
    PointOutOfRange(String),
    #[error("the empty set is not listed as open")]
    MissingEmptyOpen,
    #[error("the whole space is not listed as open")]
    MissingFullOpen,
    #[error("opens {a} and {b} have a union that is not open")]
    NotUnionClosed { a: String, b: String },
    #[error("opens {a} and {b} have an intersection that is not open")]
    NotIntersectionClosed { a: String, b: String },
    #[error("space is not spectral")]
    NotSpectral(Box<SpectralReport>),
    #[error("{0} is not closed")]
    NotClosed(String),
    #[error("the empty set is not irreducible")]
    EmptyClosedSet,
    #[error("{set} is not irreducible: it is the union of {first} and {second}")]
    NotIrreducible {
        set: String,
        first: String,
        second: String,
    },
    #[error("{0} has no unique generic point")]
    NoUniqueGenericPoint(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
