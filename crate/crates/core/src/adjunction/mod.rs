//! Lattice morphisms, spectrum and support data, their universal maps,
//! the adjunction between `Spec` and the open-set lattice, and detection of
//! classifying support data.

mod adjoint;
mod classifying;
mod datum;
mod enumerate;
mod morphism;
mod text;

use thiserror::Error;

use crate::lattice::LatticeError;
use crate::parse::ParseError;
use crate::topology::{SpectralReport, TopologyError};

pub use adjoint::{lambda_adjunct, sigma_adjunct};
pub use classifying::{
    is_classifying, support_morphism_check, ClassifyingReport, SupportMorphismReport,
};
pub use datum::{
    preimage_solutions, spectrum_uniqueness, support_uniqueness, universal_spectrum_map,
    universal_support_map, DatumFailure, SpectrumDatum, SupportDatum, Uniqueness,
};
pub use enumerate::{
    continuous_maps, lattice_morphisms, set_assignments, spectrum_data, support_data,
};
pub use morphism::{spec_of_morphism, verify_morphism, LatticeMorphism, MorphismReport};
pub use text::{parse_datum, resolve_assignment, DatumKind, DatumText};

/// Default cap on the number of point maps enumerated for uniqueness checks.
pub const DEFAULT_MAX_ENUM: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdjunctionError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("not a lattice morphism")]
    InvalidMorphism(MorphismReport),
    #[error("invalid datum: {0}")]
    InvalidDatum(DatumFailure),
    #[error("space is not spectral")]
    NotSpectral(Box<SpectralReport>),
    #[error("map is not continuous: preimage of {0} is not open")]
    NotContinuous(String),
    #[error("the two data live on different lattices")]
    LatticeMismatch,
    #[error("open lattice does not belong to the given space")]
    SpaceMismatch,
    #[error("map has {found} points where {expected} were expected")]
    SizeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
