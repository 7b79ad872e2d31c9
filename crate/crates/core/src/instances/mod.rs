//! Instance generators: semiring ideal lattices, divisor lattices of `Z/n`,
//! closure sublattices, thick tensor ideals of a semiring with the
//! translation between object-level and ideal-level supports, and the
//! standard corpus of small lattices and spaces.

mod closure;
mod corpus;
mod divisor;
mod iso;
mod semiring;
mod thick;

use thiserror::Error;

use crate::adjunction::DatumFailure;
use crate::lattice::LatticeError;
use crate::parse::ParseError;

pub use closure::{closure_sublattice, ClosureReport, ClosureSublattice, ClosureSystem};
pub use corpus::{all_topologies, powerset_lattice, standard_corpus, t0_spaces, CorpusEntry};
pub use divisor::{divisor_dictionary, divisor_ideal, divisor_lattice, divisors};
pub use iso::{find_isomorphism, isomorphism_failure, IsoFailure};
pub use semiring::{parse_semiring, semiring_ideal_lattice, FiniteSemiring, SemiringIdealLattice};
pub use thick::{
    sigma_from_tau, tau_failure, tau_from_sigma, tensor_semiring_thick_lattice, TauFailure,
    ThickLattice,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a semiring needs at least one element")]
    EmptySemiring,
    #[error("{size} elements given; at most {max} are supported")]
    TooLarge { size: usize, max: usize },
    #[error("semiring law fails ({law}) at {witness:?}")]
    SemiringLaw {
        law: &'static str,
        witness: Vec<String>,
    },
    #[error("the modulus must be positive")]
    ZeroModulus,
    #[error("members are not closed under meets: {0:?}")]
    NotMeetClosed(Vec<String>),
    #[error("members are not closed under joins of chains: {0:?}")]
    NotJoinClosed(Vec<String>),
    #[error("projection is not compatible with the product at {0:?}")]
    NotProjectionCompatible(Vec<String>),
    #[error("invalid object support: {0}")]
    InvalidObjectSupport(TauFailure),
    #[error("objects #{x} and #{y} generate the same ideal but have different supports")]
    IllDefined { x: usize, y: usize },
    #[error("invalid support datum: {0}")]
    InvalidDatum(DatumFailure),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
