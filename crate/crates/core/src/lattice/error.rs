use thiserror::Error;

use crate::parse::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("order is not antisymmetric: {a} <= {b} and {b} <= {a}")]
    NotAntisymmetric { a: String, b: String },
    #[error("{a} and {b} have no join or no meet")]
    MissingBound { a: String, b: String },
    #[error("declared {role} `{declared}` is not comparable as required with `{witness}`")]
    WrongBound {
        role: &'static str,
        declared: String,
        witness: String,
    },
    #[error("product is not associative: ({a}{b}){c} != {a}({b}{c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("product does not distribute over joins at ({a}, {b}, {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("top is not a two-sided unit: fails at {a}")]
    UnitFailure { a: String },
    #[error("bottom is not a two-sided zero: fails at {a}")]
    AnnihilationFailure { a: String },
    #[error("spectrum has {count} points; at most 64 are supported")]
    TooManyPrimes { count: usize },
    #[error("set is not multiplicative: {a}{b} is not in it")]
    NotMultiplicative { a: String, b: String },
    #[error("multiplicative set is empty")]
    EmptyMultiplicativeSet,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}
