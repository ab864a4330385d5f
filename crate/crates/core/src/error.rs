use thiserror::Error;

use crate::exact::{Rat, UPoly};
use crate::search::WitnessedElement;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("defining polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("defining polynomial is not squarefree; gcd(f, f') = {witness}")]
    NotSquarefree { witness: UPoly },

    #[error("defining polynomial has the rational root {root}")]
    RationalRoot { root: Rat },

    #[error("division by zero")]
    DivisionByZero,

    #[error("defining polynomial is reducible; found the factor {factor}")]
    ZeroDivisor { factor: UPoly },

    #[error("reconstruction bound {bound} is too large for modulus {modulus}")]
    BoundTooLargeForModulus { bound: String, modulus: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("elements belong to different number fields")]
    FieldMismatch,

    #[error("no fully split prime found below {bound}")]
    NoSplitPrimeFound { bound: u64 },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("p-adic precision cap of {cap_bits} bits exceeded before reconstructions stabilized")]
    PrecisionCapExceeded { cap_bits: u64 },

    #[error("extension is not Galois: found {count} automorphisms")]
    NotGalois { count: usize },

    #[error("extension has degree 1")]
    TrivialExtension,

    #[error("height cap {max_height} exhausted after {} results", partial.len())]
    HeightCapExceeded {
        max_height: u64,
        partial: Vec<WitnessedElement>,
    },

    #[error("b^2 - 4c is the square of {witness}; the quadratic does not define a field")]
    NotAField { witness: Rat },

    #[error("insufficient sample: need at least {needed} points, got {got}")]
    InsufficientSample { needed: usize, got: usize },

    #[error("syntax error at offset {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("empty input")]
    EmptyInput,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
