//! Exact computations in number fields `ℚ[x]/(f)`: arithmetic, the regular
//! representation, Galois automorphisms, and constructive searches for
//! primitive elements and normal basis generators, optionally of norm one.

pub mod cli;
pub mod criteria;
pub mod error;
pub mod exact;
pub mod field;
pub mod galois;
pub mod parse;
pub mod repr;
pub mod search;

pub use error::{Error, Result};
pub use exact::{Rat, UPoly};
pub use field::{FieldElem, NumberField};
