//! Exact scalars and polynomials: rationals, dense polynomials over ℚ,
//! polynomials over small prime fields, and rational reconstruction.

mod modpoly;
mod poly;
mod rat;
mod reconstruct;

pub use modpoly::{inv_mod, is_prime, pow_mod, reduce_rational, ModPoly};
pub use poly::{poly_eval, poly_gcd, squarefree_part, Algebra, UPoly};
pub use rat::{ParseRatError, Rat};
pub use reconstruct::rational_reconstruct;
