//! Exact dense linear algebra and univariate polynomial factorization
//! over prime fields: the arithmetic kernel everything else builds on.

mod matrix;
mod poly;

pub use matrix::{
    addm, check_modulus, invm, is_prime, mulm, powm, subm, Complement, FpMatrix, Reduction,
    MAX_MODULUS,
};
pub use poly::{Factored, FpPoly};
