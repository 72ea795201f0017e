//! Exact computer algebra for polynomial resultants and the congruences
//! they certify: three independent resultant engines over arbitrary-precision
//! integers, root counting and remainder-matrix rank modulo a prime, prime-
//! power divisibility checks on the resultant, and Lucas-sequence congruence
//! verification mod q^2.

pub mod arith;
pub mod cli;
pub mod error;
pub mod lucas;
pub mod matrix;
pub mod modular;
pub mod par;
pub mod parse;
pub mod poly;
pub mod report;
pub mod resultant;
pub mod selftest;
pub mod sweeps;

pub use arith::{valuation, Valuation};
pub use error::Error;
pub use matrix::{IntMatrix, ModMatrix};
pub use modular::{analyze, common_roots, remainder_matrix, roots_mod, ModAnalysis};
pub use parse::{parse_poly, ParseError};
pub use poly::{IntPolynomial, RatPolynomial};
pub use report::CongruenceReport;
pub use resultant::{
    cyclotomic_resultant, resultant, resultant_euclidean, resultant_remainder_matrix,
    resultant_sylvester, Engine, ResultantResult,
};
