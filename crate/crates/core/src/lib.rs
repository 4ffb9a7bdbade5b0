//! Verification workbench for binomial-sum supercongruences.
//!
//! The crate machine-checks a catalog of identities, harmonic-sum
//! congruences, and multinomial supercongruences mod p, p² and p³.
//! Every claim is evaluated along two independent routes wherever
//! possible: a fast reduced evaluator and a brute-force oracle over
//! exact integers or rationals. A check never trusts intermediate
//! congruence steps; both sides are computed exactly and reduced once.

pub mod arith;
pub mod combinat;
pub mod congruences;
pub mod error;
pub mod harmonic;
pub mod identities;
pub mod report;
pub mod runner;
pub mod theorems;
pub mod wz;

pub use arith::{fermat_quotient, legendre, make_residue, Integer, Modulus, Rational, Residue};
pub use error::{Error, Result};
pub use report::{CheckReport, Params, Status, Suite, Value};
