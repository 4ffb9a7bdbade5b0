//! Error type shared by every checking module.

use thiserror::Error;

/// Faults a check can raise; anything else is a programming error and panics.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Reduction of a rational whose denominator is divisible by p.
    #[error("p = {p} divides the denominator of {value}")]
    PDividesDenominator { p: u64, value: String },

    /// Factorial-table lookup past the table's bound.
    #[error("index {n} exceeds factorial table bound {n_max}")]
    IndexOutOfTable { n: u64, n_max: u64 },

    /// Brute-force string enumeration would exceed the configured bound.
    #[error("enumeration of {count} strings exceeds the bound {bound}")]
    EnumerationTooLarge { count: u128, bound: u128 },

    /// Harmonic-sum cutoff n must stay below the prime for modular evaluation.
    #[error("harmonic cutoff n = {n} must be smaller than p = {p}")]
    IndexRangeTooLarge { n: u64, p: u64 },

    /// Check id string that names no known check.
    #[error("unknown check id `{0}`")]
    UnknownId(String),

    /// Parameter record lacks a key the check needs.
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),

    /// Prime below the check's stated minimum.
    #[error("prime {p} is below the minimum {min} for {check}")]
    PrimeTooSmall { p: u64, min: u64, check: String },

    /// Parameter outside the check's admissible range.
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// A sum that must be p-integral came out with p in its denominator.
    #[error("denominator of {context} is divisible by p = {p} after summation")]
    PIntegralityViolation { context: String, p: u64 },

    /// Lattice enumeration larger than the configured term budget.
    #[error("{terms} lattice points exceed the term budget {budget}")]
    TermBudgetExceeded { terms: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
