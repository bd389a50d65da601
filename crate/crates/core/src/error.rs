//! Error type shared by every module of the engine.
//!
//! Structural misuse (mixing series of different truncation, category or
//! ring) is a programming error and panics via `assert!`. The variants here
//! are the *algebraic* failures that a correct caller can trigger with
//! legitimate data, plus validation failures on external input.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion was requested for an element that is not a unit
    /// (zero scalar, singular matrix, or series with non-invertible
    /// order-0 part).
    #[error("not a unit: {0}")]
    NotAUnit(String),

    /// The operation leaves the mathematical domain of its arguments,
    /// e.g. log of a series with non-positive constant term.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact ring was asked to produce a transcendental constant
    /// (exp/log of a scalar other than the ring's neutral choices).
    #[error("inexact scalar: {0}")]
    InexactScalar(String),

    /// A path or series violates a valuation precondition
    /// (e.g. the logarithmic ODE needs valuation >= 1).
    #[error("valuation error: {0}")]
    Valuation(String),

    /// Factorizations of an index cannot be certified finite for the
    /// category instance (query beyond the validated length bound).
    #[error("infinite decomposition: {0}")]
    InfiniteDecomposition(String),

    /// The closure of a cobordism generator family exceeded the
    /// configured element budget.
    #[error("closure explosion: {reached} elements reached with budget {budget}")]
    ClosureExplosion { reached: usize, budget: usize },

    /// Malformed data at a validated construction boundary
    /// (ragged matrix rows, letter out of alphabet, bad JSON document).
    #[error("structural error: {0}")]
    Structure(String),

    /// A serialized document failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
