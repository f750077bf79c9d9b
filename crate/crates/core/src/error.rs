use alloc::string::String;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    NotPrime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),

    /// Mismatched variable counts, ranks or shapes.
    #[error("structural mismatch: {0}")]
    Structure(String),

    #[error("inhomogeneous polynomial: terms of degree {first} and {second}")]
    Inhomogeneous { first: u32, second: u32 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Truncation degree below the regularity bound.
    #[error("truncation degree m = {m} is below the required bound m >= reg + 2 = {required} (reg = {reg})")]
    BelowRegularityBound { m: u32, reg: u32, required: u32 },

    #[error("no regular sequence found after {trials} trial(s); try a larger degree")]
    GenericityFailure { trials: u32 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
