use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix that should be a density operator fails a structural check
    /// (trace, hermiticity).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Negative probability in a spectrum, beyond rounding tolerance.
    #[error("not a state: eigenvalue #{index} = {eigenvalue:e} is negative")]
    NotAState { index: usize, eigenvalue: f64 },

    /// A 4×4 operator has Pauli components outside the Bell-diagonal class.
    #[error("not Bell-diagonal: stray Pauli component {component} = {value:e}")]
    NotBellDiagonal { component: String, value: f64 },

    #[error("unsupported state: {0}")]
    UnsupportedState(String),

    #[error("internal error: {0}")]
    Internal(String),
}
