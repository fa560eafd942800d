//! Error type shared by the exact and floating-point evaluators.

use thiserror::Error;

/// Arithmetic and evaluation failures.
///
/// Division by zero and poles are always reported through this type;
/// evaluation never panics and never produces a silent NaN on the exact path.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Division by an exact zero (or by a jet whose value component is zero).
    #[error("division by zero")]
    DivisionByZero,

    /// A denominator factor vanished at summand index `index`
    /// (1-based: the k of the offending term or harmonic summand).
    #[error("pole: zero denominator factor at index {index}")]
    Pole { index: u64 },

    /// Exact summation was requested for a series with no nonpositive-integer
    /// numerator parameter.
    #[error("series does not terminate: no nonpositive-integer numerator parameter")]
    NonTerminating,

    /// The gamma function was evaluated at a nonpositive integer.
    #[error("gamma pole at nonpositive integer {argument}")]
    GammaPole { argument: f64 },
}
