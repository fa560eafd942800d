//! Exact numeric substrate for identity verification.
//!
//! Provides:
//! - [`Rational`]: arbitrary-precision rational numbers in canonical reduced form
//! - [`Jet`]: order-2 truncated Taylor expansions over [`Rational`], realizing
//!   exact first and second derivatives of rational expressions
//! - [`Scalar`]: the shared arithmetic surface of the two, so combinatorial
//!   primitives evaluate over either
//! - [`special`]: shifted factorials (Pochhammer symbols), generalized binomial
//!   coefficients, generalized harmonic numbers, and the derivative-rule checks
//! - [`hypergeom`]: terminating pFq summation (exact, two evaluation orders),
//!   truncated pFq in f64, a Lanczos gamma function, and the terminating
//!   reductions of the classical gamma-form summation theorems

pub mod error;
pub mod hypergeom;
pub mod jet;
pub mod rational;
pub mod scalar;
pub mod special;

pub use error::CoreError;
pub use jet::Jet;
pub use rational::Rational;
pub use scalar::Scalar;
