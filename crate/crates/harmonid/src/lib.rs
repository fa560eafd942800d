//! Catalog-driven exact verification of harmonic-number summation identities.
//!
//! - [`catalog`]: one spec per identity, with parameter signatures, pole
//!   guards, and independent two-sided evaluators (exact rational or float)
//! - [`harness`]: deterministic seeded sweeps over integer grids and sampled
//!   rational points, rule checks, terminating-reduction checks, and the
//!   evaluation-order benchmark
//! - [`report`]: JSON (byte-deterministic), CSV, and table rendering

pub mod catalog;
pub mod harness;
pub mod report;
