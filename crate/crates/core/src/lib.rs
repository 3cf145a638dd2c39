//! Deterministic building blocks for double-bootstrap uncertainty studies.
//!
//! The crate provides three layers:
//!
//! * [`sampling`] — a splittable counter-based random source plus the
//!   bootstrap primitives built on it (Gaussian draws, multinomial and
//!   Poisson resample counts, compensated weighted means),
//! * [`toy`] — the scalar estimation pipeline under study: a Gaussian
//!   dataset, an ensemble of noisy bootstrap-mean estimates, the merged
//!   estimate, and the two ensemble-level uncertainty estimates,
//! * [`analytics`] — closed-form population moments for every quantity the
//!   pipeline produces, used as the oracle for the Monte Carlo studies in
//!   the companion crate.
//!
//! Everything here is `no_std`-compatible (with `alloc`); IO, parallelism,
//! and report serialization live in the `boot2lab` companion crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analytics;
pub mod error;
pub mod math;
pub mod sampling;
pub mod stats;
pub mod toy;

pub use error::Error;
