//! Error type shared by the sampling, toy-pipeline, and analytics layers.

use core::fmt;

/// Errors produced by the sampling primitives and the estimation pipeline.
///
/// Validation failures carry the message verbatim so front ends can report
/// the offending parameter without re-deriving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter failed validation; the message names the parameter.
    InvalidParameter(&'static str),
    /// A resample drew zero total weight (possible in Poisson mode); the
    /// caller must redraw.
    DegenerateResample,
    /// Geometric merging requires every ensemble member to be positive.
    NonPositiveEstimate,
    /// An operation that estimates a spread was given fewer than two values.
    TooFewValues,
    /// A ratio whose denominator is zero (e.g. a variance fraction of a
    /// zero-variance configuration).
    UndefinedRatio,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => f.write_str(msg),
            Error::DegenerateResample => {
                f.write_str("resample drew zero total weight; redraw required")
            }
            Error::NonPositiveEstimate => {
                f.write_str("geometric merge requires all estimates to be positive")
            }
            Error::TooFewValues => f.write_str("at least two values are required"),
            Error::UndefinedRatio => f.write_str("ratio undefined: denominator is zero"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
