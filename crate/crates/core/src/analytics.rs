//! Closed-form population moments of the toy pipeline.
//!
//! Everything the Monte Carlo studies measure has an exact expectation in
//! this model; this module evaluates those expectations directly from the
//! configuration so the studies have an oracle to compare against.
//!
//! With `v = sigma_x^2`, the moments are
//!
//! * true variance of the merged estimate:
//!   `v/n + ((n-1)/n) * v/(n*m) + sigma_eps^2/m`
//! * expected conditional variance given the dataset (the part the
//!   ensemble-level estimates can see): the same expression minus `v/n`
//! * expected squared double-bootstrap spread: `(m-1)/m` times the
//!   conditional variance
//! * expected squared standard-error formula: the conditional variance
//! * pairwise member covariance: `v/n`
//! * single-member variance: `v/n + ((n-1)/n) * v/n + sigma_eps^2`
//!
//! The `v/n` term is the dataset-sampling ("mc-stat") contribution: it has
//! no `1/m` suppression, and it is exactly the term both ensemble-level
//! uncertainty estimates miss.

use crate::error::Error;
use crate::toy::ToyConfig;

/// Exact population moments for a pipeline configuration.
///
/// Invariants (exact by construction, not approximate):
/// `expected_cond_var == expected_delta2_stderr`,
/// `expected_delta2_boot_boot == ((m-1)/m) * expected_delta2_stderr`,
/// `var_boot_avg == mcstat_term + expected_cond_var`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnalyticMoments {
    /// True variance of the merged estimate.
    pub var_boot_avg: f64,
    /// Expected conditional variance of the merged estimate given the data.
    pub expected_cond_var: f64,
    /// Expected squared double-bootstrap uncertainty.
    pub expected_delta2_boot_boot: f64,
    /// Expected squared standard-error-formula uncertainty.
    pub expected_delta2_stderr: f64,
    /// Covariance of two distinct member estimates.
    pub cov_pair: f64,
    /// Variance of a single member estimate.
    pub var_single: f64,
    /// The dataset-sampling (mc-stat) term of `var_boot_avg`.
    pub mcstat_term: f64,
}

/// Evaluate the closed-form moments for `config`.
pub fn compute_moments(config: &ToyConfig) -> Result<AnalyticMoments, Error> {
    config.validate()?;
    let n = config.n as f64;
    let m = config.m as f64;
    let data_var = config.sigma_x * config.sigma_x;
    let noise_var = config.sigma_eps * config.sigma_eps;

    let mcstat_term = data_var / n;
    let resample_term = (n - 1.0) / n * data_var / (n * m);
    let expected_cond_var = resample_term + noise_var / m;

    Ok(AnalyticMoments {
        var_boot_avg: mcstat_term + expected_cond_var,
        expected_cond_var,
        expected_delta2_boot_boot: (m - 1.0) / m * expected_cond_var,
        expected_delta2_stderr: expected_cond_var,
        cov_pair: mcstat_term,
        var_single: mcstat_term + (n - 1.0) / n * data_var / n + noise_var,
        mcstat_term,
    })
}

/// Fraction of the true variance that the ensemble-level estimates cannot
/// see: `mcstat_term / var_boot_avg`.
pub fn mcstat_fraction_missed(moments: &AnalyticMoments) -> Result<f64, Error> {
    if moments.var_boot_avg <= 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(moments.mcstat_term / moments.var_boot_avg)
}

/// Expected squared uncertainties reported by the two corrected procedures.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FixVariances {
    /// Plain single-estimate bootstrap: re-estimate on each dataset replica
    /// with fresh noise; expected squared spread
    /// `((n-1)/n) * sigma_x^2/n + sigma_eps^2`.
    pub plain: f64,
    /// Nested full-procedure bootstrap: each pseudo-experiment re-runs the
    /// whole m-member build on one dataset replica; expected squared spread
    /// `((n-1)/n) * sigma_x^2/n + sigma_eps^2/m`.
    pub nested: f64,
}

/// Closed forms for the corrected procedures' expected squared
/// uncertainties.
///
/// These two formulas are derived in-house with the same total-variance
/// machinery as [`compute_moments`] (they are not taken from an external
/// source) and are pinned against a brute-force Monte Carlo oracle in the
/// test suite before being trusted anywhere else.
pub fn expected_fix_variances(config: &ToyConfig) -> Result<FixVariances, Error> {
    config.validate()?;
    let n = config.n as f64;
    let m = config.m as f64;
    let data_var = config.sigma_x * config.sigma_x;
    let noise_var = config.sigma_eps * config.sigma_eps;
    let resampled_data_term = (n - 1.0) / n * data_var / n;
    Ok(FixVariances {
        plain: resampled_data_term + noise_var,
        nested: resampled_data_term + noise_var / m,
    })
}
