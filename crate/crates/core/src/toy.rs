//! The scalar estimation pipeline under study.
//!
//! A dataset of `n` Gaussian datapoints is resampled `m` times; each replica
//! yields a mean estimate perturbed by independent noise of spread
//! `sigma_eps` (the stand-in for training randomness). The `m` estimates are
//! merged into a single value, and two uncertainty estimates are computed at
//! the ensemble level only:
//!
//! * [`delta_boot_boot`] — spread of `k` re-merged resamples of the ensemble,
//! * [`delta_stderr_formula`] — the standard-error formula over the ensemble.
//!
//! Both deliberately reproduce the procedure under study, including its
//! flaw: they never touch the dataset a second time, so they are blind to
//! its sampling fluctuations. The corrected procedures live in the `boot2lab`
//! harness; nothing in this module compensates for the missing variance.

use alloc::vec::Vec;

use crate::error::Error;
use crate::math;
use crate::sampling::{
    self, bootstrap_counts_into, derive_rng, weighted_mean, ResampleCounts, ResampleMode, SeedSpec,
    StreamRng,
};
use crate::stats::{self, NeumaierSum};

/// How ensemble members are combined into the merged estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum MergeMode {
    Arithmetic,
    Geometric,
}

/// Free parameters of the toy pipeline.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ToyConfig {
    /// True mean of the datapoint distribution.
    pub theta: f64,
    /// Datapoint standard deviation.
    pub sigma_x: f64,
    /// Per-member noise standard deviation (training-randomness stand-in).
    pub sigma_eps: f64,
    /// Dataset size.
    pub n: u64,
    /// Ensemble size (number of bootstrap replicas / member estimates).
    pub m: u64,
    /// Number of ensemble-level resampling trials.
    pub k: u64,
    pub merge_mode: MergeMode,
    pub resample_mode: ResampleMode,
}

impl ToyConfig {
    /// The full-scale configuration: theta 5, sigma_x 100, sigma_eps 0.01,
    /// n = 10^6, m = 10^3, k = 10^4.
    pub fn paper_full() -> Self {
        ToyConfig {
            theta: 5.0,
            sigma_x: 100.0,
            sigma_eps: 0.01,
            n: 1_000_000,
            m: 1_000,
            k: 10_000,
            merge_mode: MergeMode::Arithmetic,
            resample_mode: ResampleMode::Multinomial,
        }
    }

    /// Reduced configuration sized so replication studies run in minutes:
    /// n = 10^4, m = 20, k = 500, same theta and spreads.
    pub fn desk_reduced() -> Self {
        ToyConfig {
            n: 10_000,
            m: 20,
            k: 500,
            ..Self::paper_full()
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !self.theta.is_finite() {
            return Err(Error::InvalidParameter("theta must be finite"));
        }
        if !self.sigma_x.is_finite() || self.sigma_x < 0.0 {
            return Err(Error::InvalidParameter("sigma-x must be finite and >= 0"));
        }
        if !self.sigma_eps.is_finite() || self.sigma_eps < 0.0 {
            return Err(Error::InvalidParameter("sigma-eps must be finite and >= 0"));
        }
        if self.n < 2 {
            return Err(Error::InvalidParameter("n must be >= 2"));
        }
        if self.m < 1 {
            return Err(Error::InvalidParameter("m must be >= 1"));
        }
        if self.k < 2 {
            return Err(Error::InvalidParameter("k must be >= 2"));
        }
        Ok(())
    }
}

impl Default for ToyConfig {
    fn default() -> Self {
        Self::paper_full()
    }
}

/// The original sample: `n` real datapoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    values: Vec<f64>,
}

impl Dataset {
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.len() < 2 {
            return Err(Error::InvalidParameter("n must be >= 2"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("datapoints must be finite"));
        }
        Ok(Dataset { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Plain sample mean (compensated).
    pub fn mean(&self) -> f64 {
        stats::mean(&self.values)
    }
}

/// The `m` member estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    estimates: Vec<f64>,
}

impl Ensemble {
    pub fn new(estimates: Vec<f64>) -> Result<Self, Error> {
        if estimates.is_empty() {
            return Err(Error::InvalidParameter("m must be >= 1"));
        }
        if estimates.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("estimates must be finite"));
        }
        Ok(Ensemble { estimates })
    }

    pub fn estimates(&self) -> &[f64] {
        &self.estimates
    }

    pub fn len(&self) -> usize {
        self.estimates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.estimates.is_empty()
    }
}

/// The two ensemble-level uncertainty estimates of one pipeline run.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UncertaintyPair {
    pub delta_boot_boot: f64,
    pub delta_stderr: f64,
    pub bias_corrected: bool,
}

/// One member estimate plus its resampling diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemberEstimate {
    pub value: f64,
    /// Number of degenerate (zero-total) Poisson replicas redrawn.
    pub poisson_redraws: u32,
}

/// The two independent streams a member consumes: one for the resample, one
/// for the noise term. Keeping them separate makes each channel reproducible
/// (and disableable) on its own.
#[derive(Debug)]
pub struct MemberChannels {
    pub resample: StreamRng,
    pub noise: StreamRng,
}

const CHANNEL_RESAMPLE: u64 = 0;
const CHANNEL_NOISE: u64 = 1;

impl MemberChannels {
    pub fn derive(member_seed: &SeedSpec) -> Self {
        MemberChannels {
            resample: derive_rng(&member_seed.child(CHANNEL_RESAMPLE)),
            noise: derive_rng(&member_seed.child(CHANNEL_NOISE)),
        }
    }
}

/// Aggregate diagnostics from building an ensemble.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnsembleDiagnostics {
    pub poisson_redraws: u64,
}

/// Draw the original dataset: `n` iid N(theta, sigma_x^2) datapoints.
pub fn generate_dataset(config: &ToyConfig, rng: &mut StreamRng) -> Result<Dataset, Error> {
    config.validate()?;
    let values = sampling::sample_gaussian(rng, config.theta, config.sigma_x, config.n as usize)?;
    Ok(Dataset { values })
}

fn member_estimate_with_buffer(
    dataset: &Dataset,
    sigma_eps: f64,
    mode: ResampleMode,
    channels: &mut MemberChannels,
    replica: &mut ResampleCounts,
) -> Result<MemberEstimate, Error> {
    const MAX_REDRAWS: u32 = 1000;
    let mut redraws = 0u32;
    let resample_mean = loop {
        bootstrap_counts_into(&mut channels.resample, mode, replica)?;
        match weighted_mean(dataset.values(), replica) {
            Ok(mean) => break mean,
            Err(Error::DegenerateResample) => {
                redraws += 1;
                if redraws > MAX_REDRAWS {
                    return Err(Error::DegenerateResample);
                }
            }
            Err(other) => return Err(other),
        }
    };
    let noise = if sigma_eps > 0.0 {
        sigma_eps * channels.noise.standard_normal_pair().0
    } else {
        0.0
    };
    Ok(MemberEstimate {
        value: resample_mean + noise,
        poisson_redraws: redraws,
    })
}

/// One member estimate: the mean of a bootstrap replica of `dataset` plus an
/// independent N(0, sigma_eps^2) noise term.
///
/// Degenerate Poisson replicas (zero total weight) are redrawn internally
/// and counted in the returned diagnostics.
pub fn boot_member_estimate(
    dataset: &Dataset,
    sigma_eps: f64,
    mode: ResampleMode,
    channels: &mut MemberChannels,
) -> Result<MemberEstimate, Error> {
    if !sigma_eps.is_finite() || sigma_eps < 0.0 {
        return Err(Error::InvalidParameter("sigma-eps must be finite and >= 0"));
    }
    let mut replica = ResampleCounts::uniform(dataset.len());
    member_estimate_with_buffer(dataset, sigma_eps, mode, channels, &mut replica)
}

/// Build the full ensemble: `m` member estimates, member `i` drawing from
/// the streams derived at `seed.child(i)`.
///
/// The member loop is sequential here; because every member depends only on
/// its own derived streams, callers may instead evaluate members in parallel
/// slot-by-slot and obtain bit-identical results.
pub fn build_ensemble(
    dataset: &Dataset,
    config: &ToyConfig,
    seed: &SeedSpec,
) -> Result<(Ensemble, EnsembleDiagnostics), Error> {
    config.validate()?;
    let mut estimates = Vec::with_capacity(config.m as usize);
    let mut diagnostics = EnsembleDiagnostics::default();
    let mut replica = ResampleCounts::uniform(dataset.len());
    for member in 0..config.m {
        let mut channels = MemberChannels::derive(&seed.child(member));
        let estimate = member_estimate_with_buffer(
            dataset,
            config.sigma_eps,
            config.resample_mode,
            &mut channels,
            &mut replica,
        )?;
        estimates.push(estimate.value);
        diagnostics.poisson_redraws += estimate.poisson_redraws as u64;
    }
    Ok((Ensemble { estimates }, diagnostics))
}

/// Merge member estimates into the final estimate.
pub fn merge(ensemble: &Ensemble, mode: MergeMode) -> Result<f64, Error> {
    merge_values(&ensemble.estimates, mode)
}

fn merge_values(values: &[f64], mode: MergeMode) -> Result<f64, Error> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("m must be >= 1"));
    }
    match mode {
        MergeMode::Arithmetic => Ok(stats::mean(values)),
        MergeMode::Geometric => {
            let mut acc = NeumaierSum::default();
            for &v in values {
                if v <= 0.0 {
                    return Err(Error::NonPositiveEstimate);
                }
                acc.add(math::ln(v));
            }
            Ok(math::exp(acc.total() / values.len() as f64))
        }
    }
}

/// Resample the ensemble with replacement `k` times, merging each resampled
/// ensemble; returns the `k` re-merged estimates.
///
/// This operates on the member estimates only — the dataset is never
/// touched again. That is the procedure under study, not an optimization.
pub fn double_bootstrap(
    ensemble: &Ensemble,
    k: u64,
    mode: MergeMode,
    rng: &mut StreamRng,
) -> Result<Vec<f64>, Error> {
    if ensemble.is_empty() {
        return Err(Error::InvalidParameter("m must be >= 1"));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("k must be >= 1"));
    }
    let m = ensemble.len();
    let bound = m as u64;

    // In geometric mode, draw from the log-domain table and exponentiate the
    // mean; identical to merging the drawn members directly.
    let table: Vec<f64> = match mode {
        MergeMode::Arithmetic => ensemble.estimates.clone(),
        MergeMode::Geometric => {
            let mut logs = Vec::with_capacity(m);
            for &v in &ensemble.estimates {
                if v <= 0.0 {
                    return Err(Error::NonPositiveEstimate);
                }
                logs.push(math::ln(v));
            }
            logs
        }
    };

    let mut merged = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let mut acc = NeumaierSum::default();
        for _ in 0..m {
            acc.add(table[rng.next_below(bound) as usize]);
        }
        let mean = acc.total() / m as f64;
        merged.push(match mode {
            MergeMode::Arithmetic => mean,
            MergeMode::Geometric => math::exp(mean),
        });
    }
    Ok(merged)
}

/// Spread of the re-merged estimates: the square root of their
/// Bessel-corrected sample variance.
///
/// `bias_correction` optionally rescales the variance by `m/(m-1)` (with
/// `m` the ensemble size) before the square root, undoing the resampling
/// bias of a bootstrapped sample-mean variance.
pub fn delta_boot_boot(
    double_boot_estimates: &[f64],
    bias_correction: Option<u64>,
) -> Result<f64, Error> {
    let mut variance = stats::sample_variance(double_boot_estimates)?;
    if variance == 0.0 {
        // Includes the m = 1 case, where resampling a singleton ensemble is
        // the identity and the spread is exactly zero.
        return Ok(0.0);
    }
    if let Some(m) = bias_correction {
        if m < 2 {
            return Err(Error::InvalidParameter(
                "bias correction requires m >= 2",
            ));
        }
        variance *= m as f64 / (m - 1) as f64;
    }
    Ok(math::sqrt(variance))
}

/// The standard-error formula over the ensemble:
/// `sqrt(SVar(members) / m)`.
pub fn delta_stderr_formula(ensemble: &Ensemble) -> Result<f64, Error> {
    if ensemble.len() < 2 {
        return Err(Error::TooFewValues);
    }
    let variance = stats::sample_variance(&ensemble.estimates)?;
    Ok(math::sqrt(variance / ensemble.len() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seed(master: u64) -> SeedSpec {
        SeedSpec::new(master)
    }

    #[test]
    fn config_validation_names_the_parameter() {
        let mut config = ToyConfig::paper_full();
        config.n = 0;
        assert_eq!(
            config.validate(),
            Err(Error::InvalidParameter("n must be >= 2"))
        );
        let mut config = ToyConfig::paper_full();
        config.k = 1;
        assert_eq!(
            config.validate(),
            Err(Error::InvalidParameter("k must be >= 2"))
        );
        let mut config = ToyConfig::paper_full();
        config.sigma_x = -1.0;
        assert!(config.validate().is_err());
    }

    #[test]
    fn zero_variance_dataset_is_constant() {
        let mut config = ToyConfig::paper_full();
        config.sigma_x = 0.0;
        config.n = 4;
        let mut rng = derive_rng(&seed(1));
        let dataset = generate_dataset(&config, &mut rng).unwrap();
        assert_eq!(dataset.values(), &[5.0, 5.0, 5.0, 5.0]);
    }

    #[test]
    fn dataset_mean_stays_in_clt_band() {
        let config = ToyConfig::paper_full();
        let mut rng = derive_rng(&seed(17));
        let dataset = generate_dataset(&config, &mut rng).unwrap();
        // sd of the mean = 100/1000 = 0.1; allow 4 sigma.
        assert!((dataset.mean() - 5.0).abs() < 0.4);
    }

    #[test]
    fn dataset_sd_matches_chi_square_band() {
        let mut config = ToyConfig::paper_full();
        config.theta = 0.0;
        config.sigma_x = 1.0;
        config.n = 100;
        let mut rng = derive_rng(&seed(23));
        let dataset = generate_dataset(&config, &mut rng).unwrap();
        let sd = stats::sample_sd(dataset.values()).unwrap();
        assert!((0.7..1.3).contains(&sd), "sd = {sd}");
    }

    #[test]
    fn resampling_a_constant_gives_the_constant() {
        let dataset = Dataset::new(vec![3.25; 16]).unwrap();
        let mut channels = MemberChannels::derive(&seed(2).child(0));
        let estimate =
            boot_member_estimate(&dataset, 0.0, ResampleMode::Multinomial, &mut channels)
                .unwrap();
        assert_eq!(estimate.value, 3.25);
        assert_eq!(estimate.poisson_redraws, 0);
    }

    #[test]
    fn two_point_member_estimates_match_enumeration() {
        // Resampling [4, 6] gives mean 4, 5, 6 with probabilities
        // 1/4, 1/2, 1/4 (the four equally likely index tuples).
        let dataset = Dataset::new(vec![4.0, 6.0]).unwrap();
        let base = seed(77);
        let draws = 100_000usize;
        let mut occurrences = [0u64; 3];
        for i in 0..draws {
            let mut channels = MemberChannels::derive(&base.child(i as u64));
            let estimate =
                boot_member_estimate(&dataset, 0.0, ResampleMode::Multinomial, &mut channels)
                    .unwrap();
            match estimate.value {
                v if v == 4.0 => occurrences[0] += 1,
                v if v == 5.0 => occurrences[1] += 1,
                v if v == 6.0 => occurrences[2] += 1,
                other => panic!("impossible estimate {other}"),
            }
        }
        for (&count, &p) in occurrences.iter().zip([0.25, 0.5, 0.25].iter()) {
            let sigma = (p * (1.0 - p) * draws as f64).sqrt();
            assert!(
                (count as f64 - p * draws as f64).abs() < 3.0 * sigma,
                "occurrences {occurrences:?}"
            );
        }
    }

    #[test]
    fn noise_channel_alone_has_the_configured_spread() {
        // Resampling disabled: counts forced uniform, so only the noise
        // channel varies. The sample sd of the outputs must match sigma_eps.
        let dataset = Dataset::new(vec![4.0, 6.0, 8.0, 10.0]).unwrap();
        let uniform = ResampleCounts::uniform(dataset.len());
        let base_mean = weighted_mean(dataset.values(), &uniform).unwrap();
        let sigma_eps = 0.01;
        let base = seed(31);
        let outputs: Vec<f64> = (0..10_000)
            .map(|i| {
                let mut channels = MemberChannels::derive(&base.child(i));
                base_mean + sigma_eps * channels.noise.standard_normal_pair().0
            })
            .collect();
        let sd = stats::sample_sd(&outputs).unwrap();
        assert!((sd - sigma_eps).abs() < 0.05 * sigma_eps, "sd = {sd}");
    }

    #[test]
    fn degenerate_poisson_replicas_are_redrawn() {
        // With n = 2, a Poisson replica is all-zero with probability e^-2;
        // over enough members some redraw must occur, and every estimate
        // stays finite.
        let dataset = Dataset::new(vec![1.0, 3.0]).unwrap();
        let base = seed(4);
        let mut total_redraws = 0u64;
        for i in 0..2000 {
            let mut channels = MemberChannels::derive(&base.child(i));
            let estimate =
                boot_member_estimate(&dataset, 0.0, ResampleMode::Poisson, &mut channels).unwrap();
            assert!(estimate.value.is_finite());
            total_redraws += estimate.poisson_redraws as u64;
        }
        assert!(total_redraws > 0, "expected some degenerate redraws");
    }

    #[test]
    fn ensemble_of_noiseless_constant_data_is_constant() {
        let mut config = ToyConfig::paper_full();
        config.sigma_x = 0.0;
        config.sigma_eps = 0.0;
        config.n = 8;
        config.m = 5;
        let mut rng = derive_rng(&seed(6).child(0));
        let dataset = generate_dataset(&config, &mut rng).unwrap();
        let (ensemble, diag) = build_ensemble(&dataset, &config, &seed(6).child(1)).unwrap();
        assert_eq!(ensemble.estimates(), &[5.0; 5]);
        assert_eq!(diag.poisson_redraws, 0);
    }

    #[test]
    fn singleton_ensemble_is_supported() {
        let mut config = ToyConfig::paper_full();
        config.n = 16;
        config.m = 1;
        let mut rng = derive_rng(&seed(8).child(0));
        let dataset = generate_dataset(&config, &mut rng).unwrap();
        let (ensemble, _) = build_ensemble(&dataset, &config, &seed(8).child(1)).unwrap();
        assert_eq!(ensemble.len(), 1);
    }

    #[test]
    fn merge_modes_basic_arithmetic() {
        let ensemble = Ensemble::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(merge(&ensemble, MergeMode::Arithmetic).unwrap(), 2.0);
        let ensemble = Ensemble::new(vec![1.0, 4.0]).unwrap();
        let geo = merge(&ensemble, MergeMode::Geometric).unwrap();
        assert!((geo - 2.0).abs() < 1e-12);
        let singleton = Ensemble::new(vec![7.5]).unwrap();
        assert_eq!(merge(&singleton, MergeMode::Arithmetic).unwrap(), 7.5);
    }

    #[test]
    fn geometric_merge_rejects_non_positive_members() {
        let ensemble = Ensemble::new(vec![1.0, -2.0]).unwrap();
        assert!(matches!(
            merge(&ensemble, MergeMode::Geometric),
            Err(Error::NonPositiveEstimate)
        ));
        let mut rng = derive_rng(&seed(1));
        assert!(matches!(
            double_bootstrap(&ensemble, 10, MergeMode::Geometric, &mut rng),
            Err(Error::NonPositiveEstimate)
        ));
    }

    #[test]
    fn double_bootstrap_of_singleton_is_identity() {
        let ensemble = Ensemble::new(vec![2.5]).unwrap();
        let mut rng = derive_rng(&seed(3));
        let merged = double_bootstrap(&ensemble, 5, MergeMode::Arithmetic, &mut rng).unwrap();
        assert_eq!(merged, vec![2.5; 5]);
        assert_eq!(delta_boot_boot(&merged, None).unwrap(), 0.0);
    }

    #[test]
    fn double_bootstrap_of_identical_members_is_constant() {
        let ensemble = Ensemble::new(vec![1.5; 12]).unwrap();
        let mut rng = derive_rng(&seed(3));
        let merged = double_bootstrap(&ensemble, 64, MergeMode::Arithmetic, &mut rng).unwrap();
        assert!(merged.iter().all(|&v| v == 1.5));
    }

    #[test]
    fn double_bootstrap_pair_matches_enumeration() {
        // Ensemble [0, 2] with m = 2: re-merged means are 0, 1, 2 with
        // probabilities 1/4, 1/2, 1/4.
        let ensemble = Ensemble::new(vec![0.0, 2.0]).unwrap();
        let mut rng = derive_rng(&seed(21).child(0));
        let trials = 100_000u64;
        let merged = double_bootstrap(&ensemble, trials, MergeMode::Arithmetic, &mut rng).unwrap();
        let mut occurrences = [0u64; 3];
        for v in merged {
            match v {
                v if v == 0.0 => occurrences[0] += 1,
                v if v == 1.0 => occurrences[1] += 1,
                v if v == 2.0 => occurrences[2] += 1,
                other => panic!("impossible merge {other}"),
            }
        }
        for (&count, &p) in occurrences.iter().zip([0.25, 0.5, 0.25].iter()) {
            let sigma = (p * (1.0 - p) * trials as f64).sqrt();
            assert!(
                (count as f64 - p * trials as f64).abs() < 3.0 * sigma,
                "occurrences {occurrences:?}"
            );
        }
    }

    #[test]
    fn delta_boot_boot_simple_values() {
        assert_eq!(delta_boot_boot(&[4.0; 10], None).unwrap(), 0.0);
        let spread = delta_boot_boot(&[0.0, 2.0], None).unwrap();
        assert!((spread - core::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(matches!(
            delta_boot_boot(&[1.0], None),
            Err(Error::TooFewValues)
        ));
    }

    #[test]
    fn delta_boot_boot_bias_correction_rescales() {
        let raw = delta_boot_boot(&[0.0, 2.0], None).unwrap();
        let corrected = delta_boot_boot(&[0.0, 2.0], Some(4)).unwrap();
        assert!((corrected - raw * (4.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!(delta_boot_boot(&[0.0, 2.0], Some(1)).is_err());
    }

    #[test]
    fn delta_stderr_simple_values() {
        let flat = Ensemble::new(vec![3.0, 3.0]).unwrap();
        assert_eq!(delta_stderr_formula(&flat).unwrap(), 0.0);
        let pair = Ensemble::new(vec![0.0, 2.0]).unwrap();
        assert!((delta_stderr_formula(&pair).unwrap() - 1.0).abs() < 1e-15);
        let singleton = Ensemble::new(vec![1.0]).unwrap();
        assert!(matches!(
            delta_stderr_formula(&singleton),
            Err(Error::TooFewValues)
        ));
    }

    #[test]
    fn pipeline_is_deterministic() {
        let config = ToyConfig::desk_reduced();
        let run = |master: u64| {
            let base = SeedSpec::new(master);
            let mut dataset_rng = derive_rng(&base.child(0));
            let dataset = generate_dataset(&config, &mut dataset_rng).unwrap();
            let (ensemble, _) = build_ensemble(&dataset, &config, &base.child(1)).unwrap();
            let mut dboot_rng = derive_rng(&base.child(2));
            let merged =
                double_bootstrap(&ensemble, config.k, config.merge_mode, &mut dboot_rng).unwrap();
            (
                merge(&ensemble, config.merge_mode).unwrap(),
                delta_boot_boot(&merged, None).unwrap(),
                delta_stderr_formula(&ensemble).unwrap(),
            )
        };
        let a = run(505);
        let b = run(505);
        assert_eq!(a, b);
        let c = run(506);
        assert_ne!(a, c);
    }
}
