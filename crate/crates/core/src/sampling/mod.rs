//! Deterministic, splittable random sampling.
//!
//! Streams are addressed, not advanced: a [`SeedSpec`] names a stream by
//! `(master_seed, stream_path)` and [`derive_rng`] turns it into a
//! generator whose output depends on nothing else. Parallel callers derive
//! disjoint child paths instead of sharing a generator, so results are
//! independent of thread count and execution order.

mod philox;

pub use philox::StreamRng;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::stats::NeumaierSum;

/// Identifier string for the stream algorithm, embedded in run manifests so
/// that reports pin the exact generator they were produced with.
pub const RNG_ALGORITHM: &str = "philox4x64-10/splitmix64-path-derivation";

const KEY0_DOMAIN: u64 = 0x243F_6A88_85A3_08D3;
const KEY1_DOMAIN: u64 = 0x1319_8A2E_0370_7344;

/// SplitMix64 finalizer; a bijective 64-bit mixer.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Address of one random stream: a master seed plus a path of indices
/// naming a derived substream (e.g. `[replication, member, channel]`).
///
/// The stream is a pure function of both fields. Distinct paths under the
/// same master seed select distinct Philox keys and therefore independent,
/// non-overlapping streams.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_path: Vec<u64>,
}

impl SeedSpec {
    /// Root stream for a master seed (empty path).
    pub fn new(master_seed: u64) -> Self {
        SeedSpec {
            master_seed,
            stream_path: Vec::new(),
        }
    }

    pub fn with_path(master_seed: u64, stream_path: impl Into<Vec<u64>>) -> Self {
        SeedSpec {
            master_seed,
            stream_path: stream_path.into(),
        }
    }

    /// The substream obtained by appending `index` to the path.
    pub fn child(&self, index: u64) -> Self {
        let mut path = Vec::with_capacity(self.stream_path.len() + 1);
        path.extend_from_slice(&self.stream_path);
        path.push(index);
        SeedSpec {
            master_seed: self.master_seed,
            stream_path: path,
        }
    }

    /// Fold the path into a 128-bit Philox key (sponge over the mixer).
    fn derive_key(&self) -> [u64; 2] {
        let mut k0 = mix64(self.master_seed ^ KEY0_DOMAIN);
        let mut k1 = mix64(self.master_seed.wrapping_add(KEY1_DOMAIN));
        for &element in &self.stream_path {
            k0 = mix64(k0 ^ mix64(element ^ KEY0_DOMAIN));
            k1 = mix64(k1 ^ mix64(element.wrapping_add(KEY1_DOMAIN)));
        }
        [k0, k1]
    }
}

/// Instantiate the stream a [`SeedSpec`] addresses.
pub fn derive_rng(spec: &SeedSpec) -> StreamRng {
    StreamRng::from_key(spec.derive_key())
}

/// How a bootstrap replica is drawn from the original sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ResampleMode {
    /// Fixed-size resampling with replacement: counts are jointly
    /// multinomial with total exactly `n`.
    Multinomial,
    /// Independent unit-mean Poisson weight perturbations: total is near
    /// `n` within Poisson fluctuations.
    Poisson,
}

/// Multiplicities of each original datapoint in one bootstrap replica.
///
/// Replicas are stored as counts rather than materialized index lists:
/// one `u32` per datapoint and a single weighted pass instead of a shuffled
/// copy of the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResampleCounts {
    counts: Vec<u32>,
    total: u64,
}

impl ResampleCounts {
    /// The identity resample: every datapoint once.
    pub fn uniform(n: usize) -> Self {
        ResampleCounts {
            counts: vec![1; n],
            total: n as u64,
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Draw `n` independent N(mean, sd^2) samples.
pub fn sample_gaussian(rng: &mut StreamRng, mean: f64, sd: f64, n: usize) -> Result<Vec<f64>, Error> {
    if !(sd >= 0.0) || !sd.is_finite() {
        return Err(Error::InvalidParameter("sd must be finite and >= 0"));
    }
    if !mean.is_finite() {
        return Err(Error::InvalidParameter("mean must be finite"));
    }
    let mut out = Vec::with_capacity(n);
    if sd == 0.0 {
        out.resize(n, mean);
        return Ok(out);
    }
    while out.len() + 2 <= n {
        let (a, b) = rng.standard_normal_pair();
        out.push(mean + sd * a);
        out.push(mean + sd * b);
    }
    if out.len() < n {
        let (a, _) = rng.standard_normal_pair();
        out.push(mean + sd * a);
    }
    Ok(out)
}

/// Draw one bootstrap replica of size `n` as per-datapoint counts.
pub fn bootstrap_counts(
    rng: &mut StreamRng,
    n: usize,
    mode: ResampleMode,
) -> Result<ResampleCounts, Error> {
    let mut replica = ResampleCounts {
        counts: vec![0; n],
        total: 0,
    };
    bootstrap_counts_into(rng, mode, &mut replica)?;
    Ok(replica)
}

/// Refill an existing counts buffer with a fresh replica (hot-loop variant;
/// draw-for-draw identical to [`bootstrap_counts`]).
pub fn bootstrap_counts_into(
    rng: &mut StreamRng,
    mode: ResampleMode,
    replica: &mut ResampleCounts,
) -> Result<(), Error> {
    let n = replica.counts.len();
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1"));
    }
    replica.counts.fill(0);
    match mode {
        ResampleMode::Multinomial => {
            let bound = n as u64;
            for _ in 0..n {
                let index = rng.next_below(bound) as usize;
                replica.counts[index] += 1;
            }
            replica.total = n as u64;
            debug_assert_eq!(
                replica.counts.iter().map(|&c| c as u64).sum::<u64>(),
                n as u64
            );
        }
        ResampleMode::Poisson => {
            let mut total = 0u64;
            for slot in replica.counts.iter_mut() {
                let count = rng.poisson_unit();
                *slot = count;
                total += count as u64;
            }
            replica.total = total;
        }
    }
    Ok(())
}

/// Weighted mean `sum(c_i * x_i) / sum(c_i)` with compensated accumulation.
///
/// In multinomial mode this equals the plain mean of the materialized
/// bootstrap sample. A zero total (possible in Poisson mode) is an explicit
/// error; the caller must redraw rather than propagate a NaN.
pub fn weighted_mean(values: &[f64], counts: &ResampleCounts) -> Result<f64, Error> {
    if values.len() != counts.counts.len() {
        return Err(Error::InvalidParameter(
            "values and counts must have equal length",
        ));
    }
    if counts.total == 0 {
        return Err(Error::DegenerateResample);
    }
    let mut sum = NeumaierSum::default();
    for (&value, &count) in values.iter().zip(counts.counts.iter()) {
        if count != 0 {
            sum.add(count as f64 * value);
        }
    }
    Ok(sum.total() / counts.total as f64)
}
