//! Compensated summation and the small set of sample statistics the
//! pipeline and studies need.
//!
//! Sums use Neumaier's variant of Kahan compensation: summing 10^6 doubles
//! naively loses precision at exactly the 10^-3 uncertainty scale the
//! studies resolve.

use crate::error::Error;
use crate::math;

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated sum of a slice.
pub fn sum(values: &[f64]) -> f64 {
    let mut acc = NeumaierSum::default();
    for &v in values {
        acc.add(v);
    }
    acc.total()
}

/// Arithmetic mean. Panics on an empty slice; public operations validate
/// their inputs before reaching this.
pub fn mean(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "mean of empty slice");
    sum(values) / values.len() as f64
}

/// Bessel-corrected sample variance (two-pass, compensated).
///
/// A constant slice yields exactly zero: the mean of many identical values
/// can round an ulp away from the value, and the resulting spurious spread
/// would break the exact-zero guarantees downstream.
pub fn sample_variance(values: &[f64]) -> Result<f64, Error> {
    if values.len() < 2 {
        return Err(Error::TooFewValues);
    }
    if values.iter().all(|&v| v == values[0]) {
        return Ok(0.0);
    }
    let center = mean(values);
    let mut acc = NeumaierSum::default();
    for &v in values {
        let d = v - center;
        acc.add(d * d);
    }
    Ok(acc.total() / (values.len() - 1) as f64)
}

/// Bessel-corrected sample standard deviation.
pub fn sample_sd(values: &[f64]) -> Result<f64, Error> {
    sample_variance(values).map(math::sqrt)
}

/// Bessel-corrected sample covariance of paired observations.
pub fn sample_covariance(xs: &[f64], ys: &[f64]) -> Result<f64, Error> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameter("paired slices must have equal length"));
    }
    if xs.len() < 2 {
        return Err(Error::TooFewValues);
    }
    let mx = mean(xs);
    let my = mean(ys);
    let mut acc = NeumaierSum::default();
    for (&x, &y) in xs.iter().zip(ys.iter()) {
        acc.add((x - mx) * (y - my));
    }
    Ok(acc.total() / (xs.len() - 1) as f64)
}

/// Pearson correlation of paired observations.
pub fn pearson_correlation(xs: &[f64], ys: &[f64]) -> Result<f64, Error> {
    let cov = sample_covariance(xs, ys)?;
    let vx = sample_variance(xs)?;
    let vy = sample_variance(ys)?;
    let denom = math::sqrt(vx * vy);
    if denom == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(cov / denom)
}

/// Standard error of the sample mean.
pub fn mean_standard_error(values: &[f64]) -> Result<f64, Error> {
    Ok(math::sqrt(sample_variance(values)? / values.len() as f64))
}

/// Standard error of the Bessel-corrected sample variance, from the
/// moment-based formula `Var[s^2] = (m4 - m2^2 (n-3)/(n-1)) / n` with
/// biased central moments `m2`, `m4`.
pub fn variance_standard_error(values: &[f64]) -> Result<f64, Error> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewValues);
    }
    let center = mean(values);
    let mut m2 = NeumaierSum::default();
    let mut m4 = NeumaierSum::default();
    for &v in values {
        let d = v - center;
        let d2 = d * d;
        m2.add(d2);
        m4.add(d2 * d2);
    }
    let nf = n as f64;
    let m2 = m2.total() / nf;
    let m4 = m4.total() / nf;
    let var_of_var = (m4 - m2 * m2 * (nf - 3.0) / (nf - 1.0)) / nf;
    Ok(math::sqrt(var_of_var.max(0.0)))
}

/// Normal-theory standard error of a sample covariance.
pub fn covariance_standard_error(xs: &[f64], ys: &[f64]) -> Result<f64, Error> {
    let vx = sample_variance(xs)?;
    let vy = sample_variance(ys)?;
    let cov = sample_covariance(xs, ys)?;
    let n = xs.len() as f64;
    Ok(math::sqrt((vx * vy + cov * cov) / n))
}

/// Standard error of an observed fraction `p` over `n` trials.
pub fn fraction_standard_error(p: f64, n: usize) -> f64 {
    math::sqrt((p * (1.0 - p) / n as f64).max(0.0))
}

/// Least-squares slope of `ln(y)` against `ln(x)`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> Result<f64, Error> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameter("paired slices must have equal length"));
    }
    if xs.len() < 2 {
        return Err(Error::TooFewValues);
    }
    if xs.iter().chain(ys.iter()).any(|&v| v <= 0.0) {
        return Err(Error::InvalidParameter(
            "log-log fit requires positive values",
        ));
    }
    let lx: alloc::vec::Vec<f64> = xs.iter().map(|&x| math::ln(x)).collect();
    let ly: alloc::vec::Vec<f64> = ys.iter().map(|&y| math::ln(y)).collect();
    let mx = mean(&lx);
    let my = mean(&ly);
    let mut num = NeumaierSum::default();
    let mut den = NeumaierSum::default();
    for (&x, &y) in lx.iter().zip(ly.iter()) {
        num.add((x - mx) * (y - my));
        den.add((x - mx) * (x - mx));
    }
    let den = den.total();
    if den == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(num.total() / den)
}
