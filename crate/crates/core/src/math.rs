//! Float math shims.
//!
//! Transcendental functions (`ln`, `exp`, `sin`, `cos`) always go through
//! `libm` so that sampled streams are bit-identical across platforms and
//! libc versions. `sqrt` is correctly rounded by IEEE 754, so the native
//! instruction is used when `std` is available.

#[inline]
pub fn sqrt(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.sqrt()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::sqrt(x)
    }
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

/// Error function, used by test oracles for normal-coverage arithmetic.
#[inline]
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Standard normal CDF.
#[inline]
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * (1.0 + erf(x / core::f64::consts::SQRT_2))
}
