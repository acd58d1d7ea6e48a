//! Counter-based Gaussian variates.
//!
//! Every draw is a pure function of `(stream, counter)`, so samplers can be
//! evaluated in any order, from any number of threads, and still produce
//! bit-identical output. Streams are derived from a master seed through
//! [`derive_stream`], which keeps sweeps reproducible and extendable: adding
//! replicates or grid sizes never perturbs earlier draws.

use std::f64::consts::PI;

/// SplitMix64 finalizer. Full-avalanche 64-bit mixer.
#[inline]
fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Derives a child stream from `seed` and a purpose tag.
///
/// Used to split one master seed into independent streams (one per grid
/// size, per replicate, per sampler stage) without shared state.
#[inline]
pub fn derive_stream(seed: u64, tag: u64) -> u64 {
    mix(seed ^ mix(tag ^ 0x5851_f42d_4c95_7f2d))
}

#[inline]
fn uniform_bits(stream: u64, counter: u64) -> u64 {
    mix(stream ^ mix(counter))
}

/// Standard normal variate for `(stream, counter)` via Box–Muller.
///
/// Uses two derived 53-bit uniforms; the first is mapped into (0, 1] so the
/// logarithm is always finite.
#[inline]
pub fn standard_normal(stream: u64, counter: u64) -> f64 {
    let a = uniform_bits(stream, counter.wrapping_mul(2));
    let b = uniform_bits(stream, counter.wrapping_mul(2).wrapping_add(1));
    let u1 = ((a >> 11) as f64 + 1.0) * (1.0 / 9_007_199_254_740_992.0);
    let u2 = (b >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}
