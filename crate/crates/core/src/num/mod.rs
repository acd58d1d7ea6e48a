//! Shared numerical kernels: RNG, quadrature, special functions, FFT,
//! dense linear algebra, interpolation.

pub mod bessel;
pub mod cholesky;
pub mod fft2;
pub mod gauss;
pub mod lattice;
pub mod rng;
