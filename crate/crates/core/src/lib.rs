//! Deformed isotropic Gaussian random fields on the plane: simulation and
//! recovery of the deformation from a single densely observed realization.
//!
//! A field `Y = Z ∘ f` is observed on a spacing-`1/n` grid, where `Z` is an
//! isotropic Gaussian field with a fractional local index and `f` is an
//! orientation-preserving diffeomorphism. The recovery pipeline is
//!
//! 1. kernel-smoothed second-order directional quadratic variations
//!    ([`qvar`]),
//! 2. the ellipse algebra turning three directional variations into the
//!    complex dilatation and log-scale of `f` ([`dilatation`]),
//! 3. a normalized quasiconformal map with the estimated dilatation, built
//!    from a spectral Beltrami solve and a Bergman-kernel Riemann map
//!    ([`qcmap`]),
//! 4. Bergman projection of the estimated log-derivative and path
//!    integration of its exponential ([`bergman`], [`reconstruct`]),
//! 5. alignment modulo the unidentifiable rotation and translation, error
//!    metrics, and convergence sweeps ([`harness`]).
//!
//! All samplers and estimators are deterministic functions of their seeds;
//! results are bit-identical across thread counts. The `parallel` feature
//! (default) enables rayon data parallelism; without it every kernel falls
//! back to the equivalent sequential loop.

pub mod bergman;
pub mod dilatation;
pub mod error;
pub(crate) mod exec;
pub mod harness;
pub mod io;
pub mod models;
pub mod num;
pub mod qcmap;
pub mod qvar;
pub mod reconstruct;
pub mod simulate;

pub use num_complex::Complex64;
