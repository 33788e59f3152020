//! Numerical toolkit for complex-valued kernel α-harmonic mappings of the unit disk.
//!
//! A mapping `u` is kernel α-harmonic when it solves the weighted Laplace
//! equation `∂_z (1-|z|²)^{-α} ∂_z̄ u = 0` on the open unit disk, for a weight
//! exponent `α > -1`. Such mappings admit two equivalent descriptions, and this
//! crate implements both together with cross-checks between them:
//!
//! * a two-sided series `u(z) = Σ_{k≥0} c_k z^k + Σ_{k≥1} c_{-k} P_{α,k}(|z|²) z̄^k`,
//!   where `P_{α,k}(x) = ∫₀¹ t^{k-1}(1-tx)^α dt` ([`specfun`], [`mapping`]);
//! * a Poisson-type integral against the complex-valued kernel
//!   `(1-|z|²)^{α+1} / ((1-z)(1-z̄)^{α+1})` ([`kernel`], [`mapping`]).
//!
//! Boundary data of unit modulus is represented in [`boundary`] (step phases,
//! trigonometric polynomials, uniform samples) with analytic Fourier
//! coefficient extraction. The [`inequalities`] module evaluates the sharp
//! Heinz-type lower bound for self-maps, Schwarz rigidity diagnostics, and the
//! coefficient bound for typically-real members; [`verify`] bundles everything
//! into a named-check report.
//!
//! All numeric code is generic over the scalar type through [`FloatScalar`]
//! (`f32` or `f64`); the `*64` aliases at the crate root fix the common case.

pub mod boundary;
mod error;
pub mod inequalities;
pub mod kernel;
pub mod mapping;
pub mod quad;
pub mod report;
mod scalar;
pub mod schema;
pub mod specfun;
pub mod spectrum;
pub mod verify;

pub use boundary::BoundaryFunction;
pub use error::{Error, Result};
pub use kernel::DiskPoint;
pub use mapping::MapEvaluation;
pub use scalar::FloatScalar;
pub use specfun::{AlphaParameter, EvalPolicy};
pub use spectrum::CoefficientSpectrum;

/// Complex scalar over `f64`.
pub type C64 = num_complex::Complex<f64>;
/// Weight exponent over `f64`.
pub type Alpha64 = AlphaParameter<f64>;
/// Evaluation policy over `f64`.
pub type Policy64 = EvalPolicy<f64>;
/// Disk point over `f64`.
pub type Point64 = DiskPoint<f64>;
/// Boundary function over `f64`.
pub type Boundary64 = BoundaryFunction<f64>;
/// Coefficient spectrum over `f64`.
pub type Spectrum64 = CoefficientSpectrum<f64>;
