//! Bicomplex linear algebra through the idempotent calculus.
//!
//! The ring of bicomplex numbers splits along the idempotents
//! `e1 = (1+k)/2`, `e2 = (1-k)/2` into two copies of the complex plane, and
//! every object built on top of it splits the same way: vectors, inner
//! products, operators, spectra. This crate follows that split end to end:
//!
//! * [`scalar`] — bicomplex and hyperbolic arithmetic, the three
//!   conjugations, the idempotent split/join, zero-divisor classification;
//! * [`vector`] — finite-dimensional module vectors with the bicomplex inner
//!   product and the hyperbolic/real norm pair;
//! * [`operator`] — dense bicomplex matrices, adjoints, and the spectral
//!   decomposition `U T U* = diag(M)` of self-adjoint operators into
//!   hyperbolic eigenvalues;
//! * [`cyclic`] — Krylov spans, cyclic-vector detection, and the
//!   decomposition into orthogonal invariant cyclic blocks;
//! * [`measure`] — atomic spectral measures of cyclic vectors, the unitary
//!   onto L^2 of the measure, and a quadrature-discretized bicomplex
//!   L^2[a,b] with multiplication operators;
//! * [`cli`] — the JSON file formats and reports behind the `bcla` binary.
//!
//! The numeric scalar is generic over [`num_traits::Float`]; the `*64`
//! aliases below fix `f64`, which all default tolerances are calibrated for.

pub mod cli;
pub mod cplx;
pub mod cyclic;
pub mod eig;
pub mod error;
pub mod measure;
pub mod operator;
pub mod scalar;
pub mod vector;

pub use error::{Error, Result};

pub use cyclic::{cyclic_direct_sum, find_cyclic_vector, is_cyclic, krylov_matrix};
pub use eig::hermitian_eig;
pub use measure::{cyclic_measure, unitary_to_l2};
pub use operator::spectral_decompose;
pub use scalar::{Bicomplex, Hyperbolic, HyperbolicOrder, IdempotentPair};
pub use vector::{orthonormalize_componentwise, BCVector, ComponentVector};

pub type Bicomplex64 = scalar::Bicomplex<f64>;
pub type Bicomplex32 = scalar::Bicomplex<f32>;
pub type Hyperbolic64 = scalar::Hyperbolic<f64>;
pub type Hyperbolic32 = scalar::Hyperbolic<f32>;
pub type BCVector64 = vector::BCVector<f64>;
pub type BCMatrix64 = operator::BCMatrix<f64>;
pub type SpectralDecomposition64 = operator::SpectralDecomposition<f64>;
pub type AtomicMeasurePair64 = measure::AtomicMeasurePair<f64>;
pub type BCFunctionSamples64 = measure::BCFunctionSamples<f64>;
