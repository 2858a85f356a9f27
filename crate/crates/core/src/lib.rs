//! Weakly zero-divisor graphs of the rings Z_n.
//!
//! The graph has the nonzero zero-divisors of Z_n as vertices, with `x ~ y`
//! when some nonzero `w ∈ ann(x)`, `z ∈ ann(y)` satisfy `wz = 0`. This crate
//! builds it from the ring definition ([`ring_oracle`]) and from divisor
//! classes ([`structure`]), then computes its Sombor index
//! ([`sombor_index`]), Sombor spectrum and energy ([`spectral`]), and checks
//! printed closed forms against the computed values ([`audit`]).
//!
//! Floating-point code is generic over [`scalar::Real`] (`f32` or `f64`);
//! the `*64` aliases below fix the scalar to `f64`.

pub mod analysis;
pub mod audit;
pub mod error;
pub mod numfmt;
pub mod numtheory;
pub mod ring_oracle;
pub mod scalar;
pub mod sombor_index;
pub mod spectral;
pub mod structure;

pub use error::{Error, Result};
pub use scalar::Real;

pub type SymMatrix64 = spectral::SymMatrix<f64>;
pub type Spectrum64 = spectral::Spectrum<f64>;
pub type QuotientMatrix64 = spectral::QuotientMatrix<f64>;
pub type EnergyReport64 = spectral::EnergyReport<f64>;
pub type IndexReport64 = sombor_index::IndexReport<f64>;

pub type SymMatrix32 = spectral::SymMatrix<f32>;
pub type Spectrum32 = spectral::Spectrum<f32>;
