#![cfg_attr(not(any(feature = "std", test)), no_std)]

//! Real and complexified quaternion algebra with the rotation maps built on
//! it, plus a quaternionic map `Λ(q) = pqp` that turns an embedded
//! one-particle state into a bipartite entangled state.
//!
//! The crate is `no_std` compatible (it needs `alloc` for the verification
//! reports and the arbitrary-precision oracle). Disable the default `std`
//! feature to build without the standard library.
//!
//! Modules:
//! - [`quat`]: real quaternions, conjugation, norm, inverse, inner product,
//!   angles, polar form.
//! - [`biquat`]: complexified quaternions (`ℂ⊗ℍ`), the three conjugations,
//!   Hermitian and quaternionic inner products, complex polar form.
//! - [`rotations`]: one-sided multiplications, triads, `qxq⁻¹`, `qwq̄`,
//!   the Lorentz map `q†xq` and `q̄xq`.
//! - [`entangle`]: state embedding, concurrence, admissibility checks and
//!   the entanglement map.
//! - [`verify`]: exact rational oracle and the eight-case theorem check.

extern crate alloc;

pub mod biquat;
pub mod entangle;
pub mod error;
mod math;
pub mod quat;
pub mod rotations;
pub mod sample;
pub mod verify;

pub use biquat::{BiQuat, ComplexScalar, Conjugation, PolarFormC};
pub use entangle::{EntangleOutcome, RestrictionReport, StateAmp, Support, Variant};
pub use error::Error;
pub use quat::{PolarForm, Quat};
pub use rotations::{Side, Triad};

/// Default absolute tolerance for predicates (unit checks, support,
/// perpendicular/parallel, degenerate axes).
pub const DEFAULT_TOL: f64 = 1e-9;
