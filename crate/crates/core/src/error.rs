use alloc::boxed::Box;

use crate::entangle::RestrictionReport;

/// Domain errors raised by the algebra and the entanglement map.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-invertible: zero norm")]
    NonInvertible,
    #[error("expected a unit quaternion, norm is {0}")]
    NotUnit(f64),
    #[error("axis is not a unit vector (length {0})")]
    AxisNotUnit(f64),
    #[error("expected a pure quaternion, scalar part is {0}")]
    NotPure(f64),
    #[error("expected real coefficients")]
    NotReal,
    #[error("inverse formula inapplicable: requires p* = ±p")]
    InverseFormulaInapplicable,
    #[error("no polar form: {0}")]
    NoPolarForm(&'static str),
    #[error("state not normalized: squared norm is {0}")]
    NotNormalized(f64),
    #[error("not an embedded one-particle state: {0}")]
    NotEmbeddedState(&'static str),
    #[error("restrictions violated: {}", .0.detail)]
    Rejected(Box<RestrictionReport>),
}

pub type Result<T> = core::result::Result<T, Error>;
