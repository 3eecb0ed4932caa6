//! Rotation maps built from quaternion products.
//!
//! For a unit `q = cos θ + q̂ sin θ`, left multiplication `x ↦ qx` rotates
//! the planes `(1, q̂)` and `(v̂, ŵ)` by θ; right multiplication rotates
//! `(1, q̂)` by θ and `(v̂, ŵ)` by −θ. The sandwich `qxq⁻¹` fixes `(1, q̂)`
//! and rotates `(v̂, ŵ)` by 2θ.

use num_complex::Complex64;

use crate::biquat::{BiQuat, Conjugation};
use crate::error::{Error, Result};
use crate::math;
use crate::quat::Quat;
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Side {
    Left,
    Right,
}

/// Right-handed orthonormal set of pure quaternions with `q̂ v̂ = ŵ`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Triad {
    pub qhat: Quat,
    pub vhat: Quat,
    pub what: Quat,
}

/// `qx` (left) or `xq` (right) for unit `q`.
pub fn rotate_onesided(q: Quat, x: Quat, side: Side) -> Result<Quat> {
    q.require_unit(DEFAULT_TOL)?;
    Ok(match side {
        Side::Left => q * x,
        Side::Right => x * q,
    })
}

/// Completes a pure unit quaternion to a right-handed triad.
///
/// `v̂` is the coordinate axis least aligned with `q̂` (first one on ties),
/// orthogonalized against `q̂`; `ŵ = q̂ v̂`.
pub fn make_triad(qhat: Quat) -> Result<Triad> {
    if math::abs(qhat.scalar()) > DEFAULT_TOL {
        return Err(Error::NotPure(qhat.scalar()));
    }
    qhat.require_unit(DEFAULT_TOL)?;
    let q = qhat.vector();
    let mut axis = 0;
    for k in 1..3 {
        if math::abs(q[k]) < math::abs(q[axis]) {
            axis = k;
        }
    }
    let mut v = [0.0; 3];
    v[axis] = 1.0;
    let d = q[axis];
    for k in 0..3 {
        v[k] -= d * q[k];
    }
    let len = math::hypot3(v);
    let vhat = Quat::pure([v[0] / len, v[1] / len, v[2] / len]);
    let qhat = Quat::pure(q);
    Ok(Triad {
        qhat,
        vhat,
        what: qhat * vhat,
    })
}

impl Triad {
    /// Orthonormality and handedness within `tol`.
    pub fn is_valid(&self, tol: f64) -> bool {
        let units = [self.qhat, self.vhat, self.what];
        let unit = units
            .iter()
            .all(|u| math::abs(u.norm() - 1.0) <= tol && math::abs(u.scalar()) <= tol);
        let orth = self.qhat.is_perpendicular(self.vhat, tol)
            && self.qhat.is_perpendicular(self.what, tol)
            && self.vhat.is_perpendicular(self.what, tol);
        let diff = self.qhat * self.vhat - self.what;
        unit && orth && diff.to_array().iter().all(|d| math::abs(*d) <= tol)
    }
}

/// `φ(x) = q x q⁻¹` for unit `q`.
pub fn conjugate_rotation(q: Quat, x: Quat) -> Result<Quat> {
    q.require_unit(DEFAULT_TOL)?;
    Ok(q * x * q.inverse()?)
}

/// Rotates a 3-vector by `q x q⁻¹` on the pure quaternion `(0, v)`.
pub fn rotate_vec3(q: Quat, v: [f64; 3]) -> Result<[f64; 3]> {
    Ok(conjugate_rotation(q, Quat::pure(v))?.vector())
}

fn require_unit_h(q: BiQuat) -> Result<()> {
    let n = q.norm_h();
    if math::abs(n - 1.0) > DEFAULT_TOL {
        return Err(Error::NotUnit(n));
    }
    Ok(())
}

/// `q q̄ = 1` within tolerance.
fn require_unit_q(q: BiQuat) -> Result<()> {
    let n = q * q.conjugate(Conjugation::Quaternion);
    if (n - BiQuat::ONE).max_abs() > DEFAULT_TOL {
        return Err(Error::NotUnit(n.c1.norm()));
    }
    Ok(())
}

/// `ψ(w) = q w q̄` for real unit `q`.
pub fn psi_rotation(q: BiQuat, w: BiQuat) -> Result<BiQuat> {
    if q.to_real_quat(DEFAULT_TOL).is_none() {
        return Err(Error::NotReal);
    }
    require_unit_h(q)?;
    Ok(q * w * q.conjugate(Conjugation::Quaternion))
}

/// `q† x q` for `q q̄ = 1`. Preserves the interval `x x̄`.
pub fn lorentz(q: BiQuat, x: BiQuat) -> Result<BiQuat> {
    require_unit_q(q)?;
    Ok(q.conjugate(Conjugation::Hermitian) * x * q)
}

/// `μ(x) = q̄ x q` for `q q̄ = 1`.
pub fn mu_rotation(q: BiQuat, x: BiQuat) -> Result<BiQuat> {
    require_unit_q(q)?;
    Ok(q.conjugate(Conjugation::Quaternion) * x * q)
}

/// `x x̄`, a complex scalar for every biquaternion.
pub fn interval(x: BiQuat) -> Complex64 {
    (x * x.conjugate(Conjugation::Quaternion)).c1
}
