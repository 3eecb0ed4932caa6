//! Real quaternions `a + bî + cĵ + dk̂` under the Hamilton convention
//! `îĵ = k̂`, `ĵk̂ = î`, `k̂î = ĵ`, `î² = ĵ² = k̂² = -1`.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::math;
use crate::DEFAULT_TOL;

/// A real quaternion. `c1` is the scalar part, `(c2, c3, c4)` the vector part.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quat {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

/// `q = magnitude · (cos θ + axis · sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PolarForm {
    pub magnitude: f64,
    pub axis: [f64; 3],
    /// θ in `[0, π]`.
    pub angle: f64,
    /// Set when the vector part vanished and `axis` is the `(0,0,1)` placeholder.
    pub degenerate_axis: bool,
}

impl Quat {
    pub const ZERO: Quat = Quat::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quat = Quat::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quat = Quat::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quat = Quat::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quat = Quat::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Self {
        Quat { c1, c2, c3, c4 }
    }

    pub const fn from_array(c: [f64; 4]) -> Self {
        Quat::new(c[0], c[1], c[2], c[3])
    }

    /// Pure quaternion with vector part `v`.
    pub const fn pure(v: [f64; 3]) -> Self {
        Quat::new(0.0, v[0], v[1], v[2])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.c1, self.c2, self.c3, self.c4]
    }

    /// `S(q)`.
    pub const fn scalar(self) -> f64 {
        self.c1
    }

    /// `V(q)`.
    pub const fn vector(self) -> [f64; 3] {
        [self.c2, self.c3, self.c4]
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn scale(self, s: f64) -> Self {
        Quat::new(self.c1 * s, self.c2 * s, self.c3 * s, self.c4 * s)
    }

    /// Hamilton product `self · rhs`.
    fn hamilton(self, rhs: Quat) -> Quat {
        let (a1, b1, c1, d1) = (self.c1, self.c2, self.c3, self.c4);
        let (a2, b2, c2, d2) = (rhs.c1, rhs.c2, rhs.c3, rhs.c4);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// `q̄ = S(q) − V(q)`.
    pub fn conj(self) -> Quat {
        Quat::new(self.c1, -self.c2, -self.c3, -self.c4)
    }

    /// Squared norm `N_q = q q̄`.
    pub fn norm(self) -> f64 {
        self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3 + self.c4 * self.c4
    }

    /// `√N_q`.
    pub fn magnitude(self) -> f64 {
        math::sqrt(self.norm())
    }

    /// `q⁻¹ = q̄ / N_q`.
    pub fn inverse(self) -> Result<Quat> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::NonInvertible);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// `⟨p|q⟩ = S(p q̄)`, the Euclidean dot product of the coefficients.
    pub fn inner(self, other: Quat) -> f64 {
        self.c1 * other.c1 + self.c2 * other.c2 + self.c3 * other.c3 + self.c4 * other.c4
    }

    /// `S(p q̄) = 0` within `tol`.
    pub fn is_perpendicular(self, other: Quat, tol: f64) -> bool {
        math::abs(self.inner(other)) <= tol
    }

    /// `V(p q̄) = 0` within `tol`.
    pub fn is_parallel(self, other: Quat, tol: f64) -> bool {
        math::hypot3((self * other.conj()).vector()) <= tol
    }

    /// Angle `λ ∈ [0, π]` with `cos λ = S(p q̄) / (√N_p √N_q)`.
    pub fn angle_between(self, other: Quat) -> Result<f64> {
        let denom = self.magnitude() * other.magnitude();
        if denom == 0.0 {
            return Err(Error::NonInvertible);
        }
        Ok(math::acos((self.inner(other) / denom).clamp(-1.0, 1.0)))
    }

    /// Polar form with the default degenerate-axis tolerance.
    pub fn polar(self) -> Result<PolarForm> {
        self.polar_with_tol(DEFAULT_TOL)
    }

    /// Polar form. Vector parts with length `<= tol` are treated as zero and
    /// get the `(0,0,1)` placeholder axis.
    pub fn polar_with_tol(self, tol: f64) -> Result<PolarForm> {
        let magnitude = self.magnitude();
        if magnitude == 0.0 {
            return Err(Error::NonInvertible);
        }
        let v = self.vector();
        let vlen = math::hypot3(v);
        if vlen <= tol {
            let angle = if self.c1 >= 0.0 { 0.0 } else { core::f64::consts::PI };
            return Ok(PolarForm {
                magnitude,
                axis: [0.0, 0.0, 1.0],
                angle,
                degenerate_axis: true,
            });
        }
        Ok(PolarForm {
            magnitude,
            axis: [v[0] / vlen, v[1] / vlen, v[2] / vlen],
            angle: math::atan2(vlen, self.c1),
            degenerate_axis: false,
        })
    }

    /// Inverse of [`Quat::polar`]. The axis must be a unit vector.
    pub fn from_polar(f: &PolarForm) -> Result<Quat> {
        let len = math::hypot3(f.axis);
        if math::abs(len - 1.0) > DEFAULT_TOL {
            return Err(Error::AxisNotUnit(len));
        }
        let c = f.magnitude * math::cos(f.angle);
        if f.degenerate_axis {
            return Ok(Quat::new(c, 0.0, 0.0, 0.0));
        }
        let s = f.magnitude * math::sin(f.angle);
        Ok(Quat::new(c, f.axis[0] * s, f.axis[1] * s, f.axis[2] * s))
    }

    /// Error unless `|N_q − 1| <= tol`.
    pub fn require_unit(self, tol: f64) -> Result<()> {
        let n = self.norm();
        if math::abs(n - 1.0) > tol {
            return Err(Error::NotUnit(n));
        }
        Ok(())
    }
}

impl PolarForm {
    pub fn to_quat(&self) -> Result<Quat> {
        Quat::from_polar(self)
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, r: Quat) -> Quat {
        Quat::new(self.c1 + r.c1, self.c2 + r.c2, self.c3 + r.c3, self.c4 + r.c4)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, r: Quat) -> Quat {
        Quat::new(self.c1 - r.c1, self.c2 - r.c2, self.c3 - r.c3, self.c4 - r.c4)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.c1, -self.c2, -self.c3, -self.c4)
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, r: Quat) -> Quat {
        self.hamilton(r)
    }
}

impl Mul<f64> for Quat {
    type Output = Quat;
    fn mul(self, s: f64) -> Quat {
        self.scale(s)
    }
}

impl From<[f64; 4]> for Quat {
    fn from(c: [f64; 4]) -> Self {
        Quat::from_array(c)
    }
}
