//! Complexified quaternions `ℂ⊗ℍ`: four complex coefficients over
//! `{1, î, ĵ, k̂}`. The imaginary unit `i` commutes with `î, ĵ, k̂`.
//!
//! This is a non-division algebra. Null elements (`q q̄ = 0`, `q ≠ 0`) are
//! ordinary values here; only [`BiQuat::inverse_h`] and [`BiQuat::polar_c`]
//! reject them.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;
use crate::quat::Quat;
use crate::DEFAULT_TOL;

/// Complex coefficient type.
pub type ComplexScalar = Complex64;

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);
const CI: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BiQuat {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
    pub c4: Complex64,
}

/// Which of the three involutions of `ℂ⊗ℍ` to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Conjugation {
    /// `q*`: `i ↦ −i`, units fixed.
    Complex,
    /// `q̄`: units negated, `i` fixed.
    Quaternion,
    /// `q†`: both.
    Hermitian,
}

/// `q = magnitude · (cos z + axis · sin z)` with complex angle `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarFormC {
    /// Principal square root of `q q̄`.
    pub magnitude: Complex64,
    /// Pure, `axis² = −1`.
    pub axis: BiQuat,
    pub angle: Complex64,
    /// Set when the vector part vanished and `axis` is the `k̂` placeholder.
    pub degenerate_axis: bool,
}

impl BiQuat {
    pub const ZERO: BiQuat = BiQuat::new(C0, C0, C0, C0);
    pub const ONE: BiQuat = BiQuat::new(C1, C0, C0, C0);
    /// The central imaginary unit `i`.
    pub const IMAG: BiQuat = BiQuat::new(CI, C0, C0, C0);
    /// `σₓ = iî`.
    pub const SIGMA_X: BiQuat = BiQuat::new(C0, CI, C0, C0);
    /// `σᵧ = iĵ`.
    pub const SIGMA_Y: BiQuat = BiQuat::new(C0, C0, CI, C0);
    /// `σ_z = ik̂`.
    pub const SIGMA_Z: BiQuat = BiQuat::new(C0, C0, C0, CI);

    pub const fn new(c1: Complex64, c2: Complex64, c3: Complex64, c4: Complex64) -> Self {
        BiQuat { c1, c2, c3, c4 }
    }

    pub const fn from_array(c: [Complex64; 4]) -> Self {
        BiQuat::new(c[0], c[1], c[2], c[3])
    }

    /// Build from separate real and imaginary coefficient arrays.
    pub fn from_parts(re: [f64; 4], im: [f64; 4]) -> Self {
        BiQuat::new(
            Complex64::new(re[0], im[0]),
            Complex64::new(re[1], im[1]),
            Complex64::new(re[2], im[2]),
            Complex64::new(re[3], im[3]),
        )
    }

    pub const fn to_array(self) -> [Complex64; 4] {
        [self.c1, self.c2, self.c3, self.c4]
    }

    pub fn re(self) -> [f64; 4] {
        self.to_array().map(|c| c.re)
    }

    pub fn im(self) -> [f64; 4] {
        self.to_array().map(|c| c.im)
    }

    /// `q₁ + i q₂` with `q₁, q₂ ∈ ℍ`.
    pub fn from_real_imag(real: Quat, imag: Quat) -> Self {
        BiQuat::from_parts(real.to_array(), imag.to_array())
    }

    /// The real quaternion when every imaginary part is within `tol` of zero.
    pub fn to_real_quat(self, tol: f64) -> Option<Quat> {
        if self.im().iter().all(|x| math::abs(*x) <= tol) {
            Some(Quat::from_array(self.re()))
        } else {
            None
        }
    }

    /// `S(q)`.
    pub const fn scalar(self) -> Complex64 {
        self.c1
    }

    /// `V(q)`.
    pub const fn vector(self) -> [Complex64; 3] {
        [self.c2, self.c3, self.c4]
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn scale(self, s: Complex64) -> Self {
        BiQuat::from_array(self.to_array().map(|c| c * s))
    }

    pub fn map(self, f: impl Fn(Complex64) -> Complex64) -> Self {
        BiQuat::from_array(self.to_array().map(f))
    }

    fn bmul(self, rhs: BiQuat) -> BiQuat {
        let (a1, b1, c1, d1) = (self.c1, self.c2, self.c3, self.c4);
        let (a2, b2, c2, d2) = (rhs.c1, rhs.c2, rhs.c3, rhs.c4);
        BiQuat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn conjugate(self, kind: Conjugation) -> BiQuat {
        match kind {
            Conjugation::Complex => self.map(|c| c.conj()),
            Conjugation::Quaternion => BiQuat::new(self.c1, -self.c2, -self.c3, -self.c4),
            Conjugation::Hermitian => BiQuat::new(self.c1.conj(), -self.c2.conj(), -self.c3.conj(), -self.c4.conj()),
        }
    }

    /// Hermitian inner product `⟨p|q⟩ = S(p q†) = Σ pₖ·conj(qₖ)`.
    pub fn inner_h(self, other: BiQuat) -> Complex64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(p, q)| p * q.conj())
            .sum()
    }

    /// Quaternionic inner product `S(p q̄) = Σ pₖ qₖ`.
    pub fn inner_q(self, other: BiQuat) -> Complex64 {
        self.to_array().iter().zip(other.to_array()).map(|(p, q)| p * q).sum()
    }

    /// Hermitian squared norm `S(p p†) = Σ |pₖ|²`.
    pub fn norm_h(self) -> f64 {
        self.to_array().iter().map(|c| c.norm_sqr()).sum()
    }

    /// `½(p p† + p* p̄)`, the symmetrized norm element. Its scalar part
    /// equals [`BiQuat::norm_h`].
    pub fn norm_h_symmetrized(self) -> BiQuat {
        let a = self * self.conjugate(Conjugation::Hermitian);
        let b = self.conjugate(Conjugation::Complex) * self.conjugate(Conjugation::Quaternion);
        (a + b).scale(Complex64::new(0.5, 0.0))
    }

    /// `p⁻¹ = p† / N_p`, valid when `p* = ±p`.
    pub fn inverse_h(self) -> Result<BiQuat> {
        self.inverse_h_with_tol(DEFAULT_TOL)
    }

    pub fn inverse_h_with_tol(self, tol: f64) -> Result<BiQuat> {
        let cc = self.conjugate(Conjugation::Complex);
        let real = (cc - self).max_abs() <= tol;
        let imaginary = (cc + self).max_abs() <= tol;
        let n = self.norm_h();
        if n == 0.0 {
            return Err(Error::NonInvertible);
        }
        if !real && !imaginary {
            return Err(Error::InverseFormulaInapplicable);
        }
        Ok(self
            .conjugate(Conjugation::Hermitian)
            .scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Largest coefficient modulus.
    pub fn max_abs(self) -> f64 {
        self.to_array().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Complex polar form. Rejects null biquaternions (`q q̄ = 0`) and
    /// biquaternions whose vector part is a nonzero null vector, since no
    /// axis with `axis² = −1` exists for them.
    pub fn polar_c(self) -> Result<PolarFormC> {
        self.polar_c_with_tol(DEFAULT_TOL)
    }

    pub fn polar_c_with_tol(self, tol: f64) -> Result<PolarFormC> {
        let n = self.inner_q(self);
        if n.norm() <= tol {
            return Err(Error::NoPolarForm("null biquaternion (q q̄ = 0)"));
        }
        let magnitude = n.sqrt();
        let v = self.vector();
        let vlen = v.iter().map(|c| c.norm_sqr()).sum::<f64>();
        let cos_z = self.c1 / magnitude;
        if math::sqrt(vlen) <= tol {
            // e^{iz} = cos z, which is ±1 up to rounding.
            let angle = if cos_z.re >= 0.0 {
                C0
            } else {
                Complex64::new(core::f64::consts::PI, 0.0)
            };
            return Ok(PolarFormC {
                magnitude,
                axis: BiQuat::new(C0, C0, C0, C1),
                angle,
                degenerate_axis: true,
            });
        }
        let vv: Complex64 = v.iter().map(|c| c * c).sum();
        if vv.norm() <= tol {
            return Err(Error::NoPolarForm("vector part is a null vector"));
        }
        let w = vv.sqrt();
        let sin_z = w / magnitude;
        let axis = BiQuat::new(C0, v[0] / w, v[1] / w, v[2] / w);
        // e^{iz} = cos z + i sin z
        let angle = -CI * (cos_z + CI * sin_z).ln();
        Ok(PolarFormC {
            magnitude,
            axis,
            angle,
            degenerate_axis: false,
        })
    }

    /// True when `V(q) = 0` within `tol`, i.e. `q` is a complex number and
    /// commutes with every element.
    pub fn is_central_with_tol(self, tol: f64) -> bool {
        self.vector().iter().all(|c| c.norm() <= tol)
    }

    pub fn is_central(self) -> bool {
        self.is_central_with_tol(DEFAULT_TOL)
    }
}

impl PolarFormC {
    /// `magnitude · (cos z + axis · sin z)`.
    pub fn to_biquat(&self) -> BiQuat {
        let c = self.angle.cos();
        let s = self.angle.sin();
        let unit = BiQuat::ONE.scale(c) + self.axis.scale(s);
        unit.scale(self.magnitude)
    }
}

impl Add for BiQuat {
    type Output = BiQuat;
    fn add(self, r: BiQuat) -> BiQuat {
        BiQuat::new(self.c1 + r.c1, self.c2 + r.c2, self.c3 + r.c3, self.c4 + r.c4)
    }
}

impl Sub for BiQuat {
    type Output = BiQuat;
    fn sub(self, r: BiQuat) -> BiQuat {
        BiQuat::new(self.c1 - r.c1, self.c2 - r.c2, self.c3 - r.c3, self.c4 - r.c4)
    }
}

impl Neg for BiQuat {
    type Output = BiQuat;
    fn neg(self) -> BiQuat {
        self.map(|c| -c)
    }
}

impl Mul for BiQuat {
    type Output = BiQuat;
    fn mul(self, r: BiQuat) -> BiQuat {
        self.bmul(r)
    }
}

impl Mul<Complex64> for BiQuat {
    type Output = BiQuat;
    fn mul(self, s: Complex64) -> BiQuat {
        self.scale(s)
    }
}

impl From<Quat> for BiQuat {
    fn from(q: Quat) -> Self {
        BiQuat::from_parts(q.to_array(), [0.0; 4])
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::BiQuat;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: [f64; 4],
        im: [f64; 4],
    }

    /// `{"re": [..4], "im": [..4]}`
    impl Serialize for BiQuat {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            Parts {
                re: self.re(),
                im: self.im(),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for BiQuat {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let p = Parts::deserialize(d)?;
            let q = BiQuat::from_parts(p.re, p.im);
            if !q.is_finite() {
                return Err(D::Error::custom("non-finite coefficient"));
            }
            Ok(q)
        }
    }

    #[derive(Serialize)]
    struct PolarParts {
        magnitude: [f64; 2],
        axis: BiQuat,
        angle: [f64; 2],
        degenerate_axis: bool,
    }

    impl Serialize for super::PolarFormC {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            PolarParts {
                magnitude: [self.magnitude.re, self.magnitude.im],
                axis: self.axis,
                angle: [self.angle.re, self.angle.im],
                degenerate_axis: self.degenerate_axis,
            }
            .serialize(s)
        }
    }
}
