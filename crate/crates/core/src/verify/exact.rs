//! Exact rational arithmetic on `ℂ⊗ℍ` viewed as an 8-dimensional real
//! algebra with basis `1, î, ĵ, k̂, i, iî, iĵ, ik̂`.
//!
//! The product here goes through a real structure-constant table derived
//! from the unit relations, not through complex arithmetic, so it can serve
//! as an independent check on [`BiQuat`]'s multiplication.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::biquat::{BiQuat, Conjugation};

/// Exact complex rational.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactScalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn zero() -> Self {
        ExactScalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::from_ints(1, 0)
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        ExactScalar::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn real(re: BigRational) -> Self {
        ExactScalar::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactScalar::new(self.re.clone(), -self.im.clone())
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, r: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.re + r.re, self.im + r.im)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, r: ExactScalar) -> ExactScalar {
        ExactScalar::new(self.re - r.re, self.im - r.im)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.re, -self.im)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, r: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.re * &r.re - &self.im * &r.im, &self.re * &r.im + &self.im * &r.re)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, r: ExactScalar) -> ExactScalar {
        &self * &r
    }
}

fn fmt_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(f, &self.re),
            (true, false) => {
                fmt_rational(f, &self.im)?;
                f.write_str("i")
            }
            (false, false) => {
                fmt_rational(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                fmt_rational(f, &self.im.abs())?;
                f.write_str("i")
            }
        }
    }
}

/// Biquaternion with exact rational coefficients, stored as 8 reals in
/// basis order `1, î, ĵ, k̂, i, iî, iĵ, ik̂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactBiQuat {
    pub coords: [BigRational; 8],
}

impl Default for ExactBiQuat {
    fn default() -> Self {
        ExactBiQuat::zero()
    }
}

impl ExactBiQuat {
    pub fn zero() -> Self {
        ExactBiQuat {
            coords: core::array::from_fn(|_| BigRational::zero()),
        }
    }

    /// Basis element `k` of the 8-dimensional real algebra.
    pub fn basis(k: usize) -> Self {
        let mut q = ExactBiQuat::zero();
        q.coords[k] = BigRational::one();
        q
    }

    pub fn from_coeffs(c: [ExactScalar; 4]) -> Self {
        let mut q = ExactBiQuat::zero();
        for (k, s) in c.into_iter().enumerate() {
            q.coords[k] = s.re;
            q.coords[k + 4] = s.im;
        }
        q
    }

    /// Gaussian-integer coefficients `(re, im)`.
    pub fn from_ints(c: [(i64, i64); 4]) -> Self {
        ExactBiQuat::from_coeffs(c.map(|(r, i)| ExactScalar::from_ints(r, i)))
    }

    /// Complex coefficient of unit `k` (0-based: `1, î, ĵ, k̂`).
    pub fn coeff(&self, k: usize) -> ExactScalar {
        ExactScalar::new(self.coords[k].clone(), self.coords[k + 4].clone())
    }

    pub fn coeffs(&self) -> [ExactScalar; 4] {
        core::array::from_fn(|k| self.coeff(k))
    }

    /// Exact conversion of a finite float biquaternion; `None` for
    /// non-finite coefficients.
    pub fn from_biquat(q: BiQuat) -> Option<Self> {
        let mut out = ExactBiQuat::zero();
        for k in 0..4 {
            out.coords[k] = BigRational::from_float(q.re()[k])?;
            out.coords[k + 4] = BigRational::from_float(q.im()[k])?;
        }
        Some(out)
    }

    /// Nearest-float conversion.
    pub fn to_biquat(&self) -> BiQuat {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        BiQuat::from_parts(
            core::array::from_fn(|k| f(&self.coords[k])),
            core::array::from_fn(|k| f(&self.coords[k + 4])),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        ExactBiQuat {
            coords: core::array::from_fn(|k| &self.coords[k] * s),
        }
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        let mut out = self.clone();
        let (neg_imag, neg_units) = match kind {
            Conjugation::Complex => (true, false),
            Conjugation::Quaternion => (false, true),
            Conjugation::Hermitian => (true, true),
        };
        for (k, c) in out.coords.iter_mut().enumerate() {
            let is_imag = k >= 4;
            let is_unit = k % 4 != 0;
            if (neg_imag && is_imag) != (neg_units && is_unit) {
                *c = -c.clone();
            }
        }
        out
    }

    /// 1-based unit indices where `self` and `other` differ.
    pub fn differing_components(&self, other: &ExactBiQuat) -> Vec<usize> {
        (0..4)
            .filter(|&k| self.coeff(k) != other.coeff(k))
            .map(|k| k + 1)
            .collect()
    }
}

impl fmt::Display for ExactBiQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for k in 0..4 {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.coeff(k))?;
        }
        f.write_str(")")
    }
}

impl Add for &ExactBiQuat {
    type Output = ExactBiQuat;
    fn add(self, r: &ExactBiQuat) -> ExactBiQuat {
        ExactBiQuat {
            coords: core::array::from_fn(|k| &self.coords[k] + &r.coords[k]),
        }
    }
}

impl Sub for &ExactBiQuat {
    type Output = ExactBiQuat;
    fn sub(self, r: &ExactBiQuat) -> ExactBiQuat {
        ExactBiQuat {
            coords: core::array::from_fn(|k| &self.coords[k] - &r.coords[k]),
        }
    }
}

impl Mul for &ExactBiQuat {
    type Output = ExactBiQuat;
    fn mul(self, r: &ExactBiQuat) -> ExactBiQuat {
        oracle_mul(self, r)
    }
}

/// Product of two quaternion units (0 = 1, 1 = î, 2 = ĵ, 3 = k̂) as
/// `(sign, unit)`, from `î² = ĵ² = k̂² = −1`, `îĵ = k̂`, `ĵk̂ = î`, `k̂î = ĵ`
/// and anticommutation of distinct imaginary units.
const fn unit_product(a: usize, b: usize) -> (i8, usize) {
    match (a, b) {
        (0, b) => (1, b),
        (a, 0) => (1, a),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

/// `e_a e_b = sign · e_c` over the 8-element real basis; index `4m + u`
/// stands for `iᵐ` times unit `u`.
pub const STRUCTURE_CONSTANTS: [[(i8, usize); 8]; 8] = {
    let mut table = [[(0i8, 0usize); 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            let (s, u) = unit_product(a % 4, b % 4);
            let imag = a / 4 + b / 4;
            // i² = −1
            table[a][b] = match imag {
                0 => (s, u),
                1 => (s, u + 4),
                _ => (-s, u),
            };
            b += 1;
        }
        a += 1;
    }
    table
};

/// Integer numerators over the least common denominator.
fn over_common_denominator(c: &[BigRational; 8]) -> ([BigInt; 8], BigInt) {
    let d = c.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    (core::array::from_fn(|k| c[k].numer() * (&d / c[k].denom())), d)
}

/// Exact product through [`STRUCTURE_CONSTANTS`].
pub fn oracle_mul(p: &ExactBiQuat, q: &ExactBiQuat) -> ExactBiQuat {
    let (pn, pd) = over_common_denominator(&p.coords);
    let (qn, qd) = over_common_denominator(&q.coords);
    let mut acc: [BigInt; 8] = core::array::from_fn(|_| BigInt::zero());
    for (a, pa) in pn.iter().enumerate() {
        if pa.is_zero() {
            continue;
        }
        for (b, qb) in qn.iter().enumerate() {
            if qb.is_zero() {
                continue;
            }
            let (s, c) = STRUCTURE_CONSTANTS[a][b];
            let term = pa * qb;
            if s > 0 {
                acc[c] += term;
            } else {
                acc[c] -= term;
            }
        }
    }
    let d = pd * qd;
    let [c0, c1, c2, c3, c4, c5, c6, c7] = acc;
    ExactBiQuat {
        coords: [c0, c1, c2, c3, c4, c5, c6, c7].map(|n| BigRational::new(n, d.clone())),
    }
}

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders an exact biquaternion for reports.
pub fn render(q: &ExactBiQuat) -> String {
    alloc::format!("{q}")
}
