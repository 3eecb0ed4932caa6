//! Seeded random inputs shared by the verification engine and tests.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::biquat::BiQuat;
use crate::math;
use crate::quat::Quat;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `[-scale, scale)`.
pub fn uniform<R: Rng>(rng: &mut R, scale: f64) -> f64 {
    (rng.random::<f64>() * 2.0 - 1.0) * scale
}

pub fn quat<R: Rng>(rng: &mut R, scale: f64) -> Quat {
    Quat::new(
        uniform(rng, scale),
        uniform(rng, scale),
        uniform(rng, scale),
        uniform(rng, scale),
    )
}

/// Uniform on the unit 3-sphere.
pub fn unit_quat<R: Rng>(rng: &mut R) -> Quat {
    loop {
        let q = quat(rng, 1.0);
        let n = q.norm();
        if n > 1e-4 && n <= 1.0 {
            return q.scale(1.0 / math::sqrt(n));
        }
    }
}

pub fn complex<R: Rng>(rng: &mut R, scale: f64) -> Complex64 {
    Complex64::new(uniform(rng, scale), uniform(rng, scale))
}

pub fn biquat<R: Rng>(rng: &mut R, scale: f64) -> BiQuat {
    BiQuat::new(
        complex(rng, scale),
        complex(rng, scale),
        complex(rng, scale),
        complex(rng, scale),
    )
}

/// `q` with `q q̄ = 1` (the Lorentz-map precondition).
pub fn unit_q_biquat<R: Rng>(rng: &mut R) -> BiQuat {
    loop {
        let q = biquat(rng, 1.0);
        let n = q.inner_q(q);
        if n.norm() > 1e-2 {
            return q.scale(n.sqrt().inv());
        }
    }
}

/// Hermitian-normalized `ℂ⁴` state.
pub fn state<R: Rng>(rng: &mut R) -> BiQuat {
    loop {
        let q = biquat(rng, 1.0);
        let n = q.norm_h();
        if n > 1e-4 {
            return q.scale(Complex64::new(1.0 / math::sqrt(n), 0.0));
        }
    }
}

/// Normalized amplitude pair `(α, β)`.
pub fn amplitudes<R: Rng>(rng: &mut R) -> (Complex64, Complex64) {
    loop {
        let a = complex(rng, 1.0);
        let b = complex(rng, 1.0);
        let n = a.norm_sqr() + b.norm_sqr();
        if n > 1e-4 {
            let s = 1.0 / math::sqrt(n);
            return (a * s, b * s);
        }
    }
}

/// Point `(cos t, sin t)` with `t` uniform.
pub fn unit_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    let t = rng.random::<f64>() * core::f64::consts::TAU;
    (math::cos(t), math::sin(t))
}
