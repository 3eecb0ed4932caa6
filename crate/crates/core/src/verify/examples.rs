//! The three worked examples of `Λ(q) = pqp`, recomputed exactly.
//!
//! Every input coordinate is an integer multiple of `1/√2`, so with
//! `p = P/√2` and `q = Q/√2` the image is `PQP / (2√2)`. The integer
//! product `PQP` is computed through the oracle and compared against
//! `2 · N`, where `N/√2` is the published output.

use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;

use super::exact::{oracle_mul, ExactBiQuat};
use crate::biquat::BiQuat;
use crate::entangle::concurrence_unchecked;
use crate::quat::Quat;

/// Tolerance for the concurrence of each image.
pub const CONCURRENCE_TOL: f64 = 1e-12;

struct Example {
    id: u8,
    /// `p · √2`
    p: [i64; 4],
    /// `q · √2`
    q: [(i64, i64); 4],
    /// published output `· √2`
    published: [(i64, i64); 4],
}

const EXAMPLES: [Example; 3] = [
    Example {
        id: 1,
        p: [1, 0, 1, 0],
        q: [(0, 1), (0, -1), (0, 0), (0, 0)],
        published: [(0, 0), (0, -1), (0, 1), (0, 0)],
    },
    Example {
        id: 2,
        p: [0, 0, 1, 1],
        q: [(0, 1), (0, 0), (0, -1), (0, 0)],
        published: [(0, -1), (0, 0), (0, 0), (0, -1)],
    },
    Example {
        id: 3,
        p: [0, 0, 1, 1],
        q: [(0, 0), (0, 1), (0, 0), (0, 1)],
        published: [(0, 0), (0, 1), (0, -1), (0, 0)],
    },
];

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExampleReport {
    pub id: u8,
    pub p: Quat,
    pub q: BiQuat,
    pub published: BiQuat,
    pub computed: BiQuat,
    /// `PQP` as exact Gaussian integers; the image is this over `2√2`.
    pub computed_scaled: alloc::string::String,
    pub exact_match: bool,
    /// 1-based components whose modulus agrees but whose value differs.
    pub sign_mismatch_components: Vec<usize>,
    pub magnitude_match: bool,
    pub concurrence_after: f64,
}

impl ExampleReport {
    pub fn sign_discrepancy(&self) -> bool {
        !self.sign_mismatch_components.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExamplesReport {
    pub examples: Vec<ExampleReport>,
    /// Every image matches up to component signs and has concurrence 1.
    pub all_pass: bool,
}

fn scaled_to_float(c: [(i64, i64); 4], scale: f64) -> BiQuat {
    BiQuat::from_parts(c.map(|(r, _)| r as f64 * scale), c.map(|(_, i)| i as f64 * scale))
}

fn run(ex: &Example) -> ExampleReport {
    let p_exact = ExactBiQuat::from_ints(ex.p.map(|a| (a, 0)));
    let q_exact = ExactBiQuat::from_ints(ex.q);
    let pqp = oracle_mul(&oracle_mul(&p_exact, &q_exact), &p_exact);
    let expected = ExactBiQuat::from_ints(ex.published.map(|(r, i)| (2 * r, 2 * i)));

    let exact_match = pqp == expected;
    let negated = ExactBiQuat::zero();
    let negated = &negated - &expected;
    let mut sign_mismatch_components = Vec::new();
    let mut magnitude_match = true;
    for k in 0..4 {
        let (got, want, neg) = (pqp.coeff(k), expected.coeff(k), negated.coeff(k));
        if got != want {
            if got == neg {
                sign_mismatch_components.push(k + 1);
            } else {
                magnitude_match = false;
            }
        }
    }

    let computed = pqp
        .to_biquat()
        .scale(num_complex::Complex64::new(FRAC_1_SQRT_2 / 2.0, 0.0));
    ExampleReport {
        id: ex.id,
        p: Quat::from_array(ex.p.map(|a| a as f64 * FRAC_1_SQRT_2)),
        q: scaled_to_float(ex.q, FRAC_1_SQRT_2),
        published: scaled_to_float(ex.published, FRAC_1_SQRT_2),
        computed,
        computed_scaled: alloc::format!("{pqp}"),
        exact_match,
        sign_mismatch_components,
        magnitude_match,
        concurrence_after: concurrence_unchecked(computed),
    }
}

/// Recomputes the three examples.
pub fn verify_examples() -> ExamplesReport {
    let examples: Vec<ExampleReport> = EXAMPLES.iter().map(run).collect();
    let all_pass = examples
        .iter()
        .all(|e| e.magnitude_match && (e.concurrence_after - 1.0).abs() <= CONCURRENCE_TOL);
    ExamplesReport { examples, all_pass }
}

impl fmt::Display for ExamplesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.examples {
            let status = if e.exact_match {
                "exact match"
            } else if e.magnitude_match {
                "SIGN DISCREPANCY"
            } else {
                "MISMATCH"
            };
            writeln!(f, "example {}: {status}", e.id)?;
            writeln!(f, "  pqp · 2√2 = {}", e.computed_scaled)?;
            if !e.exact_match {
                writeln!(
                    f,
                    "  published image differs in component(s) {:?}",
                    e.sign_mismatch_components
                )?;
            }
            writeln!(f, "  C(pqp)    = {}", e.concurrence_after)?;
        }
        write!(
            f,
            "{}",
            if self.all_pass {
                "examples: pass"
            } else {
                "examples: FAIL"
            }
        )
    }
}
