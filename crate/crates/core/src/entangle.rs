//! One-particle states embedded in `ℂ⊗ℍ ≅ ℂ⁴`, the concurrence measure and
//! the entanglement map `Λ(q) = pqp`.
//!
//! `p` is a real unit quaternion and must satisfy three admissibility
//! restrictions before `Λ` is applied:
//!
//! - R1: `p` itself is not entangled (`C(p) = 0`).
//! - R2: `p` is not a basis unit (at least two nonzero coordinates), since
//!   then `Λ` is the identity or a reflection.
//! - R3: `p` shares exactly one coordinate with `q`, and its support is one
//!   of `{1,2}, {1,3}, {2,4}, {3,4}`.
//!
//! Under R1–R3 the concurrence of the image is `4|α β aᵢ aⱼ|`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::biquat::BiQuat;
use crate::error::{Error, Result};
use crate::math;
use crate::quat::Quat;
use crate::DEFAULT_TOL;

/// Where the amplitudes `(α, β)` of a one-particle state sit in `ℂ⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Variant {
    /// `(α, β, 0, 0)`
    V12,
    /// `(0, 0, α, β)`
    V34,
    /// `(α, 0, β, 0)`
    V13,
    /// `(0, α, 0, β)`
    V24,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::V12, Variant::V34, Variant::V13, Variant::V24];

    /// 1-based positions of `α` and `β`.
    pub const fn positions(self) -> (usize, usize) {
        match self {
            Variant::V12 => (1, 2),
            Variant::V34 => (3, 4),
            Variant::V13 => (1, 3),
            Variant::V24 => (2, 4),
        }
    }

    pub fn support(self) -> Support {
        let (a, b) = self.positions();
        Support::from_indices(&[a, b])
    }

    /// The two admissible `p` supports for this variant.
    pub fn p_supports(self) -> [Support; 2] {
        let s = |a, b| Support::from_indices(&[a, b]);
        match self {
            Variant::V12 | Variant::V34 => [s(1, 3), s(2, 4)],
            Variant::V13 | Variant::V24 => [s(1, 2), s(3, 4)],
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.positions();
        write!(f, "V{a}{b}")
    }
}

/// Set of 1-based coordinate positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Support(u8);

impl Support {
    pub const EMPTY: Support = Support(0);

    /// Supports of `p` that pass R1 and R3's shape condition.
    pub const ADMISSIBLE_P: [Support; 4] = [Support(0b0011), Support(0b0101), Support(0b1010), Support(0b1100)];

    /// Indices outside `1..=4` are ignored.
    pub fn from_indices(indices: &[usize]) -> Support {
        let mut bits = 0u8;
        for &k in indices {
            if (1..=4).contains(&k) {
                bits |= 1 << (k - 1);
            }
        }
        Support(bits)
    }

    pub fn contains(self, k: usize) -> bool {
        (1..=4).contains(&k) && self.0 & (1 << (k - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: Support) -> Support {
        Support(self.0 & other.0)
    }

    pub fn is_subset(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=4).filter(|&k| self.contains(k)).collect()
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, k) in self.indices().into_iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Support {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.indices())
    }
}

/// Normalized one-particle amplitudes `α|0⟩ + β|1⟩` and their embedding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateAmp {
    alpha: Complex64,
    beta: Complex64,
    variant: Variant,
}

impl StateAmp {
    pub fn new(alpha: Complex64, beta: Complex64, variant: Variant) -> Result<Self> {
        let n = alpha.norm_sqr() + beta.norm_sqr();
        if math::abs(n - 1.0) > DEFAULT_TOL {
            return Err(Error::NotNormalized(n));
        }
        Ok(StateAmp { alpha, beta, variant })
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }
}

/// Places `α, β` at the variant's positions.
pub fn embed_state(s: &StateAmp) -> BiQuat {
    let mut c = [Complex64::new(0.0, 0.0); 4];
    let (a, b) = s.variant.positions();
    c[a - 1] = s.alpha;
    c[b - 1] = s.beta;
    BiQuat::from_array(c)
}

fn require_normalized(q: BiQuat) -> Result<()> {
    let n = q.norm_h();
    if math::abs(n - 1.0) > DEFAULT_TOL {
        return Err(Error::NotNormalized(n));
    }
    Ok(())
}

/// `q / √N_q` in the Hermitian norm.
pub fn normalize(q: BiQuat) -> Result<BiQuat> {
    let n = q.norm_h();
    if n == 0.0 {
        return Err(Error::NonInvertible);
    }
    Ok(q.scale(Complex64::new(1.0 / math::sqrt(n), 0.0)))
}

/// `C = 2|q₁q₄ − q₂q₃|` without the normalization check.
pub fn concurrence_unchecked(q: BiQuat) -> f64 {
    2.0 * (q.c1 * q.c4 - q.c2 * q.c3).norm()
}

/// `C = 2|q₁q₄ − q₂q₃|` for a normalized state.
pub fn concurrence(q: BiQuat) -> Result<f64> {
    require_normalized(q)?;
    Ok(concurrence_unchecked(q))
}

/// 1-based positions of coefficients with modulus `> tol`.
pub fn support(q: BiQuat, tol: f64) -> Support {
    let idx: Vec<usize> = q
        .to_array()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > tol)
        .map(|(k, _)| k + 1)
        .collect();
    Support::from_indices(&idx)
}

/// Outcome of checking R1–R3 for a pair `(p, q)`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RestrictionReport {
    pub r1_pass: bool,
    pub r2_pass: bool,
    pub r3_pass: bool,
    pub p_support: Support,
    pub q_support: Support,
    pub concurrence_p: f64,
    pub detail: String,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.r1_pass && self.r2_pass && self.r3_pass
    }
}

impl fmt::Display for RestrictionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(
            f,
            "R1 (p not entangled):      {}  C(p) = {}",
            mark(self.r1_pass),
            self.concurrence_p
        )?;
        writeln!(
            f,
            "R2 (p not a basis unit):   {}  supp(p) = {}",
            mark(self.r2_pass),
            self.p_support
        )?;
        writeln!(
            f,
            "R3 (one shared direction): {}  supp(q) = {}",
            mark(self.r3_pass),
            self.q_support
        )?;
        write!(f, "{}", self.detail)
    }
}

pub fn check_restrictions(p: Quat, q: BiQuat) -> Result<RestrictionReport> {
    check_restrictions_with_tol(p, q, DEFAULT_TOL)
}

/// R1–R3 with `tol` used for both the support threshold and the R1
/// concurrence threshold.
pub fn check_restrictions_with_tol(p: Quat, q: BiQuat, tol: f64) -> Result<RestrictionReport> {
    p.require_unit(DEFAULT_TOL)?;
    require_normalized(q)?;
    let pb = BiQuat::from(p);
    let concurrence_p = concurrence_unchecked(pb);
    let p_support = support(pb, tol);
    let q_support = support(q, tol);
    let shared = p_support.intersection(q_support);

    let r1_pass = concurrence_p <= tol;
    let r2_pass = p_support.len() >= 2;
    let admissible = Support::ADMISSIBLE_P.contains(&p_support);
    let r3_pass = shared.len() == 1 && admissible;

    let mut reasons: Vec<String> = Vec::new();
    if !r1_pass {
        reasons.push(format!("R1: p is entangled (C(p) = {concurrence_p})"));
    }
    if !r2_pass {
        reasons.push(format!(
            "R2: p has support {p_support}; Λ would be the identity or a reflection"
        ));
    }
    if !r3_pass {
        if !admissible {
            reasons.push(format!(
                "R3: supp(p) = {p_support} is not one of {{1,2}}, {{1,3}}, {{2,4}}, {{3,4}}"
            ));
        }
        if shared.len() != 1 {
            reasons.push(format!(
                "R3: p and q share {} directions {shared}, need exactly 1",
                shared.len()
            ));
        }
    }
    let detail = if reasons.is_empty() {
        format!("admissible: p and q share direction {shared}")
    } else {
        reasons.join("; ")
    };

    Ok(RestrictionReport {
        r1_pass,
        r2_pass,
        r3_pass,
        p_support,
        q_support,
        concurrence_p,
        detail,
    })
}

/// `Λ(q) = p q p` for a real unit `p`.
pub fn lambda_map(p: Quat, q: BiQuat) -> Result<BiQuat> {
    p.require_unit(DEFAULT_TOL)?;
    let p = BiQuat::from(p);
    Ok(p * q * p)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntangleOutcome {
    pub result: BiQuat,
    pub concurrence_before: f64,
    pub concurrence_after: f64,
    pub report: RestrictionReport,
    /// `α = 0` or `β = 0`: admissible but the image stays separable.
    pub degenerate_amplitudes: bool,
}

/// Checks R1–R3 and applies `Λ`. A failed check is returned as
/// [`Error::Rejected`] carrying the full report.
pub fn entangle(p: Quat, q: BiQuat) -> Result<EntangleOutcome> {
    let report = check_restrictions(p, q)?;
    if !report.passed() {
        return Err(Error::Rejected(Box::new(report)));
    }
    let result = lambda_map(p, q)?;
    let concurrence_before = concurrence_unchecked(q);
    let concurrence_after = concurrence_unchecked(result);
    let degenerate_amplitudes = report.q_support.len() < 2;
    Ok(EntangleOutcome {
        result,
        concurrence_before,
        concurrence_after,
        report,
        degenerate_amplitudes,
    })
}

/// The variant whose positions hold `q` and that pairs with `p_support` in
/// one of the eight admissible combinations.
fn matching_variant(q_support: Support, p_support: Support) -> Option<Variant> {
    Variant::ALL
        .into_iter()
        .find(|v| q_support.is_subset(v.support()) && v.p_supports().contains(&p_support))
}

/// `4 |α| |β| |aᵢ| |aⱼ|` for an admissible pair.
pub fn predicted_concurrence(p: Quat, q: BiQuat) -> Result<f64> {
    let report = check_restrictions(p, q)?;
    if !report.passed() {
        return Err(Error::Rejected(Box::new(report)));
    }
    let variant = matching_variant(report.q_support, report.p_support)
        .ok_or(Error::NotEmbeddedState("support of q does not match any embedding"))?;
    let (ia, ib) = variant.positions();
    let qc = q.to_array();
    let pc = p.to_array();
    let amps = qc[ia - 1].norm() * qc[ib - 1].norm();
    let rot: f64 = report
        .p_support
        .indices()
        .iter()
        .map(|&k| math::abs(pc[k - 1]))
        .product();
    Ok(4.0 * amps * rot)
}
