//! The eight admissible `(q, p)` shapes and their closed-form images under
//! `Λ(q) = pqp`.
//!
//! Each case is checked two ways:
//!
//! 1. Identity: the closed form is compared with the exact oracle product
//!    `p·q·p` at rational points. The forms are only valid on the circle
//!    `aᵢ² + aⱼ² = 1`, so points use the rational parametrization
//!    `t ↦ ((1−t²)/(1+t²), 2t/(1+t²))`. Every component of the difference is
//!    `ℂ`-linear in `(α, β)` with a numerator of degree ≤ 4 in `t`, so the
//!    grid `t ∈ {0, 1, 2, 1/2, 1/3}` × `(α, β) ∈ {(1, 0), (0, 1)}` is
//!    decisive on its own. Seeded random points are added on top.
//! 2. Concurrence law: `C(pqp) = 4|α β aᵢ aⱼ|` in floating point at random
//!    normalized inputs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::exact::{oracle_mul, rat, ExactBiQuat, ExactScalar};
use crate::biquat::BiQuat;
use crate::entangle::{self, StateAmp, Support, Variant};
use crate::quat::Quat;
use crate::{math, sample};

/// Tolerance for the floating-point concurrence law.
pub const CONCURRENCE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Amp {
    Alpha,
    Beta,
}

/// `coeff · amp · aᵢ^pow_i · aⱼ^pow_j`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: i8,
    pub amp: Amp,
    pub pow_i: u8,
    pub pow_j: u8,
}

const fn t(coeff: i8, amp: Amp, pow_i: u8, pow_j: u8) -> Term {
    Term {
        coeff,
        amp,
        pow_i,
        pow_j,
    }
}

use Amp::{Alpha as A, Beta as B};

/// One polynomial per component of `pqp`.
pub type Form = [&'static [Term]; 4];

#[derive(Debug, Clone, Copy)]
pub struct TheoremCase {
    pub case_id: u8,
    pub q_variant: Variant,
    /// 1-based positions `(i, j)` of the nonzero coefficients of `p`.
    pub p_support: (usize, usize),
    /// The form as published, verbatim.
    pub published_text: &'static str,
    /// The published form as a polynomial. Case 2 is read as the evident
    /// four-component tuple.
    pub published: Form,
    /// The form that holds under the Hamilton product.
    pub derived: Form,
    pub note: Option<&'static str>,
}

impl TheoremCase {
    pub fn p_support_set(&self) -> Support {
        Support::from_indices(&[self.p_support.0, self.p_support.1])
    }

    /// The symbolic predicted concurrence, `4|αβaᵢaⱼ|`.
    pub fn predicted_text(&self) -> String {
        let (i, j) = self.p_support;
        format!("4|αβa{}a{}|", sub(i), sub(j))
    }

    pub fn derived_text(&self) -> String {
        render_form(&self.derived, self.p_support)
    }

    pub fn published_matches_derived(&self) -> bool {
        self.published == self.derived
    }
}

pub const CASES: [TheoremCase; 8] = [
    TheoremCase {
        case_id: 1,
        q_variant: Variant::V12,
        p_support: (1, 3),
        published_text: "(α(a₁²−a₃²), β, 2αa₁a₃, 0)",
        published: [
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(1, B, 0, 0)],
            &[t(2, A, 1, 1)],
            &[],
        ],
        derived: [
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(1, B, 0, 0)],
            &[t(2, A, 1, 1)],
            &[],
        ],
        note: None,
    },
    TheoremCase {
        case_id: 2,
        q_variant: Variant::V12,
        p_support: (2, 4),
        published_text: "p=(0,a₂,0,a₄,0): (−α, −β(a₂²−a₄²), 0, −2βa₂a₂, 0)",
        published: [
            &[t(-1, A, 0, 0)],
            &[t(-1, B, 2, 0), t(1, B, 0, 2)],
            &[],
            &[t(-2, B, 1, 1)],
        ],
        derived: [
            &[t(-1, A, 0, 0)],
            &[t(-1, B, 2, 0), t(1, B, 0, 2)],
            &[],
            &[t(-2, B, 1, 1)],
        ],
        note: Some(
            "published tuples have five entries and the term −2βa₂a₂; read as p=(0,a₂,0,a₄) \
             and (−α, −β(a₂²−a₄²), 0, −2βa₂a₄), confirmed by the oracle",
        ),
    },
    TheoremCase {
        case_id: 3,
        q_variant: Variant::V34,
        p_support: (1, 3),
        published_text: "(−2αa₁a₃; 0; α(a₁²−a₃²); β)",
        published: [
            &[t(-2, A, 1, 1)],
            &[],
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(1, B, 0, 0)],
        ],
        derived: [
            &[t(-2, A, 1, 1)],
            &[],
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(1, B, 0, 0)],
        ],
        note: None,
    },
    TheoremCase {
        case_id: 4,
        q_variant: Variant::V34,
        p_support: (2, 4),
        published_text: "(0, −2βa₂a₄, α, −β(a₄²−a₂²))",
        published: [
            &[],
            &[t(-2, B, 1, 1)],
            &[t(1, A, 0, 0)],
            &[t(-1, B, 0, 2), t(1, B, 2, 0)],
        ],
        derived: [
            &[],
            &[t(-2, B, 1, 1)],
            &[t(1, A, 0, 0)],
            &[t(-1, B, 0, 2), t(1, B, 2, 0)],
        ],
        note: None,
    },
    TheoremCase {
        case_id: 5,
        q_variant: Variant::V13,
        p_support: (1, 2),
        published_text: "(αa₁²−αa₂², 2αa₁a₂, β, 0)",
        published: [
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(2, A, 1, 1)],
            &[t(1, B, 0, 0)],
            &[],
        ],
        derived: [
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[t(2, A, 1, 1)],
            &[t(1, B, 0, 0)],
            &[],
        ],
        note: None,
    },
    TheoremCase {
        case_id: 6,
        q_variant: Variant::V13,
        p_support: (3, 4),
        published_text: "(−α, 0, −βa₃²+βa₄², 2βa₃a₄)",
        published: [
            &[t(-1, A, 0, 0)],
            &[],
            &[t(-1, B, 2, 0), t(1, B, 0, 2)],
            &[t(2, B, 1, 1)],
        ],
        derived: [
            &[t(-1, A, 0, 0)],
            &[],
            &[t(-1, B, 2, 0), t(1, B, 0, 2)],
            &[t(-2, B, 1, 1)],
        ],
        note: Some(
            "published fourth component 2βa₃a₄ has the wrong sign: p(βĵ)p = \
             β((a₄²−a₃²)ĵ − 2a₃a₄k̂) for p = a₃ĵ + a₄k̂; the sign does not affect C",
        ),
    },
    TheoremCase {
        case_id: 7,
        q_variant: Variant::V24,
        p_support: (1, 2),
        published_text: "(−2αa₁a₂, αa₁²−αa₂², 0, β)",
        published: [
            &[t(-2, A, 1, 1)],
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[],
            &[t(1, B, 0, 0)],
        ],
        derived: [
            &[t(-2, A, 1, 1)],
            &[t(1, A, 2, 0), t(-1, A, 0, 2)],
            &[],
            &[t(1, B, 0, 0)],
        ],
        note: None,
    },
    TheoremCase {
        case_id: 8,
        q_variant: Variant::V24,
        p_support: (3, 4),
        published_text: "(0, α, −2βa₃a₄, βa₃²−βa₄²)",
        published: [
            &[],
            &[t(1, A, 0, 0)],
            &[t(-2, B, 1, 1)],
            &[t(1, B, 2, 0), t(-1, B, 0, 2)],
        ],
        derived: [
            &[],
            &[t(1, A, 0, 0)],
            &[t(-2, B, 1, 1)],
            &[t(1, B, 2, 0), t(-1, B, 0, 2)],
        ],
        note: None,
    },
];

/// Looks up a case by its 1-based id.
pub fn case(case_id: u8) -> Option<&'static TheoremCase> {
    CASES.iter().find(|c| c.case_id == case_id)
}

fn sub(k: usize) -> char {
    ['₀', '₁', '₂', '₃', '₄'][k]
}

fn render_term(term: &Term, first: bool, p_support: (usize, usize), out: &mut String) {
    let mag = term.coeff.unsigned_abs();
    if first {
        if term.coeff < 0 {
            out.push('−');
        }
    } else {
        out.push_str(if term.coeff < 0 { " − " } else { " + " });
    }
    if mag != 1 {
        out.push_str(&format!("{mag}"));
    }
    out.push(match term.amp {
        Amp::Alpha => 'α',
        Amp::Beta => 'β',
    });
    for (idx, pow) in [(p_support.0, term.pow_i), (p_support.1, term.pow_j)] {
        if pow > 0 {
            out.push('a');
            out.push(sub(idx));
            if pow == 2 {
                out.push('²');
            }
        }
    }
}

/// Renders a form like `(αa₁² − αa₃², β, 2αa₁a₃, 0)`.
pub fn render_form(form: &Form, p_support: (usize, usize)) -> String {
    let mut out = String::from("(");
    for (k, comp) in form.iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        if comp.is_empty() {
            out.push('0');
        }
        for (n, term) in comp.iter().enumerate() {
            render_term(term, n == 0, p_support, &mut out);
        }
    }
    out.push(')');
    out
}

fn pow(x: &BigRational, n: u8) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, _| acc * x)
}

/// Evaluates a form exactly.
pub fn eval_form(form: &Form, alpha: &ExactScalar, beta: &ExactScalar, a: (&BigRational, &BigRational)) -> ExactBiQuat {
    let coeffs: [ExactScalar; 4] = core::array::from_fn(|k| {
        form[k].iter().fold(ExactScalar::zero(), |acc, term| {
            let amp = match term.amp {
                Amp::Alpha => alpha,
                Amp::Beta => beta,
            };
            let factor =
                BigRational::from_integer(BigInt::from(term.coeff)) * pow(a.0, term.pow_i) * pow(a.1, term.pow_j);
            acc + amp * &ExactScalar::real(factor)
        })
    });
    ExactBiQuat::from_coeffs(coeffs)
}

/// The closed form of `pqp` for case `c` (the verified form).
pub fn theorem_closed_form(
    c: &TheoremCase,
    alpha: &ExactScalar,
    beta: &ExactScalar,
    a: (&BigRational, &BigRational),
) -> ExactBiQuat {
    eval_form(&c.derived, alpha, beta, a)
}

/// The closed form of `pqp` for case `c` as published.
pub fn published_closed_form(
    c: &TheoremCase,
    alpha: &ExactScalar,
    beta: &ExactScalar,
    a: (&BigRational, &BigRational),
) -> ExactBiQuat {
    eval_form(&c.published, alpha, beta, a)
}

/// `p·q·p` through the exact oracle, for the embedding and `p` support of
/// case `c`.
pub fn oracle_pqp(
    c: &TheoremCase,
    alpha: &ExactScalar,
    beta: &ExactScalar,
    a: (&BigRational, &BigRational),
) -> ExactBiQuat {
    let mut qc: [ExactScalar; 4] = core::array::from_fn(|_| ExactScalar::zero());
    let (ia, ib) = c.q_variant.positions();
    qc[ia - 1] = alpha.clone();
    qc[ib - 1] = beta.clone();
    let q = ExactBiQuat::from_coeffs(qc);
    let mut pc: [ExactScalar; 4] = core::array::from_fn(|_| ExactScalar::zero());
    pc[c.p_support.0 - 1] = ExactScalar::real(a.0.clone());
    pc[c.p_support.1 - 1] = ExactScalar::real(a.1.clone());
    let p = ExactBiQuat::from_coeffs(pc);
    oracle_mul(&oracle_mul(&p, &q), &p)
}

/// Rational point on the unit circle for parameter `t = m/n`.
pub fn circle_point(m: i64, n: i64) -> (BigRational, BigRational) {
    let d = n * n + m * m;
    (rat(n * n - m * m, d), rat(2 * m * n, d))
}

/// An exact evaluation point.
#[derive(Debug, Clone)]
pub struct IdentityPoint {
    pub alpha: ExactScalar,
    pub beta: ExactScalar,
    pub a: (BigRational, BigRational),
}

const DECISIVE_T: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (1, 2), (1, 3)];

/// Number of seeded random points added to the decisive grid.
pub const RANDOM_IDENTITY_POINTS: usize = 10;

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.random_range(-97..=97), rng.random_range(1..=97))
}

/// Decisive grid followed by seeded random points.
pub fn identity_points(rng: &mut ChaCha8Rng) -> Vec<IdentityPoint> {
    let mut pts = Vec::new();
    for (m, n) in DECISIVE_T {
        let a = circle_point(m, n);
        for (al, be) in [(1, 0), (0, 1)] {
            pts.push(IdentityPoint {
                alpha: ExactScalar::from_ints(al, 0),
                beta: ExactScalar::from_ints(be, 0),
                a: a.clone(),
            });
        }
    }
    for _ in 0..RANDOM_IDENTITY_POINTS {
        let alpha = ExactScalar::new(small_rational(rng), small_rational(rng));
        let beta = ExactScalar::new(small_rational(rng), small_rational(rng));
        let m = rng.random_range(-97..=97);
        let n = rng.random_range(1..=97);
        pts.push(IdentityPoint {
            alpha,
            beta,
            a: circle_point(m, n),
        });
    }
    pts
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CaseReport {
    pub case_id: u8,
    pub q_variant: Variant,
    pub p_support: Support,
    pub derived_form: String,
    pub published_form: String,
    pub predicted_concurrence: String,
    pub note: Option<String>,
    pub identity_points: usize,
    pub identity_pass: bool,
    pub identity_counterexample: Option<String>,
    /// Whether the published form also agrees with the oracle at every point.
    pub published_matches: bool,
    /// 1-based components where the published form disagrees.
    pub published_mismatch_components: Vec<usize>,
    pub concurrence_samples: usize,
    pub concurrence_max_error: f64,
    pub concurrence_pass: bool,
    pub concurrence_counterexample: Option<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.identity_pass && self.concurrence_pass
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TheoremReport {
    pub samples: usize,
    pub seed: u64,
    pub cases: Vec<CaseReport>,
    pub passed_cases: usize,
    pub all_pass: bool,
}

fn case_rng(seed: u64, case_id: u8) -> ChaCha8Rng {
    let mut rng = sample::rng(seed);
    rng.set_stream(case_id as u64);
    rng
}

/// Runs both checks for one case. Independent of the other cases.
pub fn verify_case(c: &TheoremCase, samples: usize, seed: u64) -> CaseReport {
    verify_case_with_tol(c, samples, seed, CONCURRENCE_TOL)
}

/// [`verify_case`] with a custom bound on `|ΔC|`.
pub fn verify_case_with_tol(c: &TheoremCase, samples: usize, seed: u64, tol: f64) -> CaseReport {
    let mut rng = case_rng(seed, c.case_id);
    let points = identity_points(&mut rng);

    let mut identity_counterexample = None;
    let mut mismatched = [false; 4];
    for pt in &points {
        let a = (&pt.a.0, &pt.a.1);
        let oracle = oracle_pqp(c, &pt.alpha, &pt.beta, a);
        let closed = theorem_closed_form(c, &pt.alpha, &pt.beta, a);
        if identity_counterexample.is_none() && oracle != closed {
            identity_counterexample = Some(format!(
                "α = {}, β = {}, (a{}, a{}) = ({}, {}): oracle pqp = {}, closed form = {}",
                pt.alpha,
                pt.beta,
                sub(c.p_support.0),
                sub(c.p_support.1),
                pt.a.0,
                pt.a.1,
                oracle,
                closed
            ));
        }
        let published = published_closed_form(c, &pt.alpha, &pt.beta, a);
        for k in oracle.differing_components(&published) {
            mismatched[k - 1] = true;
        }
    }
    let published_mismatch_components: Vec<usize> = (1..=4).filter(|k| mismatched[k - 1]).collect();

    let mut max_err = 0.0f64;
    let mut concurrence_counterexample = None;
    for _ in 0..samples {
        let (alpha, beta) = sample::amplitudes(&mut rng);
        let (ai, aj) = sample::unit_pair(&mut rng);
        let err = concurrence_law_error(c, alpha, beta, (ai, aj));
        if err > max_err || err.is_nan() {
            max_err = if err.is_nan() { f64::INFINITY } else { err };
        }
        if concurrence_counterexample.is_none() && (err.is_nan() || err > tol) {
            concurrence_counterexample = Some(format!(
                "α = {alpha}, β = {beta}, (a{}, a{}) = ({ai}, {aj}): |ΔC| = {err:e}",
                sub(c.p_support.0),
                sub(c.p_support.1)
            ));
        }
    }

    CaseReport {
        case_id: c.case_id,
        q_variant: c.q_variant,
        p_support: c.p_support_set(),
        derived_form: c.derived_text(),
        published_form: String::from(c.published_text),
        predicted_concurrence: c.predicted_text(),
        note: c.note.map(String::from),
        identity_points: points.len(),
        identity_pass: identity_counterexample.is_none(),
        identity_counterexample,
        published_matches: published_mismatch_components.is_empty(),
        published_mismatch_components,
        concurrence_samples: samples,
        concurrence_max_error: max_err,
        concurrence_pass: concurrence_counterexample.is_none(),
        concurrence_counterexample,
    }
}

/// `|C(pqp) − 4|αβaᵢaⱼ||` computed with the floating-point product.
pub fn concurrence_law_error(c: &TheoremCase, alpha: Complex64, beta: Complex64, a: (f64, f64)) -> f64 {
    let mut pc = [0.0; 4];
    pc[c.p_support.0 - 1] = a.0;
    pc[c.p_support.1 - 1] = a.1;
    let p = Quat::from_array(pc);
    let q = match StateAmp::new(alpha, beta, c.q_variant) {
        Ok(s) => entangle::embed_state(&s),
        Err(_) => return f64::INFINITY,
    };
    let out = match entangle::lambda_map(p, q) {
        Ok(o) => o,
        Err(_) => return f64::INFINITY,
    };
    let predicted = 4.0 * alpha.norm() * beta.norm() * math::abs(a.0) * math::abs(a.1);
    math::abs(entangle::concurrence_unchecked(out) - predicted)
}

/// Checks all eight cases; results are ordered by case id.
pub fn verify_theorem(samples: usize, seed: u64) -> TheoremReport {
    verify_theorem_with_tol(samples, seed, CONCURRENCE_TOL)
}

pub fn verify_theorem_with_tol(samples: usize, seed: u64, tol: f64) -> TheoremReport {
    let cases: Vec<CaseReport> = CASES
        .iter()
        .map(|c| verify_case_with_tol(c, samples, seed, tol))
        .collect();
    TheoremReport::from_cases(samples, seed, cases)
}

impl TheoremReport {
    /// Assembles a report from independently computed cases, in any order.
    pub fn from_cases(samples: usize, seed: u64, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by_key(|c| c.case_id);
        let passed_cases = cases.iter().filter(|c| c.passed()).count();
        let all_pass = passed_cases == cases.len();
        TheoremReport {
            samples,
            seed,
            cases,
            passed_cases,
            all_pass,
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem check: samples={} seed={}", self.samples, self.seed)?;
        for c in &self.cases {
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            writeln!(
                f,
                "case {}: q {} {}, p support {}",
                c.case_id,
                c.q_variant,
                embedding_text(c.q_variant),
                c.p_support
            )?;
            writeln!(f, "  pqp         = {}", c.derived_form)?;
            writeln!(f, "  C           = {}", c.predicted_concurrence)?;
            writeln!(
                f,
                "  identity    : {} ({} exact points)",
                mark(c.identity_pass),
                c.identity_points
            )?;
            if let Some(ce) = &c.identity_counterexample {
                writeln!(f, "    counterexample: {ce}")?;
            }
            writeln!(
                f,
                "  concurrence : {} ({} samples, max |ΔC| = {:e})",
                mark(c.concurrence_pass),
                c.concurrence_samples,
                c.concurrence_max_error
            )?;
            if let Some(ce) = &c.concurrence_counterexample {
                writeln!(f, "    counterexample: {ce}")?;
            }
            if !c.published_matches || c.note.is_some() {
                writeln!(f, "  published   : {}", c.published_form)?;
                if !c.published_matches {
                    writeln!(
                        f,
                        "    differs from oracle in component(s) {:?}",
                        c.published_mismatch_components
                    )?;
                }
                if let Some(n) = &c.note {
                    writeln!(f, "    note: {n}")?;
                }
            }
        }
        write!(f, "{}/{} cases pass", self.passed_cases, self.cases.len())
    }
}

fn embedding_text(v: Variant) -> &'static str {
    match v {
        Variant::V12 => "(α, β, 0, 0)",
        Variant::V34 => "(0, 0, α, β)",
        Variant::V13 => "(α, 0, β, 0)",
        Variant::V24 => "(0, α, 0, β)",
    }
}

/// Floating-point `p` for case `c` with `(aᵢ, aⱼ)`.
pub fn case_p(c: &TheoremCase, a: (f64, f64)) -> Quat {
    let mut pc = [0.0; 4];
    pc[c.p_support.0 - 1] = a.0;
    pc[c.p_support.1 - 1] = a.1;
    Quat::from_array(pc)
}

/// Floating-point embedded `q` for case `c`.
pub fn case_q(c: &TheoremCase, alpha: Complex64, beta: Complex64) -> BiQuat {
    let mut qc = [Complex64::zero(); 4];
    let (ia, ib) = c.q_variant.positions();
    qc[ia - 1] = alpha;
    qc[ib - 1] = beta;
    BiQuat::from_array(qc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_enumerate_all_admissible_pairs() {
        let mut seen = Vec::new();
        for c in &CASES {
            assert!(c.q_variant.p_supports().contains(&c.p_support_set()));
            seen.push((c.q_variant, c.p_support_set()));
        }
        for v in Variant::ALL {
            for s in v.p_supports() {
                assert!(seen.contains(&(v, s)));
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn case1_at_three_fifths() {
        let c = case(1).unwrap();
        let alpha = ExactScalar::new(rat(0, 1), rat(3, 5));
        let beta = ExactScalar::new(rat(0, 1), rat(4, 5));
        let a = (rat(3, 5), rat(4, 5));
        let out = theorem_closed_form(c, &alpha, &beta, (&a.0, &a.1));
        let expected = ExactBiQuat::from_coeffs([
            &alpha * &ExactScalar::real(rat(-7, 25)),
            beta.clone(),
            &alpha * &ExactScalar::real(rat(24, 25)),
            ExactScalar::zero(),
        ]);
        assert_eq!(out, expected);
        assert_eq!(oracle_pqp(c, &alpha, &beta, (&a.0, &a.1)), expected);
    }

    #[test]
    fn case5_form_text() {
        assert_eq!(case(5).unwrap().derived_text(), "(αa₁² − αa₂², 2αa₁a₂, β, 0)");
        assert_eq!(case(2).unwrap().derived_text(), "(−α, −βa₂² + βa₄², 0, −2βa₂a₄)");
    }

    #[test]
    fn closed_forms_need_the_unit_circle() {
        // Off the circle the scalar term α ≠ α(a₁² + a₃²).
        let c = case(1).unwrap();
        let one = ExactScalar::one();
        let zero = ExactScalar::zero();
        let a = (rat(1, 1), rat(1, 1));
        assert_ne!(
            oracle_pqp(c, &zero, &one, (&a.0, &a.1)),
            theorem_closed_form(c, &zero, &one, (&a.0, &a.1))
        );
    }

    #[test]
    fn only_case6_published_form_differs() {
        for c in &CASES {
            assert_eq!(c.published_matches_derived(), c.case_id != 6, "case {}", c.case_id);
        }
    }

    #[test]
    fn circle_points_are_unit() {
        for (m, n) in DECISIVE_T.into_iter().chain([(-97, 1), (5, 97)]) {
            let (x, y) = circle_point(m, n);
            assert_eq!(&x * &x + &y * &y, BigRational::one());
        }
    }

    #[test]
    fn invalid_case_id() {
        assert!(case(0).is_none());
        assert!(case(9).is_none());
    }

    #[test]
    fn single_sample_smoke() {
        let r = verify_theorem(1, 0);
        assert_eq!(r.cases.len(), 8);
        assert!(r.all_pass, "{r}");
    }
}
