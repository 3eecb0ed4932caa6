//! Concurrence over a grid of amplitudes and `p` angles for one case.
//!
//! With `α = cos χ · e^{iφ}`, `β = sin χ · e^{iψ}` and `(aᵢ, aⱼ) = (cos t, sin t)`,
//! the grid takes `N` values of each of `χ` and `t` on `[0, π/2]` (endpoints
//! included) and `N` values of each phase on `[0, 2π)`. Odd `N` includes
//! the point `χ = t = π/4`.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::io::Write;

use biquat_core::entangle::{concurrence_unchecked, lambda_map};
use biquat_core::verify::theorem::{case_p, case_q, TheoremCase};
use num_complex::Complex64;
use serde::Serialize;

use crate::format::format_complex;

pub const MAXIMAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub alpha: String,
    pub beta: String,
    pub a_i: f64,
    pub a_j: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub maximal: bool,
}

/// Rows in grid order `(χ, φ, ψ, t)`, last index fastest.
pub fn grid(case: &TheoremCase, n: usize) -> Vec<Row> {
    assert!(n >= 2, "grid needs at least 2 points per axis");
    let closed = |k: usize| FRAC_PI_2 * k as f64 / (n - 1) as f64;
    let open = |k: usize| TAU * k as f64 / n as f64;
    let mut rows = Vec::with_capacity(n.pow(4));
    for kc in 0..n {
        let chi = closed(kc);
        for kf in 0..n {
            let alpha = Complex64::from_polar(chi.cos(), open(kf));
            for kp in 0..n {
                let beta = Complex64::from_polar(chi.sin(), open(kp));
                for kt in 0..n {
                    let t = closed(kt);
                    let a = (t.cos(), t.sin());
                    let image =
                        lambda_map(case_p(case, a), case_q(case, alpha, beta)).expect("grid points give unit p");
                    let c = concurrence_unchecked(image);
                    rows.push(Row {
                        alpha: format_complex(alpha),
                        beta: format_complex(beta),
                        a_i: a.0,
                        a_j: a.1,
                        c,
                        maximal: c >= 1.0 - MAXIMAL_TOL,
                    });
                }
            }
        }
    }
    rows
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
