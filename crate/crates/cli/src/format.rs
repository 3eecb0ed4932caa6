//! Text and JSON forms of biquaternions.
//!
//! Plain form: four comma-separated complex literals, each `x`, `yi`, or
//! `x±yi`. Whitespace is ignored. Numbers are printed with the shortest
//! decimal that parses back to the same `f64`.

use biquat_core::{BiQuat, Quat};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("expected 4 components, found {found}")]
    Arity { found: usize },
    #[error("malformed complex literal {text:?} at position {pos}")]
    Literal { pos: usize, text: String },
    #[error("non-finite value at position {pos}")]
    NonFinite { pos: usize },
    #[error("invalid JSON biquaternion: {0}")]
    Json(String),
    #[error("component {component} has imaginary part {im}; expected a real quaternion")]
    NotReal { component: usize, im: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Plain,
    Json,
    Unicode,
}

fn parse_real(text: &str, pos: usize) -> Result<f64, ParseError> {
    let ok = !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b));
    let x: f64 = if ok { text.parse().ok() } else { None }.ok_or_else(|| ParseError::Literal {
        pos,
        text: text.to_string(),
    })?;
    if !x.is_finite() {
        return Err(ParseError::NonFinite { pos });
    }
    Ok(x)
}

/// Parses one complex literal. `pos` is the offset of `text` in the input.
pub fn parse_complex(text: &str, pos: usize) -> Result<Complex64, ParseError> {
    let Some(body) = text.strip_suffix('i') else {
        return Ok(Complex64::new(parse_real(text, pos)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let malformed = || ParseError::Literal {
        pos,
        text: text.to_string(),
    };
    match split {
        Some(k) => {
            let re = parse_real(&body[..k], pos).map_err(|_| malformed())?;
            let im = parse_real(&body[k..], pos).map_err(|_| malformed())?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_real(body, pos).map_err(|_| malformed())?)),
    }
}

pub fn parse_biquat(text: &str) -> Result<BiQuat, ParseError> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()));
    }
    let mut parts = Vec::with_capacity(4);
    let mut start = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let compact: String = piece.chars().filter(|c| !c.is_whitespace()).collect();
        parts.push((start + lead, compact));
        start += piece.len() + 1;
    }
    if parts.len() != 4 {
        return Err(ParseError::Arity { found: parts.len() });
    }
    let mut c = [Complex64::new(0.0, 0.0); 4];
    for (slot, (pos, lit)) in c.iter_mut().zip(&parts) {
        *slot = parse_complex(lit, *pos)?;
    }
    Ok(BiQuat::from_array(c))
}

/// Parses a biquaternion and requires every imaginary part to be zero.
pub fn parse_quat(text: &str) -> Result<Quat, ParseError> {
    let q = parse_biquat(text)?;
    for (k, c) in q.to_array().iter().enumerate() {
        if c.im != 0.0 {
            return Err(ParseError::NotReal {
                component: k + 1,
                im: c.im,
            });
        }
    }
    Ok(Quat::from_array(q.re()))
}

fn is_pos_zero(x: f64) -> bool {
    x.to_bits() == 0
}

pub fn format_complex(c: Complex64) -> String {
    if is_pos_zero(c.im) {
        format!("{}", c.re)
    } else if is_pos_zero(c.re) {
        format!("{}i", c.im)
    } else if c.im.is_sign_negative() {
        format!("{}-{}i", c.re, -c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

fn json_array(xs: [f64; 4]) -> String {
    let items: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", items.join(","))
}

fn unicode(q: BiQuat) -> String {
    let units = ["", "î", "ĵ", "k̂"];
    let terms: Vec<String> = q
        .to_array()
        .iter()
        .zip(units)
        .filter(|(c, _)| c.re != 0.0 || c.im != 0.0)
        .map(|(c, u)| {
            let s = format_complex(*c);
            if u.is_empty() || (c.re == 0.0 || c.im == 0.0) {
                format!("{s}{u}")
            } else {
                format!("({s}){u}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        let joined = terms.join(" + ").replace("+ -", "− ");
        match joined.strip_prefix('-') {
            Some(rest) => format!("−{rest}"),
            None => joined,
        }
    }
}

pub fn format_biquat(q: BiQuat, style: Style) -> String {
    match style {
        Style::Plain => q.to_array().map(format_complex).join(", "),
        Style::Json => format!(r#"{{"re":{},"im":{}}}"#, json_array(q.re()), json_array(q.im())),
        Style::Unicode => unicode(q),
    }
}

pub fn format_quat(q: Quat) -> String {
    format_biquat(q.into(), Style::Plain)
}
