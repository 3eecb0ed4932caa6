//! Command-line front end for `biquat-core`.
//!
//! Exit codes: 0 success, 1 parse, usage or domain error, 2 restriction
//! rejection, 3 verification failure.

pub mod format;
pub mod sweep;

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;

use biquat_core::entangle::{self, RestrictionReport};
use biquat_core::rotations::{self, Side};
use biquat_core::{verify, BiQuat, Error as CoreError};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::format::{format_biquat, format_complex, parse_biquat, parse_quat, ParseError, Style};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "biquat", version, about = "Biquaternion algebra, rotations and entanglement")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply Λ(q) = pqp after checking R1–R3.
    Entangle {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Concurrence of a normalized state ("-" reads stdin).
    Concurrence {
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Report R1–R3 for a pair.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Apply one of the rotation maps.
    Rotate {
        #[arg(long, value_enum)]
        map: RotationMap,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Polar form (complex angle for non-real input).
    Polar {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Check the eight closed forms and the concurrence law.
    VerifyTheorem {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Bound on |C(pqp) − 4|αβaᵢaⱼ||.
        #[arg(long, default_value_t = verify::theorem::CONCURRENCE_TOL)]
        tol: f64,
    },
    /// Recompute the three worked examples exactly.
    VerifyExamples,
    /// Concurrence over an N⁴ parameter grid as CSV.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        grid: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
        case: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RotationMap {
    Left,
    Right,
    Conj,
    Psi,
    Lorentz,
    Mu,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::Rejected(_)) => EXIT_REJECTED,
            _ => EXIT_USAGE,
        }
    }
}

struct Out<'a> {
    w: &'a mut dyn Write,
    json: bool,
}

impl Out<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        if self.json {
            writeln!(self.w, "{}", serde_json::to_string_pretty(value).expect("serializable"))?;
        } else {
            writeln!(self.w, "{}", text())?;
        }
        Ok(())
    }
}

fn plain(q: BiQuat) -> String {
    format_biquat(q, Style::Plain)
}

fn report_text(r: &RestrictionReport) -> String {
    format!("{r}\n{}", if r.passed() { "admissible" } else { "rejected" })
}

fn rejected(out: &mut Out<'_>, r: &RestrictionReport) -> Result<i32, CliError> {
    out.emit(&json!({ "admissible": false, "report": r }), || report_text(r))?;
    Ok(EXIT_REJECTED)
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut Out<'_>) -> Result<i32, CliError> {
    match command {
        Command::Entangle { p, q } => {
            let (p, q) = (parse_quat(&p)?, parse_biquat(&q)?);
            match entangle::entangle(p, q) {
                Ok(o) => {
                    let value = json!({ "admissible": true, "outcome": o });
                    out.emit(&value, || {
                        let mut s = format!(
                            "Λ(q) = {}\nC: {} -> {}\n{}",
                            plain(o.result),
                            o.concurrence_before,
                            o.concurrence_after,
                            report_text(&o.report)
                        );
                        if o.degenerate_amplitudes {
                            s.push_str("\nnote: one amplitude is zero; the image stays separable");
                        }
                        s
                    })?;
                    Ok(EXIT_OK)
                }
                Err(CoreError::Rejected(r)) => rejected(out, &r),
                Err(e) => Err(e.into()),
            }
        }
        Command::Concurrence { state } => {
            let text = if state == "-" {
                let mut s = String::new();
                stdin.read_to_string(&mut s)?;
                s
            } else {
                state
            };
            let c = entangle::concurrence(parse_biquat(text.trim())?)?;
            out.emit(&json!({ "concurrence": c }), || format!("{c}"))?;
            Ok(EXIT_OK)
        }
        Command::Check { p, q } => {
            let r = entangle::check_restrictions(parse_quat(&p)?, parse_biquat(&q)?)?;
            if !r.passed() {
                return rejected(out, &r);
            }
            out.emit(&json!({ "admissible": true, "report": r }), || report_text(&r))?;
            Ok(EXIT_OK)
        }
        Command::Rotate { map, q, x } => {
            let image = match map {
                RotationMap::Left | RotationMap::Right | RotationMap::Conj => {
                    let (q, x) = (parse_quat(&q)?, parse_quat(&x)?);
                    BiQuat::from(match map {
                        RotationMap::Left => rotations::rotate_onesided(q, x, Side::Left)?,
                        RotationMap::Right => rotations::rotate_onesided(q, x, Side::Right)?,
                        _ => rotations::conjugate_rotation(q, x)?,
                    })
                }
                RotationMap::Psi => rotations::psi_rotation(parse_biquat(&q)?, parse_biquat(&x)?)?,
                RotationMap::Lorentz => rotations::lorentz(parse_biquat(&q)?, parse_biquat(&x)?)?,
                RotationMap::Mu => rotations::mu_rotation(parse_biquat(&q)?, parse_biquat(&x)?)?,
            };
            out.emit(&json!({ "image": image }), || plain(image))?;
            Ok(EXIT_OK)
        }
        Command::Polar { q } => {
            let q = parse_biquat(&q)?;
            if q.im().iter().all(|x| *x == 0.0) {
                let f = biquat_core::Quat::from_array(q.re()).polar()?;
                out.emit(&f, || {
                    let [a, b, c] = f.axis;
                    let mut s = format!(
                        "magnitude = {}\naxis = ({a}, {b}, {c})\nangle = {}",
                        f.magnitude, f.angle
                    );
                    if f.degenerate_axis {
                        s.push_str("\naxis is a placeholder (zero vector part)");
                    }
                    s
                })?;
            } else {
                let f = q.polar_c()?;
                out.emit(&f, || {
                    let mut s = format!(
                        "magnitude = {}\naxis = {}\nangle = {}",
                        format_complex(f.magnitude),
                        plain(f.axis),
                        format_complex(f.angle)
                    );
                    if f.degenerate_axis {
                        s.push_str("\naxis is a placeholder (zero vector part)");
                    }
                    s
                })?;
            }
            Ok(EXIT_OK)
        }
        Command::VerifyTheorem { samples, seed, tol } => {
            let report = verify::verify_theorem_with_tol(samples as usize, seed, tol);
            out.emit(&report, || report.to_string())?;
            Ok(if report.all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::VerifyExamples => {
            let report = verify::verify_examples();
            out.emit(&report, || report.to_string())?;
            Ok(if report.all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Sweep { grid, out: path, case } => {
            let case = verify::theorem::case(case).expect("range checked by clap");
            let rows = sweep::grid(case, grid as usize);
            let maximal = rows.iter().filter(|r| r.maximal).count();
            match path {
                Some(path) => {
                    sweep::write_csv(&rows, BufWriter::new(File::create(&path)?))?;
                    let value = json!({ "rows": rows.len(), "maximal": maximal, "out": path });
                    out.emit(&value, || {
                        format!("wrote {} rows ({maximal} maximal) to {}", rows.len(), path.display())
                    })?;
                }
                None => sweep::write_csv(&rows, &mut *out.w)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one parsed command. Errors go to `stderr`; the return value is the
/// exit code.
pub fn run(cli: Cli, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut out = Out {
        w: stdout,
        json: cli.json,
    };
    match execute(cli.command, stdin, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (including the program name) and runs. `--help` and
/// `--version` exit 0; any other argument error exits 1.
pub fn run_args<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            code
        }
    }
}
