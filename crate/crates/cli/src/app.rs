//! The `bezier-rac` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or usage error.

use std::path::{Path, PathBuf};

use bezier_rac::planar::{draw_planar, make_fixture, JointBoxDrawing};
use bezier_rac::rac::draw_rac;
use bezier_rac::verify::{verify, Mode, VerificationReport, VerifyOptions};
use bezier_rac::Drawing;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::formats::{load, report_json, save, DrawingFile, EmbeddingFile, FormatError, JointBoxFile};
use crate::gen::gen_one_planar;
use crate::svg::{render, SvgStyle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bezier-rac", version, about = "Graph drawings with one cubic Bezier curve per edge")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a 1-plane embedding with right-angle crossings.
    DrawRac(DrawArgs),
    /// Draw a joint-box layout with one curve per edge and no crossings.
    DrawPlanar(DrawArgs),
    /// Check a drawing and print the findings.
    Verify(VerifyArgs),
    /// Render a drawing as SVG.
    Render(RenderArgs),
    /// Write a random 1-plane embedding or a joint-box fixture.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct Tolerances {
    /// Allowed deviation of crossing angles from a right angle (radians).
    #[arg(long, default_value_t = 1e-6)]
    pub tol_angle: f64,
    /// Curvature samples per edge.
    #[arg(long, default_value_t = 1024)]
    pub samples: usize,
}

impl Tolerances {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            tol_angle: self.tol_angle,
            curvature_samples: self.samples,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct DrawArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Drawing file to write; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also render the drawing to this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Verify the result and exit with 1 on violations.
    #[arg(long)]
    pub verify: bool,
    /// Write verification metrics as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub tol: Tolerances,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Rac,
    Planar,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Rac)]
    pub mode: ModeArg,
    /// Write the full report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub tol: Tolerances,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    /// Leave declared crossings unmarked.
    #[arg(long)]
    pub no_crossing_marks: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Number of vertices of the random embedding.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub crossing_fraction: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write this joint-box fixture instead (for example `star-4`).
    #[arg(long, conflicts_with_all = ["n", "crossing_fraction", "seed"])]
    pub fixture: Option<String>,
    /// Standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Other(String),
}

/// Runs the parsed command and returns the exit code. Diagnostics go to
/// standard error.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, AppError> {
    match cmd {
        Command::DrawRac(a) => {
            let file: EmbeddingFile = load(&a.input)?;
            let emb = file.to_embedding()?;
            let d = draw_rac(&emb).map_err(|e| AppError::Other(format!("drawing failed: {e}")))?;
            finish_draw(&a, &d, Mode::Rac, None)
        }
        Command::DrawPlanar(a) => {
            let file: JointBoxFile = load(&a.input)?;
            let jbd = file.to_joint_box()?;
            let d = draw_planar(&jbd).map_err(|e| AppError::Other(format!("drawing failed: {e}")))?;
            finish_draw(&a, &d, Mode::Planar, Some(&jbd))
        }
        Command::Verify(a) => {
            let file: DrawingFile = load(&a.input)?;
            let mode = match a.mode {
                ModeArg::Rac => Mode::Rac,
                ModeArg::Planar => Mode::Planar,
            };
            let r = verify(&file.to_drawing(), mode, &a.tol.options());
            print_summary(&r);
            if let Some(p) = &a.report {
                save(p, &report_json(&r))?;
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Render(a) => {
            let file: DrawingFile = load(&a.input)?;
            let d = file.to_valid_drawing(1e-9)?;
            write_svg(&a.output, &d, !a.no_crossing_marks)?;
            Ok(EXIT_OK)
        }
        Command::Gen(a) => {
            let value = match &a.fixture {
                Some(name) => {
                    let j = make_fixture(name).map_err(|e| AppError::Other(e.to_string()))?;
                    serde_json::to_value(JointBoxFile::from(&j)).map_err(FormatError::from)?
                }
                None => {
                    let emb = gen_one_planar(a.n, a.crossing_fraction, a.seed).map_err(|e| AppError::Other(e.to_string()))?;
                    serde_json::to_value(EmbeddingFile::from(&emb)).map_err(FormatError::from)?
                }
            };
            emit(a.output.as_deref(), &value)?;
            Ok(EXIT_OK)
        }
    }
}

fn finish_draw(a: &DrawArgs, d: &Drawing, mode: Mode, jbd: Option<&JointBoxDrawing>) -> Result<i32, AppError> {
    let value = serde_json::to_value(DrawingFile::from(d)).map_err(FormatError::from)?;
    emit(a.output.as_deref(), &value)?;
    if let Some(p) = &a.svg {
        write_svg(p, d, true)?;
    }
    if !a.verify && a.report.is_none() {
        return Ok(EXIT_OK);
    }
    let r = verify(d, mode, &a.tol.options());
    if let Some(p) = &a.report {
        let mut v = report_json(&r);
        if let Some(j) = jbd {
            let w = j.grid_width() as f64;
            v["grid_width"] = Value::from(w);
            v["curvature_bound"] = Value::from((12.0f64 / 128.0).sqrt() * w.sqrt());
        }
        save(p, &v)?;
    }
    if a.verify {
        if a.output.is_some() {
            print_summary(&r);
        }
        if !r.passed() {
            return Ok(EXIT_VERIFY);
        }
    }
    Ok(EXIT_OK)
}

fn emit(path: Option<&Path>, value: &Value) -> Result<(), AppError> {
    match path {
        Some(p) => save(p, value)?,
        None => println!("{}", serde_json::to_string_pretty(value).map_err(FormatError::from)?),
    }
    Ok(())
}

fn write_svg(path: &Path, d: &Drawing, marks: bool) -> Result<(), AppError> {
    let style = SvgStyle {
        mark_crossings: marks,
        ..SvgStyle::default()
    };
    std::fs::write(path, render(d, &style)).map_err(|source| {
        FormatError::Write {
            path: path.display().to_string(),
            source,
        }
        .into()
    })
}

fn print_summary(r: &VerificationReport) {
    let declared = r.crossings.iter().filter(|c| c.declared).count();
    let min_res = r.min_angular_resolution.iter().copied().fold(f64::INFINITY, f64::min);
    println!("verdict: {}", if r.passed() { "pass" } else { "fail" });
    println!("contacts: {} ({} declared)", r.crossings.len(), declared);
    if min_res.is_finite() {
        println!("min angular resolution: {min_res:.6e}");
    }
    println!("max curvature: {:.6e}", r.max_curvature);
    println!("violations: {}", r.violations.len());
    for v in &r.violations {
        println!("  {v:?}");
    }
}
