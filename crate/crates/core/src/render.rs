//! ASCII lattice diagrams and machine-readable reports.
//!
//! Diagrams put the position axis vertically (left steps go up) and the step
//! axis horizontally, one column per step. The segment from step `i-1` to
//! step `i` is drawn in column `i` on the row of its upper end, as `/` for a
//! left step and `\` for a right step, so peaks read `/\` and valleys `\/`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{parse_rational, Limit, Rational};
use crate::identities::CheckReport;
use crate::walks::{DecompositionReport, Path};
use crate::Status;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("path has {len} steps but the scene has {steps}")]
    LengthMismatch { len: usize, steps: usize },
    #[error("position {0} lies outside the drawn range {1}..={2}")]
    OutOfRange(i64, i64, i64),
    #[error("empty position range {0}..={1}")]
    EmptyRange(i64, i64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

const ORIGIN: char = 'o';
const UP: char = '/';
const DOWN: char = '\\';
const MIRRORED: char = ':';
const BARRIER: char = '-';

/// What to draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridScene {
    pub steps: usize,
    /// Lowest drawn position.
    pub lo: i64,
    /// Highest drawn position.
    pub hi: i64,
    pub path: Option<Path>,
    /// Row marked with a dashed line.
    pub barrier: Option<i64>,
    /// Also draw the part of the path after its last visit to the barrier,
    /// mirrored in the barrier row.
    pub reflected: bool,
}

impl GridScene {
    /// Scene whose range covers the path, the barrier and any mirrored tail,
    /// with one spare row above and below.
    pub fn fitted(steps: usize, path: Option<Path>, barrier: Option<i64>, reflected: bool) -> Self {
        let mut scene = GridScene { steps, lo: 0, hi: 0, path, barrier, reflected };
        let rows = scene.used_rows();
        scene.lo = rows.iter().copied().min().unwrap_or(0) - 1;
        scene.hi = rows.iter().copied().max().unwrap_or(0) + 1;
        scene
    }

    fn segments(&self) -> Vec<(usize, i64, char)> {
        let mut out = Vec::new();
        let Some(path) = &self.path else {
            return out;
        };
        let pos = path.positions();
        for i in 1..pos.len() {
            let glyph = if pos[i] > pos[i - 1] { UP } else { DOWN };
            out.push((i, pos[i].max(pos[i - 1]), glyph));
        }
        if let (true, Some(r)) = (self.reflected, self.barrier) {
            if let Some(last) = pos.iter().rposition(|p| *p == r) {
                for i in last + 1..pos.len() {
                    let (a, b) = (2 * r - pos[i - 1], 2 * r - pos[i]);
                    out.push((i, a.max(b), MIRRORED));
                }
            }
        }
        out
    }

    fn used_rows(&self) -> Vec<i64> {
        let mut rows = vec![0];
        rows.extend(self.barrier);
        rows.extend(self.segments().iter().map(|s| s.1));
        rows
    }
}

/// Monospace drawing of the scene; identical scenes give identical bytes.
pub fn render_walk(scene: &GridScene) -> Result<String, RenderError> {
    if scene.lo > scene.hi {
        return Err(RenderError::EmptyRange(scene.lo, scene.hi));
    }
    if let Some(p) = &scene.path {
        if p.len() != scene.steps {
            return Err(RenderError::LengthMismatch { len: p.len(), steps: scene.steps });
        }
    }
    for row in scene.used_rows() {
        if row < scene.lo || row > scene.hi {
            return Err(RenderError::OutOfRange(row, scene.lo, scene.hi));
        }
    }
    let width = scene.steps + 1;
    let height = (scene.hi - scene.lo + 1) as usize;
    let row_of = |p: i64| (scene.hi - p) as usize;
    let mut grid = vec![vec![' '; width]; height];
    if let Some(r) = scene.barrier {
        grid[row_of(r)].fill(BARRIER);
    }
    grid[row_of(0)][0] = ORIGIN;
    // mirrored glyphs first so the walk itself wins any shared cell
    let mut segments = scene.segments();
    segments.sort_by_key(|s| s.2 != MIRRORED);
    for (col, row, glyph) in segments {
        grid[row_of(row)][col] = glyph;
    }

    let label_width = [scene.lo, scene.hi].iter().map(|v| v.to_string().len()).max().unwrap_or(1);
    let pad = " ".repeat(label_width);
    let mut out = String::new();
    writeln!(out, "{pad}  position").unwrap();
    for (i, cells) in grid.iter().enumerate() {
        let p = scene.hi - i as i64;
        let line: String = cells.iter().collect();
        writeln!(out, "{:>label_width$} |{}", p, line.trim_end()).unwrap();
    }
    writeln!(out, "{pad} +{}", "-".repeat(width)).unwrap();
    let digits: String = (0..width).map(|i| char::from(b'0' + (i % 10) as u8)).collect();
    writeln!(out, "{pad}  {digits}").unwrap();
    writeln!(out, "{pad}  step").unwrap();
    Ok(out)
}

/// Eight steps ending at position 2.
pub fn figure_one() -> GridScene {
    GridScene {
        steps: 8,
        lo: -5,
        hi: 5,
        path: Some("LRRLLLRL".parse().expect("static path")),
        barrier: None,
        reflected: false,
    }
}

/// Twelve steps ending at 2 that touch 4, with the tail after the last visit
/// to 4 mirrored onto a walk ending at 6.
pub fn figure_two() -> GridScene {
    GridScene {
        steps: 12,
        lo: -5,
        hi: 9,
        path: Some("LLRLLLLRRRLR".parse().expect("static path")),
        barrier: Some(4),
        reflected: true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json-lines" => Ok(Format::JsonLines),
            other => Err(format!("unknown format `{other}` (expected csv or jsonl)")),
        }
    }
}

pub const CSV_HEADER: &str = "identity,n,m,r,lhs,rhs,status";

#[derive(Serialize, Deserialize)]
struct ReportRecord {
    identity: String,
    n: i64,
    m: Option<String>,
    r: Option<String>,
    lhs: String,
    rhs: String,
    status: Status,
}

fn opt_rational(v: &Option<Rational>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

/// CSV (with header) or JSON lines, one record per report, in input order.
/// Rationals are written as `p/q` (integers as `p`); a pole is `pole`; an
/// absent parameter is empty in CSV and `null` in JSON.
pub fn emit_report(reports: &[CheckReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}").unwrap();
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.identity,
                    r.n,
                    opt_rational(&r.m),
                    opt_rational(&r.r),
                    r.lhs,
                    r.rhs,
                    r.status
                )
                .unwrap();
            }
        }
        Format::JsonLines => {
            for r in reports {
                let rec = ReportRecord {
                    identity: r.identity.clone(),
                    n: r.n,
                    m: r.m.as_ref().map(|v| v.to_string()),
                    r: r.r.as_ref().map(|v| v.to_string()),
                    lhs: r.lhs.to_string(),
                    rhs: r.rhs.to_string(),
                    status: r.status,
                };
                writeln!(out, "{}", serde_json::to_string(&rec).expect("plain record")).unwrap();
            }
        }
    }
    out
}

fn parse_limit(s: &str) -> Option<Limit> {
    if s == "pole" {
        Some(Limit::Pole)
    } else {
        parse_rational(s).map(Limit::Value)
    }
}

/// Reads back the CSV written by [`emit_report`].
pub fn parse_csv_reports(text: &str) -> Result<Vec<CheckReport>, RenderError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CSV_HEADER => {}
        _ => return Err(RenderError::Parse { line: 1, msg: format!("expected header `{CSV_HEADER}`") }),
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        let err = |msg: &str| RenderError::Parse { line: i + 1, msg: msg.to_string() };
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(err("expected 7 fields"));
        }
        let opt = |s: &str| -> Result<Option<Rational>, RenderError> {
            if s.is_empty() {
                Ok(None)
            } else {
                parse_rational(s).map(Some).ok_or_else(|| err("bad rational"))
            }
        };
        out.push(CheckReport {
            identity: f[0].to_string(),
            n: f[1].parse().map_err(|_| err("bad n"))?,
            m: opt(f[2])?,
            r: opt(f[3])?,
            lhs: parse_limit(f[4]).ok_or_else(|| err("bad lhs"))?,
            rhs: parse_limit(f[5]).ok_or_else(|| err("bad rhs"))?,
            status: f[6].parse().map_err(|e: String| err(&e))?,
        });
    }
    Ok(out)
}

pub const DECOMP_CSV_HEADER: &str = "which,N,m,r,lhs,rhs,status";

/// Decomposition checks as CSV (header first) or JSON lines.
pub fn emit_decompositions(reports: &[DecompositionReport], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        writeln!(out, "{DECOMP_CSV_HEADER}").unwrap();
    }
    for r in reports {
        let split = r.params.split.map(|s| s.to_string()).unwrap_or_default();
        match format {
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.which, r.params.steps, r.params.end, split, r.lhs, r.rhs, r.status
            )
            .unwrap(),
            Format::JsonLines => writeln!(
                out,
                "{}",
                serde_json::json!({
                    "which": r.which.id(),
                    "N": r.params.steps,
                    "m": r.params.end,
                    "r": r.params.split,
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                    "status": r.status,
                })
            )
            .unwrap(),
        }
    }
    out
}
