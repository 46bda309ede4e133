//! The `pathsum` command line.
//!
//! Exit codes: `0` when every check passed (or output was produced), `1` when
//! at least one check came out unequal or refuted, `2` on usage or domain
//! errors. Data goes to the output stream, diagnostics to the error stream.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exact::{int, parse_rational, ratio, Limit, Rational};
use crate::identities::{self, eval_identity, identity, mutated, points_for, sweep, EvalError, IdentityId};
use crate::prove::{verify_induction, verify_polynomial, CertificateKind, ProveError};
use crate::render::{self, emit_decompositions, emit_report, render_walk, Format, GridScene, RenderError};
use crate::walks::{self, Decomposition, DecompParams, Path, PathConstraint, WalkError};
use crate::Status;

#[derive(Debug, Parser)]
#[command(name = "pathsum", version, about = "Exact random-walk path counts and binomial identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate both sides of an identity over a parameter sweep.
    Verify(VerifyArgs),
    /// Print an exact path count.
    Count(CountArgs),
    /// List paths, one per line, in lexicographic order (L < R).
    Enumerate(EnumerateArgs),
    /// Prove an identity at fixed n by grid evaluation.
    Prove(ProveArgs),
    /// Prove the induction base and steps for I7 or I8.
    Induct(InductArgs),
    /// Check path-count decompositions over a parameter grid.
    Decomp(DecompArgs),
    /// Sample walks with a seeded generator.
    Simulate(SimulateArgs),
    /// Draw a walk as ASCII.
    Render(RenderArgs),
    /// Per-term values of an identity.
    Table(TableArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    identity: IdentityId,
    #[arg(long)]
    n_max: i64,
    /// Values of m: `a..b` (integers, inclusive) or a comma list of `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    /// Values of r, same syntax as --m.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Default m and r to the non-integer set ±1/2, 1/3, 7/5, -3/2, 9/7.
    #[arg(long)]
    rational: bool,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Test hook: evaluate a deliberately broken copy of the identity.
    #[arg(long, hide = true)]
    mutate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Kind {
    P,
    S,
    T,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long, value_enum, ignore_case = true)]
    kind: Kind,
    #[arg(long)]
    steps: i64,
    #[arg(long, allow_hyphen_values = true)]
    end: i64,
    #[arg(long, allow_hyphen_values = true)]
    barrier: Option<i64>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    steps: i64,
    #[arg(long, allow_hyphen_values = true)]
    end: i64,
    /// Only paths that never visit this position.
    #[arg(long, allow_hyphen_values = true)]
    avoid: Option<i64>,
    #[arg(long, default_value_t = 1000)]
    limit: usize,
}

#[derive(Debug, Args)]
struct ProveArgs {
    #[arg(long)]
    identity: IdentityId,
    #[arg(long)]
    n: i64,
    #[arg(long, hide = true)]
    mutate: bool,
}

#[derive(Debug, Args)]
struct InductArgs {
    #[arg(long)]
    identity: IdentityId,
    #[arg(long)]
    n_max: i64,
    #[arg(long, hide = true)]
    mutate: bool,
}

#[derive(Debug, Args)]
struct DecompArgs {
    /// Decomposition id, or `all`.
    #[arg(long)]
    which: String,
    /// Walk lengths N: `a..b`, a comma list, or one integer.
    #[arg(long, default_value = "0..14", allow_hyphen_values = true)]
    steps: String,
    /// End positions m; defaults to every in-range value.
    #[arg(long, allow_hyphen_values = true)]
    end: Option<String>,
    /// Split positions r; defaults to every in-range value.
    #[arg(long, allow_hyphen_values = true)]
    barrier: Option<String>,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[arg(long)]
    steps: i64,
    #[arg(long)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, required_unless_present = "figure")]
    steps: Option<usize>,
    #[arg(long, required_unless_present = "figure")]
    path: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    barrier: Option<i64>,
    /// Also draw the tail after the last barrier visit, mirrored.
    #[arg(long)]
    reflect: bool,
    /// Draw one of the two built-in scenes instead.
    #[arg(long, conflicts_with_all = ["steps", "path", "barrier", "reflect"], value_parser = clap::value_parser!(u8).range(1..=2))]
    figure: Option<u8>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    identity: IdentityId,
    #[arg(long)]
    n_max: i64,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Prove(#[from] ProveError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

/// `Ok(true)` when every check passed.
type Outcome = Result<bool, CliError>;

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Verify(a) => verify(a, out, err),
        Command::Count(a) => count(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Prove(a) => prove(a, out),
        Command::Induct(a) => induct(a, out),
        Command::Decomp(a) => decomp(a, out, err),
        Command::Simulate(a) => simulate(a, out),
        Command::Render(a) => render_cmd(a, out),
        Command::Table(a) => table(a, out),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// `a..b` (inclusive integers) or a comma-separated list of rationals.
pub fn parse_values(text: &str) -> Result<Vec<Rational>, String> {
    if let Some((a, b)) = text.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| format!("bad range start in `{text}`"))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad range end in `{text}`"))?;
        if a > b {
            return Err(format!("empty range `{text}`"));
        }
        return Ok((a..=b).map(int).collect());
    }
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| format!("bad value `{s}` (use p or p/q)")))
        .collect()
}

fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    parse_values(text)?
        .iter()
        .map(|v| crate::exact::as_integer(v).ok_or_else(|| format!("`{v}` is not an integer")))
        .collect()
}

/// Non-integer sample set for parameter sweeps.
pub fn rational_samples() -> Vec<Rational> {
    vec![ratio(1, 2), ratio(-1, 2), ratio(1, 3), ratio(7, 5), ratio(-3, 2), ratio(9, 7)]
}

fn chosen_identity(id: IdentityId, mutate: bool) -> Result<identities::IdentityDef, CliError> {
    if mutate {
        mutated(id).ok_or_else(|| CliError::Usage(format!("no mutant registered for {id}")))
    } else {
        Ok(identity(id).clone())
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let def = chosen_identity(a.identity, a.mutate)?;
    let default = || if a.rational { rational_samples() } else { (-10..=10).map(int).collect() };
    let values = |v: &Option<String>| -> Result<Vec<Rational>, CliError> {
        match v {
            Some(t) => parse_values(t).map_err(CliError::Usage),
            None => Ok(default()),
        }
    };
    for (sym, given) in [("m", &a.m), ("r", &a.r)] {
        let free = def.free.iter().any(|s| s.name() == sym);
        if given.is_some() && !free {
            return Err(CliError::Usage(format!("{} has no parameter {sym}", def.name)));
        }
    }
    if a.n_max < 0 {
        return Err(CliError::Usage("--n-max must be nonnegative".into()));
    }
    let points = points_for(&def, &values(&a.m)?, &values(&a.r)?);
    let reports = sweep(&def, a.n_max, &points)?;
    out.write_all(emit_report(&reports, a.format).as_bytes())?;
    let poles = reports.iter().filter(|r| r.status == Status::Pole).count();
    let unequal = reports.iter().filter(|r| r.status == Status::Unequal).count();
    if poles > 0 {
        writeln!(err, "{poles} pole point(s) reported and skipped")?;
    }
    if unequal > 0 {
        writeln!(err, "{unequal} unequal point(s)")?;
    }
    Ok(unequal == 0)
}

fn count(a: CountArgs, out: &mut dyn Write) -> Outcome {
    let need_barrier = || a.barrier.ok_or_else(|| CliError::Usage("--barrier is required for S and T".into()));
    let value: BigInt = match a.kind {
        Kind::P => walks::count_paths(a.steps, a.end),
        Kind::S => walks::count_touching(a.steps, a.end, need_barrier()?)?,
        Kind::T => walks::count_avoiding(a.steps, a.end, need_barrier()?)?,
    };
    writeln!(out, "{value}")?;
    Ok(true)
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let mut constraints = vec![PathConstraint::EndAt(a.end)];
    constraints.extend(a.avoid.map(PathConstraint::Avoids));
    for p in walks::enumerate_paths(a.steps, &constraints, a.limit)? {
        writeln!(out, "{p}")?;
    }
    Ok(true)
}

fn prove(a: ProveArgs, out: &mut dyn Write) -> Outcome {
    let def = chosen_identity(a.identity, a.mutate)?;
    let cert = verify_polynomial(&def, a.n)?;
    writeln!(out, "{cert}")?;
    Ok(cert.is_verified())
}

fn induct(a: InductArgs, out: &mut dyn Write) -> Outcome {
    let def = chosen_identity(a.identity, a.mutate)?;
    let certs = verify_induction(&def, a.n_max)?;
    for c in &certs {
        let kind = match c.kind {
            CertificateKind::InductionBase => "base",
            _ => "step",
        };
        writeln!(out, "n={} {kind}: {c}", c.n)?;
    }
    Ok(certs.iter().all(|c| c.is_verified()))
}

fn decomp(a: DecompArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let which: Vec<Decomposition> = if a.which == "all" {
        Decomposition::ALL.to_vec()
    } else {
        vec![a.which.parse().map_err(CliError::Usage)?]
    };
    let steps = parse_ints(&a.steps).map_err(CliError::Usage)?;
    let ends = a.end.as_deref().map(parse_ints).transpose().map_err(CliError::Usage)?;
    let splits = a.barrier.as_deref().map(parse_ints).transpose().map_err(CliError::Usage)?;
    let mut reports = Vec::new();
    for d in which {
        for &n in &steps {
            let params: Vec<DecompParams> = if ends.is_none() && splits.is_none() {
                walks::valid_grid(d, n).into_iter().filter(|p| p.steps == n).collect()
            } else {
                let ms = ends.clone().unwrap_or_else(|| (-n..=n).collect());
                let rs: Vec<Option<i64>> = match (&splits, d.uses_split()) {
                    (_, false) => vec![None],
                    (Some(rs), true) => rs.iter().copied().map(Some).collect(),
                    (None, true) => (-n..=n).map(Some).collect(),
                };
                ms.iter()
                    .flat_map(|&m| rs.iter().map(move |&split| DecompParams { steps: n, end: m, split }))
                    .collect()
            };
            reports.extend(params.into_iter().map(|p| walks::check_decomposition(d, p)));
        }
    }
    out.write_all(emit_decompositions(&reports, a.format).as_bytes())?;
    let unequal = reports.iter().filter(|r| r.status == Status::Unequal).count();
    if unequal > 0 {
        writeln!(err, "{unequal} unequal decomposition check(s)")?;
    }
    Ok(unequal == 0)
}

fn simulate(a: SimulateArgs, out: &mut dyn Write) -> Outcome {
    let h = walks::simulate(a.steps, a.samples, a.seed)?;
    let total = BigInt::from(1) << a.steps.max(0) as usize;
    writeln!(out, "position,ends,frequency,exact,touched")?;
    for pos in -a.steps..=a.steps {
        let ends = h.ends.get(&pos).copied().unwrap_or(0);
        let exact = Rational::new(walks::count_paths(a.steps, pos), total.clone());
        let touched = h.touches.get(&pos).copied().unwrap_or(0);
        writeln!(
            out,
            "{pos},{ends},{:.6},{:.6},{touched}",
            h.frequency(pos),
            exact.to_f64().unwrap_or(f64::NAN)
        )?;
    }
    Ok(true)
}

fn render_cmd(a: RenderArgs, out: &mut dyn Write) -> Outcome {
    let scene = match a.figure {
        Some(1) => render::figure_one(),
        Some(_) => render::figure_two(),
        None => {
            let path: Path = a.path.unwrap_or_default().parse()?;
            let steps = a.steps.unwrap_or(path.len());
            if steps != path.len() {
                return Err(CliError::Usage(format!("--steps {steps} but the path has {} steps", path.len())));
            }
            GridScene::fitted(steps, Some(path), a.barrier, a.reflect)
        }
    };
    out.write_all(render_walk(&scene)?.as_bytes())?;
    Ok(true)
}

fn table(a: TableArgs, out: &mut dyn Write) -> Outcome {
    let def = identity(a.identity);
    let single = |v: &Option<String>, sym: &str| -> Result<Option<Rational>, CliError> {
        let free = def.free.iter().any(|s| s.name() == sym);
        match (v, free) {
            (Some(t), true) => Ok(Some(parse_rational(t).ok_or_else(|| CliError::Usage(format!("bad --{sym} `{t}`")))?)),
            (Some(_), false) => Err(CliError::Usage(format!("{} has no parameter {sym}", def.name))),
            (None, true) => Ok(Some(int(0))),
            (None, false) => Ok(None),
        }
    };
    let point = identities::Point::new(single(&a.m, "m")?, single(&a.r, "r")?);
    writeln!(out, "identity,n,k,term,partial_sum,rhs")?;
    let mut ok = true;
    for n in 0..=a.n_max {
        let rep = eval_identity(def, n, &point)?;
        ok &= rep.status != Status::Unequal;
        let mut partial = Some(Rational::from_integer(0.into()));
        for (k, t) in def.eval_terms(n, &point)?.into_iter().enumerate() {
            partial = match (&partial, &t) {
                (Some(s), Limit::Value(v)) => Some(s + v),
                _ => None,
            };
            let shown = partial.as_ref().map_or("pole".to_string(), |s| s.to_string());
            writeln!(out, "{},{n},{k},{t},{shown},{}", def.name, rep.rhs)?;
        }
    }
    Ok(ok)
}
