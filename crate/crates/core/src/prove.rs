//! Fixed-`n` proofs by evaluation.
//!
//! For fixed `n`, both sides of `I1..I4`, `I7`, `I8` are rational functions of
//! the free parameters. Multiplying `lhs − rhs` by the least common multiple
//! of every denominator form (all of which are linear in `m` and `r`) leaves a
//! polynomial whose degree in each variable is at most `2n+2`. A polynomial
//! of per-variable degree `≤ D` that vanishes on a product grid with `D+1`
//! distinct values per variable is identically zero, so exact equality on
//! such a grid proves the identity for that `n`.
//!
//! Grid values are `m = 1/2 + i` and `r = 1/3 + j`: every denominator form
//! has integer coefficients and a unit coefficient on `m`, `r` or `m+r`, so
//! none of them can vanish there.

use std::fmt;

use thiserror::Error;

use crate::exact::{int, ratio, Assignment, Limit, Rational, Symbol};
use crate::identities::{EvalError, IdentityDef, IdentityId, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProveError {
    #[error("{0} is not a polynomial identity in its parameters; only I1..I4, I7, I8 are supported")]
    Unsupported(String),
    #[error("{identity}: pole at grid point {at} (n={n}); the grid offsets do not avoid a denominator")]
    GridPole { identity: String, n: i64, at: String },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// `Σ summands = rhs` at fixed `n`.
    Polynomial,
    /// Induction base `n = 0`.
    InductionBase,
    /// `rhs(n) − rhs(n−1) = summand(n)`.
    InductionStep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    RefutedAt { m: Rational, r: Option<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofCertificate {
    pub identity: String,
    pub kind: CertificateKind,
    pub n: i64,
    pub degree_bound: usize,
    pub m_grid: Vec<Rational>,
    /// `None` when `r` is not a parameter.
    pub r_grid: Option<Vec<Rational>>,
    pub evaluations: usize,
    pub verdict: Verdict,
}

impl ProofCertificate {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

impl fmt::Display for ProofCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Verified => write!(f, "verified ({} evaluations)", self.evaluations),
            Verdict::RefutedAt { m, r: Some(r) } => write!(f, "refuted at m={m} r={r}"),
            Verdict::RefutedAt { m, r: None } => write!(f, "refuted at m={m}"),
        }
    }
}

fn supported(def: &IdentityDef) -> Result<(), ProveError> {
    use IdentityId::*;
    match def.id {
        I1 | I2 | I3 | I4 | I7 | I8 => Ok(()),
        _ => Err(ProveError::Unsupported(def.name.clone())),
    }
}

/// Per-variable degree bound `3n + 12`; comfortably above the `2n + 2`
/// reached by any supported identity.
pub fn degree_bound(def: &IdentityDef, n: i64) -> Result<usize, ProveError> {
    supported(def)?;
    if n < 0 {
        return Err(EvalError::Usage(format!("n must be nonnegative, got {n}")).into());
    }
    Ok(3 * n as usize + 12)
}

/// `1/2, 3/2, ..., 1/2 + d`.
pub fn m_grid(d: usize) -> Vec<Rational> {
    (0..=d as i64).map(|i| ratio(1, 2) + int(i)).collect()
}

/// `1/3, 4/3, ..., 1/3 + d`.
pub fn r_grid(d: usize) -> Vec<Rational> {
    (0..=d as i64).map(|j| ratio(1, 3) + int(j)).collect()
}

fn grids(def: &IdentityDef, d: usize) -> (Vec<Rational>, Option<Vec<Rational>>) {
    (m_grid(d), def.is_free(Symbol::R).then(|| r_grid(d)))
}

fn grid_points(m: &[Rational], r: &Option<Vec<Rational>>) -> Vec<Point> {
    match r {
        Some(rs) => m.iter().flat_map(|m| rs.iter().map(move |r| Point::mr(m.clone(), r.clone()))).collect(),
        None => m.iter().cloned().map(Point::m).collect(),
    }
}

/// True when no denominator form of either side, for any `k`, vanishes on
/// the grid used at this `n`.
pub fn grid_pole_free(def: &IdentityDef, n: i64) -> Result<bool, ProveError> {
    let d = degree_bound(def, n)?;
    let (ms, rs) = grids(def, d);
    for p in grid_points(&ms, &rs) {
        let mut a = Assignment::from([(Symbol::N, int(n))]);
        if let Some(m) = &p.m {
            a.insert(Symbol::M, m.clone());
        }
        if let Some(r) = &p.r {
            a.insert(Symbol::R, r.clone());
        }
        for k in 0..=n {
            a.insert(Symbol::K, int(k));
            if !def.summand.vanishing_denominators(&a)?.is_empty() || !def.rhs.vanishing_denominators(&a)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_grid(
    def: &IdentityDef,
    n: i64,
    kind: CertificateKind,
    mut equal_at: impl FnMut(&Point) -> Result<(Limit, Limit), EvalError>,
) -> Result<ProofCertificate, ProveError> {
    let d = degree_bound(def, n)?;
    let (m_grid, r_grid) = grids(def, d);
    let mut evaluations = 0;
    let mut verdict = Verdict::Verified;
    for p in grid_points(&m_grid, &r_grid) {
        evaluations += 1;
        let (lhs, rhs) = equal_at(&p)?;
        let pole = || ProveError::GridPole { identity: def.name.clone(), n, at: format!("{p}") };
        let (Limit::Value(lhs), Limit::Value(rhs)) = (lhs, rhs) else {
            return Err(pole());
        };
        if lhs != rhs {
            verdict = Verdict::RefutedAt { m: p.m.clone().unwrap(), r: p.r.clone() };
            break;
        }
    }
    Ok(ProofCertificate { identity: def.name.clone(), kind, n, degree_bound: d, m_grid, r_grid, evaluations, verdict })
}

/// Proves (or refutes) the identity at fixed `n` on the `(D+1)^vars` grid.
pub fn verify_polynomial(def: &IdentityDef, n: i64) -> Result<ProofCertificate, ProveError> {
    check_grid(def, n, CertificateKind::Polynomial, |p| Ok((def.eval_lhs(n, p)?, def.eval_rhs(n, p)?)))
}

/// Base case `n = 0` plus the steps `rhs(n) − rhs(n−1) = summand(k = n)` for
/// `1 ≤ n ≤ n_max`, each proved on its own grid. Only for `I7` and `I8`,
/// whose summands do not depend on `n`.
pub fn verify_induction(def: &IdentityDef, n_max: i64) -> Result<Vec<ProofCertificate>, ProveError> {
    if !matches!(def.id, IdentityId::I7 | IdentityId::I8) {
        return Err(ProveError::Unsupported(format!("{} (induction is for I7 and I8)", def.name)));
    }
    let mut out = Vec::new();
    let mut base = verify_polynomial(def, 0)?;
    base.kind = CertificateKind::InductionBase;
    out.push(base);
    for n in 1..=n_max {
        let cert = check_grid(def, n, CertificateKind::InductionStep, |p| {
            let step = match (def.eval_rhs(n, p)?, def.eval_rhs(n - 1, p)?) {
                (Limit::Value(a), Limit::Value(b)) => Limit::Value(a - b),
                _ => Limit::Pole,
            };
            Ok((step, def.eval_term(n, n, p)?))
        })?;
        out.push(cert);
    }
    Ok(out)
}
