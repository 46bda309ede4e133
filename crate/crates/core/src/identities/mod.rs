//! Binomial-sum identities `I1..I10` and their exact evaluation.
//!
//! Each identity has the shape `Σ_{k=0}^{n} summand(k) = rhs + constant`,
//! with free parameters drawn from `{m, r}`. Both sides are evaluated over
//! [`Rational`]; summands whose denominator vanishes at the requested point
//! are resolved as `ε`-limits (see [`Term::evaluate`]).

mod registry;
mod term;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{int, Assignment, ExactError, Limit, LinearForm, Rational, Symbol};
use crate::Status;

pub use registry::{identity, mutated, registry};
pub use term::{Binomial, Exponential, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("division by zero in `{0}`")]
    DivisionByZero(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
    I10,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
        IdentityId::I8,
        IdentityId::I9,
        IdentityId::I10,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.index() + 1)
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('I')
            .or_else(|| s.strip_prefix('i'))
            .and_then(|d| d.parse::<usize>().ok())
            .and_then(|i| i.checked_sub(1))
            .and_then(|i| IdentityId::ALL.get(i).copied())
            .ok_or_else(|| format!("unknown identity `{s}` (expected I1..I10)"))
    }
}

/// `Σ_{k=0}^{n} summand = rhs + rhs_constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityDef {
    pub id: IdentityId,
    /// Display name; differs from `id` for derived definitions.
    pub name: String,
    pub free: Vec<Symbol>,
    pub summand: Term,
    pub rhs: Term,
    pub rhs_constant: Rational,
}

/// Values of the free parameters.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Point {
    pub m: Option<Rational>,
    pub r: Option<Rational>,
}

impl Point {
    pub fn new(m: Option<Rational>, r: Option<Rational>) -> Self {
        Point { m, r }
    }

    pub fn mr(m: Rational, r: Rational) -> Self {
        Point { m: Some(m), r: Some(r) }
    }

    pub fn m(m: Rational) -> Self {
        Point { m: Some(m), r: None }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("m", &self.m), ("r", &self.r)]
            .into_iter()
            .filter_map(|(name, v)| v.as_ref().map(|v| format!("{name}={v}")))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl IdentityDef {
    pub fn is_free(&self, s: Symbol) -> bool {
        self.free.contains(&s)
    }

    fn assignment(&self, n: i64, point: &Point) -> Result<Assignment, EvalError> {
        if n < 0 {
            return Err(EvalError::Usage(format!("n must be nonnegative, got {n}")));
        }
        let mut a = Assignment::from([(Symbol::N, int(n))]);
        for (sym, value) in [(Symbol::M, &point.m), (Symbol::R, &point.r)] {
            match (self.is_free(sym), value) {
                (true, Some(v)) => {
                    a.insert(sym, v.clone());
                }
                (true, None) => return Err(EvalError::Usage(format!("{} needs a value for {sym}", self.name))),
                (false, Some(_)) => return Err(EvalError::Usage(format!("{} has no parameter {sym}", self.name))),
                (false, None) => {}
            }
        }
        Ok(a)
    }

    /// Summand at index `k`, `0 ≤ k ≤ n`.
    pub fn eval_term(&self, k: i64, n: i64, point: &Point) -> Result<Limit, EvalError> {
        if !(0..=n).contains(&k) {
            return Err(EvalError::Usage(format!("k={k} outside 0..={n}")));
        }
        let mut a = self.assignment(n, point)?;
        a.insert(Symbol::K, int(k));
        self.summand.evaluate(&a, &self.free)
    }

    /// Right-hand side, additive constant included.
    pub fn eval_rhs(&self, n: i64, point: &Point) -> Result<Limit, EvalError> {
        let a = self.assignment(n, point)?;
        Ok(match self.rhs.evaluate(&a, &self.free)? {
            Limit::Value(v) => Limit::Value(v + &self.rhs_constant),
            Limit::Pole => Limit::Pole,
        })
    }

    /// All `n+1` summands.
    pub fn eval_terms(&self, n: i64, point: &Point) -> Result<Vec<Limit>, EvalError> {
        (0..=n).map(|k| self.eval_term(k, n, point)).collect()
    }

    pub fn eval_lhs(&self, n: i64, point: &Point) -> Result<Limit, EvalError> {
        let mut total = Rational::zero();
        for t in self.eval_terms(n, point)? {
            match t {
                Limit::Value(v) => total += v,
                Limit::Pole => return Ok(Limit::Pole),
            }
        }
        Ok(Limit::Value(total))
    }
}

/// Outcome of evaluating an identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub n: i64,
    pub m: Option<Rational>,
    pub r: Option<Rational>,
    pub lhs: Limit,
    pub rhs: Limit,
    pub status: Status,
}

pub fn eval_identity(def: &IdentityDef, n: i64, point: &Point) -> Result<CheckReport, EvalError> {
    let lhs = def.eval_lhs(n, point)?;
    let rhs = def.eval_rhs(n, point)?;
    let status = match (&lhs, &rhs) {
        (Limit::Value(a), Limit::Value(b)) if a == b => Status::Equal,
        (Limit::Value(_), Limit::Value(_)) => Status::Unequal,
        _ => Status::Pole,
    };
    Ok(CheckReport { identity: def.name.clone(), n, m: point.m.clone(), r: point.r.clone(), lhs, rhs, status })
}

/// Evaluates `def` for every `n` in `0..=n_max` and every point, in that
/// order. Work is spread over the rayon pool; output order is fixed.
pub fn sweep(def: &IdentityDef, n_max: i64, points: &[Point]) -> Result<Vec<CheckReport>, EvalError> {
    let jobs: Vec<(i64, &Point)> = (0..=n_max).flat_map(|n| points.iter().map(move |p| (n, p))).collect();
    jobs.par_iter().map(|(n, p)| eval_identity(def, *n, p)).collect()
}

/// Free-parameter grid: the cartesian product of `ms` and `rs`, restricted
/// to the parameters `def` actually has.
pub fn points_for(def: &IdentityDef, ms: &[Rational], rs: &[Rational]) -> Vec<Point> {
    let ms: Vec<Option<Rational>> =
        if def.is_free(Symbol::M) { ms.iter().cloned().map(Some).collect() } else { vec![None] };
    let rs: Vec<Option<Rational>> =
        if def.is_free(Symbol::R) { rs.iter().cloned().map(Some).collect() } else { vec![None] };
    ms.iter().flat_map(|m| rs.iter().map(move |r| Point::new(m.clone(), r.clone()))).collect()
}

/// Identity produced by the reversal `k → n−k`, `m ↔ r`.
pub fn reversal_target(id: IdentityId) -> Option<IdentityId> {
    match id {
        IdentityId::I1 => Some(IdentityId::I1),
        IdentityId::I2 => Some(IdentityId::I3),
        IdentityId::I3 => Some(IdentityId::I2),
        IdentityId::I4 => Some(IdentityId::I4),
        _ => None,
    }
}

/// Rewrites the summand with `k → n−k` and swaps `m` and `r` on both sides.
pub fn apply_reversal(def: &IdentityDef) -> Result<IdentityDef, EvalError> {
    if reversal_target(def.id).is_none() {
        return Err(EvalError::Usage(format!("reversal is only defined for I1..I4, not {}", def.name)));
    }
    let swap = |s: &str| s.parse::<LinearForm>().expect("static form");
    let summand_map = BTreeMap::from([(Symbol::K, swap("n-k")), (Symbol::M, swap("r")), (Symbol::R, swap("m"))]);
    let rhs_map = BTreeMap::from([(Symbol::M, swap("r")), (Symbol::R, swap("m"))]);
    Ok(IdentityDef {
        id: def.id,
        name: format!("rev({})", def.name),
        free: def.free.clone(),
        summand: def.summand.substitute(&summand_map),
        rhs: def.rhs.substitute(&rhs_map),
        rhs_constant: def.rhs_constant.clone(),
    })
}
