//! Path counting for the simple one-dimensional random walk.
//!
//! A walk starts at position 0 and takes `N` unit steps. A left step moves
//! the position by `+1`, a right step by `-1`, so a walk of `N` steps ending at
//! `m` has `(N+m)/2` left steps and `(N-m)/2` right steps.
//!
//! All counting functions are total: specs that cannot be realized (wrong
//! parity, `|m| > N`, negative `N`) count zero.

mod decompose;
mod oracle;
mod simulate;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{choose, int, Rational};

pub use decompose::{
    check_decomposition, check_recursion, first_passage_count, valid_grid, DecompParams, Decomposition,
    DecompositionReport, RecursionReport,
};
pub use oracle::{enumerate_paths, oracle_count, Backend, PathConstraint, EXHAUSTIVE_MAX_STEPS};
pub use simulate::{simulate, Histogram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("end position must be nonnegative, got {0}")]
    NegativeEnd(i64),
    #[error("barrier must be negative, got {0}")]
    NonNegativeBarrier(i64),
    #[error("no walk of {steps} steps ends at {end}")]
    Unrealizable { steps: i64, end: i64 },
    #[error("exhaustive enumeration supports at most {max} steps, got {steps}")]
    TooManySteps { steps: i64, max: i64 },
    #[error("step count must be nonnegative, got {0}")]
    NegativeSteps(i64),
    #[error("barrier depth must be 1, 2, 3 or 4, got {0}")]
    UnsupportedDepth(u32),
    #[error("{0}")]
    Domain(String),
    #[error("invalid path `{0}`: use only L and R")]
    InvalidPath(String),
    #[error("samples must be at least 1")]
    NoSamples,
}

/// One step of a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `+1`
    Left,
    /// `-1`
    Right,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Left => 1,
            Step::Right => -1,
        }
    }
}

/// A finite sequence of steps starting at position 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions after 0, 1, ..., N steps.
    pub fn positions(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut pos = 0;
        out.push(pos);
        for s in &self.0 {
            pos += s.delta();
            out.push(pos);
        }
        out
    }

    pub fn end(&self) -> i64 {
        self.0.iter().map(|s| s.delta()).sum()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::Left => "L",
                Step::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Step::Left),
                'R' | 'r' => Ok(Step::Right),
                _ => Err(WalkError::InvalidPath(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path)
    }
}

/// Walk of `steps` steps ending at `end`, optionally with a barrier position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkSpec {
    pub steps: i64,
    pub end: i64,
    pub barrier: Option<i64>,
}

impl WalkSpec {
    pub fn new(steps: i64, end: i64) -> Self {
        WalkSpec { steps, end, barrier: None }
    }

    pub fn with_barrier(self, barrier: i64) -> Self {
        WalkSpec { barrier: Some(barrier), ..self }
    }

    pub fn is_realizable(&self) -> bool {
        self.steps >= 0 && (self.steps + self.end).rem_euclid(2) == 0 && self.end.abs() <= self.steps
    }

    /// `μ = (N+m)/2`, the number of left steps.
    pub fn left_steps(&self) -> Option<i64> {
        self.is_realizable().then(|| (self.steps + self.end) / 2)
    }

    pub fn right_steps(&self) -> Option<i64> {
        self.is_realizable().then(|| (self.steps - self.end) / 2)
    }
}

/// `P(N, m)`: number of `N`-step walks ending at `m`.
pub fn count_paths(steps: i64, end: i64) -> BigInt {
    match WalkSpec::new(steps, end).left_steps() {
        Some(mu) => choose(steps, mu),
        None => BigInt::zero(),
    }
}

/// `S(N, m, r)`: walks ending at `m ≥ 0` that visit `r` at least once
/// (step 0 and step `N` included).
pub fn count_touching(steps: i64, end: i64, barrier: i64) -> Result<BigInt, WalkError> {
    if end < 0 {
        return Err(WalkError::NegativeEnd(end));
    }
    Ok(if (0..=end).contains(&barrier) {
        count_paths(steps, end)
    } else {
        // reflect the tail after the last visit to the barrier
        count_paths(steps, 2 * barrier - end)
    })
}

/// `T(N, m, r)`: walks ending at `m ≥ 0` that never visit the barrier `r < 0`.
pub fn count_avoiding(steps: i64, end: i64, barrier: i64) -> Result<BigInt, WalkError> {
    if barrier >= 0 {
        return Err(WalkError::NonNegativeBarrier(barrier));
    }
    Ok(count_paths(steps, end) - count_touching(steps, end, barrier)?)
}

/// Barrier-avoiding count for any end position and any barrier below the
/// start. Falls back to the lattice DP when `end < 0`, where the
/// reflection closed forms are not used.
pub fn avoiding_any(steps: i64, end: i64, barrier: i64) -> Result<BigInt, WalkError> {
    if barrier >= 0 {
        return Err(WalkError::NonNegativeBarrier(barrier));
    }
    if steps < 0 {
        return Ok(BigInt::zero());
    }
    if end >= 0 {
        return count_avoiding(steps, end, barrier);
    }
    oracle_count(
        Backend::DynamicProgramming,
        steps,
        &[PathConstraint::EndAt(end), PathConstraint::Avoids(barrier)],
    )
}

/// Closed forms for `T(N, m, -d)`, `d = 1..=4`, in terms of `μ = (N+m)/2`.
pub fn closed_form_t(steps: i64, end: i64, depth: u32) -> Result<Rational, WalkError> {
    if end < 0 {
        return Err(WalkError::NegativeEnd(end));
    }
    let spec = WalkSpec::new(steps, end);
    let mu = spec.left_steps().ok_or(WalkError::Unrealizable { steps, end })?;
    let (n, m) = (int(steps), int(end));
    let mu_plus = |i: i64| int(mu + i);
    let base = Rational::from_integer(choose(steps, mu));
    let one = Rational::one();
    let factor = match depth {
        1 => (&m + &one) / mu_plus(1),
        2 => (&m + int(2)) * (&n + &one) / (mu_plus(1) * mu_plus(2)),
        3 => {
            let bracket = (&m + &one) * (&m + int(5)) + int(3) * (&n + &one) * (&n + &one);
            (&m + int(3)) * bracket / (int(4) * mu_plus(1) * mu_plus(2) * mu_plus(3))
        }
        4 => {
            let bracket = (&m + int(2)) * (&m + int(6)) + &n * (&n + int(2));
            (&m + int(4)) * (&n + &one) * bracket
                / (int(2) * mu_plus(1) * mu_plus(2) * mu_plus(3) * mu_plus(4))
        }
        d => return Err(WalkError::UnsupportedDepth(d)),
    };
    Ok(factor * base)
}
