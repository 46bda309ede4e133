//! Ways of splitting the set of walks into disjoint classes, each counted as
//! a product of smaller walk counts. Every decomposition is checked exactly
//! against the direct count.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{avoiding_any, count_paths, count_touching, WalkError, WalkSpec};
use crate::Status;

/// The nine decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decomposition {
    /// `P(N,m)` by the step at which the `(r+1)`-th left step is taken.
    StepLineLeft,
    /// `P(N,m)` by the step at which the `(r+1)`-th right step is taken.
    StepLineRight,
    /// `P(N,m)` by the first visit to `r`, `1 ≤ r ≤ m`.
    FirstPassage,
    /// `P(N,m)` by the last visit to `r`, `0 ≤ r < m`.
    LastPassage,
    /// `S(N,m,r) - S(N,m,r-1)` for `r < 0`: walks touching `r` but never `r-1`.
    BarrierBand,
    /// `T(N,0,-1)` by the position `2k` held at the even step `r`.
    AvoidSplit,
    /// `T(N,0,-1)` by the step at which the `(r+1)`-th left step is taken.
    AvoidStepLine,
    /// `T(N,m,-1)` by the first visit to position 2.
    AvoidFirstTwo,
    /// `T(N,m,-1)` by the first visit to position 3.
    AvoidFirstThree,
}

impl Decomposition {
    pub const ALL: [Decomposition; 9] = [
        Decomposition::StepLineLeft,
        Decomposition::StepLineRight,
        Decomposition::FirstPassage,
        Decomposition::LastPassage,
        Decomposition::BarrierBand,
        Decomposition::AvoidSplit,
        Decomposition::AvoidStepLine,
        Decomposition::AvoidFirstTwo,
        Decomposition::AvoidFirstThree,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Decomposition::StepLineLeft => "step-left",
            Decomposition::StepLineRight => "step-right",
            Decomposition::FirstPassage => "first-passage",
            Decomposition::LastPassage => "last-passage",
            Decomposition::BarrierBand => "barrier-band",
            Decomposition::AvoidSplit => "avoid-split",
            Decomposition::AvoidStepLine => "avoid-step-line",
            Decomposition::AvoidFirstTwo => "avoid-first-2",
            Decomposition::AvoidFirstThree => "avoid-first-3",
        }
    }

    /// Whether the decomposition takes a split position `r`.
    pub fn uses_split(self) -> bool {
        !matches!(self, Decomposition::AvoidFirstTwo | Decomposition::AvoidFirstThree)
    }

    /// `None` when the parameters are in range, otherwise why not.
    fn side_condition(self, p: &DecompParams) -> Option<String> {
        let spec = WalkSpec::new(p.steps, p.end);
        if !spec.is_realizable() {
            return Some(format!("N={} m={} is not realizable", p.steps, p.end));
        }
        let (n, m) = (p.steps, p.end);
        let mu = (n + m) / 2;
        let nu = (n - m) / 2;
        let r = match (self.uses_split(), p.split) {
            (true, Some(r)) => r,
            (true, None) => return Some("split position r is required".into()),
            (false, _) => 0,
        };
        let fail = |ok: bool, why: &str| (!ok).then(|| why.to_string());
        match self {
            Decomposition::StepLineLeft => fail((0..mu).contains(&r), "needs 0 <= r < (N+m)/2"),
            Decomposition::StepLineRight => fail((0..nu).contains(&r), "needs 0 <= r < (N-m)/2"),
            Decomposition::FirstPassage => fail((1..=m).contains(&r), "needs 1 <= r <= m"),
            Decomposition::LastPassage => fail((0..m).contains(&r), "needs 0 <= r < m"),
            Decomposition::BarrierBand => fail(m >= 0 && r < 0, "needs m >= 0 and r < 0"),
            Decomposition::AvoidSplit => {
                fail(m == 0 && r % 2 == 0 && (0..=n).contains(&r), "needs m = 0 and even 0 <= r <= N")
            }
            Decomposition::AvoidStepLine => fail(m == 0 && (0..n / 2).contains(&r), "needs m = 0 and 0 <= r < N/2"),
            Decomposition::AvoidFirstTwo => fail(m >= 2, "needs m >= 2"),
            Decomposition::AvoidFirstThree => fail(m >= 3, "needs m >= 3"),
        }
    }

    /// Left side and the list of summands.
    fn evaluate(self, p: &DecompParams) -> Result<(BigInt, Vec<BigInt>), WalkError> {
        let (n, m) = (p.steps, p.end);
        let r = p.split.unwrap_or(0);
        let mu = (n + m) / 2;
        let nu = (n - m) / 2;
        let t = |a: i64, b: i64, c: i64| avoiding_any(a, b, c);
        let pp = count_paths;
        let terms: Vec<BigInt> = match self {
            Decomposition::StepLineLeft => {
                (0..=nu).map(|k| pp(r + k, r - k) * pp(n - r - k - 1, m - r + k - 1)).collect()
            }
            Decomposition::StepLineRight => {
                (0..=mu).map(|k| pp(r + k, k - r) * pp(n - r - k - 1, m + r - k + 1)).collect()
            }
            Decomposition::FirstPassage => (0..=nu)
                .map(|k| Ok(t(r + 2 * k - 1, r - 1, -1)? * pp(n - r - 2 * k, m - r)))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::LastPassage => (0..=nu)
                .map(|k| Ok(pp(r + 2 * k, r) * t(n - r - 2 * k - 1, m - r - 1, -1)?))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::BarrierBand => (0..=nu + r)
                .map(|k| Ok(t(2 * k - r - 1, -r - 1, -1)? * t(n - 2 * k + r, m - r, -1)?))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::AvoidSplit => (0..=r / 2)
                .map(|k| Ok(t(r, 2 * k, -1)? * t(n - r, 2 * k, -1)?))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::AvoidStepLine => (0..=r)
                .map(|k| Ok(t(r + k, r - k, -1)? * t(n - r - k - 1, r - k + 1, -1)?))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::AvoidFirstTwo => (0..=nu)
                .map(|k| t(n - 2 * k - 2, m - 2, -3))
                .collect::<Result<_, WalkError>>()?,
            Decomposition::AvoidFirstThree => (0..=nu)
                .map(|k| Ok(t(n - 2 * k - 3, m - 3, -4)? * (BigInt::one() << k as usize)))
                .collect::<Result<_, WalkError>>()?,
        };
        let lhs = match self {
            Decomposition::StepLineLeft
            | Decomposition::StepLineRight
            | Decomposition::FirstPassage
            | Decomposition::LastPassage => pp(n, m),
            Decomposition::BarrierBand => count_touching(n, m, r)? - count_touching(n, m, r - 1)?,
            Decomposition::AvoidSplit | Decomposition::AvoidStepLine => t(n, 0, -1)?,
            Decomposition::AvoidFirstTwo | Decomposition::AvoidFirstThree => t(n, m, -1)?,
        };
        Ok((lhs, terms))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Decomposition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Decomposition::ALL
            .into_iter()
            .find(|d| d.id() == s)
            .ok_or_else(|| {
                let ids: Vec<_> = Decomposition::ALL.iter().map(|d| d.id()).collect();
                format!("unknown decomposition `{s}` (expected one of: {})", ids.join(", "))
            })
    }
}

/// Walk length, end position and (where used) the split position `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecompParams {
    pub steps: i64,
    pub end: i64,
    pub split: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub which: Decomposition,
    pub params: DecompParams,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub terms: Vec<BigInt>,
    pub status: Status,
    /// Set when the check was skipped.
    pub reason: Option<String>,
}

pub fn check_decomposition(which: Decomposition, params: DecompParams) -> DecompositionReport {
    let skipped = |reason: String| DecompositionReport {
        which,
        params,
        lhs: BigInt::zero(),
        rhs: BigInt::zero(),
        terms: Vec::new(),
        status: Status::Skipped,
        reason: Some(reason),
    };
    if let Some(reason) = which.side_condition(&params) {
        return skipped(reason);
    }
    match which.evaluate(&params) {
        Ok((lhs, terms)) => {
            let rhs: BigInt = terms.iter().sum();
            let status = if lhs == rhs { Status::Equal } else { Status::Unequal };
            DecompositionReport { which, params, lhs, rhs, terms, status, reason: None }
        }
        Err(e) => skipped(e.to_string()),
    }
}

/// Every in-range parameter set with `N <= max_steps`.
pub fn valid_grid(which: Decomposition, max_steps: i64) -> Vec<DecompParams> {
    let mut out = Vec::new();
    for n in 0..=max_steps {
        for m in (-n..=n).step_by(2) {
            let splits: Vec<Option<i64>> =
                if which.uses_split() { (-n..=n).map(Some).collect() } else { vec![None] };
            for split in splits {
                let p = DecompParams { steps: n, end: m, split };
                if which.side_condition(&p).is_none() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Walks of `N` steps to `m` whose first visit to `r ≥ 1` happens at step `r + 2k`.
pub fn first_passage_count(steps: i64, end: i64, r: i64, k: i64) -> Result<BigInt, WalkError> {
    if r < 1 || k < 0 {
        return Err(WalkError::Domain(format!("first passage needs r >= 1 and k >= 0, got r={r} k={k}")));
    }
    // prefix: stay below r for r+2k-1 steps and end at r-1 (mirror of a walk avoiding -1)
    Ok(avoiding_any(r + 2 * k - 1, r - 1, -1)? * count_paths(steps - r - 2 * k, end - r))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub steps: i64,
    pub end: i64,
    pub barrier: i64,
    /// `S(N+1, m+1, r)`
    pub lhs: BigInt,
    /// `S(N, m, r)` and `S(N, m+2, r)`
    pub terms: [BigInt; 2],
    pub status: Status,
}

/// Checks `S(N+1, m+1, r) = S(N, m, r) + S(N, m+2, r)` on the exact counts.
///
/// The relation fails when `r = m+1`: a walk may touch `r` only at its final
/// step, which neither one-step-shorter class accounts for.
pub fn check_recursion(steps: i64, end: i64, barrier: i64) -> Result<RecursionReport, WalkError> {
    if end < 0 {
        return Err(WalkError::NegativeEnd(end));
    }
    let lhs = count_touching(steps + 1, end + 1, barrier)?;
    let terms = [count_touching(steps, end, barrier)?, count_touching(steps, end + 2, barrier)?];
    let status = if lhs == &terms[0] + &terms[1] { Status::Equal } else { Status::Unequal };
    Ok(RecursionReport { steps, end, barrier, lhs, terms, status })
}
