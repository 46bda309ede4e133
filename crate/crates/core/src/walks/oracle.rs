//! Brute-force path counting, independent of the closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Path, Step, WalkError};

/// Largest `N` the exhaustive backend accepts (`2^24` sequences).
pub const EXHAUSTIVE_MAX_STEPS: i64 = 24;

/// A condition on a path. Constraints in a list hold conjunctively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathConstraint {
    EndAt(i64),
    /// Visits the position at some step, step 0 included.
    Touches(i64),
    Avoids(i64),
    /// First visit to `position` happens exactly at `step`.
    FirstReaches { position: i64, step: i64 },
}

impl fmt::Display for PathConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathConstraint::EndAt(m) => write!(f, "end-at({m})"),
            PathConstraint::Touches(r) => write!(f, "touches({r})"),
            PathConstraint::Avoids(r) => write!(f, "avoids({r})"),
            PathConstraint::FirstReaches { position, step } => write!(f, "first-reaches({position}, {step})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Every one of the `2^N` step sequences.
    Exhaustive,
    /// Dynamic programming over the (step, position) lattice.
    DynamicProgramming,
}

/// Counts `steps`-step walks satisfying every constraint.
pub fn oracle_count(backend: Backend, steps: i64, constraints: &[PathConstraint]) -> Result<BigInt, WalkError> {
    if steps < 0 {
        return Err(WalkError::NegativeSteps(steps));
    }
    match backend {
        Backend::Exhaustive => {
            check_exhaustive(steps)?;
            let mut count = 0u64;
            for_each_sequence(steps as usize, |positions| {
                if satisfies(positions, constraints) {
                    count += 1;
                }
                true
            });
            Ok(BigInt::from(count))
        }
        Backend::DynamicProgramming => Ok(dp_count(steps as usize, constraints)),
    }
}

/// Satisfying paths in lexicographic order (`L < R`), at most `limit` of them.
pub fn enumerate_paths(steps: i64, constraints: &[PathConstraint], limit: usize) -> Result<Vec<Path>, WalkError> {
    if steps < 0 {
        return Err(WalkError::NegativeSteps(steps));
    }
    check_exhaustive(steps)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    for_each_sequence(steps as usize, |positions| {
        if satisfies(positions, constraints) {
            let path = positions
                .windows(2)
                .map(|w| if w[1] > w[0] { Step::Left } else { Step::Right })
                .collect();
            out.push(Path(path));
        }
        out.len() < limit
    });
    Ok(out)
}

fn check_exhaustive(steps: i64) -> Result<(), WalkError> {
    if steps > EXHAUSTIVE_MAX_STEPS {
        return Err(WalkError::TooManySteps { steps, max: EXHAUSTIVE_MAX_STEPS });
    }
    Ok(())
}

/// Visits the position sequence of every step sequence in lexicographic
/// order; stops early when `visit` returns false. The most significant bit of
/// the mask is the first step and a clear bit is a left step.
fn for_each_sequence(steps: usize, mut visit: impl FnMut(&[i64]) -> bool) {
    let mut positions = [0i64; EXHAUSTIVE_MAX_STEPS as usize + 1];
    for mask in 0u32..(1u32 << steps) {
        let mut pos = 0;
        for i in 0..steps {
            pos += if mask >> (steps - 1 - i) & 1 == 0 { 1 } else { -1 };
            positions[i + 1] = pos;
        }
        if !visit(&positions[..=steps]) {
            return;
        }
    }
}

fn satisfies(positions: &[i64], constraints: &[PathConstraint]) -> bool {
    constraints.iter().all(|c| match *c {
        PathConstraint::EndAt(m) => positions.last() == Some(&m),
        PathConstraint::Touches(r) => positions.contains(&r),
        PathConstraint::Avoids(r) => !positions.contains(&r),
        PathConstraint::FirstReaches { position, step } => {
            step >= 0
                && (step as usize) < positions.len()
                && positions[step as usize] == position
                && !positions[..step as usize].contains(&position)
        }
    })
}

fn dp_count(steps: usize, constraints: &[PathConstraint]) -> BigInt {
    let n = steps as i64;
    let touch_targets: Vec<i64> = constraints
        .iter()
        .filter_map(|c| match c {
            PathConstraint::Touches(r) => Some(*r),
            _ => None,
        })
        .collect();
    let full_mask = (1usize << touch_targets.len()) - 1;
    let width = (2 * n + 1) as usize;
    let index = |pos: i64| (pos + n) as usize;

    let allowed = |step: i64, pos: i64| {
        constraints.iter().all(|c| match *c {
            PathConstraint::Avoids(r) => pos != r,
            PathConstraint::FirstReaches { position, step: s } => {
                if step < s {
                    pos != position
                } else if step == s {
                    pos == position
                } else {
                    true
                }
            }
            _ => true,
        })
    };
    let touched = |pos: i64| {
        touch_targets
            .iter()
            .enumerate()
            .filter(|(_, r)| **r == pos)
            .fold(0usize, |acc, (i, _)| acc | 1 << i)
    };

    // first-passage constraints at steps beyond N can never be met
    if constraints
        .iter()
        .any(|c| matches!(c, PathConstraint::FirstReaches { step, .. } if *step < 0 || *step > n))
    {
        return BigInt::zero();
    }

    let mut layer = vec![vec![BigInt::zero(); full_mask + 1]; width];
    if allowed(0, 0) {
        layer[index(0)][touched(0)] = BigInt::from(1);
    }
    for step in 1..=n {
        let mut next = vec![vec![BigInt::zero(); full_mask + 1]; width];
        for (i, row) in layer.iter().enumerate() {
            let pos = i as i64 - n;
            for (mask, ways) in row.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                for to in [pos + 1, pos - 1] {
                    if to.abs() > n || !allowed(step, to) {
                        continue;
                    }
                    next[index(to)][mask | touched(to)] += ways;
                }
            }
        }
        layer = next;
    }

    let end_ok = |pos: i64| {
        constraints.iter().all(|c| match *c {
            PathConstraint::EndAt(m) => pos == m,
            _ => true,
        })
    };
    layer
        .iter()
        .enumerate()
        .filter(|(i, _)| end_ok(*i as i64 - n))
        .map(|(_, row)| row[full_mask].clone())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use PathConstraint::*;

    fn both(steps: i64, cs: &[PathConstraint]) -> BigInt {
        let a = oracle_count(Backend::Exhaustive, steps, cs).unwrap();
        let b = oracle_count(Backend::DynamicProgramming, steps, cs).unwrap();
        assert_eq!(a, b, "backends disagree for N={steps} {cs:?}");
        a
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(both(8, &[EndAt(2)]), BigInt::from(56));
        assert_eq!(both(12, &[EndAt(2), Touches(4)]), BigInt::from(220));
        assert_eq!(both(0, &[EndAt(0)]), BigInt::from(1));
        assert_eq!(both(0, &[Avoids(0)]), BigInt::from(0));
        assert_eq!(both(3, &[]), BigInt::from(8));
    }

    #[test]
    fn exhaustive_refuses_long_walks() {
        assert_eq!(
            oracle_count(Backend::Exhaustive, 25, &[]),
            Err(WalkError::TooManySteps { steps: 25, max: 24 })
        );
        assert!(enumerate_paths(25, &[], 1).is_err());
        // DP has no such cap
        assert_eq!(
            oracle_count(Backend::DynamicProgramming, 40, &[EndAt(0)]).unwrap(),
            "137846528820".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn enumerate_examples() {
        let show = |v: Vec<Path>| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(show(enumerate_paths(4, &[EndAt(0), Avoids(-1)], 10).unwrap()), ["LLRR", "LRLR"]);
        assert_eq!(show(enumerate_paths(2, &[EndAt(2)], 10).unwrap()), ["LL"]);
        assert_eq!(show(enumerate_paths(3, &[EndAt(1)], 2).unwrap()), ["LLR", "LRL"]);
        assert_eq!(show(enumerate_paths(3, &[EndAt(1)], 10).unwrap()), ["LLR", "LRL", "RLL"]);
        assert!(enumerate_paths(3, &[EndAt(1)], 0).unwrap().is_empty());
    }

    #[test]
    fn first_reaches_constraint() {
        // RLLL is the only 4-step path to 2 that first reaches 1 at step 3
        let paths = enumerate_paths(4, &[EndAt(2), FirstReaches { position: 1, step: 3 }], 10).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].to_string(), "RLLL");
        assert_eq!(both(4, &[EndAt(2), FirstReaches { position: 1, step: 3 }]), BigInt::from(1));
        assert_eq!(both(4, &[FirstReaches { position: 0, step: 0 }]), BigInt::from(16));
        assert_eq!(both(4, &[FirstReaches { position: 1, step: 9 }]), BigInt::from(0));
    }

    #[test]
    fn backends_agree_on_mixed_constraints() {
        for n in 0..=10i64 {
            for a in -3..=3 {
                for b in -3..=3 {
                    both(n, &[Touches(a), Avoids(b)]);
                    both(n, &[EndAt(a), Touches(b), Touches(-b)]);
                    both(n, &[FirstReaches { position: a, step: (b + 3) }, Avoids(b)]);
                }
            }
        }
    }
}
