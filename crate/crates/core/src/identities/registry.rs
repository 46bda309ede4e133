use std::sync::OnceLock;

use num_traits::Zero;

use super::term::Term;
use super::{IdentityDef, IdentityId};
use crate::exact::{int, Rational, Symbol};

const MR: &[Symbol] = &[Symbol::M, Symbol::R];
const M: &[Symbol] = &[Symbol::M];

fn def(id: IdentityId, free: &[Symbol], summand: Term, rhs: Term, rhs_constant: Rational) -> IdentityDef {
    IdentityDef { id, name: id.to_string(), free: free.to_vec(), summand, rhs, rhs_constant }
}

fn two_binomials(t: Term) -> Term {
    t.binom("m+2k", "k").binom("2n+r-2k", "n-k")
}

fn build(id: IdentityId) -> IdentityDef {
    use IdentityId::*;
    let zero = Rational::zero();
    match id {
        I1 => def(
            id,
            MR,
            Term::new().binom("m+k", "k").binom("n+r-k", "n-k"),
            Term::new().binom("n+m+r+1", "n"),
            zero,
        ),
        I2 => def(
            id,
            MR,
            two_binomials(Term::new().times("m+1").over("m+k+1")),
            Term::new().binom("2n+m+r+1", "n"),
            zero,
        ),
        I3 => def(
            id,
            MR,
            two_binomials(Term::new().times("r+1").over("n+r-k+1")),
            Term::new().binom("2n+m+r+1", "n"),
            zero,
        ),
        I4 => def(
            id,
            MR,
            two_binomials(Term::new().times("m+1").times("r+1").over("m+k+1").over("n+r-k+1")),
            Term::new().times("m+r+2").over("n+m+r+2").binom("2n+m+r+1", "n"),
            zero,
        ),
        I5 => def(
            id,
            M,
            Term::new()
                .times("2k+1")
                .times("2k+1")
                .over("n+k+1")
                .over("m+k+1")
                .binom("2m", "m+k")
                .binom("2n", "n+k"),
            Term::new().over("n+m+1").binom("2n+2m", "n+m"),
            zero,
        ),
        I6 => def(
            id,
            M,
            Term::new().times("k+1").times("k+2").over("m+k+2").binom("2m+k+1", "m").binom("2n-k", "n"),
            Term::new().times("n+1").over("n+m+2").binom("2n+2m+2", "n+m+1"),
            zero,
        ),
        I7 => def(
            id,
            M,
            Term::new()
                .numerator_sum(&[&["m+1", "m+5"], &["3", "m+2k+1", "m+2k+1"]])
                .over("m+k+1")
                .over("m+k+2")
                .over("m+k+3")
                .binom("m+2k", "k"),
            Term::new().scaled(int(4)).over("n+m+3").binom("2n+m+2", "n"),
            zero,
        ),
        I8 => def(
            id,
            M,
            Term::new()
                .numerator_sum(&[&["m+1", "m+5"], &["m+2k-1", "m+2k+1"]])
                .over("m+k+1")
                .over("m+k+2")
                .over("m+k+3")
                .pow(int(2), "-k")
                .binom("m+2k", "k"),
            Term::new().pow(int(2), "1-n").over("n+m+3").binom("2n+m+2", "n"),
            zero,
        ),
        I9 => def(
            id,
            &[],
            Term::new().scaled(int(3)).over("k+2").binom("2k", "k+1"),
            Term::new().scaled(int(2)).over("n+2").binom("2n+1", "n"),
            int(-1),
        ),
        I10 => def(
            id,
            &[],
            Term::new().scaled(int(4)).over("k+3").pow(int(2), "-k").binom("2k+1", "k+2"),
            Term::new().pow(int(2), "-n").over("n+3").binom("2n+4", "n+2"),
            int(-2),
        ),
    }
}

/// The ten identities, in order `I1..I10`.
pub fn registry() -> &'static [IdentityDef] {
    static REGISTRY: OnceLock<Vec<IdentityDef>> = OnceLock::new();
    REGISTRY.get_or_init(|| IdentityId::ALL.into_iter().map(build).collect())
}

pub fn identity(id: IdentityId) -> &'static IdentityDef {
    &registry()[id.index()]
}

/// A copy of the identity with one token changed, for soundness checks of
/// the verifiers. Available for `I1..I4`, `I7`, `I8`.
pub fn mutated(id: IdentityId) -> Option<IdentityDef> {
    use IdentityId::*;
    let mut d = identity(id).clone();
    match id {
        I1 => d.rhs = Term::new().binom("n+m+r+2", "n"),
        I2 => d.summand = two_binomials(Term::new().times("m+2").over("m+k+1")),
        I3 => d.summand = two_binomials(Term::new().times("r+1").over("n+r-k+2")),
        I4 => d.rhs = Term::new().times("m+r+3").over("n+m+r+2").binom("2n+m+r+1", "n"),
        I7 => {
            d.summand = Term::new()
                .numerator_sum(&[&["m+1", "m+5"], &["4", "m+2k+1", "m+2k+1"]])
                .over("m+k+1")
                .over("m+k+2")
                .over("m+k+3")
                .binom("m+2k", "k")
        }
        I8 => {
            d.summand = Term::new()
                .numerator_sum(&[&["m+1", "m+5"], &["m+2k-1", "m+2k+1"]])
                .over("m+k+1")
                .over("m+k+2")
                .over("m+k+3")
                .pow(int(2), "-k-1")
                .binom("m+2k", "k")
        }
        _ => return None,
    }
    d.name = format!("{id}*");
    Some(d)
}
