//! Exact path counting for the simple one-dimensional random walk, and
//! verification of the binomial-coefficient identities those counts produce.
//!
//! * [`exact`]: big rationals, generalized binomials, ε-limits.
//! * [`walks`]: path counts, reflection, barrier avoidance, decompositions,
//!   brute-force oracles and a seeded sampler.
//! * [`identities`]: the identity registry and exact evaluation of both sides.
//! * [`prove`]: fixed-`n` proofs by evaluation on a degree-bounded grid.
//! * [`render`]: ASCII lattice diagrams and CSV / JSON-lines reports.
//! * [`cli`]: the `pathsum` command line.

pub mod cli;
pub mod exact;
pub mod identities;
pub mod prove;
pub mod render;
pub mod walks;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use exact::{EpsPoly, Limit, LinearForm, Rational, Symbol};

/// Outcome of one exact check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Unequal,
    Pole,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Equal => "equal",
            Status::Unequal => "unequal",
            Status::Pole => "pole",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "equal" => Ok(Status::Equal),
            "unequal" => Ok(Status::Unequal),
            "pole" => Ok(Status::Pole),
            "skipped" => Ok(Status::Skipped),
            other => Err(format!("unknown status `{other}`")),
        }
    }
}
