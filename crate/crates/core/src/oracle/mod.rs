//! Brute-force reference implementations, and exhaustive sweeps checking the
//! optimized predicates and the structural lemmas against them.
//!
//! The reference functions in this module share no code path with the
//! table-driven implementations: Bruhat order comes from subwords of every
//! reduced word, the up-arrow order from a breadth-first search over raising
//! reflections, and the weight sets from the defining interval inclusions.

mod brute;
mod sweeps;
#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use brute::{
    brute_adm, brute_adm_eta, brute_bruhat, brute_covers, brute_jh, brute_jh_unchecked,
    brute_lower_interval, brute_reduced_words, brute_up, brute_wobv, brute_wset,
    brute_wset_unchecked, ORACLE_MAX_LENGTH,
};
pub use sweeps::{lemma_sweeps, order_sweep, SWEEP_NAMES};

use crate::error::Error;

/// A deliberately broken hypothesis. Each one widens the domain of some
/// sweeps past what the corresponding statement allows, so a working harness
/// must report counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Let `w~_2` range over `W~^+` instead of `W~_1`.
    DropRestrictedHypothesis,
    /// Drop `w~_1 up-arrow w~_h^-1 w~_2`.
    DropUpHypothesis,
    /// Drop `mu - lambda in ZR` from the uniqueness of `0`-generic presentations.
    DropZrHypothesis,
    /// Drop `lambda - eta in C_0` from the same statement.
    DropC0Hypothesis,
    /// Run the membership and weight-set comparisons one step below the
    /// required depth.
    DepthShrink,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::DropRestrictedHypothesis,
        Mutation::DropUpHypothesis,
        Mutation::DropZrHypothesis,
        Mutation::DropC0Hypothesis,
        Mutation::DepthShrink,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::DropRestrictedHypothesis => "drop-restricted-hypothesis",
            Mutation::DropUpHypothesis => "drop-up-hypothesis",
            Mutation::DropZrHypothesis => "drop-zr-hypothesis",
            Mutation::DropC0Hypothesis => "drop-c0-hypothesis",
            Mutation::DepthShrink => "depth-shrink",
        }
    }

    /// The sweeps whose domain the mutation changes.
    pub fn affected(self) -> &'static [&'static str] {
        match self {
            Mutation::DropRestrictedHypothesis => &[
                "factorization-reduced",
                "omega-pairing",
                "omega-orthogonal",
                "omega-nonpositive",
                "omega-bounded",
                "diamond-factorization-reduced",
                "subregular-bound",
                "length-additivity",
                "obvious-weights-connected",
            ],
            Mutation::DropUpHypothesis => &[
                "factorization-reduced",
                "subregular-bound",
                "obvious-weights-connected",
            ],
            Mutation::DropZrHypothesis | Mutation::DropC0Hypothesis => &["zero-generic-uniqueness"],
            Mutation::DepthShrink => &["jh-paths-agree", "wset-paths-agree"],
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutation {s:?}")))
    }
}

/// Parameters of a sweep run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    pub f: usize,
    pub p: i64,
    /// Translation box radius for the element domains.
    pub radius: i64,
    /// Length bound for the order-theory comparisons.
    pub order_length: usize,
    /// Number of parameters drawn (deterministically) for the weight sweeps.
    pub samples: usize,
    pub mutation: Option<Mutation>,
    /// Restrict to these sweep names; `None` runs everything applicable.
    pub only: Option<Vec<String>>,
    /// Witnesses kept per sweep.
    pub max_counterexamples: usize,
}

impl SweepConfig {
    /// Defaults sized to finish in seconds to minutes on a laptop.
    pub fn desk(n: usize, f: usize, p: i64) -> Self {
        SweepConfig {
            n,
            f,
            p,
            radius: 3,
            order_length: 6,
            samples: 120,
            mutation: None,
            only: None,
            max_counterexamples: 8,
        }
    }

    pub fn with_mutation(mut self, m: Mutation) -> Self {
        self.mutation = Some(m);
        self
    }

    pub fn only(mut self, names: &[&str]) -> Self {
        self.only = Some(names.iter().map(|s| s.to_string()).collect());
        self
    }

    pub(crate) fn wants(&self, name: &str) -> bool {
        if let Some(only) = &self.only {
            if !only.iter().any(|x| x == name) {
                return false;
            }
        }
        match self.mutation {
            Some(m) => m.affected().contains(&name),
            None => true,
        }
    }
}

/// Outcome of one sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub name: String,
    /// Instances satisfying the hypotheses.
    pub checked: usize,
    pub passed: usize,
    /// Instances violating the conclusion.
    pub failed: usize,
    /// Instances where a computation was refused or ran out of budget.
    pub errors: usize,
    /// The first few failures and errors, with full witnesses.
    pub counterexamples: Vec<Value>,
    /// Sweep-specific observations (for example the cardinalities seen).
    #[serde(skip_serializing_if = "Value::is_null", default)]
    pub observed: Value,
}

impl SweepResult {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

/// The full report of [`lemma_sweeps`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub mutation: Option<Mutation>,
    pub sweeps: Vec<SweepResult>,
    pub all_passed: bool,
}

impl SweepReport {
    pub fn sweep(&self, name: &str) -> Option<&SweepResult> {
        self.sweeps.iter().find(|s| s.name == name)
    }

    pub fn counterexamples(&self) -> usize {
        self.sweeps.iter().map(|s| s.failed).sum()
    }
}
