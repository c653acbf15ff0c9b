//! Strict orders, weak orders, preference cycles and their ternary pair codes
//! over a small finite set of alternatives.
//!
//! Alternatives carry 0-based ids internally and print 1-based, so the set
//! `{0, 1, 2}` reads as `1`, `2`, `3` in every text form.

mod alternative;
mod code;
mod cycle;
mod order;
mod profile;
mod strict;

pub use alternative::{Alternative, AlternativeSet};
pub use code::{Decoded, PairRelation, TernaryCode};
pub use cycle::{valid_cycles, Link, PreferenceCycle};
pub use order::{enumerate_strict_orders, enumerate_weak_orders, StrictOrder, WeakOrder};
pub use profile::Profile;
pub use strict::StrictRelation;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreferenceError {
    #[error("alternative set is empty")]
    EmptySet,
    #[error("alternative {0} is not in the set {1}")]
    NotInSet(Alternative, AlternativeSet),
    #[error("{sub} is not a subset of {set}")]
    NotSubset { sub: AlternativeSet, set: AlternativeSet },
    #[error("operation needs exactly 3 alternatives, got {0}")]
    UnsupportedSize(usize),
    #[error("tiers do not partition the alternative set: {0}")]
    NotAPartition(String),
    #[error("malformed preference cycle: {0}")]
    MalformedCycle(String),
    #[error("a cycle over {0} alternatives leaves non-adjacent pairs unspecified")]
    CycleNotPairwise(usize),
    #[error("code has {got} entries, expected {expected} for {set}")]
    CodeLength { got: usize, expected: usize, set: AlternativeSet },
    #[error("profile individuals disagree on the alternative set")]
    MixedProfile,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub(crate) fn parse_err(input: &str, reason: impl Into<String>) -> PreferenceError {
    PreferenceError::Parse { input: input.to_string(), reason: reason.into() }
}

/// Anything with a canonical projection onto a subset of its alternatives.
pub trait Restrict: Sized {
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError>;
}
