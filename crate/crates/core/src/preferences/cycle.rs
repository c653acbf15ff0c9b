use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{parse_err, Alternative, AlternativeSet, PreferenceError, Restrict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Link {
    Strict,
    Indifferent,
}

/// A cyclic chain `x₀ ⋈ x₁ ⋈ … ⋈ x₀` where each `⋈` is `≺` or `∼`.
///
/// Stored rotated so the smallest alternative comes first. Whether the cycle
/// is valid or contradictory depends on the model that holds it, so no such
/// flag lives here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PreferenceCycle {
    /// `(x_k, link from x_k to x_{k+1})`, indices mod len.
    steps: Vec<(Alternative, Link)>,
}

impl PreferenceCycle {
    pub fn new(mut steps: Vec<(Alternative, Link)>) -> Result<Self, PreferenceError> {
        if steps.len() < 3 {
            return Err(PreferenceError::MalformedCycle("needs at least three alternatives".into()));
        }
        let set = AlternativeSet::new(steps.iter().map(|s| s.0).collect())?;
        if set.len() != steps.len() {
            return Err(PreferenceError::MalformedCycle("an alternative repeats".into()));
        }
        if steps.iter().all(|s| s.1 == Link::Indifferent) {
            return Err(PreferenceError::MalformedCycle("all-indifferent rings are weak orders".into()));
        }
        let start = steps.iter().enumerate().min_by_key(|(_, s)| s.0).map(|(i, _)| i).unwrap_or(0);
        steps.rotate_left(start);
        Ok(PreferenceCycle { steps })
    }

    /// A strict cycle through `ring` in the given order.
    pub fn strict(ring: &[Alternative]) -> Result<Self, PreferenceError> {
        PreferenceCycle::new(ring.iter().map(|&a| (a, Link::Strict)).collect())
    }

    pub fn steps(&self) -> &[(Alternative, Link)] {
        &self.steps
    }

    pub fn alternatives(&self) -> AlternativeSet {
        AlternativeSet::new(self.steps.iter().map(|s| s.0).collect()).expect("cycles are non-empty")
    }

    /// No indifference links.
    pub fn is_strict(&self) -> bool {
        self.steps.iter().all(|s| s.1 == Link::Strict)
    }

    /// Passes through every alternative of `set`.
    pub fn is_total_on(&self, set: &AlternativeSet) -> bool {
        self.alternatives() == *set
    }

    /// The same ring traversed the other way.
    pub fn reversed(&self) -> PreferenceCycle {
        let n = self.steps.len();
        let steps = (0..n)
            .map(|k| {
                let at = (n - k) % n;
                let link_in = self.steps[(at + n - 1) % n].1;
                (self.steps[at].0, link_in)
            })
            .collect();
        PreferenceCycle::new(steps).expect("reversal keeps the cycle well formed")
    }
}

impl Restrict for PreferenceCycle {
    /// Deletes alternatives outside `to` from the ring; a merged link is strict
    /// when any of the links it replaces is.
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError> {
        to.require_subset_of(&self.alternatives())?;
        let n = self.steps.len();
        let kept: Vec<usize> = (0..n).filter(|&k| to.contains(self.steps[k].0)).collect();
        let steps = kept
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let next = kept[(i + 1) % kept.len()];
                let span = (next + n - k) % n;
                let span = if span == 0 { n } else { span };
                let strict = (0..span).any(|d| self.steps[(k + d) % n].1 == Link::Strict);
                (self.steps[k].0, if strict { Link::Strict } else { Link::Indifferent })
            })
            .collect();
        PreferenceCycle::new(steps)
    }
}

impl fmt::Display for PreferenceCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, link) in &self.steps {
            write!(f, "{a}{}", if *link == Link::Strict { '<' } else { '~' })?;
        }
        write!(f, "{}", self.steps[0].0)
    }
}

impl FromStr for PreferenceCycle {
    type Err = PreferenceError;

    /// Parses `1<2<3<1` or `3<1~2~3`: the first alternative is repeated at the end.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut alts = Vec::new();
        let mut links = Vec::new();
        let mut token = String::new();
        for ch in s.trim().chars() {
            match ch {
                '<' | '~' => {
                    alts.push(token.parse::<Alternative>()?);
                    token.clear();
                    links.push(if ch == '<' { Link::Strict } else { Link::Indifferent });
                }
                c if c.is_whitespace() => {}
                c => token.push(c),
            }
        }
        alts.push(token.parse::<Alternative>()?);
        if alts.len() < 2 || alts.first() != alts.last() {
            return Err(parse_err(s, "a cycle must end where it starts"));
        }
        alts.pop();
        PreferenceCycle::new(alts.into_iter().zip(links).collect()).map_err(|e| parse_err(s, e.to_string()))
    }
}

impl TryFrom<String> for PreferenceCycle {
    type Error = PreferenceError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<PreferenceCycle> for String {
    fn from(c: PreferenceCycle) -> String {
        c.to_string()
    }
}

/// The two strict total cycles on a three-element set, ascending ring first.
pub fn valid_cycles(set: &AlternativeSet) -> Result<[PreferenceCycle; 2], PreferenceError> {
    let m = set.members();
    if m.len() != 3 {
        return Err(PreferenceError::UnsupportedSize(m.len()));
    }
    Ok([PreferenceCycle::strict(&[m[0], m[1], m[2]])?, PreferenceCycle::strict(&[m[0], m[2], m[1]])?])
}
