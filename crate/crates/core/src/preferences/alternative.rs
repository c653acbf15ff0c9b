use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{parse_err, PreferenceError};

/// An alternative, identified by a 0-based index and displayed 1-based.
/// Serialises as its 1-based label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Alternative(pub u8);

impl TryFrom<usize> for Alternative {
    type Error = PreferenceError;

    fn try_from(label: usize) -> Result<Self, Self::Error> {
        Alternative::from_label(label).ok_or_else(|| parse_err(&label.to_string(), "labels run from 1 to 256"))
    }
}

impl From<Alternative> for usize {
    fn from(a: Alternative) -> usize {
        a.label()
    }
}

impl Alternative {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The alternative whose printed label is `label` (1-based).
    pub fn from_label(label: usize) -> Option<Self> {
        if label == 0 || label > u8::MAX as usize {
            return None;
        }
        Some(Alternative((label - 1) as u8))
    }

    pub fn label(self) -> usize {
        self.index() + 1
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for Alternative {
    type Err = PreferenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let label: usize = s.trim().parse().map_err(|_| parse_err(s, "expected a positive integer label"))?;
        Alternative::from_label(label).ok_or_else(|| parse_err(s, "labels start at 1"))
    }
}

/// A sorted, duplicate-free set of alternatives.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Alternative>")]
pub struct AlternativeSet(Vec<Alternative>);

impl TryFrom<Vec<Alternative>> for AlternativeSet {
    type Error = PreferenceError;

    fn try_from(members: Vec<Alternative>) -> Result<Self, Self::Error> {
        AlternativeSet::new(members)
    }
}

impl AlternativeSet {
    pub fn new(mut members: Vec<Alternative>) -> Result<Self, PreferenceError> {
        if members.is_empty() {
            return Err(PreferenceError::EmptySet);
        }
        members.sort_unstable();
        members.dedup();
        Ok(AlternativeSet(members))
    }

    /// The set `{1, …, n}` in printed labels.
    pub fn first(n: usize) -> Result<Self, PreferenceError> {
        if n == 0 {
            return Err(PreferenceError::EmptySet);
        }
        if n > u8::MAX as usize {
            return Err(PreferenceError::UnsupportedSize(n));
        }
        Ok(AlternativeSet((0..n as u8).map(Alternative).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> &[Alternative] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Alternative> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, a: Alternative) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn position(&self, a: Alternative) -> Option<usize> {
        self.0.binary_search(&a).ok()
    }

    pub fn is_subset_of(&self, other: &AlternativeSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    pub fn require_subset_of(&self, other: &AlternativeSet) -> Result<(), PreferenceError> {
        if self.is_subset_of(other) {
            Ok(())
        } else {
            Err(PreferenceError::NotSubset { sub: self.clone(), set: other.clone() })
        }
    }

    /// Number of unordered pairs, C(n, 2).
    pub fn pair_count(&self) -> usize {
        let n = self.len();
        n * n.saturating_sub(1) / 2
    }

    /// Unordered pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Alternative, Alternative)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| self.0[i + 1..].iter().map(move |&b| (a, b)))
    }

    /// Index of the pair `{a, b}` in [`Self::pairs`] order, whichever way round it is given.
    pub fn pair_index(&self, a: Alternative, b: Alternative) -> Option<usize> {
        let (i, j) = {
            let i = self.position(a)?;
            let j = self.position(b)?;
            if i == j {
                return None;
            }
            (i.min(j), i.max(j))
        };
        let n = self.len();
        // rows 0..i contribute (n-1) + (n-2) + … + (n-i) pairs
        Some(i * (2 * n - i - 1) / 2 + (j - i - 1))
    }
}

impl fmt::Display for AlternativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for AlternativeSet {
    type Err = PreferenceError;

    /// Parses `1,2,3` or `{1,2,3}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let members = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Alternative>, _>>()?;
        let set = AlternativeSet::new(members.clone())?;
        if set.len() != members.len() {
            return Err(parse_err(s, "repeated alternative"));
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_matches_enumeration() {
        for n in 1..7 {
            let set = AlternativeSet::first(n).unwrap();
            for (k, (a, b)) in set.pairs().enumerate() {
                assert_eq!(set.pair_index(a, b), Some(k));
                assert_eq!(set.pair_index(b, a), Some(k));
            }
            assert_eq!(set.pairs().count(), set.pair_count());
        }
    }

    #[test]
    fn parses_braced_and_bare() {
        let s: AlternativeSet = "{1,3,4}".parse().unwrap();
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!("1, 3,4".parse::<AlternativeSet>().unwrap(), s);
        assert!("1,1".parse::<AlternativeSet>().is_err());
        assert!("0,1".parse::<AlternativeSet>().is_err());
    }
}
