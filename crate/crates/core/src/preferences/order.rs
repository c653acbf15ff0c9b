use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{parse_err, Alternative, AlternativeSet, PairRelation, PreferenceError, Restrict};

/// A transitive, complete relation: an ordered sequence of indifference tiers.
///
/// Earlier tiers stand below later ones in the `≺` chain, so `1~2<3` has tiers
/// `[{1,2}, {3}]` and reads `1 ∼ 2 ≺ 3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct WeakOrder {
    tiers: Vec<Vec<Alternative>>,
}

impl WeakOrder {
    pub fn new(tiers: Vec<Vec<Alternative>>) -> Result<Self, PreferenceError> {
        let mut seen = Vec::new();
        let mut clean = Vec::with_capacity(tiers.len());
        for mut tier in tiers {
            if tier.is_empty() {
                return Err(PreferenceError::NotAPartition("empty tier".into()));
            }
            tier.sort_unstable();
            for &a in &tier {
                if seen.contains(&a) {
                    return Err(PreferenceError::NotAPartition(format!("{a} appears twice")));
                }
                seen.push(a);
            }
            clean.push(tier);
        }
        if clean.is_empty() {
            return Err(PreferenceError::EmptySet);
        }
        Ok(WeakOrder { tiers: clean })
    }

    pub fn tiers(&self) -> &[Vec<Alternative>] {
        &self.tiers
    }

    pub fn alternatives(&self) -> AlternativeSet {
        AlternativeSet::new(self.tiers.iter().flatten().copied().collect()).expect("weak orders are non-empty")
    }

    pub fn tier_of(&self, a: Alternative) -> Option<usize> {
        self.tiers.iter().position(|t| t.binary_search(&a).is_ok())
    }

    /// How `a` relates to `b`; `None` if either is missing.
    pub fn relation(&self, a: Alternative, b: Alternative) -> Option<PairRelation> {
        let (ta, tb) = (self.tier_of(a)?, self.tier_of(b)?);
        Some(match ta.cmp(&tb) {
            std::cmp::Ordering::Less => PairRelation::Prec,
            std::cmp::Ordering::Greater => PairRelation::Succ,
            std::cmp::Ordering::Equal => PairRelation::Tie,
        })
    }

    pub fn is_strict(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    pub fn to_strict(&self) -> Option<StrictOrder> {
        self.is_strict().then(|| StrictOrder(self.tiers.iter().map(|t| t[0]).collect()))
    }

    /// The same relation read backwards.
    pub fn reversed(&self) -> WeakOrder {
        WeakOrder { tiers: self.tiers.iter().rev().cloned().collect() }
    }
}

impl Restrict for WeakOrder {
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError> {
        to.require_subset_of(&self.alternatives())?;
        let tiers = self
            .tiers
            .iter()
            .map(|t| t.iter().copied().filter(|&a| to.contains(a)).collect_vec())
            .filter(|t| !t.is_empty())
            .collect();
        Ok(WeakOrder { tiers })
    }
}

impl fmt::Display for WeakOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.tiers.iter().map(|t| t.iter().join("~")).join("<");
        f.write_str(&s)
    }
}

impl FromStr for WeakOrder {
    type Err = PreferenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tiers = s
            .split('<')
            .map(|tier| tier.split('~').map(str::parse).collect::<Result<Vec<Alternative>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| parse_err(s, e.to_string()))?;
        WeakOrder::new(tiers).map_err(|e| parse_err(s, e.to_string()))
    }
}

impl TryFrom<String> for WeakOrder {
    type Error = PreferenceError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<WeakOrder> for String {
    fn from(w: WeakOrder) -> String {
        w.to_string()
    }
}

/// A weak order without indifference: a ranking of every alternative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StrictOrder(Vec<Alternative>);

impl StrictOrder {
    pub fn new(ranking: Vec<Alternative>) -> Result<Self, PreferenceError> {
        let set = AlternativeSet::new(ranking.clone())?;
        if set.len() != ranking.len() {
            return Err(PreferenceError::NotAPartition("repeated alternative".into()));
        }
        Ok(StrictOrder(ranking))
    }

    pub fn ranking(&self) -> &[Alternative] {
        &self.0
    }

    pub fn alternatives(&self) -> AlternativeSet {
        AlternativeSet::new(self.0.clone()).expect("strict orders are non-empty")
    }

    pub fn to_weak(&self) -> WeakOrder {
        WeakOrder { tiers: self.0.iter().map(|&a| vec![a]).collect() }
    }

    /// `true` when `a ≺ b` in this order.
    pub fn precedes(&self, a: Alternative, b: Alternative) -> bool {
        match (self.0.iter().position(|&x| x == a), self.0.iter().position(|&x| x == b)) {
            (Some(i), Some(j)) => i < j,
            _ => false,
        }
    }

    pub fn reversed(&self) -> StrictOrder {
        StrictOrder(self.0.iter().rev().copied().collect())
    }
}

impl Restrict for StrictOrder {
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError> {
        to.require_subset_of(&self.alternatives())?;
        Ok(StrictOrder(self.0.iter().copied().filter(|&a| to.contains(a)).collect()))
    }
}

impl fmt::Display for StrictOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join("<"))
    }
}

impl FromStr for StrictOrder {
    type Err = PreferenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w: WeakOrder = s.parse()?;
        w.to_strict().ok_or_else(|| parse_err(s, "strict orders have no ties"))
    }
}

impl TryFrom<String> for StrictOrder {
    type Error = PreferenceError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<StrictOrder> for String {
    fn from(o: StrictOrder) -> String {
        o.to_string()
    }
}

/// All `|A|!` strict orders, in lexicographic order of their rankings.
pub fn enumerate_strict_orders(set: &AlternativeSet) -> Vec<StrictOrder> {
    set.iter().permutations(set.len()).map(StrictOrder).collect()
}

/// Every ordered partition of `set` exactly once (ordered Bell number many).
///
/// The lowest tier is chosen first, as a non-empty subset in increasing
/// bitmask order over the remaining alternatives.
pub fn enumerate_weak_orders(set: &AlternativeSet) -> Vec<WeakOrder> {
    fn extend(rest: &[Alternative], prefix: &mut Vec<Vec<Alternative>>, out: &mut Vec<WeakOrder>) {
        if rest.is_empty() {
            out.push(WeakOrder { tiers: prefix.clone() });
            return;
        }
        let n = rest.len();
        for mask in 1u32..(1 << n) {
            let (tier, remaining): (Vec<_>, Vec<_>) =
                rest.iter().enumerate().partition(|(i, _)| mask & (1 << i) != 0);
            prefix.push(tier.into_iter().map(|(_, &a)| a).collect());
            let remaining: Vec<Alternative> = remaining.into_iter().map(|(_, &a)| a).collect();
            extend(&remaining, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(set.members(), &mut Vec::new(), &mut out);
    out
}
