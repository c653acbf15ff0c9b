use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{
    parse_err, Alternative, AlternativeSet, Link, PreferenceCycle, PreferenceError, Restrict, WeakOrder,
};

/// The relation on one unordered pair `{a, b}` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairRelation {
    /// `a ≺ b`, written `0`.
    #[serde(rename = "0")]
    Prec,
    /// `b ≺ a`, written `1`.
    #[serde(rename = "1")]
    Succ,
    /// `a ∼ b`, written `e`.
    #[serde(rename = "e")]
    Tie,
}

impl PairRelation {
    pub fn flipped(self) -> Self {
        match self {
            PairRelation::Prec => PairRelation::Succ,
            PairRelation::Succ => PairRelation::Prec,
            PairRelation::Tie => PairRelation::Tie,
        }
    }

    pub fn is_strict(self) -> bool {
        self != PairRelation::Tie
    }

    pub fn symbol(self) -> char {
        match self {
            PairRelation::Prec => '0',
            PairRelation::Succ => '1',
            PairRelation::Tie => 'e',
        }
    }

    fn from_symbol(c: &str) -> Option<Self> {
        match c.trim() {
            "0" => Some(PairRelation::Prec),
            "1" => Some(PairRelation::Succ),
            "e" => Some(PairRelation::Tie),
            _ => None,
        }
    }
}

/// A relation on a set of alternatives stored as one [`PairRelation`] per
/// unordered pair, pairs in lexicographic order `(1,2), (1,3), …, (2,3), …`.
///
/// Houses weak orders and preference cycles alike. For three alternatives the
/// other common layout lists the pairs cyclically as `(a,b), (b,c), (c,a)`;
/// [`TernaryCode::cyclic_tuple`] converts to it. In that layout the strict
/// cycle `a≺b≺c≺a` is `(0,0,0)` while here it is `(0,1,0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "CodeRepr", into = "CodeRepr")]
pub struct TernaryCode {
    set: AlternativeSet,
    entries: Vec<PairRelation>,
}

/// What a [`TernaryCode`] turns out to be.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decoded {
    Order(WeakOrder),
    Cycle(PreferenceCycle),
    /// Intransitive, but not a single cycle through every alternative.
    CycleBearing(TernaryCode),
}

impl TernaryCode {
    pub fn new(set: AlternativeSet, entries: Vec<PairRelation>) -> Result<Self, PreferenceError> {
        if entries.len() != set.pair_count() {
            return Err(PreferenceError::CodeLength { got: entries.len(), expected: set.pair_count(), set });
        }
        Ok(TernaryCode { set, entries })
    }

    /// Builds a code by querying `relation(a, b)` for every pair `a < b`.
    pub fn from_fn(set: AlternativeSet, mut relation: impl FnMut(Alternative, Alternative) -> PairRelation) -> Self {
        let entries = set.pairs().map(|(a, b)| relation(a, b)).collect();
        TernaryCode { set, entries }
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.set
    }

    pub fn entries(&self) -> &[PairRelation] {
        &self.entries
    }

    /// How `a` relates to `b`, for any two distinct members.
    pub fn relation(&self, a: Alternative, b: Alternative) -> Option<PairRelation> {
        let idx = self.set.pair_index(a, b)?;
        let r = self.entries[idx];
        Some(if a < b { r } else { r.flipped() })
    }

    fn weakly_precedes(&self, a: Alternative, b: Alternative) -> bool {
        a == b || matches!(self.relation(a, b), Some(PairRelation::Prec | PairRelation::Tie))
    }

    /// Every pair strict.
    pub fn is_strict(&self) -> bool {
        self.entries.iter().all(|r| r.is_strict())
    }

    /// Exhaustive triple scan: `x ≼ y ∧ y ≼ z ⇒ x ≼ z`. Completeness holds by construction.
    pub fn is_weak_order(&self) -> bool {
        let m = self.set.members();
        m.iter().all(|&x| {
            m.iter().all(|&y| {
                !self.weakly_precedes(x, y) || m.iter().all(|&z| !self.weakly_precedes(y, z) || self.weakly_precedes(x, z))
            })
        })
    }

    pub fn encode_order(order: &WeakOrder) -> Self {
        let set = order.alternatives();
        TernaryCode::from_fn(set, |a, b| order.relation(a, b).expect("both alternatives are ranked"))
    }

    /// Encodes a cycle through exactly three alternatives, where every pair is adjacent.
    pub fn encode_cycle(cycle: &PreferenceCycle) -> Result<Self, PreferenceError> {
        let steps = cycle.steps();
        if steps.len() != 3 {
            return Err(PreferenceError::CycleNotPairwise(steps.len()));
        }
        let set = cycle.alternatives();
        Ok(TernaryCode::from_fn(set, |a, b| {
            let k = steps.iter().position(|&(x, _)| x == a).expect("a is on the cycle");
            let (next, link) = (steps[(k + 1) % 3].0, steps[k].1);
            let forward = match link {
                Link::Strict => PairRelation::Prec,
                Link::Indifferent => PairRelation::Tie,
            };
            if next == b {
                forward
            } else {
                // b precedes a on the cycle
                let link_ba = steps[(k + 2) % 3].1;
                match link_ba {
                    Link::Strict => PairRelation::Succ,
                    Link::Indifferent => PairRelation::Tie,
                }
            }
        }))
    }

    pub fn decode(&self) -> Decoded {
        if self.is_weak_order() {
            return Decoded::Order(self.to_weak_order().expect("transitive codes are weak orders"));
        }
        if self.set.len() == 3 {
            let m = self.set.members();
            for ring in [[m[0], m[1], m[2]], [m[0], m[2], m[1]]] {
                let links: Option<Vec<Link>> = (0..3)
                    .map(|k| match self.relation(ring[k], ring[(k + 1) % 3]) {
                        Some(PairRelation::Prec) => Some(Link::Strict),
                        Some(PairRelation::Tie) => Some(Link::Indifferent),
                        _ => None,
                    })
                    .collect();
                if let Some(links) = links {
                    let steps = ring.iter().copied().zip(links).collect();
                    let cycle = PreferenceCycle::new(steps).expect("an intransitive 3-ring has a strict link");
                    return Decoded::Cycle(cycle);
                }
            }
        }
        Decoded::CycleBearing(self.clone())
    }

    fn to_weak_order(&self) -> Option<WeakOrder> {
        if !self.is_weak_order() {
            return None;
        }
        let below = |x: Alternative| {
            self.set.iter().filter(|&y| self.relation(y, x) == Some(PairRelation::Prec)).count()
        };
        let tiers = self
            .set
            .iter()
            .map(|a| (below(a), a))
            .sorted()
            .chunk_by(|&(rank, _)| rank)
            .into_iter()
            .map(|(_, grp)| grp.map(|(_, a)| a).collect())
            .collect();
        WeakOrder::new(tiers).ok()
    }

    /// The three entries in the cyclic pair layout `(a,b), (b,c), (c,a)` for `a < b < c`.
    pub fn cyclic_tuple(&self) -> Result<[PairRelation; 3], PreferenceError> {
        if self.set.len() != 3 {
            return Err(PreferenceError::UnsupportedSize(self.set.len()));
        }
        let m = self.set.members();
        let rel = |x, y| self.relation(x, y).expect("members");
        Ok([rel(m[0], m[1]), rel(m[1], m[2]), rel(m[2], m[0])])
    }
}

impl Restrict for TernaryCode {
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError> {
        to.require_subset_of(&self.set)?;
        Ok(TernaryCode::from_fn(to.clone(), |a, b| self.relation(a, b).expect("subset members")))
    }
}

impl fmt::Display for TernaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().map(|r| r.symbol()).join(","))
    }
}

impl TernaryCode {
    /// Parses `(e,0,1)` over the given set.
    pub fn parse_on(set: AlternativeSet, s: &str) -> Result<Self, PreferenceError> {
        let entries = parse_entries(s)?;
        TernaryCode::new(set, entries)
    }
}

fn parse_entries(s: &str) -> Result<Vec<PairRelation>, PreferenceError> {
    let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| parse_err(s, "expected parentheses"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|c| PairRelation::from_symbol(c).ok_or_else(|| parse_err(s, format!("bad entry {c:?}"))))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    alternatives: AlternativeSet,
    code: String,
}

impl From<TernaryCode> for CodeRepr {
    fn from(c: TernaryCode) -> Self {
        CodeRepr { code: c.to_string(), alternatives: c.set }
    }
}

impl TryFrom<CodeRepr> for TernaryCode {
    type Error = PreferenceError;

    fn try_from(r: CodeRepr) -> Result<Self, Self::Error> {
        TernaryCode::parse_on(r.alternatives, &r.code)
    }
}

impl FromStr for TernaryCode {
    type Err = PreferenceError;

    /// Parses `(e,0,1)`; the alternative set is `{1, …, n}` with `C(n,2)` entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_entries(s)?;
        let n = (1..=u8::MAX as usize)
            .find(|&n| n * (n - 1) / 2 >= entries.len())
            .filter(|&n| n * (n - 1) / 2 == entries.len())
            .ok_or_else(|| parse_err(s, "entry count is not a pair count"))?;
        TernaryCode::new(AlternativeSet::first(n)?, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preferences::{enumerate_weak_orders, valid_cycles};

    fn set3() -> AlternativeSet {
        AlternativeSet::first(3).unwrap()
    }

    fn all_codes(set: &AlternativeSet) -> Vec<TernaryCode> {
        let vals = [PairRelation::Prec, PairRelation::Succ, PairRelation::Tie];
        (0..set.pair_count())
            .map(|_| vals)
            .multi_cartesian_product()
            .map(|e| TernaryCode::new(set.clone(), e).unwrap())
            .collect()
    }

    /// Independent transitivity check on a relation matrix, used as the oracle.
    fn oracle_is_weak_order(code: &TernaryCode) -> bool {
        let n = code.alternatives().len();
        let m = code.alternatives().members();
        let mut le = vec![vec![true; n]; n];
        for (k, (a, b)) in code.alternatives().pairs().enumerate() {
            let (i, j) = (m.iter().position(|&x| x == a).unwrap(), m.iter().position(|&x| x == b).unwrap());
            match code.entries()[k] {
                PairRelation::Prec => le[j][i] = false,
                PairRelation::Succ => le[i][j] = false,
                PairRelation::Tie => {}
            }
        }
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])))
    }

    #[test]
    fn thirteen_of_twenty_seven_codes_are_weak_orders() {
        let codes = all_codes(&set3());
        assert_eq!(codes.len(), 27);
        let oracle = codes.iter().filter(|c| oracle_is_weak_order(c)).count();
        assert_eq!(oracle, 13);
        assert_eq!(codes.iter().filter(|c| c.is_weak_order()).count(), oracle);
    }

    #[test]
    fn round_trip_weak_orders() {
        for n in 1..=4 {
            for w in enumerate_weak_orders(&AlternativeSet::first(n).unwrap()) {
                let code = TernaryCode::encode_order(&w);
                assert_eq!(code.decode(), Decoded::Order(w));
            }
        }
    }

    #[test]
    fn tie_then_strict_layouts() {
        let w: WeakOrder = "1~2<3".parse().unwrap();
        let code = TernaryCode::encode_order(&w);
        assert_eq!(code.to_string(), "(e,0,0)");
        let cyc = code.cyclic_tuple().unwrap().map(PairRelation::symbol);
        assert_eq!(cyc, ['e', '0', '1']);
    }

    #[test]
    fn strict_cycles_in_both_layouts() {
        let up: PreferenceCycle = "1<2<3<1".parse().unwrap();
        let down: PreferenceCycle = "3<2<1<3".parse().unwrap();
        let cu = TernaryCode::encode_cycle(&up).unwrap();
        let cd = TernaryCode::encode_cycle(&down).unwrap();
        assert_eq!(cu.to_string(), "(0,1,0)");
        assert_eq!(cu.cyclic_tuple().unwrap().map(PairRelation::symbol), ['0', '0', '0']);
        assert_eq!(cd.cyclic_tuple().unwrap().map(PairRelation::symbol), ['1', '1', '1']);
        assert_eq!(cu.decode(), Decoded::Cycle(up));
        assert_eq!(cd.decode(), Decoded::Cycle(down));
    }

    #[test]
    fn tie_cycle_in_lexicographic_layout() {
        // c ≺ a ∼ b ∼ c
        let c: PreferenceCycle = "3<1~2~3".parse().unwrap();
        let code = TernaryCode::encode_cycle(&c).unwrap();
        assert_eq!(code.to_string(), "(e,1,e)");
        assert_eq!(code.decode(), Decoded::Cycle(c));
    }

    #[test]
    fn every_code_on_three_decodes_to_order_or_cycle() {
        let codes = all_codes(&set3());
        let cycles = codes.iter().filter(|c| matches!(c.decode(), Decoded::Cycle(_))).count();
        assert_eq!(cycles, 14);
        for c in &codes {
            match c.decode() {
                Decoded::Order(w) => assert_eq!(&TernaryCode::encode_order(&w), c),
                Decoded::Cycle(k) => assert_eq!(&TernaryCode::encode_cycle(&k).unwrap(), c),
                Decoded::CycleBearing(_) => panic!("{c} should decode"),
            }
        }
    }

    #[test]
    fn strict_intransitive_codes_are_the_valid_cycles() {
        let strict: Vec<_> = all_codes(&set3()).into_iter().filter(TernaryCode::is_strict).collect();
        assert_eq!(strict.len(), 8);
        let mut cyclic: Vec<_> = strict.into_iter().filter(|c| !oracle_is_weak_order(c)).collect();
        cyclic.sort();
        let mut expected: Vec<_> = valid_cycles(&set3())
            .unwrap()
            .iter()
            .map(|c| TernaryCode::encode_cycle(c).unwrap())
            .collect();
        expected.sort();
        assert_eq!(cyclic, expected);
    }

    #[test]
    fn four_alternatives_can_be_cycle_bearing() {
        let set = AlternativeSet::first(4).unwrap();
        // 1<2<3<1 on the first three, 4 above everything
        let code = TernaryCode::from_fn(set, |a, b| match (a.0, b.0) {
            (0, 1) | (1, 2) => PairRelation::Prec,
            (0, 2) => PairRelation::Succ,
            _ => PairRelation::Prec,
        });
        assert!(matches!(code.decode(), Decoded::CycleBearing(_)));
    }

    #[test]
    fn parse_display() {
        let c: TernaryCode = "(e,0,1)".parse().unwrap();
        assert_eq!(c.alternatives().len(), 3);
        assert_eq!(c.to_string(), "(e,0,1)");
        assert!("(e,0)".parse::<TernaryCode>().is_err());
        assert!("(x,0,1)".parse::<TernaryCode>().is_err());
        assert_eq!("(1)".parse::<TernaryCode>().unwrap().alternatives().len(), 2);
    }
}
