use std::fmt;

use serde::Serialize;

use super::{Alternative, AlternativeSet, Decoded, Link, PreferenceCycle, StrictOrder, TernaryCode};

/// A strict order or a strict preference cycle: the objects that the covers
/// and the restricted welfare function range over.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum StrictRelation {
    Order(StrictOrder),
    Cycle(PreferenceCycle),
}

impl StrictRelation {
    /// Reads a code; `None` unless it is a strict order or a strict cycle through every alternative.
    pub fn from_code(code: &TernaryCode) -> Option<StrictRelation> {
        if !code.is_strict() {
            return None;
        }
        match code.decode() {
            Decoded::Order(o) => o.to_strict().map(StrictRelation::Order),
            Decoded::Cycle(c) if c.is_strict() && c.is_total_on(code.alternatives()) => Some(StrictRelation::Cycle(c)),
            _ => None,
        }
    }

    /// `a ≺ b` holds. For a cycle only its own links count; no transitive closure is taken.
    pub fn precedes(&self, a: Alternative, b: Alternative) -> bool {
        match self {
            StrictRelation::Order(o) => o.precedes(a, b),
            StrictRelation::Cycle(c) => {
                let s = c.steps();
                (0..s.len()).any(|k| s[k].0 == a && s[k].1 == Link::Strict && s[(k + 1) % s.len()].0 == b)
            }
        }
    }

    pub fn alternatives(&self) -> AlternativeSet {
        match self {
            StrictRelation::Order(o) => o.alternatives(),
            StrictRelation::Cycle(c) => c.alternatives(),
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, StrictRelation::Cycle(_))
    }

    /// Every order reversed; a cycle becomes the opposite cycle.
    pub fn reversed(&self) -> StrictRelation {
        match self {
            StrictRelation::Order(o) => StrictRelation::Order(o.reversed()),
            StrictRelation::Cycle(c) => StrictRelation::Cycle(c.reversed()),
        }
    }

    pub fn code(&self) -> TernaryCode {
        match self {
            StrictRelation::Order(o) => TernaryCode::encode_order(&o.to_weak()),
            StrictRelation::Cycle(c) => TernaryCode::encode_cycle(c).expect("strict relations on three alternatives"),
        }
    }
}

impl fmt::Display for StrictRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrictRelation::Order(o) => write!(f, "{o}"),
            StrictRelation::Cycle(c) => write!(f, "{c}"),
        }
    }
}

impl std::str::FromStr for StrictRelation {
    type Err = super::PreferenceError;

    /// `1<2<3` is an order, `1<2<3<1` a cycle.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split('<').map(str::trim).collect();
        if parts.len() > 2 && parts.first() == parts.last() {
            let c: PreferenceCycle = s.parse()?;
            if !c.is_strict() {
                return Err(super::parse_err(s, "cycle has an indifferent link"));
            }
            Ok(StrictRelation::Cycle(c))
        } else {
            Ok(StrictRelation::Order(s.parse()?))
        }
    }
}
