use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{AlternativeSet, PreferenceError, Restrict, WeakOrder};

/// One weak order per individual, individuals indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<WeakOrder>", into = "Vec<WeakOrder>")]
pub struct Profile {
    orders: Vec<WeakOrder>,
}

impl Profile {
    pub fn new(orders: Vec<WeakOrder>) -> Result<Self, PreferenceError> {
        let first = orders.first().ok_or(PreferenceError::EmptySet)?.alternatives();
        if orders.iter().any(|o| o.alternatives() != first) {
            return Err(PreferenceError::MixedProfile);
        }
        Ok(Profile { orders })
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    pub fn individuals(&self) -> usize {
        self.orders.len()
    }

    pub fn alternatives(&self) -> AlternativeSet {
        self.orders[0].alternatives()
    }

    /// Every ballot read backwards.
    pub fn reversed(&self) -> Profile {
        Profile { orders: self.orders.iter().map(WeakOrder::reversed).collect() }
    }
}

impl Restrict for Profile {
    fn restrict(&self, to: &AlternativeSet) -> Result<Self, PreferenceError> {
        let orders = self.orders.iter().map(|o| o.restrict(to)).collect::<Result<_, _>>()?;
        Ok(Profile { orders })
    }
}

impl TryFrom<Vec<WeakOrder>> for Profile {
    type Error = PreferenceError;
    fn try_from(orders: Vec<WeakOrder>) -> Result<Self, Self::Error> {
        Profile::new(orders)
    }
}

impl From<Profile> for Vec<WeakOrder> {
    fn from(p: Profile) -> Self {
        p.orders
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.orders.iter().join(", "))
    }
}
