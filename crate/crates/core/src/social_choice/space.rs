use serde::{Deserialize, Serialize};

use super::SocialChoiceError;
use crate::preferences::{enumerate_strict_orders, enumerate_weak_orders, AlternativeSet, Profile, WeakOrder};

/// Largest profile space the audits will enumerate unless told otherwise.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Which ballots individuals may cast.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// Every weak order (the unrestricted domain).
    #[default]
    Weak,
    /// Strict orders only.
    Strict,
}

/// `P^N` for a ballot set `P`, enumerated lexicographically with individual 0
/// as the most significant position and ballots in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSpace {
    alternatives: AlternativeSet,
    individuals: usize,
    domain: Domain,
    ballots: Vec<WeakOrder>,
    size: usize,
}

impl ProfileSpace {
    pub fn new(alternatives: AlternativeSet, individuals: usize, domain: Domain) -> Result<Self, SocialChoiceError> {
        ProfileSpace::with_cap(alternatives, individuals, domain, DEFAULT_CAP)
    }

    pub fn with_cap(alternatives: AlternativeSet, individuals: usize, domain: Domain, cap: u64) -> Result<Self, SocialChoiceError> {
        let count = match domain {
            Domain::Weak => ordered_bell(alternatives.len()),
            Domain::Strict => (1..=alternatives.len() as u128).product(),
        };
        let size = u32::try_from(individuals)
            .ok()
            .and_then(|n| count.checked_pow(n))
            .filter(|&s| s <= cap as u128)
            .ok_or_else(|| SocialChoiceError::CapExceeded {
                size: format!("{count}^{individuals}"),
                cap,
            })?;
        let ballots = match domain {
            Domain::Weak => enumerate_weak_orders(&alternatives),
            Domain::Strict => enumerate_strict_orders(&alternatives).iter().map(|s| s.to_weak()).collect(),
        };
        Ok(ProfileSpace { alternatives, individuals, domain, ballots, size: size as usize })
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn individuals(&self) -> usize {
        self.individuals
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn ballots(&self) -> &[WeakOrder] {
        &self.ballots
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Ballot indices of profile number `index`.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let b = self.ballots.len();
        let mut digits = vec![0; self.individuals];
        for d in digits.iter_mut().rev() {
            *d = index % b;
            index /= b;
        }
        digits
    }

    pub fn profile(&self, index: usize) -> Profile {
        let orders = self.digits(index).into_iter().map(|d| self.ballots[d].clone()).collect();
        Profile::new(orders).expect("ballots share one alternative set")
    }

    /// Position of a profile in the enumeration, if it lies in this space.
    pub fn index_of(&self, profile: &Profile) -> Option<usize> {
        if profile.individuals() != self.individuals {
            return None;
        }
        profile.orders().iter().try_fold(0usize, |acc, o| {
            self.ballots.iter().position(|b| b == o).map(|d| acc * self.ballots.len() + d)
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.size).map(|i| self.profile(i))
    }
}

fn ordered_bell(n: usize) -> u128 {
    // a(n) = sum_k C(n,k) a(n-k)
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut total = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            total += binom * a[m - k];
        }
        a[m] = total;
    }
    a[n]
}
