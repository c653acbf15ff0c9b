use std::collections::HashMap;

use serde::Serialize;

use super::swf::relations_key;
use super::{Domain, ProfileSpace, SocialChoiceError, SocialWelfareFunction};
use crate::preferences::{Alternative, AlternativeSet, PairRelation, Profile, TernaryCode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum AuditOutcome<V> {
    Pass { profiles_checked: usize },
    Fail(V),
}

impl<V> AuditOutcome<V> {
    pub fn passed(&self) -> bool {
        matches!(self, AuditOutcome::Pass { .. })
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            AuditOutcome::Fail(v) => Some(v),
            AuditOutcome::Pass { .. } => None,
        }
    }
}

/// Every individual has `unanimous` on `(a, b)` but the aggregate has `got`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnanimityViolation {
    pub profile_index: usize,
    pub profile: Profile,
    pub a: Alternative,
    pub b: Alternative,
    pub unanimous: PairRelation,
    pub got: PairRelation,
}

impl UnanimityViolation {
    /// Re-evaluates the function and confirms the violation.
    pub fn replay(&self, swf: &SocialWelfareFunction) -> bool {
        let all = self.profile.orders().iter().all(|o| o.relation(self.a, self.b) == Some(self.unanimous));
        let got = swf.aggregate(&self.profile).ok().and_then(|c| c.relation(self.a, self.b));
        all && self.unanimous.is_strict() && got == Some(self.got) && self.got != self.unanimous
    }
}

/// Two profiles agree on `(a, b)` individual by individual but their aggregates differ there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IiaViolation {
    pub a: Alternative,
    pub b: Alternative,
    pub first_index: usize,
    pub first: Profile,
    pub first_relation: PairRelation,
    pub second_index: usize,
    pub second: Profile,
    pub second_relation: PairRelation,
}

impl IiaViolation {
    pub fn replay(&self, swf: &SocialWelfareFunction) -> bool {
        let same_ballots = self.first.individuals() == self.second.individuals()
            && self
                .first
                .orders()
                .iter()
                .zip(self.second.orders())
                .all(|(x, y)| x.relation(self.a, self.b) == y.relation(self.a, self.b));
        let r1 = swf.aggregate(&self.first).ok().and_then(|c| c.relation(self.a, self.b));
        let r2 = swf.aggregate(&self.second).ok().and_then(|c| c.relation(self.a, self.b));
        same_ballots && r1 == Some(self.first_relation) && r2 == Some(self.second_relation) && r1 != r2
    }
}

/// A profile where `individual` strictly ranks `(a, b)` one way and the aggregate does not follow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DictatorCounterexample {
    pub individual: usize,
    pub profile_index: usize,
    pub profile: Profile,
    pub a: Alternative,
    pub b: Alternative,
    pub ballot: PairRelation,
    pub aggregate: PairRelation,
}

impl DictatorCounterexample {
    pub fn replay(&self, swf: &SocialWelfareFunction) -> bool {
        let ballot = self.profile.orders().get(self.individual).and_then(|o| o.relation(self.a, self.b));
        let got = swf.aggregate(&self.profile).ok().and_then(|c| c.relation(self.a, self.b));
        ballot == Some(self.ballot) && self.ballot.is_strict() && got == Some(self.aggregate) && got != ballot
    }
}

/// `dictator` is set when some individual has no counterexample; the
/// certificate is then the exhaustive scan itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DictatorReport {
    pub dictator: Option<usize>,
    pub profiles_checked: usize,
    pub counterexamples: Vec<Option<DictatorCounterexample>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FairnessReport {
    pub swf: String,
    pub alternatives: AlternativeSet,
    pub individuals: usize,
    pub domain: Domain,
    pub profiles: usize,
    pub unanimity: AuditOutcome<UnanimityViolation>,
    pub iia: AuditOutcome<IiaViolation>,
    pub dictator: DictatorReport,
}

impl FairnessReport {
    pub fn non_dictatorship(&self) -> bool {
        self.dictator.dictator.is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// The function's graph over a space, evaluated once.
pub(crate) struct Graph<'a> {
    pub space: &'a ProfileSpace,
    pub outputs: Vec<TernaryCode>,
}

impl<'a> Graph<'a> {
    pub fn new(swf: &SocialWelfareFunction, space: &'a ProfileSpace) -> Result<Self, SocialChoiceError> {
        let outputs = space.iter().map(|p| swf.aggregate(&p)).collect::<Result<Vec<_>, _>>()?;
        Ok(Graph { space, outputs })
    }

    fn pairs(&self) -> Vec<(Alternative, Alternative)> {
        self.space.alternatives().pairs().collect()
    }

    pub fn unanimity(&self) -> AuditOutcome<UnanimityViolation> {
        let pairs = self.pairs();
        for (i, code) in self.outputs.iter().enumerate() {
            let p = self.space.profile(i);
            for &(a, b) in &pairs {
                let first = p.orders()[0].relation(a, b).expect("pair");
                if !first.is_strict() || p.orders().iter().any(|o| o.relation(a, b) != Some(first)) {
                    continue;
                }
                let got = code.relation(a, b).expect("pair");
                if got != first {
                    return AuditOutcome::Fail(UnanimityViolation { profile_index: i, profile: p, a, b, unanimous: first, got });
                }
            }
        }
        AuditOutcome::Pass { profiles_checked: self.outputs.len() }
    }

    pub fn iia(&self) -> AuditOutcome<IiaViolation> {
        let pairs = self.pairs();
        let mut seen: Vec<HashMap<usize, (usize, PairRelation)>> = vec![HashMap::new(); pairs.len()];
        for (i, code) in self.outputs.iter().enumerate() {
            let p = self.space.profile(i);
            for (k, &(a, b)) in pairs.iter().enumerate() {
                let rel = code.relation(a, b).expect("pair");
                let key = relations_key(&p, a, b);
                match seen[k].get(&key) {
                    Some(&(j, r)) if r != rel => {
                        return AuditOutcome::Fail(IiaViolation {
                            a,
                            b,
                            first_index: j,
                            first: self.space.profile(j),
                            first_relation: r,
                            second_index: i,
                            second: p,
                            second_relation: rel,
                        });
                    }
                    Some(_) => {}
                    None => {
                        seen[k].insert(key, (i, rel));
                    }
                }
            }
        }
        AuditOutcome::Pass { profiles_checked: self.outputs.len() }
    }

    pub fn dictator(&self) -> DictatorReport {
        let n = self.space.individuals();
        let pairs = self.pairs();
        let mut counterexamples: Vec<Option<DictatorCounterexample>> = vec![None; n];
        for (i, code) in self.outputs.iter().enumerate() {
            if counterexamples.iter().all(Option::is_some) {
                break;
            }
            let p = self.space.profile(i);
            for &(a, b) in &pairs {
                let agg = code.relation(a, b).expect("pair");
                for (ind, slot) in counterexamples.iter_mut().enumerate() {
                    let ballot = p.orders()[ind].relation(a, b).expect("pair");
                    if slot.is_none() && ballot.is_strict() && agg != ballot {
                        *slot = Some(DictatorCounterexample {
                            individual: ind,
                            profile_index: i,
                            profile: p.clone(),
                            a,
                            b,
                            ballot,
                            aggregate: agg,
                        });
                    }
                }
            }
        }
        DictatorReport {
            dictator: counterexamples.iter().position(Option::is_none),
            profiles_checked: self.outputs.len(),
            counterexamples,
        }
    }
}

pub fn check_unanimity(swf: &SocialWelfareFunction, space: &ProfileSpace) -> Result<AuditOutcome<UnanimityViolation>, SocialChoiceError> {
    Ok(Graph::new(swf, space)?.unanimity())
}

pub fn check_iia(swf: &SocialWelfareFunction, space: &ProfileSpace) -> Result<AuditOutcome<IiaViolation>, SocialChoiceError> {
    Ok(Graph::new(swf, space)?.iia())
}

pub fn find_dictator(swf: &SocialWelfareFunction, space: &ProfileSpace) -> Result<DictatorReport, SocialChoiceError> {
    Ok(Graph::new(swf, space)?.dictator())
}

pub fn fairness_report(swf: &SocialWelfareFunction, space: &ProfileSpace) -> Result<FairnessReport, SocialChoiceError> {
    let g = Graph::new(swf, space)?;
    Ok(FairnessReport {
        swf: swf.name(),
        alternatives: space.alternatives().clone(),
        individuals: space.individuals(),
        domain: space.domain(),
        profiles: space.len(),
        unanimity: g.unanimity(),
        iia: g.iia(),
        dictator: g.dictator(),
    })
}
