use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::audit::Graph;
use super::{ProfileSpace, SocialChoiceError, SocialWelfareFunction};
use crate::preferences::{
    enumerate_strict_orders, AlternativeSet, PreferenceCycle, PreferenceError, Profile, Restrict, StrictOrder,
    StrictRelation,
};

/// A value of the restricted function: a strict order or a strict cycle on the triple.
pub type PsiValue = StrictRelation;

/// Two profiles with the same restriction whose aggregates restrict differently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IllDefined {
    pub restricted: Profile,
    pub first: Profile,
    pub first_value: PsiValue,
    pub second: Profile,
    pub second_value: PsiValue,
}

impl fmt::Display for IllDefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} both restrict to {} but give {} and {}",
            self.first, self.second, self.restricted, self.first_value, self.second_value
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<Profile>,
}

impl CommutationReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// The function restricted to profiles whose aggregate is strict and total on
/// the triple, read as a function of the restricted profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiRestriction {
    pub triple: AlternativeSet,
    /// Indices (in the profile space) of the profiles in the domain.
    pub domain: Vec<usize>,
    pub map: BTreeMap<Profile, PsiValue>,
    pub commutation: CommutationReport,
}

impl PsiRestriction {
    pub fn apply(&self, restricted: &Profile) -> Option<&PsiValue> {
        self.map.get(restricted)
    }
}

fn check_triple(space: &ProfileSpace, triple: &AlternativeSet) -> Result<(), SocialChoiceError> {
    if triple.len() != 3 {
        return Err(PreferenceError::UnsupportedSize(triple.len()).into());
    }
    Ok(triple.require_subset_of(space.alternatives())?)
}

fn restrict_all(g: &Graph<'_>, triple: &AlternativeSet) -> Vec<Option<(Profile, PsiValue)>> {
    g.outputs
        .iter()
        .enumerate()
        .map(|(i, code)| {
            let value = StrictRelation::from_code(&code.restrict(triple).expect("triple checked"))?;
            Some((g.space.profile(i).restrict(triple).expect("triple checked"), value))
        })
        .collect()
}

fn build(g: &Graph<'_>, triple: &AlternativeSet) -> Result<PsiRestriction, SocialChoiceError> {
    if let Some(v) = g.iia().violation() {
        return Err(SocialChoiceError::PreconditionFailed {
            audit: "IIA",
            certificate: serde_json::to_value(v).expect("certificate serialises"),
        });
    }
    let restricted = restrict_all(g, triple);
    let mut map: BTreeMap<Profile, (usize, PsiValue)> = BTreeMap::new();
    let mut domain = Vec::new();
    for (i, entry) in restricted.iter().enumerate() {
        let Some((r, value)) = entry else { continue };
        domain.push(i);
        match map.get(r) {
            Some((j, w)) if w != value => {
                return Err(SocialChoiceError::IllDefined(Box::new(IllDefined {
                    restricted: r.clone(),
                    first: g.space.profile(*j),
                    first_value: w.clone(),
                    second: g.space.profile(i),
                    second_value: value.clone(),
                })));
            }
            Some(_) => {}
            None => {
                map.insert(r.clone(), (i, value.clone()));
            }
        }
    }
    let map: BTreeMap<Profile, PsiValue> = map.into_iter().map(|(k, (_, v))| (k, v)).collect();
    let mut commutation = CommutationReport { checked: 0, failures: 0, first_failure: None };
    for &i in &domain {
        let (r, value) = restricted[i].as_ref().expect("domain member");
        commutation.checked += 1;
        if map.get(r) != Some(value) {
            commutation.failures += 1;
            commutation.first_failure.get_or_insert_with(|| g.space.profile(i));
        }
    }
    Ok(PsiRestriction { triple: triple.clone(), domain, map, commutation })
}

/// Builds the restricted function on `triple`. Requires independence of
/// irrelevant alternatives over the space.
pub fn psi_restriction(
    swf: &SocialWelfareFunction,
    space: &ProfileSpace,
    triple: &AlternativeSet,
) -> Result<PsiRestriction, SocialChoiceError> {
    check_triple(space, triple)?;
    build(&Graph::new(swf, space)?, triple)
}

/// The image of the restricted function, orders and cycles kept apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiImage {
    pub triple: AlternativeSet,
    pub orders: Vec<StrictOrder>,
    pub cycles: Vec<PreferenceCycle>,
}

impl PsiImage {
    pub fn missing_orders(&self) -> Vec<StrictOrder> {
        enumerate_strict_orders(&self.triple).into_iter().filter(|o| !self.orders.contains(o)).collect()
    }

    pub fn contains_all_strict_orders(&self) -> bool {
        self.missing_orders().is_empty()
    }

    pub fn has_cycle(&self) -> bool {
        !self.cycles.is_empty()
    }

    /// Exactly the strict orders on the triple.
    pub fn is_strict_only(&self) -> bool {
        self.contains_all_strict_orders() && !self.has_cycle()
    }
}

impl fmt::Display for PsiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .orders
            .iter()
            .map(ToString::to_string)
            .chain(self.cycles.iter().map(ToString::to_string))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Image of the restricted function. Requires unanimity and independence of
/// irrelevant alternatives over the space.
pub fn image_of_psi(
    swf: &SocialWelfareFunction,
    space: &ProfileSpace,
    triple: &AlternativeSet,
) -> Result<PsiImage, SocialChoiceError> {
    check_triple(space, triple)?;
    let g = Graph::new(swf, space)?;
    if let Some(v) = g.unanimity().violation() {
        return Err(SocialChoiceError::PreconditionFailed {
            audit: "Unanimity",
            certificate: serde_json::to_value(v).expect("certificate serialises"),
        });
    }
    let psi = build(&g, triple)?;
    let mut orders = Vec::new();
    let mut cycles = Vec::new();
    for v in psi.map.into_values() {
        match v {
            PsiValue::Order(o) if !orders.contains(&o) => orders.push(o),
            PsiValue::Cycle(c) if !cycles.contains(&c) => cycles.push(c),
            _ => {}
        }
    }
    orders.sort();
    cycles.sort();
    Ok(PsiImage { triple: triple.clone(), orders, cycles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::social_choice::{Domain, LookupTable};

    fn set(n: usize) -> AlternativeSet {
        AlternativeSet::first(n).unwrap()
    }

    #[test]
    fn majority_three_voters_reaches_both_cycles() {
        let pm = SocialWelfareFunction::pairwise_majority(set(3), 3);
        let space = ProfileSpace::new(set(3), 3, Domain::Weak).unwrap();
        let psi = psi_restriction(&pm, &space, &set(3)).unwrap();
        let table2: Profile = Profile::new(["1<2<3", "2<3<1", "3<1<2"].map(|s| s.parse().unwrap()).to_vec()).unwrap();
        assert!(psi.domain.contains(&space.index_of(&table2).unwrap()));
        assert_eq!(psi.apply(&table2), Some(&PsiValue::Cycle("1<2<3<1".parse().unwrap())));
        assert!(psi.commutation.holds());
        let image = image_of_psi(&pm, &space, &set(3)).unwrap();
        assert!(image.contains_all_strict_orders());
        assert_eq!(image.cycles.len(), 2);
    }

    #[test]
    fn dictator_image_is_strict_orders() {
        let d = SocialWelfareFunction::dictator(set(3), 2, 0).unwrap();
        let space = ProfileSpace::new(set(3), 2, Domain::Weak).unwrap();
        let image = image_of_psi(&d, &space, &set(3)).unwrap();
        assert!(image.is_strict_only());
        assert_eq!(image.orders.len(), 6);
    }

    #[test]
    fn commutation_on_four_alternatives_strict_domain() {
        let pm = SocialWelfareFunction::pairwise_majority(set(4), 2);
        let space = ProfileSpace::new(set(4), 2, Domain::Strict).unwrap();
        let psi = psi_restriction(&pm, &space, &set(3)).unwrap();
        assert_eq!(psi.commutation.checked, psi.domain.len());
        assert!(psi.commutation.holds());
        assert!(!psi.domain.is_empty());
    }

    #[test]
    fn borda_is_rejected_with_certificate() {
        let space = ProfileSpace::new(set(3), 2, Domain::Weak).unwrap();
        let t = SocialWelfareFunction::lookup(LookupTable::borda(space.clone()).unwrap());
        match psi_restriction(&t, &space, &set(3)) {
            Err(SocialChoiceError::PreconditionFailed { audit, certificate }) => {
                assert_eq!(audit, "IIA");
                assert!(certificate.get("first").is_some());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triple_must_be_three_members_of_the_set() {
        let pm = SocialWelfareFunction::pairwise_majority(set(3), 2);
        let space = ProfileSpace::new(set(3), 2, Domain::Weak).unwrap();
        assert!(psi_restriction(&pm, &space, &set(2)).is_err());
        assert!(psi_restriction(&pm, &space, &"2,3,4".parse().unwrap()).is_err());
    }
}
