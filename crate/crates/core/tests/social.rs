use std::collections::HashMap;

use preference_surfaces::preferences::{
    AlternativeSet, PairRelation, PreferenceCycle, Profile, Restrict, StrictRelation, TernaryCode,
};
use preference_surfaces::social_choice::{
    check_iia, check_unanimity, find_dictator, psi_restriction, Domain, LookupTable, ProfileSpace, SocialWelfareFunction,
};
use proptest::prelude::*;

fn set(n: usize) -> AlternativeSet {
    AlternativeSet::first(n).unwrap()
}

fn space(n: usize, individuals: usize, domain: Domain) -> ProfileSpace {
    ProfileSpace::new(set(n), individuals, domain).unwrap()
}

fn profile(ballots: &[&str]) -> Profile {
    Profile::new(ballots.iter().map(|b| b.parse().unwrap()).collect()).unwrap()
}

/// A function with no structure: the output depends on a hash of the profile.
fn scrambled(space: ProfileSpace) -> SocialWelfareFunction {
    let set = space.alternatives().clone();
    let table = LookupTable::from_fn("scrambled", space, |p| {
        let h = p.to_string().bytes().fold(7u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
        let mut k = h;
        TernaryCode::from_fn(set.clone(), |_, _| {
            k /= 3;
            [PairRelation::Prec, PairRelation::Succ, PairRelation::Tie][(k % 3) as usize]
        })
    })
    .unwrap();
    SocialWelfareFunction::lookup(table)
}

fn fleet() -> Vec<(SocialWelfareFunction, ProfileSpace)> {
    let w2 = space(3, 2, Domain::Weak);
    let w3 = space(3, 3, Domain::Weak);
    vec![
        (SocialWelfareFunction::pairwise_majority(set(3), 2), w2.clone()),
        (SocialWelfareFunction::pairwise_majority(set(3), 3), w3.clone()),
        (SocialWelfareFunction::dictator(set(3), 2, 0).unwrap(), w2.clone()),
        (SocialWelfareFunction::dictator(set(3), 2, 1).unwrap(), w2.clone()),
        (SocialWelfareFunction::lookup(LookupTable::borda(w2.clone()).unwrap()), w2.clone()),
        (SocialWelfareFunction::lookup(LookupTable::random_pairwise(w2.clone(), 1).unwrap()), w2.clone()),
        (SocialWelfareFunction::lookup(LookupTable::random_pairwise(w3.clone(), 2).unwrap()), w3.clone()),
        (scrambled(w2.clone()), w2.clone()),
        (
            SocialWelfareFunction::lookup(LookupTable::constant(w2.clone(), "(0,0,0)".parse().unwrap()).unwrap()),
            w2,
        ),
    ]
}

fn unanimity_oracle(swf: &SocialWelfareFunction, space: &ProfileSpace) -> bool {
    space.iter().all(|p| {
        let out = swf.aggregate(&p).unwrap();
        space.alternatives().pairs().all(|(a, b)| {
            let rels: Vec<_> = p.orders().iter().map(|o| o.relation(a, b).unwrap()).collect();
            !(rels[0] != PairRelation::Tie && rels.iter().all(|&r| r == rels[0])) || out.relation(a, b) == Some(rels[0])
        })
    })
}

fn iia_oracle(swf: &SocialWelfareFunction, space: &ProfileSpace) -> bool {
    let set = space.alternatives();
    set.pairs().all(|(a, b)| {
        let mut seen: HashMap<Vec<PairRelation>, PairRelation> = HashMap::new();
        space.iter().all(|p| {
            let key: Vec<_> = p.orders().iter().map(|o| o.relation(a, b).unwrap()).collect();
            let got = swf.aggregate(&p).unwrap().relation(a, b).unwrap();
            *seen.entry(key).or_insert(got) == got
        })
    })
}

fn dictator_oracle(swf: &SocialWelfareFunction, space: &ProfileSpace) -> Option<usize> {
    (0..space.individuals()).find(|&i| {
        space.iter().all(|p| {
            let out = swf.aggregate(&p).unwrap();
            space.alternatives().pairs().all(|(a, b)| {
                let r = p.orders()[i].relation(a, b).unwrap();
                r == PairRelation::Tie || out.relation(a, b) == Some(r)
            })
        })
    })
}

#[test]
fn condorcet_profile_and_its_reversal() {
    let pm = SocialWelfareFunction::pairwise_majority(set(3), 3);
    let p = profile(&["1<2<3", "2<3<1", "3<1<2"]);
    let forward = StrictRelation::from_code(&pm.aggregate(&p).unwrap()).unwrap();
    assert_eq!(forward, StrictRelation::Cycle("1<2<3<1".parse::<PreferenceCycle>().unwrap()));
    let back = StrictRelation::from_code(&pm.aggregate(&p.reversed()).unwrap()).unwrap();
    assert_eq!(back, forward.reversed());
}

#[test]
fn audits_agree_with_oracles_and_certificates_replay() {
    for (swf, space) in fleet() {
        let name = swf.name();
        let u = check_unanimity(&swf, &space).unwrap();
        assert_eq!(u.passed(), unanimity_oracle(&swf, &space), "{name}");
        if let Some(v) = u.violation() {
            assert!(v.replay(&swf), "{name}");
        }
        let iia = check_iia(&swf, &space).unwrap();
        assert_eq!(iia.passed(), iia_oracle(&swf, &space), "{name}");
        if let Some(v) = iia.violation() {
            assert!(v.replay(&swf), "{name}");
        }
        let d = find_dictator(&swf, &space).unwrap();
        assert_eq!(d.dictator, dictator_oracle(&swf, &space), "{name}");
        for (i, c) in d.counterexamples.iter().enumerate() {
            match c {
                Some(c) => {
                    assert_eq!(c.individual, i);
                    assert!(c.replay(&swf), "{name}");
                }
                None => assert_eq!(d.dictator, Some(i), "{name}"),
            }
        }
    }
}

#[test]
fn borda_breaks_independence() {
    let s = space(3, 2, Domain::Weak);
    let borda = SocialWelfareFunction::lookup(LookupTable::borda(s.clone()).unwrap());
    assert!(check_unanimity(&borda, &s).unwrap().passed());
    assert!(!check_iia(&borda, &s).unwrap().passed());
}

#[test]
fn restricted_function_commutes_with_restriction() {
    let triple = set(3);
    let cases = [
        (SocialWelfareFunction::pairwise_majority(set(4), 2), space(4, 2, Domain::Strict)),
        (SocialWelfareFunction::pairwise_majority(set(3), 3), space(3, 3, Domain::Weak)),
        (SocialWelfareFunction::dictator(set(3), 2, 1).unwrap(), space(3, 2, Domain::Weak)),
        (
            SocialWelfareFunction::lookup(LookupTable::random_pairwise(space(3, 2, Domain::Weak), 1).unwrap()),
            space(3, 2, Domain::Weak),
        ),
    ];
    for (swf, space) in cases {
        let psi = psi_restriction(&swf, &space, &triple).unwrap();
        assert!(psi.commutation.holds());
        let mut in_domain = 0;
        for (i, p) in space.iter().enumerate() {
            let direct = StrictRelation::from_code(&swf.aggregate(&p).unwrap().restrict(&triple).unwrap());
            match direct {
                Some(v) => {
                    in_domain += 1;
                    assert!(psi.domain.contains(&i));
                    assert_eq!(psi.apply(&p.restrict(&triple).unwrap()), Some(&v), "{}", swf.name());
                }
                None => assert!(!psi.domain.contains(&i)),
            }
        }
        assert_eq!(in_domain, psi.domain.len());
    }
}

#[test]
fn restricted_function_needs_independence() {
    let s = space(3, 2, Domain::Weak);
    let borda = SocialWelfareFunction::lookup(LookupTable::borda(s.clone()).unwrap());
    assert!(psi_restriction(&borda, &s, &set(3)).is_err());
}

#[test]
fn table_file_round_trip() {
    let s = space(3, 2, Domain::Strict);
    let table = LookupTable::random_pairwise(s.clone(), 5).unwrap();
    let path = std::env::temp_dir().join(format!("prefsurf-table-{}.json", std::process::id()));
    std::fs::write(&path, table.to_json()).unwrap();
    let swf = SocialWelfareFunction::from_spec(&format!("table:{}", path.display()), set(3), 2).unwrap();
    for p in s.iter() {
        assert_eq!(swf.aggregate(&p).unwrap(), *table.get(&p).unwrap());
    }
    std::fs::remove_file(&path).ok();
    assert!(SocialWelfareFunction::from_spec("table:/no/such/file.json", set(3), 2).is_err());
    assert!(SocialWelfareFunction::from_spec("borda", set(3), 2).is_err());
}

#[test]
fn profile_space_sizes() {
    assert_eq!(space(3, 2, Domain::Weak).len(), 169);
    assert_eq!(space(3, 3, Domain::Weak).len(), 2197);
    assert_eq!(space(4, 2, Domain::Strict).len(), 576);
    assert!(ProfileSpace::new(set(5), 4, Domain::Weak).is_err());
}

proptest! {
    #[test]
    fn profile_index_round_trips(n in 2usize..=4, individuals in 1usize..=3, seed in any::<u64>(), strict in any::<bool>()) {
        let domain = if strict { Domain::Strict } else { Domain::Weak };
        let s = ProfileSpace::new(set(n), individuals, domain).unwrap();
        let i = (seed % s.len() as u64) as usize;
        prop_assert_eq!(s.index_of(&s.profile(i)), Some(i));
    }

    #[test]
    fn odd_majorities_on_strict_ballots_never_tie(seed in any::<u64>()) {
        let s = space(3, 3, Domain::Strict);
        let p = s.profile((seed % s.len() as u64) as usize);
        let pm = SocialWelfareFunction::pairwise_majority(set(3), 3);
        prop_assert!(pm.aggregate(&p).unwrap().is_strict());
    }

    #[test]
    fn majority_is_neutral_under_reversal(seed in any::<u64>()) {
        let s = space(3, 3, Domain::Weak);
        let p = s.profile((seed % s.len() as u64) as usize);
        let pm = SocialWelfareFunction::pairwise_majority(set(3), 3);
        let forward = pm.aggregate(&p).unwrap();
        let back = pm.aggregate(&p.reversed()).unwrap();
        for (x, y) in forward.entries().iter().zip(back.entries()) {
            prop_assert_eq!(x.flipped(), *y);
        }
    }
}
