use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Domain, ProfileSpace, SocialChoiceError};
use crate::preferences::{Alternative, AlternativeSet, PairRelation, Profile, TernaryCode, WeakOrder};

/// A social welfare function stored as its full graph over a profile space.
#[derive(Debug, Clone, PartialEq)]
pub struct LookupTable {
    name: String,
    space: ProfileSpace,
    outputs: Vec<TernaryCode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub profile: Vec<WeakOrder>,
    /// Ternary code over the table's alternatives, such as `(0,1,e)`.
    pub output: String,
}

/// On-disk form of a [`LookupTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    #[serde(default)]
    pub name: String,
    pub alternatives: AlternativeSet,
    pub individuals: usize,
    #[serde(default)]
    pub domain: Domain,
    pub entries: Vec<TableEntry>,
}

impl LookupTable {
    pub fn from_fn(
        name: impl Into<String>,
        space: ProfileSpace,
        mut f: impl FnMut(&Profile) -> TernaryCode,
    ) -> Result<Self, SocialChoiceError> {
        let outputs: Vec<TernaryCode> = space.iter().map(|p| f(&p)).collect();
        LookupTable::new(name, space, outputs)
    }

    pub fn new(name: impl Into<String>, space: ProfileSpace, outputs: Vec<TernaryCode>) -> Result<Self, SocialChoiceError> {
        if outputs.len() != space.len() {
            return Err(SocialChoiceError::Table(format!("{} outputs for {} profiles", outputs.len(), space.len())));
        }
        if let Some(bad) = outputs.iter().find(|c| c.alternatives() != space.alternatives()) {
            return Err(SocialChoiceError::Table(format!("output {bad} is not over {}", space.alternatives())));
        }
        Ok(LookupTable { name: name.into(), space, outputs })
    }

    /// The function returning the same code on every profile.
    pub fn constant(space: ProfileSpace, code: TernaryCode) -> Result<Self, SocialChoiceError> {
        let outputs = vec![code.clone(); space.len()];
        LookupTable::new(format!("constant {code}"), space, outputs)
    }

    /// Tabulates another function over a space.
    pub fn tabulate(swf: &SocialWelfareFunction, space: ProfileSpace) -> Result<Self, SocialChoiceError> {
        let outputs = space.iter().map(|p| swf.aggregate(&p)).collect::<Result<Vec<_>, _>>()?;
        LookupTable::new(format!("tabulated {}", swf.name()), space, outputs)
    }

    /// Scores each alternative by how many it beats minus how many beat it on
    /// each ballot, sums the scores, and ranks by total.
    pub fn borda(space: ProfileSpace) -> Result<Self, SocialChoiceError> {
        let set = space.alternatives().clone();
        LookupTable::from_fn("borda", space, |p| {
            let score = |x: Alternative| -> i64 {
                p.orders()
                    .iter()
                    .map(|o| {
                        set.iter()
                            .map(|y| match o.relation(y, x) {
                                Some(PairRelation::Prec) => 1,
                                Some(PairRelation::Succ) => -1,
                                _ => 0,
                            })
                            .sum::<i64>()
                    })
                    .sum()
            };
            TernaryCode::from_fn(set.clone(), |a, b| compare(score(a), score(b)))
        })
    }

    /// Draws an independent rule for every pair of alternatives: a map from
    /// the individuals' relations on that pair to the aggregate relation,
    /// forced to agree with unanimous strict preferences. The result
    /// satisfies unanimity and independence of irrelevant alternatives.
    pub fn random_pairwise(space: ProfileSpace, seed: u64) -> Result<Self, SocialChoiceError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let set = space.alternatives().clone();
        let n = space.individuals();
        let keys = 3usize.pow(n as u32);
        let rules: Vec<Vec<PairRelation>> = set
            .pairs()
            .map(|_| {
                (0..keys)
                    .map(|key| {
                        let rels = key_relations(key, n);
                        match rels.first() {
                            Some(&r) if r.is_strict() && rels.iter().all(|&x| x == r) => r,
                            _ => RELATIONS[rng.gen_range(0..3)],
                        }
                    })
                    .collect()
            })
            .collect();
        LookupTable::from_fn(format!("random-pairwise seed {seed}"), space, |p| {
            let mut k = 0;
            TernaryCode::from_fn(set.clone(), |a, b| {
                let rule = &rules[k];
                k += 1;
                rule[relations_key(p, a, b)]
            })
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &ProfileSpace {
        &self.space
    }

    pub fn outputs(&self) -> &[TernaryCode] {
        &self.outputs
    }

    pub fn get(&self, profile: &Profile) -> Option<&TernaryCode> {
        self.space.index_of(profile).map(|i| &self.outputs[i])
    }

    pub fn to_json_doc(&self) -> TableJson {
        TableJson {
            name: self.name.clone(),
            alternatives: self.space.alternatives().clone(),
            individuals: self.space.individuals(),
            domain: self.space.domain(),
            entries: self
                .space
                .iter()
                .zip(&self.outputs)
                .map(|(p, c)| TableEntry { profile: p.orders().to_vec(), output: c.to_string() })
                .collect(),
        }
    }

    /// Checks that the entries cover the profile space exactly once.
    pub fn from_json_doc(doc: TableJson) -> Result<Self, SocialChoiceError> {
        let space = ProfileSpace::new(doc.alternatives.clone(), doc.individuals, doc.domain)?;
        let mut outputs: Vec<Option<TernaryCode>> = vec![None; space.len()];
        for entry in doc.entries {
            let profile = Profile::new(entry.profile)?;
            let i = space
                .index_of(&profile)
                .ok_or_else(|| SocialChoiceError::Table(format!("profile {profile} is outside the table's space")))?;
            if outputs[i].is_some() {
                return Err(SocialChoiceError::Table(format!("profile {profile} appears twice")));
            }
            outputs[i] = Some(TernaryCode::parse_on(doc.alternatives.clone(), &entry.output)?);
        }
        let outputs = outputs
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| SocialChoiceError::Table(format!("profile {} has no entry", space.profile(i)))))
            .collect::<Result<Vec<_>, _>>()?;
        LookupTable::new(doc.name, space, outputs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_doc()).expect("table serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, SocialChoiceError> {
        let doc: TableJson = serde_json::from_str(text).map_err(|e| SocialChoiceError::Table(e.to_string()))?;
        LookupTable::from_json_doc(doc)
    }
}

const RELATIONS: [PairRelation; 3] = [PairRelation::Prec, PairRelation::Succ, PairRelation::Tie];

fn compare(x: i64, y: i64) -> PairRelation {
    match x.cmp(&y) {
        std::cmp::Ordering::Less => PairRelation::Prec,
        std::cmp::Ordering::Greater => PairRelation::Succ,
        std::cmp::Ordering::Equal => PairRelation::Tie,
    }
}

fn key_relations(mut key: usize, n: usize) -> Vec<PairRelation> {
    let mut rels = vec![PairRelation::Tie; n];
    for r in rels.iter_mut().rev() {
        *r = RELATIONS[key % 3];
        key /= 3;
    }
    rels
}

/// The individuals' relations on `{a, b}` as a base-3 number, individual 0 first.
pub(crate) fn relations_key(p: &Profile, a: Alternative, b: Alternative) -> usize {
    p.orders().iter().fold(0, |acc, o| {
        let r = o.relation(a, b).expect("profile covers the pair");
        acc * 3 + RELATIONS.iter().position(|&x| x == r).expect("listed")
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum SwfKind {
    PairwiseMajority,
    /// Copies the ballot of this individual (0-based).
    Dictator(usize),
    LookupTable(LookupTable),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SocialWelfareFunction {
    kind: SwfKind,
    individuals: usize,
    alternatives: AlternativeSet,
}

impl SocialWelfareFunction {
    /// `a ≺ b` when more individuals strictly prefer it that way than the other; ties give `e`.
    pub fn pairwise_majority(alternatives: AlternativeSet, individuals: usize) -> Self {
        SocialWelfareFunction { kind: SwfKind::PairwiseMajority, individuals, alternatives }
    }

    pub fn dictator(alternatives: AlternativeSet, individuals: usize, index: usize) -> Result<Self, SocialChoiceError> {
        if index >= individuals {
            return Err(SocialChoiceError::NoSuchIndividual { index, individuals });
        }
        Ok(SocialWelfareFunction { kind: SwfKind::Dictator(index), individuals, alternatives })
    }

    pub fn lookup(table: LookupTable) -> Self {
        let individuals = table.space().individuals();
        let alternatives = table.space().alternatives().clone();
        SocialWelfareFunction { kind: SwfKind::LookupTable(table), individuals, alternatives }
    }

    /// Parses `pairwise-majority`, `dictator:<i>` or `table:<path>`. A table
    /// brings its own alternatives and individual count.
    pub fn from_spec(spec: &str, alternatives: AlternativeSet, individuals: usize) -> Result<Self, SocialChoiceError> {
        let spec = spec.trim();
        if spec == "pairwise-majority" {
            return Ok(SocialWelfareFunction::pairwise_majority(alternatives, individuals));
        }
        if let Some(i) = spec.strip_prefix("dictator:") {
            let index = i.trim().parse().map_err(|_| SocialChoiceError::BadSpec(spec.to_string()))?;
            return SocialWelfareFunction::dictator(alternatives, individuals, index);
        }
        if let Some(path) = spec.strip_prefix("table:") {
            return SocialWelfareFunction::from_table_file(Path::new(path));
        }
        Err(SocialChoiceError::BadSpec(spec.to_string()))
    }

    pub fn from_table_file(path: &Path) -> Result<Self, SocialChoiceError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SocialChoiceError::Table(format!("cannot read {}: {e}", path.display())))?;
        Ok(SocialWelfareFunction::lookup(LookupTable::from_json(&text)?))
    }

    pub fn kind(&self) -> &SwfKind {
        &self.kind
    }

    pub fn individuals(&self) -> usize {
        self.individuals
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alternatives
    }

    pub fn name(&self) -> String {
        match &self.kind {
            SwfKind::PairwiseMajority => "pairwise-majority".into(),
            SwfKind::Dictator(i) => format!("dictator:{i}"),
            SwfKind::LookupTable(t) => format!("table:{}", t.name()),
        }
    }

    /// The domain the function is defined on: a table's own, otherwise every weak order.
    pub fn native_domain(&self) -> Domain {
        match &self.kind {
            SwfKind::LookupTable(t) => t.space().domain(),
            _ => Domain::Weak,
        }
    }

    pub fn aggregate(&self, p: &Profile) -> Result<TernaryCode, SocialChoiceError> {
        if p.individuals() != self.individuals || p.alternatives() != self.alternatives {
            return Err(SocialChoiceError::ProfileShape {
                got_individuals: p.individuals(),
                got_set: p.alternatives().to_string(),
                individuals: self.individuals,
                set: self.alternatives.to_string(),
            });
        }
        Ok(match &self.kind {
            SwfKind::PairwiseMajority => TernaryCode::from_fn(self.alternatives.clone(), |a, b| {
                let mut net = 0i64;
                for o in p.orders() {
                    match o.relation(a, b) {
                        Some(PairRelation::Prec) => net += 1,
                        Some(PairRelation::Succ) => net -= 1,
                        _ => {}
                    }
                }
                compare(-net, 0)
            }),
            SwfKind::Dictator(i) => TernaryCode::encode_order(&p.orders()[*i]),
            SwfKind::LookupTable(t) => t.get(p).cloned().ok_or_else(|| SocialChoiceError::OutsideDomain(p.to_string()))?,
        })
    }
}

impl fmt::Display for SocialWelfareFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={}, A={})", self.name(), self.individuals, self.alternatives)
    }
}
