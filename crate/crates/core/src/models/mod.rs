//! The four topological models of strict preferences and preference cycles
//! on three alternatives, their punctured variants, and the model attached
//! to a social welfare function.

mod arrow;
mod table1;

pub use arrow::{arrovian_model, arrow_check, ArrovianVerdict};
pub use table1::{table1_report, Table1Cell, Table1Report};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, ComplexJson, DeltaComplex, GluingSpec, Identification};
use crate::nerve::{nerve, reference_indices, Cover, NerveError, OrientedNerve};
use crate::preferences::{AlternativeSet, PreferenceError, StrictRelation};
use crate::social_choice::SocialChoiceError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Preference(#[from] PreferenceError),
    #[error(transparent)]
    SocialChoice(#[from] SocialChoiceError),
    #[error("{0} is not a face of the {1} model")]
    UnknownRemoval(String, ModelKind),
    #[error(
        "removing the cycle {0} from a contradictory model does not puncture it: the contradictory cycle is \
         one point identified with every other. Model the set without cycles as valid-unrealised instead"
    )]
    ContradictoryCycleRemoval(String),
    #[error("image {image} breaks the lemma on images: {reason}")]
    LemmaViolation { image: String, reason: String },
    #[error("unknown model kind {0:?}; expected valid-unrealised, valid-realised, contradictory-unrealised or contradictory-realised")]
    BadKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Valid,
    Contradictory,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realisation {
    Unrealised,
    Realised,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelKind {
    pub regime: Regime,
    pub realisation: Realisation,
}

impl ModelKind {
    pub const VALID_UNREALISED: ModelKind = ModelKind { regime: Regime::Valid, realisation: Realisation::Unrealised };
    pub const VALID_REALISED: ModelKind = ModelKind { regime: Regime::Valid, realisation: Realisation::Realised };
    pub const CONTRADICTORY_UNREALISED: ModelKind =
        ModelKind { regime: Regime::Contradictory, realisation: Realisation::Unrealised };
    pub const CONTRADICTORY_REALISED: ModelKind =
        ModelKind { regime: Regime::Contradictory, realisation: Realisation::Realised };

    pub const ALL: [ModelKind; 4] = [
        ModelKind::VALID_UNREALISED,
        ModelKind::VALID_REALISED,
        ModelKind::CONTRADICTORY_UNREALISED,
        ModelKind::CONTRADICTORY_REALISED,
    ];
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.regime {
            Regime::Valid => "valid",
            Regime::Contradictory => "contradictory",
        };
        let s = match self.realisation {
            Realisation::Unrealised => "unrealised",
            Realisation::Realised => "realised",
        };
        write!(f, "{r}-{s}")
    }
}

impl FromStr for ModelKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s.trim())
            .ok_or_else(|| ModelError::BadKind(s.to_string()))
    }
}

/// A model complex with, for each face, the preferences it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Model {
    pub kind: ModelKind,
    pub alternatives: AlternativeSet,
    pub complex: DeltaComplex,
    pub provenance: Vec<Vec<StrictRelation>>,
}

impl Model {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            kind: String,
            #[serde(flatten)]
            complex: ComplexJson,
            provenance: Vec<Vec<String>>,
        }
        let doc = Doc {
            kind: self.kind.to_string(),
            complex: ComplexJson::from(&self.complex),
            provenance: self.provenance.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("model serialises")
    }

    pub fn face_of(&self, element: &StrictRelation) -> Option<usize> {
        self.provenance.iter().position(|p| p.contains(element))
    }
}

fn label(ij: (crate::preferences::Alternative, crate::preferences::Alternative)) -> String {
    format!("{}{}", ij.0, ij.1)
}

/// Vertex ids of an element's reference triple in a nerve.
fn reference_vertices(n: &OrientedNerve, element: &StrictRelation) -> Result<[usize; 3], ModelError> {
    let ids = reference_indices(element).map(|ij| n.complex.vertex_by_label(&label(ij)));
    match ids {
        [Some(a), Some(b), Some(c)] => Ok([a, b, c]),
        _ => Err(ModelError::Complex(ComplexError::UnknownVertex(element.to_string()))),
    }
}

/// Rotates the second reference triple so that the least-labelled vertices
/// of the two triples correspond, keeping cyclic order.
fn aligned(c: &DeltaComplex, a: [usize; 3], b: [usize; 3]) -> [(usize, usize); 3] {
    let least = |t: [usize; 3]| (0..3).min_by_key(|&k| c.vertices()[t[k]].clone()).expect("three");
    let (sa, sb) = (least(a), least(b));
    [0, 1, 2].map(|k| (a[(sa + k) % 3], b[(sb + k) % 3]))
}

fn merged_provenance(n: &OrientedNerve, quotient: &DeltaComplex) -> Vec<Vec<StrictRelation>> {
    quotient
        .faces()
        .iter()
        .map(|f| {
            f.label
                .split('~')
                .flat_map(|l| {
                    let k = n.complex.face_by_label(l).expect("quotient keeps face labels");
                    n.provenance[k].clone()
                })
                .collect()
        })
        .collect()
}

/// The model complex for one cell of the table, over the given triple.
pub fn build_model_on(kind: ModelKind, set: &AlternativeSet) -> Result<Model, ModelError> {
    let n = match kind.realisation {
        Realisation::Unrealised => nerve(&Cover::cover_u(set)?)?,
        Realisation::Realised => nerve(&Cover::cover_v(set)?)?,
    };
    let (complex, provenance) = match kind.regime {
        Regime::Valid => (n.complex.clone(), n.provenance.clone()),
        Regime::Contradictory => {
            let spec = match kind.realisation {
                Realisation::Unrealised => boundary_gluing(&n)?,
                Realisation::Realised => reversal_gluing(&n)?,
            };
            let q = n.complex.quotient(&spec)?;
            let p = merged_provenance(&n, &q);
            (q, p)
        }
    };
    Ok(Model { kind, alternatives: set.clone(), complex, provenance })
}

pub fn build_model(kind: ModelKind) -> Result<Model, ModelError> {
    build_model_on(kind, &AlternativeSet::first(3)?)
}

/// Glues the two cycle boundary circuits of the strict-order annulus edge by
/// edge, matching their reference orientations.
fn boundary_gluing(n: &OrientedNerve) -> Result<GluingSpec, ModelError> {
    let [c1, c2] = crate::preferences::valid_cycles(&n.alternatives)?.map(StrictRelation::Cycle);
    let pairs = aligned(&n.complex, reference_vertices(n, &c1)?, reference_vertices(n, &c2)?);
    let edge = |u: usize, v: usize| {
        n.complex
            .edges()
            .iter()
            .position(|e| (e.tail, e.head) == (u, v) || (e.tail, e.head) == (v, u))
            .ok_or_else(|| ComplexError::UnknownEdge(format!("{}-{}", n.complex.vertices()[u], n.complex.vertices()[v])))
    };
    let mut ids = Vec::new();
    for k in 0..3 {
        let (a0, b0) = pairs[k];
        let (a1, b1) = pairs[(k + 1) % 3];
        ids.push(Identification::edges(edge(a0, a1)?, edge(b0, b1)?, [(a0, b0), (a1, b1)]));
    }
    Ok(GluingSpec::new(ids))
}

/// Identifies every face with the face of the reversed preference, vertex
/// `ij` with `ji`: the antipodal map of the realised sphere, which carries
/// one cycle face onto the other.
fn reversal_gluing(n: &OrientedNerve) -> Result<GluingSpec, ModelError> {
    let mut ids = Vec::new();
    for (f, prov) in n.provenance.iter().enumerate() {
        let element = &prov[0];
        let partner = element.reversed();
        if partner <= *element {
            continue;
        }
        let g = n.face_of(&partner).ok_or_else(|| ComplexError::UnknownFace(partner.to_string()))?;
        let corners = n.complex.face_corners(f);
        let corr = corners.map(|v| {
            let (i, j) = n.vertex_pairs[v];
            let w = n.vertex_pairs.iter().position(|&x| x == (j, i)).expect("pair vertices come in both orders");
            (v, w)
        });
        ids.push(Identification::faces(f, g, corr));
    }
    Ok(GluingSpec::new(ids))
}

/// Removes the faces standing for the listed preferences.
pub fn punctured_variant_on(kind: ModelKind, set: &AlternativeSet, removals: &[StrictRelation]) -> Result<Model, ModelError> {
    let model = build_model_on(kind, set)?;
    if kind.regime == Regime::Contradictory {
        if let Some(c) = removals.iter().find(|r| r.is_cycle()) {
            return Err(ModelError::ContradictoryCycleRemoval(c.to_string()));
        }
    }
    let mut drop = Vec::new();
    for r in removals {
        let f = model.face_of(r).ok_or_else(|| ModelError::UnknownRemoval(r.to_string(), kind))?;
        if !drop.contains(&f) {
            drop.push(f);
        }
    }
    let complex = model.complex.puncture_many(&drop)?;
    let provenance = model
        .provenance
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, p)| p.clone())
        .collect();
    Ok(Model { kind, alternatives: model.alternatives, complex, provenance })
}

pub fn punctured_variant(kind: ModelKind, removals: &[StrictRelation]) -> Result<Model, ModelError> {
    punctured_variant_on(kind, &AlternativeSet::first(3)?, removals)
}
