//! Covers of the strict preferences on three alternatives by the sets
//! `U_ij` / `V_ij`, and their nerve complexes with reference orientations.

mod signature;

pub use signature::{reference_orientation_signature, Rotation, Signature};

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, ComplexJson, DeltaComplex, Edge, Face, Slot};
use crate::preferences::{
    enumerate_strict_orders, valid_cycles, Alternative, AlternativeSet, PreferenceError, StrictRelation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("covers are defined on exactly 3 alternatives, got {0}")]
    Unsupported(usize),
    #[error(transparent)]
    Preference(#[from] PreferenceError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("cover members {0:?} share an element; the nerve would exceed dimension 2")]
    DimensionExceeded(Vec<String>),
    #[error("member {index} names element {element}, outside the ground set")]
    BadMember { index: String, element: usize },
    #[error("unrecognised complex: {0}")]
    Unrecognised(String),
}

/// Which strict relations the cover is a cover of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroundSet {
    /// The six strict orders.
    StrictOrders,
    /// The strict orders together with the two valid strict cycles.
    ValidPreferences,
}

/// A family of subsets of the ground set, indexed by ordered pairs `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub alternatives: AlternativeSet,
    pub ground: GroundSet,
    pub elements: Vec<StrictRelation>,
    pub indices: Vec<(Alternative, Alternative)>,
    pub members: Vec<BTreeSet<usize>>,
}

fn ordered_pairs(set: &AlternativeSet) -> Vec<(Alternative, Alternative)> {
    set.members().iter().copied().cartesian_product(set.members().iter().copied()).filter(|(a, b)| a != b).collect()
}

fn ground_elements(set: &AlternativeSet, ground: GroundSet) -> Result<Vec<StrictRelation>, NerveError> {
    let mut elements: Vec<StrictRelation> =
        enumerate_strict_orders(set).into_iter().map(StrictRelation::Order).collect();
    if ground == GroundSet::ValidPreferences {
        elements.extend(valid_cycles(set)?.into_iter().map(StrictRelation::Cycle));
    }
    Ok(elements)
}

impl Cover {
    /// `U_ij = { p strict order : i ≺ j in p }`.
    pub fn cover_u(set: &AlternativeSet) -> Result<Cover, NerveError> {
        Cover::by_predicate(set, GroundSet::StrictOrders)
    }

    /// `V_ij = { p : i ≺ j in p and not j ≺ i in p }` over orders and valid cycles.
    pub fn cover_v(set: &AlternativeSet) -> Result<Cover, NerveError> {
        Cover::by_predicate(set, GroundSet::ValidPreferences)
    }

    fn by_predicate(set: &AlternativeSet, ground: GroundSet) -> Result<Cover, NerveError> {
        if set.len() != 3 {
            return Err(NerveError::Unsupported(set.len()));
        }
        let elements = ground_elements(set, ground)?;
        let indices = ordered_pairs(set);
        let members = indices
            .iter()
            .map(|&(i, j)| {
                (0..elements.len())
                    .filter(|&k| elements[k].precedes(i, j) && !elements[k].precedes(j, i))
                    .collect()
            })
            .collect();
        Ok(Cover { alternatives: set.clone(), ground, elements, indices, members })
    }

    /// A cover with explicit members over the ground set's elements.
    pub fn with_members(
        set: &AlternativeSet,
        ground: GroundSet,
        members: Vec<((Alternative, Alternative), BTreeSet<usize>)>,
    ) -> Result<Cover, NerveError> {
        if set.len() != 3 {
            return Err(NerveError::Unsupported(set.len()));
        }
        let elements = ground_elements(set, ground)?;
        for ((i, j), m) in &members {
            if let Some(&e) = m.iter().find(|&&e| e >= elements.len()) {
                return Err(NerveError::BadMember { index: format!("{i}{j}"), element: e });
            }
        }
        let (indices, members) = members.into_iter().unzip();
        Ok(Cover { alternatives: set.clone(), ground, elements, indices, members })
    }

    pub fn index_label(&self, k: usize) -> String {
        let (i, j) = self.indices[k];
        format!("{i}{j}")
    }

    pub fn member(&self, i: Alternative, j: Alternative) -> Option<&BTreeSet<usize>> {
        self.indices.iter().position(|&x| x == (i, j)).map(|k| &self.members[k])
    }

    /// Elements lying in every listed member.
    pub fn intersection(&self, ks: &[usize]) -> BTreeSet<usize> {
        let mut it = ks.iter().map(|&k| &self.members[k]);
        let first = it.next().cloned().unwrap_or_default();
        it.fold(first, |acc, m| acc.intersection(m).copied().collect())
    }

    /// Labels of the elements in a set of element ids.
    pub fn element_labels(&self, ids: &BTreeSet<usize>) -> Vec<String> {
        ids.iter().map(|&e| self.elements[e].to_string()).collect()
    }
}

/// The three cover indices of an element in reference order: `[ab, bc, ac]`
/// for the order `a≺b≺c` and `[ab, bc, ca]` for the cycle `a≺b≺c≺a`.
pub fn reference_indices(element: &StrictRelation) -> [(Alternative, Alternative); 3] {
    match element {
        StrictRelation::Order(o) => {
            let r = o.ranking();
            [(r[0], r[1]), (r[1], r[2]), (r[0], r[2])]
        }
        StrictRelation::Cycle(c) => {
            let s = c.steps();
            [(s[0].0, s[1].0), (s[1].0, s[2].0), (s[2].0, s[0].0)]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReference {
    /// The cycle whose reference vertices bound the hole.
    pub cycle: String,
    pub vertices: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedNerve {
    pub complex: DeltaComplex,
    pub ground: GroundSet,
    pub alternatives: AlternativeSet,
    /// The cover index `(i, j)` of each vertex.
    pub vertex_pairs: Vec<(Alternative, Alternative)>,
    /// For each face, the ground-set elements in its triple intersection.
    pub provenance: Vec<Vec<StrictRelation>>,
    /// For each face, its vertex labels in the order the face lists its corners.
    pub reference_orientations: Vec<[String; 3]>,
    /// Length-3 boundary circuits spanned by a cycle's reference vertices.
    pub boundary_references: Vec<BoundaryReference>,
}

/// Nerve annex document: the complex plus provenance and reference orientations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveJson {
    #[serde(flatten)]
    pub complex: ComplexJson,
    pub provenance: Vec<Vec<String>>,
    pub reference_orientation: ReferenceAnnex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceAnnex {
    pub faces: Vec<[String; 3]>,
    pub boundaries: Vec<BoundaryReference>,
}

impl OrientedNerve {
    pub fn to_json(&self) -> String {
        let doc = NerveJson {
            complex: ComplexJson::from(&self.complex),
            provenance: self.provenance.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect(),
            reference_orientation: ReferenceAnnex {
                faces: self.reference_orientations.clone(),
                boundaries: self.boundary_references.clone(),
            },
        };
        serde_json::to_string_pretty(&doc).expect("nerve serialises")
    }

    /// The face whose provenance is exactly this element.
    pub fn face_of(&self, element: &StrictRelation) -> Option<usize> {
        self.provenance.iter().position(|p| p.len() == 1 && &p[0] == element)
    }
}

/// Nerve of a cover: a vertex per non-empty member, an edge per non-empty
/// pairwise intersection, a face per non-empty triple intersection. A face
/// produced by a single element lists its corners in that element's
/// reference order; otherwise in index order. Fourfold intersections must be
/// empty.
pub fn nerve(cover: &Cover) -> Result<OrientedNerve, NerveError> {
    let live: Vec<usize> = (0..cover.indices.len()).filter(|&k| !cover.members[k].is_empty()).collect();
    for quad in live.iter().copied().combinations(4) {
        if !cover.intersection(&quad).is_empty() {
            return Err(NerveError::DimensionExceeded(quad.iter().map(|&k| cover.index_label(k)).collect()));
        }
    }
    let labels: Vec<String> = live.iter().map(|&k| cover.index_label(k)).collect();
    let vertex_of = |k: usize| live.iter().position(|&x| x == k).expect("live index");

    let mut edges: Vec<Edge> = Vec::new();
    for pair in (0..live.len()).combinations(2) {
        if !cover.intersection(&[live[pair[0]], live[pair[1]]]).is_empty() {
            edges.push(Edge { tail: pair[0], head: pair[1], label: format!("{}-{}", labels[pair[0]], labels[pair[1]]) });
        }
    }
    let edge_between = |u: usize, v: usize| -> Slot {
        let e = edges
            .iter()
            .position(|e| (e.tail, e.head) == (u, v) || (e.tail, e.head) == (v, u))
            .expect("faces are closed under the face relation");
        Slot { edge: e, forward: edges[e].tail == u }
    };

    let mut faces = Vec::new();
    let mut provenance = Vec::new();
    let mut reference_orientations = Vec::new();
    for tri in (0..live.len()).combinations(3) {
        let common = cover.intersection(&[live[tri[0]], live[tri[1]], live[tri[2]]]);
        if common.is_empty() {
            continue;
        }
        let elems: Vec<StrictRelation> = common.iter().map(|&e| cover.elements[e].clone()).collect();
        let mut corners = [tri[0], tri[1], tri[2]];
        if let [only] = elems.as_slice() {
            let reference = reference_indices(only).map(|ij| cover.indices.iter().position(|&x| x == ij));
            if let [Some(a), Some(b), Some(c)] = reference {
                let ordered = [vertex_of(a), vertex_of(b), vertex_of(c)];
                let mut sorted = ordered;
                sorted.sort_unstable();
                if sorted == corners {
                    corners = ordered;
                }
            }
        }
        let slots = [0, 1, 2].map(|k| edge_between(corners[k], corners[(k + 1) % 3]));
        let label = elems.iter().map(ToString::to_string).join("|");
        faces.push(Face { slots, label });
        reference_orientations.push(corners.map(|v| labels[v].clone()));
        provenance.push(elems);
    }
    let complex = DeltaComplex::new(labels, edges, faces)?;

    let mut boundary_references = Vec::new();
    if let Ok(circuits) = complex.boundary_components() {
        for cycle in valid_cycles(&cover.alternatives)? {
            let element = StrictRelation::Cycle(cycle.clone());
            let verts = reference_indices(&element).map(|(i, j)| format!("{i}{j}"));
            let wanted: BTreeSet<&String> = verts.iter().collect();
            if circuits.iter().any(|c| c.labels.len() == 3 && c.labels.iter().collect::<BTreeSet<_>>() == wanted) {
                boundary_references.push(BoundaryReference { cycle: cycle.to_string(), vertices: verts });
            }
        }
    }
    Ok(OrientedNerve {
        complex,
        ground: cover.ground,
        alternatives: cover.alternatives.clone(),
        vertex_pairs: live.iter().map(|&k| cover.indices[k]).collect(),
        provenance,
        reference_orientations,
        boundary_references,
    })
}
