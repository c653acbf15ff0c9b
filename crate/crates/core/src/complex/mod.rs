//! Two-dimensional delta complexes.
//!
//! A face is a triangle given by three edge slots chained head to tail. Edges
//! may be parallel and a face may meet the same edge or vertex more than once,
//! which is what quotients of simplicial surfaces produce.
//!
//! Orientation convention: a face with corners `(u, v, w)` induces the
//! directed boundary `u→v→w→u`. Two face-sides on a shared edge are compatible
//! when they induce opposite directions on it.

mod classify;
mod cover;
mod export;
mod orient;
mod quotient;
mod surface;
mod union_find;

pub use classify::{SurfaceRecord, SurfaceTag, SurfaceType};
pub use cover::DoubleCover;
pub use export::ComplexJson;
pub use orient::{NonOrientableCertificate, Orientation, OrientationAssignment};
pub use quotient::{Cell, GluingSpec, Identification};
pub use surface::{BoundaryCircuit, SurfaceDefect, SurfaceReport};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("unknown face {0}")]
    UnknownFace(String),
    #[error("triangle {0:?} repeats a vertex")]
    DegenerateTriangle([VertexId; 3]),
    #[error("face {0} does not close: its edge chain breaks")]
    OpenChain(String),
    #[error("duplicate {kind} label {label:?}")]
    DuplicateLabel { kind: &'static str, label: String },
    #[error("edge {edge} borders {sides} face-sides; at most 2 are allowed")]
    EdgeOverloaded { edge: String, sides: usize },
    #[error("not a surface: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    NotASurface(Vec<SurfaceDefect>),
    #[error("complex has {0} connected components; classify each component separately")]
    Disconnected(usize),
    #[error("cells {a} and {b} have different dimensions")]
    DimensionMismatch { a: String, b: String },
    #[error("correspondence for {cell} is not a bijection of its vertices: {reason}")]
    BadCorrespondence { cell: String, reason: String },
    #[error("{0} would be identified with itself non-trivially; self-identification is unsupported")]
    SelfIdentification(String),
    #[error("gluing closure identifies edge {0} with itself reversed")]
    InconsistentGluing(String),
    #[error("star of vertex {0} is not orientable")]
    StarNotOrientable(String),
    #[error("malformed complex document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: String,
}

/// One edge slot of a face: `forward` when the face traverses the edge tail to head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Slot {
    pub fn start(self, edges: &[Edge]) -> VertexId {
        let e = &edges[self.edge];
        if self.forward {
            e.tail
        } else {
            e.head
        }
    }

    pub fn end(self, edges: &[Edge]) -> VertexId {
        let e = &edges[self.edge];
        if self.forward {
            e.head
        } else {
            e.tail
        }
    }

    /// `+1` when traversed tail to head.
    pub fn sign(self) -> i8 {
        if self.forward {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub slots: [Slot; 3],
    pub label: String,
}

/// Where a face meets an edge: face id and slot index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceSide {
    pub face: FaceId,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
}

impl DeltaComplex {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, faces: Vec<Face>) -> Result<Self, ComplexError> {
        unique("vertex", vertices.iter())?;
        unique("edge", edges.iter().map(|e| &e.label))?;
        unique("face", faces.iter().map(|f| &f.label))?;
        for e in &edges {
            for v in [e.tail, e.head] {
                if v >= vertices.len() {
                    return Err(ComplexError::UnknownVertex(format!("#{v} (edge {})", e.label)));
                }
            }
        }
        for f in &faces {
            for s in &f.slots {
                if s.edge >= edges.len() {
                    return Err(ComplexError::UnknownEdge(format!("#{} (face {})", s.edge, f.label)));
                }
            }
            for k in 0..3 {
                if f.slots[k].end(&edges) != f.slots[(k + 1) % 3].start(&edges) {
                    return Err(ComplexError::OpenChain(f.label.clone()));
                }
            }
        }
        Ok(DeltaComplex { vertices, edges, faces })
    }

    /// Builds a simplicial complex from ordered vertex triples over the labelled
    /// vertices. Edges are shared by unordered endpoints and point from the
    /// endpoint met first.
    pub fn from_triangles<S: AsRef<str>>(vertices: &[S], triangles: &[[VertexId; 3]]) -> Result<Self, ComplexError> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut edges: Vec<Edge> = Vec::new();
        let mut faces = Vec::with_capacity(triangles.len());
        for tri in triangles {
            if let Some(&v) = tri.iter().find(|&&v| v >= labels.len()) {
                return Err(ComplexError::UnknownVertex(format!("#{v}")));
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(ComplexError::DegenerateTriangle(*tri));
            }
            let mut slots = [Slot { edge: 0, forward: true }; 3];
            for k in 0..3 {
                let (u, v) = (tri[k], tri[(k + 1) % 3]);
                let found = edges
                    .iter()
                    .position(|e| (e.tail == u && e.head == v) || (e.tail == v && e.head == u));
                let edge = found.unwrap_or_else(|| {
                    edges.push(Edge { tail: u, head: v, label: format!("{}-{}", labels[u], labels[v]) });
                    edges.len() - 1
                });
                slots[k] = Slot { edge, forward: edges[edge].tail == u };
            }
            let label = format!("[{},{},{}]", labels[tri[0]], labels[tri[1]], labels[tri[2]]);
            faces.push(Face { slots, label });
        }
        DeltaComplex::new(labels, edges, faces)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn face_by_label(&self, label: &str) -> Option<FaceId> {
        self.faces.iter().position(|f| f.label == label)
    }

    /// The face's corners `(v₀, v₁, v₂)`; slot `k` runs from `v_k` to `v_{k+1}`.
    pub fn face_corners(&self, f: FaceId) -> [VertexId; 3] {
        let slots = &self.faces[f].slots;
        [0, 1, 2].map(|k| slots[k].start(&self.edges))
    }

    /// Relabels faces in order; the label count must match.
    pub fn with_face_labels(mut self, labels: Vec<String>) -> Result<Self, ComplexError> {
        if labels.len() != self.faces.len() {
            return Err(ComplexError::Format(format!("{} labels for {} faces", labels.len(), self.faces.len())));
        }
        unique("face", labels.iter())?;
        for (f, l) in self.faces.iter_mut().zip(labels) {
            f.label = l;
        }
        Ok(self)
    }

    /// Face-sides incident to each edge, in face then slot order.
    pub fn edge_sides(&self) -> Vec<Vec<FaceSide>> {
        let mut sides = vec![Vec::new(); self.edges.len()];
        for (face, f) in self.faces.iter().enumerate() {
            for (slot, s) in f.slots.iter().enumerate() {
                sides[s.edge].push(FaceSide { face, slot });
            }
        }
        sides
    }

    pub(crate) fn require_edge_manifold(&self) -> Result<Vec<Vec<FaceSide>>, ComplexError> {
        let sides = self.edge_sides();
        for (e, s) in sides.iter().enumerate() {
            if s.len() > 2 {
                return Err(ComplexError::EdgeOverloaded { edge: self.edges[e].label.clone(), sides: s.len() });
            }
        }
        Ok(sides)
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Removes the open face; its edges and vertices stay.
    pub fn puncture(&self, face: FaceId) -> Result<DeltaComplex, ComplexError> {
        if face >= self.faces.len() {
            return Err(ComplexError::UnknownFace(format!("#{face}")));
        }
        let mut out = self.clone();
        out.faces.remove(face);
        Ok(out)
    }

    /// Removes several open faces at once.
    pub fn puncture_many(&self, faces: &[FaceId]) -> Result<DeltaComplex, ComplexError> {
        if let Some(&f) = faces.iter().find(|&&f| f >= self.faces.len()) {
            return Err(ComplexError::UnknownFace(format!("#{f}")));
        }
        let drop: HashSet<FaceId> = faces.iter().copied().collect();
        let mut out = self.clone();
        out.faces = self
            .faces
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, f)| f.clone())
            .collect();
        Ok(out)
    }

    /// Vertex sets of the connected components, joined through edges.
    pub fn component_vertex_sets(&self) -> Vec<Vec<VertexId>> {
        let mut uf = union_find::UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.tail, e.head);
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot_of = vec![usize::MAX; self.vertices.len()];
        for v in 0..self.vertices.len() {
            let r = uf.find(v);
            if slot_of[r] == usize::MAX {
                slot_of[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot_of[r]].push(v);
        }
        groups
    }

    pub fn component_count(&self) -> usize {
        self.component_vertex_sets().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Splits into connected sub-complexes, labels preserved.
    pub fn connected_components(&self) -> Vec<DeltaComplex> {
        self.component_vertex_sets()
            .into_iter()
            .map(|verts| {
                let mut vmap = vec![usize::MAX; self.vertices.len()];
                for (i, &v) in verts.iter().enumerate() {
                    vmap[v] = i;
                }
                let mut emap = vec![usize::MAX; self.edges.len()];
                let mut edges = Vec::new();
                for (i, e) in self.edges.iter().enumerate() {
                    if vmap[e.tail] != usize::MAX {
                        emap[i] = edges.len();
                        edges.push(Edge { tail: vmap[e.tail], head: vmap[e.head], label: e.label.clone() });
                    }
                }
                let faces = self
                    .faces
                    .iter()
                    .filter(|f| emap[f.slots[0].edge] != usize::MAX)
                    .map(|f| Face {
                        slots: f.slots.map(|s| Slot { edge: emap[s.edge], forward: s.forward }),
                        label: f.label.clone(),
                    })
                    .collect();
                let vertices = verts.iter().map(|&v| self.vertices[v].clone()).collect();
                DeltaComplex { vertices, edges, faces }
            })
            .collect()
    }

    /// Same complex with vertices, edges and faces listed in the given orders
    /// (each a permutation: new position `i` holds old cell `order[i]`).
    pub fn reindexed(&self, vertex_order: &[VertexId], edge_order: &[EdgeId], face_order: &[FaceId]) -> Result<DeltaComplex, ComplexError> {
        let inverse = |order: &[usize], n: usize, kind: &str| -> Result<Vec<usize>, ComplexError> {
            let mut inv = vec![usize::MAX; n];
            if order.len() != n {
                return Err(ComplexError::Format(format!("{kind} order has wrong length")));
            }
            for (i, &o) in order.iter().enumerate() {
                if o >= n || inv[o] != usize::MAX {
                    return Err(ComplexError::Format(format!("{kind} order is not a permutation")));
                }
                inv[o] = i;
            }
            Ok(inv)
        };
        let vinv = inverse(vertex_order, self.vertices.len(), "vertex")?;
        let einv = inverse(edge_order, self.edges.len(), "edge")?;
        inverse(face_order, self.faces.len(), "face")?;
        let vertices = vertex_order.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = edge_order
            .iter()
            .map(|&e| {
                let old = &self.edges[e];
                Edge { tail: vinv[old.tail], head: vinv[old.head], label: old.label.clone() }
            })
            .collect();
        let faces = face_order
            .iter()
            .map(|&f| {
                let old = &self.faces[f];
                Face { slots: old.slots.map(|s| Slot { edge: einv[s.edge], forward: s.forward }), label: old.label.clone() }
            })
            .collect();
        DeltaComplex::new(vertices, edges, faces)
    }
}

fn unique<'a>(kind: &'static str, labels: impl Iterator<Item = &'a String>) -> Result<(), ComplexError> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(ComplexError::DuplicateLabel { kind, label: l.clone() });
        }
    }
    Ok(())
}
