use std::f64::consts::TAU;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{ComplexError, DeltaComplex, Edge, Face, Slot};

/// Interchange form: edges as `[tail, head, label]` by vertex label, faces as
/// three edge labels each suffixed `+` (traversed tail to head) or `-`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, String)>,
    pub faces: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_labels: Option<Vec<String>>,
}

impl From<&DeltaComplex> for ComplexJson {
    fn from(c: &DeltaComplex) -> Self {
        ComplexJson {
            vertices: c.vertices.clone(),
            edges: c
                .edges
                .iter()
                .map(|e| (c.vertices[e.tail].clone(), c.vertices[e.head].clone(), e.label.clone()))
                .collect(),
            faces: c
                .faces
                .iter()
                .map(|f| f.slots.map(|s| format!("{}{}", c.edges[s.edge].label, if s.forward { '+' } else { '-' })))
                .collect(),
            face_labels: Some(c.faces.iter().map(|f| f.label.clone()).collect()),
        }
    }
}

impl TryFrom<ComplexJson> for DeltaComplex {
    type Error = ComplexError;

    fn try_from(doc: ComplexJson) -> Result<Self, ComplexError> {
        let vertex = |l: &str| {
            doc.vertices.iter().position(|v| v == l).ok_or_else(|| ComplexError::UnknownVertex(l.to_string()))
        };
        let edges = doc
            .edges
            .iter()
            .map(|(t, h, label)| Ok(Edge { tail: vertex(t)?, head: vertex(h)?, label: label.clone() }))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        let mut faces = Vec::with_capacity(doc.faces.len());
        for (i, refs) in doc.faces.iter().enumerate() {
            let mut slots = [Slot { edge: 0, forward: true }; 3];
            for (k, r) in refs.iter().enumerate() {
                let (label, forward) = match r.char_indices().last() {
                    Some((at, '+')) => (&r[..at], true),
                    Some((at, '-')) => (&r[..at], false),
                    _ => return Err(ComplexError::Format(format!("face entry {r:?} lacks a +/- direction"))),
                };
                let edge = edges
                    .iter()
                    .position(|e| e.label == label)
                    .ok_or_else(|| ComplexError::UnknownEdge(label.to_string()))?;
                slots[k] = Slot { edge, forward };
            }
            let label = match &doc.face_labels {
                Some(ls) => ls
                    .get(i)
                    .cloned()
                    .ok_or_else(|| ComplexError::Format("fewer face labels than faces".into()))?,
                None => format!("f{i}"),
            };
            faces.push(Face { slots, label });
        }
        DeltaComplex::new(doc.vertices.clone(), edges, faces)
    }
}

impl DeltaComplex {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ComplexJson::from(self)).expect("complex serialises")
    }

    pub fn from_json(text: &str) -> Result<DeltaComplex, ComplexError> {
        let doc: ComplexJson = serde_json::from_str(text).map_err(|e| ComplexError::Format(e.to_string()))?;
        DeltaComplex::try_from(doc)
    }

    /// OFF mesh with vertices placed evenly on the unit circle.
    pub fn to_off(&self) -> String {
        let n = self.vertices.len();
        let mut out = format!("OFF\n{} {} 0\n", n, self.faces.len());
        for i in 0..n {
            let t = TAU * i as f64 / n.max(1) as f64;
            writeln!(out, "{:.6} {:.6} 0.000000", t.cos(), t.sin()).unwrap();
        }
        for f in 0..self.faces.len() {
            let [a, b, c] = self.face_corners(f);
            writeln!(out, "3 {a} {b} {c}").unwrap();
        }
        out
    }

    /// Face adjacency graph in DOT: one node per face, one edge per shared edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph faces {\n");
        for f in &self.faces {
            writeln!(out, "  {:?};", f.label).unwrap();
        }
        for (e, sides) in self.edge_sides().iter().enumerate() {
            for i in 0..sides.len() {
                for j in i + 1..sides.len() {
                    let (a, b) = (&self.faces[sides[i].face].label, &self.faces[sides[j].face].label);
                    writeln!(out, "  {a:?} -- {b:?} [label={:?}];", self.edges[e].label).unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let d = DeltaComplex::from_triangles(&["a", "b", "c", "d"], &[[0, 1, 2], [2, 1, 3]]).unwrap();
        let text = d.to_json();
        assert_eq!(DeltaComplex::from_json(&text).unwrap(), d);
    }

    #[test]
    fn json_without_face_labels() {
        let text = r#"{"vertices":["p","q","r"],"edges":[["p","q","x"],["q","r","y"],["p","r","z"]],"faces":[["x+","y+","z-"]]}"#;
        let c = DeltaComplex::from_json(text).unwrap();
        assert_eq!(c.faces()[0].label, "f0");
        assert_eq!(c.face_corners(0), [0, 1, 2]);
        let broken = text.replace("z-", "z+");
        assert!(matches!(DeltaComplex::from_json(&broken), Err(ComplexError::OpenChain(_))));
        let missing = text.replace("z-", "w-");
        assert!(matches!(DeltaComplex::from_json(&missing), Err(ComplexError::UnknownEdge(_))));
    }

    #[test]
    fn off_and_dot_shapes() {
        let d = DeltaComplex::from_triangles(&["a", "b", "c", "d"], &[[0, 1, 2], [2, 1, 3]]).unwrap();
        let off = d.to_off();
        assert!(off.starts_with("OFF\n4 2 0\n"));
        assert!(off.ends_with("3 2 1 3\n"));
        let dot = d.to_dot();
        assert!(dot.contains("\"[a,b,c]\" -- \"[c,b,d]\" [label=\"b-c\"];"));
    }
}
