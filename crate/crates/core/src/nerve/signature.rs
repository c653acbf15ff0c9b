use std::collections::BTreeMap;

use serde::Serialize;

use super::{NerveError, OrientedNerve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rotation {
    Counterclockwise,
    Clockwise,
}

/// Turning direction of each face and each cycle boundary in the drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub faces: BTreeMap<String, Rotation>,
    pub boundaries: BTreeMap<String, Rotation>,
}

/// Fixed planar drawing of the six index vertices, keyed by the ranks of `i`
/// and `j` within the alternative set. The outer triangle is `12, 23, 31`;
/// the inner one `13, 32, 21`.
const LAYOUT: [((usize, usize), (f64, f64)); 6] = [
    ((0, 1), (6.0, 12.25)),
    ((1, 2), (3.0, 8.0)),
    ((2, 0), (9.0, 8.0)),
    ((0, 2), (5.25, 10.0)),
    ((2, 1), (6.75, 10.0)),
    ((1, 0), (6.0, 9.0)),
];

fn rotation(points: [(f64, f64); 3]) -> Rotation {
    let [(x0, y0), (x1, y1), (x2, y2)] = points;
    let twice_area = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0);
    if twice_area > 0.0 {
        Rotation::Counterclockwise
    } else {
        Rotation::Clockwise
    }
}

/// Reads each reference-ordered face and cycle boundary against the fixed
/// drawing of the six pair vertices.
pub fn reference_orientation_signature(n: &OrientedNerve) -> Result<Signature, NerveError> {
    let members = n.alternatives.members();
    if members.len() != 3 {
        return Err(NerveError::Unrecognised(format!("alternative set {} is not a triple", n.alternatives)));
    }
    let mut position = BTreeMap::new();
    for ((i, j), xy) in LAYOUT {
        position.insert(format!("{}{}", members[i], members[j]), xy);
    }
    let mut vertices: Vec<&String> = n.complex.vertices().iter().collect();
    vertices.sort();
    let mut expected: Vec<&String> = position.keys().collect();
    expected.sort();
    if vertices != expected {
        return Err(NerveError::Unrecognised("vertex set is not the six ordered pairs of the triple".into()));
    }
    let place = |labels: &[String; 3]| labels.clone().map(|l| position[&l]);
    let faces = n
        .complex
        .faces()
        .iter()
        .zip(&n.reference_orientations)
        .map(|(f, r)| (f.label.clone(), rotation(place(r))))
        .collect();
    let boundaries = n
        .boundary_references
        .iter()
        .map(|b| (format!("({})", b.vertices.join(",")), rotation(place(&b.vertices))))
        .collect();
    Ok(Signature { faces, boundaries })
}
