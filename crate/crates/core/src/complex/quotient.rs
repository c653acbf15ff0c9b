use serde::{Deserialize, Serialize};

use super::union_find::UnionFind;
use super::{ComplexError, DeltaComplex, Edge, EdgeId, Face, FaceId, Slot, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "dim", content = "id", rename_all = "snake_case")]
pub enum Cell {
    Vertex(VertexId),
    Edge(EdgeId),
    Face(FaceId),
}

/// Identify cell `a` with cell `b`, matching vertex `x` of `a` with `y` of `b`
/// for each `(x, y)` in the correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub a: Cell,
    pub b: Cell,
    pub correspondence: Vec<(VertexId, VertexId)>,
}

impl Identification {
    pub fn vertices(a: VertexId, b: VertexId) -> Self {
        Identification { a: Cell::Vertex(a), b: Cell::Vertex(b), correspondence: vec![(a, b)] }
    }

    pub fn edges(a: EdgeId, b: EdgeId, correspondence: [(VertexId, VertexId); 2]) -> Self {
        Identification { a: Cell::Edge(a), b: Cell::Edge(b), correspondence: correspondence.to_vec() }
    }

    pub fn faces(a: FaceId, b: FaceId, correspondence: [(VertexId, VertexId); 3]) -> Self {
        Identification { a: Cell::Face(a), b: Cell::Face(b), correspondence: correspondence.to_vec() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingSpec {
    pub identifications: Vec<Identification>,
}

impl GluingSpec {
    pub fn new(identifications: Vec<Identification>) -> Self {
        GluingSpec { identifications }
    }
}

struct Gluer<'a> {
    c: &'a DeltaComplex,
    verts: UnionFind,
    edges: UnionFind,
    faces: UnionFind,
}

impl Gluer<'_> {
    fn edge(&mut self, a: EdgeId, b: EdgeId, reversed: bool) -> Result<(), ComplexError> {
        self.edges
            .union_with_parity(a, b, reversed)
            .map_err(|()| ComplexError::InconsistentGluing(self.c.edges[a].label.clone()))?;
        let (ea, eb) = (&self.c.edges[a], &self.c.edges[b]);
        let (tb, hb) = if reversed { (eb.head, eb.tail) } else { (eb.tail, eb.head) };
        self.verts.union(ea.tail, tb);
        self.verts.union(ea.head, hb);
        Ok(())
    }

    fn face(&mut self, a: FaceId, b: FaceId, pi: [usize; 3]) -> Result<(), ComplexError> {
        let (fa, fb) = (&self.c.faces[a], &self.c.faces[b]);
        let (ca, cb) = (self.c.face_corners(a), self.c.face_corners(b));
        for i in 0..3 {
            self.verts.union(ca[i], cb[pi[i]]);
        }
        let mut pairs = Vec::with_capacity(3);
        for i in 0..3 {
            let sa = fa.slots[i];
            let (p, q) = (pi[i], pi[(i + 1) % 3]);
            // b traverses its slot from p to q, or backwards from q to p
            let (sb, b_forward_here) = if q == (p + 1) % 3 {
                (fb.slots[p], fb.slots[p].forward)
            } else {
                (fb.slots[q], !fb.slots[q].forward)
            };
            pairs.push((sa.edge, sb.edge, sa.forward != b_forward_here));
        }
        for (ea, eb, rev) in pairs {
            self.edge(ea, eb, rev)?;
        }
        self.faces.union(a, b);
        Ok(())
    }
}

fn cell_name(c: &DeltaComplex, cell: Cell) -> String {
    match cell {
        Cell::Vertex(v) => format!("vertex {}", c.vertices.get(v).map_or("?", String::as_str)),
        Cell::Edge(e) => format!("edge {}", c.edges.get(e).map_or("?", |x| x.label.as_str())),
        Cell::Face(f) => format!("face {}", c.faces.get(f).map_or("?", |x| x.label.as_str())),
    }
}

/// Position map `i ↦ j` with `from[i] = x`, `to[j] = y` for each pair.
fn positions<const N: usize>(
    c: &DeltaComplex,
    cell: Cell,
    from: [VertexId; N],
    to: [VertexId; N],
    corr: &[(VertexId, VertexId)],
) -> Result<[usize; N], ComplexError> {
    let bad = |reason: &str| ComplexError::BadCorrespondence { cell: cell_name(c, cell), reason: reason.to_string() };
    if corr.len() != N {
        return Err(bad(&format!("expected {N} vertex pairs, got {}", corr.len())));
    }
    let mut map = [usize::MAX; N];
    for &(x, y) in corr {
        let i: Vec<usize> = (0..N).filter(|&i| from[i] == x).collect();
        let j: Vec<usize> = (0..N).filter(|&j| to[j] == y).collect();
        match (i.as_slice(), j.as_slice()) {
            ([i], [j]) if map[*i] == usize::MAX && !map.contains(j) => map[*i] = *j,
            ([], _) | (_, []) => return Err(bad("pair names a vertex outside the cell")),
            _ => return Err(bad("cell repeats a vertex, or a vertex is matched twice")),
        }
    }
    Ok(map)
}

impl DeltaComplex {
    /// Quotient by the closure of the given identifications. Gluing a cell to
    /// itself by a non-trivial map is rejected.
    pub fn quotient(&self, spec: &GluingSpec) -> Result<DeltaComplex, ComplexError> {
        let mut g = Gluer {
            c: self,
            verts: UnionFind::new(self.vertices.len()),
            edges: UnionFind::new(self.edges.len()),
            faces: UnionFind::new(self.faces.len()),
        };
        for id in &spec.identifications {
            self.check_cell(id.a)?;
            self.check_cell(id.b)?;
            match (id.a, id.b) {
                (Cell::Vertex(a), Cell::Vertex(b)) => {
                    positions(self, id.a, [a], [b], &id.correspondence)?;
                    g.verts.union(a, b);
                }
                (Cell::Edge(a), Cell::Edge(b)) => {
                    let (ea, eb) = (&self.edges[a], &self.edges[b]);
                    let pi = positions(self, id.a, [ea.tail, ea.head], [eb.tail, eb.head], &id.correspondence)?;
                    let reversed = pi[0] == 1;
                    if a == b && reversed {
                        return Err(ComplexError::SelfIdentification(cell_name(self, id.a)));
                    }
                    g.edge(a, b, reversed)?;
                }
                (Cell::Face(a), Cell::Face(b)) => {
                    let pi = positions(self, id.a, self.face_corners(a), self.face_corners(b), &id.correspondence)?;
                    if a == b {
                        if pi != [0, 1, 2] {
                            return Err(ComplexError::SelfIdentification(cell_name(self, id.a)));
                        }
                        continue;
                    }
                    g.face(a, b, pi)?;
                }
                _ => {
                    return Err(ComplexError::DimensionMismatch { a: cell_name(self, id.a), b: cell_name(self, id.b) })
                }
            }
        }
        self.assemble(g)
    }

    fn check_cell(&self, cell: Cell) -> Result<(), ComplexError> {
        match cell {
            Cell::Vertex(v) if v >= self.vertices.len() => Err(ComplexError::UnknownVertex(format!("#{v}"))),
            Cell::Edge(e) if e >= self.edges.len() => Err(ComplexError::UnknownEdge(format!("#{e}"))),
            Cell::Face(f) if f >= self.faces.len() => Err(ComplexError::UnknownFace(format!("#{f}"))),
            _ => Ok(()),
        }
    }

    fn assemble(&self, mut g: Gluer<'_>) -> Result<DeltaComplex, ComplexError> {
        let classes = |uf: &mut UnionFind, n: usize| {
            let mut index = vec![usize::MAX; n];
            let mut members: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                let r = uf.find(x);
                if index[r] == usize::MAX {
                    index[r] = members.len();
                    members.push(Vec::new());
                }
                index[x] = index[r];
                members[index[x]].push(x);
            }
            (index, members)
        };
        let join = |labels: Vec<&str>| labels.join("~");
        let (vidx, vmem) = classes(&mut g.verts, self.vertices.len());
        let (eidx, emem) = classes(&mut g.edges, self.edges.len());
        let (_, fmem) = classes(&mut g.faces, self.faces.len());
        let vertices = vmem.iter().map(|m| join(m.iter().map(|&v| self.vertices[v].as_str()).collect())).collect();
        let edges = emem
            .iter()
            .map(|m| {
                let rep = &self.edges[m[0]];
                Edge {
                    tail: vidx[rep.tail],
                    head: vidx[rep.head],
                    label: join(m.iter().map(|&e| self.edges[e].label.as_str()).collect()),
                }
            })
            .collect();
        let faces = fmem
            .iter()
            .map(|m| {
                let rep = &self.faces[m[0]];
                let slots = rep.slots.map(|s| {
                    let (_, flip) = g.edges.find_with_parity(s.edge);
                    Slot { edge: eidx[s.edge], forward: s.forward != flip }
                });
                Face { slots, label: join(m.iter().map(|&f| self.faces[f].label.as_str()).collect()) }
            })
            .collect();
        DeltaComplex::new(vertices, edges, faces)
    }
}
