use std::fmt;

use serde::Serialize;

use super::union_find::UnionFind;
use super::{ComplexError, DeltaComplex, EdgeId, VertexId};

/// Start label, whether the first step runs against its face, label sequence.
type CircuitKey = (String, bool, Vec<String>);

/// Why a complex fails to be a surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceDefect {
    EdgeOverloaded { edge: String, sides: usize },
    DanglingEdge { edge: String },
    IsolatedVertex { vertex: String },
    /// The vertex link is not a single arc or a single cycle.
    VertexLink { vertex: String, components: usize },
}

impl fmt::Display for SurfaceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceDefect::EdgeOverloaded { edge, sides } => write!(f, "edge {edge} borders {sides} faces"),
            SurfaceDefect::DanglingEdge { edge } => write!(f, "edge {edge} borders no face"),
            SurfaceDefect::IsolatedVertex { vertex } => write!(f, "vertex {vertex} lies on no face"),
            SurfaceDefect::VertexLink { vertex, components } => {
                write!(f, "link of vertex {vertex} has {components} components")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub is_surface: bool,
    pub defects: Vec<SurfaceDefect>,
}

/// A closed walk along boundary edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCircuit {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub labels: Vec<String>,
}

impl fmt::Display for BoundaryCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.labels.join(","))
    }
}

/// Link graph: nodes are edge ends (`2e` tail, `2e+1` head), arcs are face corners.
pub(crate) struct Link {
    pub arcs: Vec<(usize, usize)>,
    pub incident: Vec<Vec<usize>>,
}

pub(crate) fn end_node(edge: EdgeId, head: bool) -> usize {
    2 * edge + usize::from(head)
}

impl Link {
    pub fn build(c: &DeltaComplex) -> Link {
        let mut arcs = Vec::new();
        let mut incident = vec![Vec::new(); 2 * c.edges.len()];
        for f in &c.faces {
            for k in 0..3 {
                let inc = f.slots[(k + 2) % 3];
                let out = f.slots[k];
                let a = end_node(inc.edge, inc.forward);
                let b = end_node(out.edge, !out.forward);
                incident[a].push(arcs.len());
                incident[b].push(arcs.len());
                arcs.push((a, b));
            }
        }
        Link { arcs, incident }
    }

    fn other(&self, arc: usize, node: usize) -> usize {
        let (a, b) = self.arcs[arc];
        if a == node {
            b
        } else {
            a
        }
    }

    /// Follows a path from a degree-one node to the node at its other end.
    pub fn path_end(&self, start: usize) -> usize {
        let mut node = start;
        let mut via = self.incident[start][0];
        loop {
            let next = self.other(via, node);
            match self.incident[next].iter().find(|&&a| a != via) {
                Some(&a) if self.incident[next].len() == 2 => {
                    node = next;
                    via = a;
                }
                _ => return next,
            }
        }
    }
}

fn node_vertex(c: &DeltaComplex, node: usize) -> VertexId {
    let e = &c.edges[node / 2];
    if node % 2 == 1 {
        e.head
    } else {
        e.tail
    }
}

impl DeltaComplex {
    pub fn surface_report(&self) -> SurfaceReport {
        let mut defects = Vec::new();
        for (e, sides) in self.edge_sides().iter().enumerate() {
            let edge = self.edges[e].label.clone();
            match sides.len() {
                0 => defects.push(SurfaceDefect::DanglingEdge { edge }),
                1 | 2 => {}
                n => defects.push(SurfaceDefect::EdgeOverloaded { edge, sides: n }),
            }
        }
        let link = Link::build(self);
        let mut uf = UnionFind::new(link.incident.len());
        for &(a, b) in &link.arcs {
            uf.union(a, b);
        }
        let mut nodes_at = vec![Vec::new(); self.vertices.len()];
        for node in 0..link.incident.len() {
            nodes_at[node_vertex(self, node)].push(node);
        }
        for (v, nodes) in nodes_at.iter().enumerate() {
            let vertex = self.vertices[v].clone();
            if nodes.iter().all(|&n| link.incident[n].is_empty()) {
                defects.push(SurfaceDefect::IsolatedVertex { vertex });
                continue;
            }
            let mut roots: Vec<usize> = nodes.iter().map(|&n| uf.find(n)).collect();
            roots.sort_unstable();
            roots.dedup();
            let branching = nodes.iter().any(|&n| link.incident[n].len() > 2);
            if roots.len() != 1 || branching {
                defects.push(SurfaceDefect::VertexLink { vertex, components: roots.len() });
            }
        }
        SurfaceReport { is_surface: defects.is_empty(), defects }
    }

    /// Every edge meets one or two face-sides and every vertex link is a
    /// single arc or a single cycle.
    pub fn is_surface(&self) -> bool {
        self.surface_report().is_surface
    }

    /// Boundary circuits. Each starts at its least vertex label and runs in
    /// the direction its face induces on the first edge where that choice
    /// is available.
    pub fn boundary_components(&self) -> Result<Vec<BoundaryCircuit>, ComplexError> {
        let sides = self.require_edge_manifold()?;
        let link = Link::build(self);
        let boundary: Vec<bool> = sides.iter().map(|s| s.len() == 1).collect();
        let induced_forward: Vec<bool> = sides
            .iter()
            .map(|s| s.first().is_none_or(|fs| self.faces[fs.face].slots[fs.slot].forward))
            .collect();
        let mut visited = vec![false; self.edges.len()];
        let mut circuits = Vec::new();
        for start in 0..self.edges.len() {
            if !boundary[start] || visited[start] {
                continue;
            }
            // steps: (edge, traversed tail to head)
            let mut steps = Vec::new();
            let first = end_node(start, false);
            let mut from = first;
            loop {
                let edge = from / 2;
                visited[edge] = true;
                steps.push((edge, from.is_multiple_of(2)));
                let to = from ^ 1;
                let next = link.path_end(to);
                if next == first || steps.len() > self.edges.len() {
                    break;
                }
                from = next;
            }
            circuits.push(self.canonical_circuit(&steps, &induced_forward));
        }
        circuits.sort_by(|a, b| a.labels.cmp(&b.labels));
        Ok(circuits)
    }

    fn canonical_circuit(&self, steps: &[(EdgeId, bool)], induced_forward: &[bool]) -> BoundaryCircuit {
        let n = steps.len();
        let reversed: Vec<(EdgeId, bool)> = steps.iter().rev().map(|&(e, f)| (e, !f)).collect();
        let mut best: Option<(CircuitKey, Vec<(EdgeId, bool)>)> = None;
        for walk in [steps.to_vec(), reversed] {
            for r in 0..n {
                let rot: Vec<(EdgeId, bool)> = (0..n).map(|i| walk[(r + i) % n]).collect();
                let verts: Vec<String> = rot.iter().map(|&(e, f)| self.step_start(e, f)).collect();
                let against = rot[0].1 != induced_forward[rot[0].0];
                let key = (verts[0].clone(), against, verts);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, rot));
                }
            }
        }
        let (_, rot) = best.expect("boundary circuit is non-empty");
        let vertices: Vec<VertexId> = rot
            .iter()
            .map(|&(e, f)| if f { self.edges[e].tail } else { self.edges[e].head })
            .collect();
        BoundaryCircuit {
            labels: vertices.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges: rot.iter().map(|&(e, _)| e).collect(),
            vertices,
        }
    }

    fn step_start(&self, e: EdgeId, forward: bool) -> String {
        let edge = &self.edges[e];
        self.vertices[if forward { edge.tail } else { edge.head }].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk_fan() -> DeltaComplex {
        // hexagon around a centre vertex
        let labels = ["c", "0", "1", "2", "3", "4", "5"];
        let tris: Vec<[usize; 3]> = (0..6).map(|i| [0, 1 + i, 1 + (i + 1) % 6]).collect();
        DeltaComplex::from_triangles(&labels, &tris).unwrap()
    }

    fn octahedron() -> DeltaComplex {
        let labels = ["n", "s", "a", "b", "c", "d"];
        let ring = [2, 3, 4, 5];
        let mut tris = Vec::new();
        for i in 0..4 {
            let (u, v) = (ring[i], ring[(i + 1) % 4]);
            tris.push([0, u, v]);
            tris.push([1, v, u]);
        }
        DeltaComplex::from_triangles(&labels, &tris).unwrap()
    }

    #[test]
    fn disk_has_one_boundary_circuit() {
        let d = disk_fan();
        assert!(d.is_surface());
        let b = d.boundary_components().unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "(0,1,2,3,4,5)");
    }

    #[test]
    fn closed_surface_has_no_boundary() {
        let o = octahedron();
        assert!(o.is_surface());
        assert_eq!(o.euler_characteristic(), 2);
        assert!(o.boundary_components().unwrap().is_empty());
    }

    #[test]
    fn three_faces_on_an_edge_is_not_a_surface() {
        let d = DeltaComplex::from_triangles(&["a", "b", "x", "y", "z"], &[[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        let r = d.surface_report();
        assert!(!r.is_surface);
        assert!(r.defects.contains(&SurfaceDefect::EdgeOverloaded { edge: "a-b".into(), sides: 3 }));
        assert!(matches!(d.boundary_components(), Err(ComplexError::EdgeOverloaded { .. })));
    }

    #[test]
    fn pinched_vertex_is_not_a_surface() {
        // two triangles sharing only vertex p
        let d = DeltaComplex::from_triangles(&["p", "a", "b", "c", "d"], &[[0, 1, 2], [0, 3, 4]]).unwrap();
        let r = d.surface_report();
        assert_eq!(r.defects, vec![SurfaceDefect::VertexLink { vertex: "p".into(), components: 2 }]);
        // boundary still walks: the pinch pairs ends along each link arc
        assert_eq!(d.boundary_components().unwrap().len(), 2);
    }

    #[test]
    fn punctured_octahedron_is_disk_like() {
        let p = octahedron().puncture(0).unwrap();
        assert!(p.is_surface());
        assert_eq!(p.euler_characteristic(), 1);
        let b = p.boundary_components().unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].vertices.len(), 3);
    }
}
