#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use super::union_find::UnionFind;
use super::{ComplexError, DeltaComplex, Edge, EdgeId, Face, FaceId, Slot, VertexId};

/// The orientation double cover with its covering data. Cell `2x` lies on the
/// `+` sheet over cell `x`, cell `2x + 1` on the `-` sheet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCover {
    pub complex: DeltaComplex,
    pub vertex_projection: Vec<VertexId>,
    pub edge_projection: Vec<EdgeId>,
    pub face_projection: Vec<FaceId>,
    pub vertex_deck: Vec<VertexId>,
    pub edge_deck: Vec<EdgeId>,
    pub face_deck: Vec<FaceId>,
}

impl DoubleCover {
    pub fn is_connected(&self) -> bool {
        self.complex.is_connected()
    }
}

impl DeltaComplex {
    /// Builds the orientation double cover: one copy of each face per
    /// orientation, glued across an edge when the two induced directions are
    /// opposite. Vertex fans that the base pinches together are re-paired so
    /// that the two sheets stay apart whenever the base is orientable.
    pub fn orientation_double_cover(&self) -> Result<DoubleCover, ComplexError> {
        let sides = self.require_edge_manifold()?;
        let nf = self.faces.len();
        let ne = self.edges.len();
        // lift index (0 or 1) of each face-side on each sheet
        let mut lift = vec![[[0usize; 2]; 3]; nf];
        for s in &sides {
            for (k, fs) in s.iter().enumerate() {
                let dir = self.faces[fs.face].slots[fs.slot].sign();
                for (sheet, sgn) in [(0, 1i8), (1, -1)] {
                    let d = if k == 0 { dir * sgn } else { -dir * sgn };
                    lift[fs.face][fs.slot][sheet] = usize::from(d != 1);
                }
            }
        }
        // corner nodes (face, sheet, k), then endpoint nodes of bare edges, then bare vertices
        let corner = |f: FaceId, sheet: usize, k: usize| (2 * f + sheet) * 3 + k;
        let mut uf = UnionFind::new(6 * nf);
        let mut deck_of: Vec<usize> = (0..6 * nf).map(|n| corner(n / 6, 1 - (n / 3) % 2, n % 3)).collect();
        let mut base_of: Vec<VertexId> = (0..6 * nf).map(|n| self.face_corners(n / 6)[n % 3]).collect();
        // endpoints of each edge lift, as union-find nodes: [lift][tail/head]
        let mut ends = vec![[[usize::MAX; 2]; 2]; ne];
        for (e, s) in sides.iter().enumerate() {
            for fs in s {
                let slot = self.faces[fs.face].slots[fs.slot];
                let (a, b) = (fs.slot, (fs.slot + 1) % 3);
                let (t, h) = if slot.forward { (a, b) } else { (b, a) };
                for sheet in 0..2 {
                    let l = lift[fs.face][fs.slot][sheet];
                    for (end, k) in [(0, t), (1, h)] {
                        let node = corner(fs.face, sheet, k);
                        if ends[e][l][end] == usize::MAX {
                            ends[e][l][end] = node;
                        } else {
                            uf.union(ends[e][l][end], node);
                        }
                    }
                }
            }
            if s.is_empty() {
                let edge = &self.edges[e];
                let mut fresh = [[0; 2]; 2];
                for l in 0..2 {
                    for (end, v) in [(0, edge.tail), (1, edge.head)] {
                        fresh[l][end] = uf.push();
                        base_of.push(v);
                        deck_of.push(usize::MAX);
                        ends[e][l][end] = fresh[l][end];
                    }
                }
                for end in 0..2 {
                    deck_of[fresh[0][end]] = fresh[1][end];
                    deck_of[fresh[1][end]] = fresh[0][end];
                }
            }
        }
        let mut touched = vec![false; self.vertices.len()];
        for &v in &base_of {
            touched[v] = true;
        }
        for v in 0..self.vertices.len() {
            if !touched[v] {
                let a = uf.push();
                let b = uf.push();
                base_of.extend([v, v]);
                deck_of.extend([b, a]);
            }
        }
        let n = base_of.len();

        // fans at each base vertex, as (class, deck class) pairs
        let mut classes_at: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for node in 0..n {
            let r = uf.find(node);
            if !classes_at[base_of[node]].contains(&r) {
                classes_at[base_of[node]].push(r);
            }
        }
        let mut rep_node = vec![usize::MAX; n];
        for node in 0..n {
            let r = uf.find(node);
            if rep_node[r] == usize::MAX {
                rep_node[r] = node;
            }
        }
        let deck_class = |uf: &mut UnionFind, r: usize| uf.find(deck_of[rep_node[r]]);
        // sheets connected so far: corner classes joined through edge lifts
        let mut sheets = UnionFind::new(n);
        for e in 0..ne {
            for l in 0..2 {
                let (t, h) = (uf.find(ends[e][l][0]), uf.find(ends[e][l][1]));
                sheets.union(t, h);
            }
        }
        for v in 0..self.vertices.len() {
            let classes = classes_at[v].clone();
            let mut fans: Vec<(usize, usize)> = Vec::new();
            for &k in &classes {
                let kbar = deck_class(&mut uf, k);
                if kbar == k {
                    return Err(ComplexError::StarNotOrientable(self.vertices[v].clone()));
                }
                if !fans.iter().any(|&(a, b)| a == k || b == k) {
                    fans.push((k, kbar));
                }
            }
            let Some(&(k1, k1bar)) = fans.first() else { continue };
            for &(kj, kjbar) in &fans[1..] {
                let (s1, s1bar, sj) = (sheets.find(k1), sheets.find(k1bar), sheets.find(kj));
                let (x, y) = if sj == s1 || sj != s1bar { (kj, kjbar) } else { (kjbar, kj) };
                uf.union(x, k1);
                uf.union(y, k1bar);
                sheets.union(x, k1);
                sheets.union(y, k1bar);
            }
        }

        // number the cover vertices: per base vertex, the class holding its lowest node first
        let mut vid = vec![usize::MAX; n];
        let mut first_node_at = vec![usize::MAX; self.vertices.len()];
        for node in 0..n {
            if first_node_at[base_of[node]] == usize::MAX {
                first_node_at[base_of[node]] = node;
            }
        }
        for v in 0..self.vertices.len() {
            let plus = uf.find(first_node_at[v]);
            let minus = uf.find(deck_of[first_node_at[v]]);
            vid[plus] = 2 * v;
            vid[minus] = 2 * v + 1;
        }
        let vertex_of = |uf: &mut UnionFind, node: usize| vid[uf.find(node)];

        let mut vertices = Vec::with_capacity(2 * self.vertices.len());
        for l in &self.vertices {
            vertices.push(format!("{l}+"));
            vertices.push(format!("{l}-"));
        }
        let mut edges = Vec::with_capacity(2 * ne);
        for (e, edge) in self.edges.iter().enumerate() {
            for (l, mark) in [(0, '+'), (1, '-')] {
                edges.push(Edge {
                    tail: vertex_of(&mut uf, ends[e][l][0]),
                    head: vertex_of(&mut uf, ends[e][l][1]),
                    label: format!("{}{mark}", edge.label),
                });
            }
        }
        let mut faces = Vec::with_capacity(2 * nf);
        for (f, face) in self.faces.iter().enumerate() {
            let lifted = |sheet: usize, k: usize| 2 * face.slots[k].edge + lift[f][k][sheet];
            faces.push(Face {
                slots: [0, 1, 2].map(|k| Slot { edge: lifted(0, k), forward: face.slots[k].forward }),
                label: format!("{}+", face.label),
            });
            faces.push(Face {
                slots: [2, 1, 0].map(|k| Slot { edge: lifted(1, k), forward: !face.slots[k].forward }),
                label: format!("{}-", face.label),
            });
        }
        let complex = DeltaComplex::new(vertices, edges, faces)?;
        let project = |m: usize| (0..2 * m).map(|i| i / 2).collect::<Vec<_>>();
        let deck = |m: usize| (0..2 * m).map(|i| i ^ 1).collect::<Vec<_>>();
        Ok(DoubleCover {
            vertex_projection: project(self.vertices.len()),
            edge_projection: project(ne),
            face_projection: project(nf),
            vertex_deck: deck(self.vertices.len()),
            edge_deck: deck(ne),
            face_deck: deck(nf),
            complex,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SurfaceTag;

    fn rp2() -> DeltaComplex {
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        DeltaComplex::from_triangles(&["1", "2", "3", "4", "5", "6"], &tris).unwrap()
    }

    fn check_cover(c: &DeltaComplex) -> DoubleCover {
        let cover = c.orientation_double_cover().unwrap();
        let k = &cover.complex;
        assert_eq!(k.euler_characteristic(), 2 * c.euler_characteristic());
        assert_eq!(cover.is_connected(), !c.is_orientable().unwrap());
        assert!(k.is_orientable().unwrap());
        for (i, e) in k.edges().iter().enumerate() {
            let base = &c.edges()[cover.edge_projection[i]];
            assert_eq!(cover.vertex_projection[e.tail], base.tail);
            assert_eq!(cover.vertex_projection[e.head], base.head);
            let d = &k.edges()[cover.edge_deck[i]];
            assert_eq!((cover.vertex_deck[e.tail], cover.vertex_deck[e.head]), (d.tail, d.head));
        }
        cover
    }

    #[test]
    fn projective_plane_covered_by_sphere() {
        let p = rp2();
        assert_eq!(p.classify().unwrap().tag, SurfaceTag::ProjectivePlane);
        let cover = check_cover(&p);
        assert_eq!(cover.complex.classify().unwrap().tag, SurfaceTag::Sphere);
    }

    #[test]
    fn orientable_surfaces_split_into_two_sheets() {
        let disk = DeltaComplex::from_triangles(&["a", "b", "c", "d"], &[[0, 1, 2], [2, 1, 3]]).unwrap();
        let cover = check_cover(&disk);
        let parts = cover.complex.connected_components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.classify().unwrap().tag == SurfaceTag::Disk));
    }

    #[test]
    fn pinched_fans_stay_on_their_sheets() {
        let bowtie = DeltaComplex::from_triangles(&["p", "a", "b", "c", "d"], &[[0, 1, 2], [0, 3, 4]]).unwrap();
        let cover = check_cover(&bowtie);
        assert_eq!(cover.complex.component_count(), 2);
    }

    #[test]
    fn mobius_cover_is_an_annulus() {
        let tris = [[0, 1, 2], [1, 3, 2], [2, 3, 4], [3, 0, 4], [4, 0, 1]];
        let m = DeltaComplex::from_triangles(&["0", "1", "2", "3", "4"], &tris).unwrap();
        assert_eq!(m.classify().unwrap().tag, SurfaceTag::MobiusStrip);
        let cover = check_cover(&m);
        assert_eq!(cover.complex.classify().unwrap().tag, SurfaceTag::Annulus);
    }
}
