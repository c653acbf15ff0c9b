//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use preference_surfaces::complex::DeltaComplex;

/// Lexicographic pairs of `0..n`, the storage order of codes.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// `a ≼ b` read straight off code symbols `'0'`, `'1'`, `'e'`.
pub fn weakly_below(symbols: &[char], n: usize, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let (lo, hi, flip) = if a < b { (a, b, false) } else { (b, a, true) };
    let k = pairs(n).iter().position(|&p| p == (lo, hi)).unwrap();
    matches!((symbols[k], flip), ('e', _) | ('0', false) | ('1', true))
}

/// Whether the symbols describe a complete transitive relation.
pub fn is_transitive(symbols: &[char], n: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| !(weakly_below(symbols, n, a, b) && weakly_below(symbols, n, b, c)) || weakly_below(symbols, n, a, c))
        })
    })
}

/// All `3^pairs` symbol strings.
pub fn all_symbol_strings(n: usize) -> Vec<Vec<char>> {
    let k = pairs(n).len();
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<char>| ['0', '1', 'e'].map(|c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

/// Orientability by trying every sign vector. Only for small face counts.
pub fn brute_orientable(c: &DeltaComplex) -> bool {
    let f = c.face_count();
    assert!(f <= 16, "brute force limited to 16 faces");
    let mut sides: Vec<Vec<(usize, i8)>> = vec![Vec::new(); c.edge_count()];
    for (i, face) in c.faces().iter().enumerate() {
        for s in face.slots {
            sides[s.edge].push((i, if s.forward { 1 } else { -1 }));
        }
    }
    (0u32..1 << f).any(|mask| {
        let sign = |i: usize| if mask & (1 << i) != 0 { -1i8 } else { 1 };
        sides.iter().all(|s| s.len() != 2 || s[0].1 * sign(s[0].0) == -(s[1].1 * sign(s[1].0)))
    })
}

/// Connected components over faces sharing a vertex, plus isolated vertices.
pub fn component_count(c: &DeltaComplex) -> usize {
    let n = c.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in c.edges() {
        let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
        parent[a] = b;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}
