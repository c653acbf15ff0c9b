/// Disjoint sets with an optional parity bit relative to the root.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), parity: vec![false; n] }
    }

    pub fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parity.push(false);
        self.parent.len() - 1
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find_with_parity(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, pp) = self.find_with_parity(p);
        self.parity[x] ^= pp;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    pub fn find(&mut self, x: usize) -> usize {
        self.find_with_parity(x).0
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        self.union_with_parity(a, b, false).is_ok()
    }

    /// Joins `a` and `b` so that their parities differ by `odd`.
    /// `Err(())` when they already sit together with the other parity.
    pub fn union_with_parity(&mut self, a: usize, b: usize, odd: bool) -> Result<bool, ()> {
        let (ra, pa) = self.find_with_parity(a);
        let (rb, pb) = self.find_with_parity(b);
        if ra == rb {
            return if pa ^ pb == odd { Ok(false) } else { Err(()) };
        }
        // keep the smaller index as root so class representatives are stable
        let (root, child) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ odd;
        Ok(true)
    }
}
