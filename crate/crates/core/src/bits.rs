//! Bitmask adjacency for the small graphs the exhaustive searches work on.

use crate::graph::StrictDigraph;

pub(crate) const MAX_BITS: usize = 64;

#[derive(Clone, Debug)]
pub(crate) struct BitDigraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl BitDigraph {
    pub(crate) fn from_graph(g: &StrictDigraph) -> Self {
        assert!(g.n() <= MAX_BITS, "bitmask graphs hold at most {MAX_BITS} vertices");
        let mut b = Self {
            n: g.n(),
            out: vec![0; g.n()],
            inn: vec![0; g.n()],
        };
        for (u, v) in g.edges() {
            b.add(u, v);
        }
        b
    }

    pub(crate) fn out(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub(crate) fn inn(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub(crate) fn add(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
        self.inn[v] &= !(1 << u);
    }

    fn closure(&self, adj: &[u64]) -> u64 {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub(crate) fn is_strong(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = full_mask(self.n);
        self.closure(&self.out) == all && self.closure(&self.inn) == all
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
