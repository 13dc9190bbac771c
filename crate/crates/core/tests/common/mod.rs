//! Test-only oracles. Nothing here calls into the algorithms under test
//! beyond building `StrictDigraph` values and reading their edges.

#![allow(dead_code)]

use proptest::prelude::*;
use sconn::StrictDigraph;

/// Unordered pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Builds a digraph from one choice per pair: 0 none, 1 `u -> v`, 2 `v -> u`.
pub fn from_choices(n: usize, choices: &[u8]) -> StrictDigraph {
    let edges = pairs(n)
        .into_iter()
        .zip(choices)
        .filter_map(|((u, v), &c)| match c % 3 {
            1 => Some((u, v)),
            2 => Some((v, u)),
            _ => None,
        });
    StrictDigraph::from_edges(n, edges).unwrap()
}

/// Every strict digraph on `n` labeled vertices.
pub fn all_strict_digraphs(n: usize) -> impl Iterator<Item = StrictDigraph> {
    let p = pairs(n).len() as u32;
    (0..3u64.pow(p)).map(move |mut code| {
        let choices: Vec<u8> = (0..p)
            .map(|_| {
                let c = (code % 3) as u8;
                code /= 3;
                c
            })
            .collect();
        from_choices(n, &choices)
    })
}

/// Strategy for strict digraphs with `min_n..=max_n` vertices.
pub fn strict_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = StrictDigraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let p = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u8..3, p).prop_map(move |c| from_choices(n, &c))
    })
}

/// Reachability matrix by Floyd–Warshall closure.
pub fn closure(g: &StrictDigraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
    }
    for (u, v) in g.edges() {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

pub fn oracle_is_strong(g: &StrictDigraph) -> bool {
    g.n() > 0 && closure(g).iter().all(|row| row.iter().all(|&b| b))
}

/// Bitmask strongness for up to 16 vertices, written independently of the
/// library's bitmask code.
pub fn mask_strong(n: usize, out: &[u16]) -> bool {
    let full: u32 = (1 << n) - 1;
    let mut inn = vec![0u16; n];
    for u in 0..n {
        for v in 0..n {
            if out[u] >> v & 1 == 1 {
                inn[v] |= 1 << u;
            }
        }
    }
    let spread = |adj: &[u16]| {
        let mut seen: u32 = 1;
        loop {
            let mut next = seen;
            for v in 0..n {
                if seen >> v & 1 == 1 {
                    next |= adj[v] as u32;
                }
            }
            if next == seen {
                return seen;
            }
            seen = next;
        }
    };
    spread(out) == full && spread(&inn) == full
}

/// Whether some orientation of the non-adjacent pairs makes `g` strong.
/// Adding edges never hurts, so tournaments suffice.
pub fn oracle_connectable(g: &StrictDigraph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    let mut out = vec![0u16; n];
    for (u, v) in g.edges() {
        out[u] |= 1 << v;
    }
    let missing: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .filter(|&(u, v)| !g.adjacent(u, v))
        .collect();
    (0..1u64 << missing.len()).any(|bits| {
        let mut o = out.clone();
        for (i, &(u, v)) in missing.iter().enumerate() {
            if bits >> i & 1 == 1 {
                o[u] |= 1 << v;
            } else {
                o[v] |= 1 << u;
            }
        }
        mask_strong(n, &o)
    })
}

/// Complete dicut check straight from the definition, over subset masks.
pub fn oracle_has_complete_dicut(g: &StrictDigraph) -> bool {
    let n = g.n();
    (1..(1u64 << n) - 1).any(|mask| {
        (0..n).filter(|&x| mask >> x & 1 == 1).all(|x| {
            (0..n)
                .filter(|&y| mask >> y & 1 == 0)
                .all(|y| g.has_edge(x, y) && !g.has_edge(y, x))
        })
    })
}

/// Maximum matching by trying every subset of candidate pairs.
pub fn oracle_max_matching(candidates: &[(usize, usize)]) -> usize {
    (0..1u64 << candidates.len())
        .filter_map(|bits| {
            let chosen: Vec<_> = (0..candidates.len())
                .filter(|&i| bits >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let mut lefts: Vec<_> = chosen.iter().map(|p| p.0).collect();
            let mut rights: Vec<_> = chosen.iter().map(|p| p.1).collect();
            lefts.sort_unstable();
            lefts.dedup();
            rights.sort_unstable();
            rights.dedup();
            (lefts.len() == chosen.len() && rights.len() == chosen.len()).then_some(chosen.len())
        })
        .max()
        .unwrap_or(0)
}

/// Winning face pairs of `a` against `b`.
pub fn naive_wins(a: &[i64], b: &[i64]) -> u64 {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x, y)))
        .filter(|(x, y)| x > y)
        .count() as u64
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> StrictDigraph {
    StrictDigraph::from_edges(n, edges.iter().copied()).unwrap()
}
