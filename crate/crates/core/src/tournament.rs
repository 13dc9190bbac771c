//! Completion of strong digraphs to tournaments and spanning cycles of
//! strong tournaments.

use crate::error::Error;
use crate::graph::{is_strong, StrictDigraph};

/// Orients every non-adjacent pair `{u, v}`, `u < v`, as `u -> v`. Adding
/// edges keeps a strong digraph strong.
pub fn complete_to_tournament(g: &StrictDigraph) -> Result<StrictDigraph, Error> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    if !is_strong(g) {
        return Err(Error::NotStrong);
    }
    Ok(g.with_edges(g.non_adjacent_pairs())?)
}

/// Directed spanning cycle of a strong tournament, starting at vertex 0.
///
/// Grows a cycle from a 3-cycle through vertex 0. A vertex off the cycle
/// with both an in- and an out-neighbour on it is inserted between some
/// `c_i -> v -> c_{i+1}`. Otherwise every outside vertex is beaten by the
/// whole cycle or beats the whole cycle, and strong connectivity gives an
/// edge `a -> b` from the first kind to the second; `c_0 -> a -> b -> c_1`
/// then lengthens the cycle by two.
pub fn hamiltonian_cycle_strong_tournament(t: &StrictDigraph) -> Result<Vec<usize>, Error> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if !t.is_tournament() {
        return Err(Error::NotTournament);
    }
    if !is_strong(t) {
        return Err(Error::NotStrong);
    }

    let (u, w) = t
        .out_neighbors(0)
        .iter()
        .flat_map(|&u| t.in_neighbors(0).iter().map(move |&w| (u, w)))
        .find(|&(u, w)| t.has_edge(u, w))
        .expect("strong tournament has a 3-cycle through every vertex");
    let mut cycle = vec![0, u, w];
    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }

    while cycle.len() < n {
        let len = cycle.len();
        let mut inserted = false;
        for v in (0..n).filter(|&v| !on_cycle[v]) {
            if let Some(i) = (0..len).find(|&i| t.has_edge(cycle[i], v) && t.has_edge(v, cycle[(i + 1) % len])) {
                cycle.insert(i + 1, v);
                on_cycle[v] = true;
                inserted = true;
                break;
            }
        }
        if inserted {
            continue;
        }
        let c0 = cycle[0];
        let (a, b) = (0..n)
            .filter(|&a| !on_cycle[a] && t.has_edge(c0, a))
            .flat_map(|a| t.out_neighbors(a).iter().map(move |&b| (a, b)))
            .find(|&(_, b)| !on_cycle[b] && t.has_edge(b, c0))
            .expect("strong tournament has an edge back toward the cycle");
        cycle.splice(1..1, [a, b]);
        on_cycle[a] = true;
        on_cycle[b] = true;
    }
    Ok(cycle)
}
