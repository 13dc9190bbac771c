//! Families that show the edge-count bounds are tight.

use crate::error::Error;
use crate::graph::StrictDigraph;

/// Transitive tournament on `r` vertices with its spanning path removed.
/// It has `r` strong components and needs exactly `r - 1` added edges.
pub fn gen_tt_minus_path(r: usize) -> Result<StrictDigraph, Error> {
    if r < 3 {
        return Err(Error::InvalidInput(format!("tt-minus-path needs r >= 3, got {r}")));
    }
    let edges = (0..r).flat_map(|i| (i + 2..r).map(move |j| (i, j)));
    Ok(StrictDigraph::from_edges(r, edges)?)
}

/// `K_{p,q}` oriented from the `p` side (vertices `0..p`) to the `q` side
/// (`p..p+q`), plus the isolated vertex `p + q`.
pub fn gen_bipartite_plus_isolated(p: usize, q: usize) -> Result<StrictDigraph, Error> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput(format!(
            "bipartite needs p, q >= 1, got p = {p}, q = {q}"
        )));
    }
    let edges = (0..p).flat_map(|x| (p..p + q).map(move |y| (x, y)));
    Ok(StrictDigraph::from_edges(p + q + 1, edges)?)
}

/// `m` vertex-disjoint directed `k`-cycles.
pub fn gen_cycles(k: usize, m: usize) -> Result<StrictDigraph, Error> {
    if k < 3 || m == 0 {
        return Err(Error::InvalidInput(format!(
            "cycles needs k >= 3 and m >= 1, got k = {k}, m = {m}"
        )));
    }
    let edges = (0..m).flat_map(|c| (0..k).map(move |i| (c * k + i, c * k + (i + 1) % k)));
    Ok(StrictDigraph::from_edges(k * m, edges)?)
}
