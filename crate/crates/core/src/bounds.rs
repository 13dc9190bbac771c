//! Lower and upper bounds on the number of edges a strong extension needs.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::dicut::{find_complete_dicut, DicutCertificate};
use crate::error::Error;
use crate::extend::{
    brute_force_min_extension, brute_force_work, extend, MinExtension, BRUTE_MAX_N,
    BRUTE_MAX_PAIRS,
};
use crate::graph::{strong_components, Condensation, StrictDigraph};

/// `bounds` runs the exhaustive minimum only when it would try at most this
/// many edge sets.
pub const BOUNDS_BRUTE_WORK: u128 = 2_000_000;

/// Cyclic orders of the weak components are searched exhaustively up to
/// this many components.
pub const CYCLIC_EXHAUSTIVE_MAX: usize = 8;

/// Sum of `max(t_{i-1}, s_i)` over a cyclic order of the weak components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicBound {
    pub value: usize,
    /// Weak-component ids in the order that produced `value`.
    pub order: Vec<usize>,
    /// Whether every cyclic order was tried or only the sorted one.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// `max(s, t)`.
    pub lower: usize,
    /// `s + t - m` when the input is an oriented bipartite graph.
    pub lower_matched: Option<usize>,
    /// Edges used by the constructive extension.
    pub constructive: usize,
    /// `r`, or `r - 1` outside the all-weak-components-strong disconnected case.
    pub upper_theorem: usize,
    /// Disconnected inputs only.
    pub upper_cyclic: Option<CyclicBound>,
    /// `s + t - c`, disconnected inputs only.
    pub upper_prop: Option<usize>,
    /// `u - c'`, disconnected inputs only.
    pub u_minus_c_prime: Option<usize>,
    /// Exact minimum, when small enough to enumerate.
    pub brute_min: Option<usize>,
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lower: {}", self.lower)?;
        writeln!(f, "lower_matched: {}", opt(self.lower_matched))?;
        writeln!(f, "constructive: {}", self.constructive)?;
        writeln!(f, "upper_theorem: {}", self.upper_theorem)?;
        match &self.upper_cyclic {
            Some(c) => {
                writeln!(f, "upper_cyclic: {}", c.value)?;
                writeln!(f, "upper_cyclic_order: {}", c.order.iter().join(" "))?;
                writeln!(
                    f,
                    "upper_cyclic_search: {}",
                    if c.exhaustive { "exhaustive" } else { "heuristic" }
                )?;
            }
            None => {
                writeln!(f, "upper_cyclic: none")?;
                writeln!(f, "upper_cyclic_order: none")?;
                writeln!(f, "upper_cyclic_search: none")?;
            }
        }
        writeln!(f, "upper_prop: {}", opt(self.upper_prop))?;
        writeln!(f, "u_minus_c_prime: {}", opt(self.u_minus_c_prime))?;
        writeln!(f, "brute_min: {}", opt(self.brute_min))
    }
}

/// True for a disconnected digraph whose weak components are all strong.
pub fn is_equality_case(cond: &Condensation) -> bool {
    cond.c() > 1 && cond.c() == cond.r()
}

/// Upper bound for a disconnected digraph from a cyclic order of its weak
/// components. All cyclic orders are tried when there are at most
/// [`CYCLIC_EXHAUSTIVE_MAX`] components; rotations give equal sums, so the
/// first component stays fixed.
pub fn cyclic_upper_bound(cond: &Condensation) -> CyclicBound {
    let groups = cond.components_by_weak();
    let sources: Vec<usize> = groups
        .iter()
        .map(|cs| cs.iter().filter(|&&c| cond.is_source(c)).count())
        .collect();
    let sinks: Vec<usize> = groups
        .iter()
        .map(|cs| cs.iter().filter(|&&c| cond.is_sink(c)).count())
        .collect();
    let k = groups.len();
    let value = |order: &[usize]| -> usize {
        (0..k)
            .map(|i| sinks[order[(i + k - 1) % k]].max(sources[order[i]]))
            .sum()
    };
    let sorted: Vec<usize> = (0..k).collect();
    if !(3..=CYCLIC_EXHAUSTIVE_MAX).contains(&k) {
        return CyclicBound {
            value: value(&sorted),
            order: sorted,
            exhaustive: k <= CYCLIC_EXHAUSTIVE_MAX,
        };
    }
    let mut best = CyclicBound {
        value: value(&sorted),
        order: sorted,
        exhaustive: true,
    };
    for rest in (1..k).permutations(k - 1) {
        let order: Vec<usize> = std::iter::once(0).chain(rest).collect();
        let v = value(&order);
        if v < best.value {
            best.value = v;
            best.order = order;
        }
    }
    best
}

/// Maximum matching by augmenting paths; `adj[left]` lists right vertices.
fn max_matching(adj: &[Vec<usize>], right_count: usize) -> usize {
    fn augment(
        left: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[left] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|l| augment(l, adj, seen, owner)) {
                owner[r] = Some(left);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right_count];
    let mut size = 0;
    for left in 0..adj.len() {
        let mut seen = vec![false; right_count];
        if augment(left, adj, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

/// `s + t - m` for a digraph whose edges all go from `x` to `y`, where `m`
/// is a maximum matching of `y` into `x` over pairs the digraph leaves
/// non-adjacent. Any strong extension adds at least this many edges.
pub fn bipartite_matching_lower_bound(
    g: &StrictDigraph,
    x: &[usize],
    y: &[usize],
) -> Result<usize, Error> {
    let n = g.n();
    let mut side = vec![None; n];
    for (&v, s) in x.iter().map(|v| (v, 0)).chain(y.iter().map(|v| (v, 1))) {
        if v >= n {
            return Err(Error::InvalidInput(format!("vertex {v} out of range for n = {n}")));
        }
        if side[v].replace(s).is_some() {
            return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
        }
    }
    if x.is_empty() || y.is_empty() || side.iter().any(Option::is_none) {
        return Err(Error::InvalidInput(
            "X and Y must be nonempty and partition the vertices".into(),
        ));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] != Some(0) || side[v] != Some(1)) {
        return Err(Error::InvalidInput(format!("edge {u} -> {v} does not go from X to Y")));
    }
    if g.edge_count() == x.len() * y.len() {
        return Err(Error::HasCompleteDicut(DicutCertificate::new(x.to_vec())));
    }
    let adj: Vec<Vec<usize>> = y
        .iter()
        .map(|&yv| {
            (0..x.len())
                .filter(|&i| !g.adjacent(yv, x[i]))
                .collect()
        })
        .collect();
    let m = max_matching(&adj, x.len());
    Ok(x.len() + y.len() - m)
}

/// Splits an oriented bipartite digraph (no isolated vertices, every vertex
/// a pure source or pure sink) into its source and sink sides.
pub fn bipartite_sides(g: &StrictDigraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut x = Vec::new();
    let mut y = Vec::new();
    for v in 0..g.n() {
        match (g.in_neighbors(v).is_empty(), g.out_neighbors(v).is_empty()) {
            (true, false) => x.push(v),
            (false, true) => y.push(v),
            _ => return None,
        }
    }
    (!x.is_empty() && !y.is_empty()).then_some((x, y))
}

/// All bounds for a digraph with at least three vertices and no complete dicut.
pub fn bounds(g: &StrictDigraph) -> Result<BoundsReport, Error> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    if let Some(cert) = find_complete_dicut(g) {
        return Err(Error::HasCompleteDicut(cert));
    }
    let cond = strong_components(g);
    let plan = extend(g)?;
    let r = cond.r();
    let upper_theorem = if is_equality_case(&cond) { r } else { r - 1 };
    let lower_matched = match bipartite_sides(g) {
        Some((x, y)) => Some(bipartite_matching_lower_bound(g, &x, &y)?),
        None => None,
    };
    let disconnected = cond.c() > 1;
    let pairs = g.non_adjacent_pairs().len();
    let brute_min = if g.n() <= BRUTE_MAX_N
        && pairs <= BRUTE_MAX_PAIRS
        && brute_force_work(pairs, plan.len()) <= BOUNDS_BRUTE_WORK
    {
        match brute_force_min_extension(g)? {
            MinExtension::Found(p) => Some(p.len()),
            MinExtension::Impossible(cert) => return Err(Error::HasCompleteDicut(cert)),
        }
    } else {
        None
    };
    Ok(BoundsReport {
        lower: cond.s().max(cond.t()),
        lower_matched,
        constructive: plan.len(),
        upper_theorem,
        upper_cyclic: disconnected.then(|| cyclic_upper_bound(&cond)),
        upper_prop: disconnected.then(|| cond.s() + cond.t() - cond.c()),
        u_minus_c_prime: disconnected.then(|| cond.u() - cond.c_prime()),
        brute_min,
    })
}
