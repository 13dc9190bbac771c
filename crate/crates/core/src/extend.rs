//! Strong extensions: the constructive edge-adding procedure and an
//! exhaustive minimum for small inputs.

use std::fmt;

use serde::Serialize;

use crate::bits::BitDigraph;
use crate::dicut::{find_complete_dicut, DicutCertificate};
use crate::error::Error;
use crate::graph::{strong_components, StrictDigraph};

/// Limits for [`brute_force_min_extension`].
pub const BRUTE_MAX_N: usize = 10;
pub const BRUTE_MAX_PAIRS: usize = 24;

/// Edges added to a digraph and the strong digraph they produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionPlan {
    pub added: Vec<(usize, usize)>,
    pub resulting: StrictDigraph,
}

impl ExtensionPlan {
    fn new(g: &StrictDigraph, added: Vec<(usize, usize)>) -> Result<Self, Error> {
        let resulting = g.with_edges(added.iter().copied())?;
        Ok(Self { added, resulting })
    }

    pub fn len(&self) -> usize {
        self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty()
    }
}

/// `+ u v` per added edge, followed by the resulting edge list.
impl fmt::Display for ExtensionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (u, v) in &self.added {
            writeln!(f, "+ {u} {v}")?;
        }
        f.write_str(&self.resulting.to_edge_list())
    }
}

fn require_order(g: &StrictDigraph) -> Result<(), Error> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    Ok(())
}

fn require_no_complete_dicut(g: &StrictDigraph) -> Result<(), Error> {
    match find_complete_dicut(g) {
        Some(cert) => Err(Error::HasCompleteDicut(cert)),
        None => Ok(()),
    }
}

/// Adds edges to a weakly connected digraph with no complete dicut until it
/// is strong. Each round joins a source component to something downstream
/// and removes at least one strong component.
fn connect_rounds(h: &mut StrictDigraph, added: &mut Vec<(usize, usize)>) -> Result<(), Error> {
    let n = h.n();
    loop {
        let cond = strong_components(h);
        if cond.r() <= 1 {
            return Ok(());
        }
        let in_sources: Vec<bool> = (0..n)
            .map(|v| cond.is_source(cond.component_of[v]))
            .collect();
        let pair = (0..n)
            .filter(|&y| in_sources[y])
            .flat_map(|y| (0..n).filter(|&x| !in_sources[x]).map(move |x| (y, x)))
            .find(|&(y, x)| !h.has_edge(y, x));
        let Some((y, x)) = pair else {
            // [S, S̄] is complete; only reachable if the input had a complete dicut.
            let s = (0..n).filter(|&v| in_sources[v]).collect();
            return Err(Error::HasCompleteDicut(DicutCertificate::new(s)));
        };
        h.add_edge(x, y)?;
        added.push((x, y));

        let (cy, cx) = (cond.component_of[y], cond.component_of[x]);
        if !cond.reachable_components(cy)[cx] {
            let reaching = cond.reaching_components(cx);
            let zc = *cond
                .source_components
                .iter()
                .find(|&&c| reaching[c])
                .expect("every component has a source predecessor");
            let z = cond.components[zc][0];
            h.add_edge(y, z)?;
            added.push((y, z));
        }
    }
}

/// Strong extension of a weakly connected digraph with no complete dicut,
/// using at most `r - 1` edges.
pub fn extend_connected(g: &StrictDigraph) -> Result<ExtensionPlan, Error> {
    require_order(g)?;
    if strong_components(g).c() != 1 {
        return Err(Error::Disconnected);
    }
    require_no_complete_dicut(g)?;
    let mut h = g.clone();
    let mut added = Vec::new();
    connect_rounds(&mut h, &mut added)?;
    ExtensionPlan::new(g, added)
}

/// Strong extension of any digraph on at least three vertices with no
/// complete dicut. Uses at most `r` edges, and exactly `r` only when the
/// digraph is disconnected and every weak component is strong.
pub fn extend(g: &StrictDigraph) -> Result<ExtensionPlan, Error> {
    require_order(g)?;
    require_no_complete_dicut(g)?;
    let cond = strong_components(g);
    let mut h = g.clone();
    let mut added = Vec::new();
    let k = cond.c();

    if k > 1 {
        let by_weak = cond.components_by_weak();
        if by_weak.iter().all(|comps| comps.len() == 1) {
            let blocks: Vec<&[usize]> = by_weak
                .iter()
                .map(|comps| cond.components[comps[0]].as_slice())
                .collect();
            if k > 2 {
                for i in 0..k {
                    added.push((blocks[i][0], blocks[(i + 1) % k][0]));
                }
            } else {
                // One side has two vertices since n >= 3, so the pairs differ.
                let (a, b) = (blocks[0], blocks[1]);
                added.push((a[0], b[0]));
                added.push((*b.get(1).unwrap_or(&b[0]), *a.get(1).unwrap_or(&a[0])));
            }
            for &(u, v) in &added {
                h.add_edge(u, v)?;
            }
        } else {
            let mut ends = Vec::with_capacity(k);
            for comps in &by_weak {
                let source = *comps
                    .iter()
                    .find(|&&c| cond.is_source(c))
                    .expect("weak component has a source");
                let sink = if comps.len() == 1 {
                    source
                } else {
                    let reach = cond.reachable_components(source);
                    *comps
                        .iter()
                        .find(|&&c| c != source && cond.is_sink(c) && reach[c])
                        .expect("source reaches a sink")
                };
                ends.push((cond.components[source][0], cond.components[sink][0]));
            }
            for i in 0..k {
                let edge = (ends[i].1, ends[(i + 1) % k].0);
                h.add_edge(edge.0, edge.1)?;
                added.push(edge);
            }
            connect_rounds(&mut h, &mut added)?;
        }
    } else {
        connect_rounds(&mut h, &mut added)?;
    }
    ExtensionPlan::new(g, added)
}

/// Result of the exhaustive minimum-extension search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinExtension {
    Found(ExtensionPlan),
    /// No strong extension exists; the complete dicut is the witness.
    Impossible(DicutCertificate),
}

/// Number of added-edge sets of size at most `max_size` over `pairs`
/// addable pairs, each pair usable in either orientation.
pub fn brute_force_work(pairs: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for j in 0..=max_size.min(pairs) {
        total = total.saturating_add(binom.saturating_mul(1u128 << j.min(127)));
        binom = binom * (pairs - j) as u128 / (j as u128 + 1);
    }
    total
}

/// Smallest set of added edges making `g` strong.
///
/// Sets are tried by increasing size and, within a size, in lexicographic
/// order of their sorted directed-edge lists; the first strong result wins.
pub fn brute_force_min_extension(g: &StrictDigraph) -> Result<MinExtension, Error> {
    require_order(g)?;
    let pairs = g.non_adjacent_pairs();
    if g.n() > BRUTE_MAX_N || pairs.len() > BRUTE_MAX_PAIRS {
        return Err(Error::Budget(format!(
            "minimum extension search needs n <= {BRUTE_MAX_N} and at most \
             {BRUTE_MAX_PAIRS} addable pairs, got n = {} and {} pairs",
            g.n(),
            pairs.len()
        )));
    }
    if let Some(cert) = find_complete_dicut(g) {
        return Ok(MinExtension::Impossible(cert));
    }

    let mut candidates: Vec<(usize, usize, usize)> = pairs
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, v, i), (v, u, i)])
        .collect();
    candidates.sort_unstable();

    fn search(
        bits: &mut BitDigraph,
        candidates: &[(usize, usize, usize)],
        start: usize,
        remaining: usize,
        used: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        if remaining == 0 {
            return bits.is_strong();
        }
        for idx in start..candidates.len() {
            let (u, v, pair) = candidates[idx];
            if used[pair] {
                continue;
            }
            used[pair] = true;
            bits.add(u, v);
            chosen.push((u, v));
            if search(bits, candidates, idx + 1, remaining - 1, used, chosen) {
                return true;
            }
            chosen.pop();
            bits.remove(u, v);
            used[pair] = false;
        }
        false
    }

    let mut bits = BitDigraph::from_graph(g);
    let mut used = vec![false; pairs.len()];
    for size in 0..=pairs.len() {
        let mut chosen = Vec::with_capacity(size);
        if search(&mut bits, &candidates, 0, size, &mut used, &mut chosen) {
            return Ok(MinExtension::Found(ExtensionPlan::new(g, chosen)?));
        }
    }
    Err(Error::InvalidInput(
        "no strong extension found although no complete dicut exists".into(),
    ))
}
