//! Complete dicuts: detection, certificate verification, and the dicut
//! deficiency used by the k-connectability necessary condition.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::bits::{full_mask, BitDigraph};
use crate::error::Error;
use crate::graph::{strong_components, StrictDigraph};

/// Largest vertex count the subset enumerations accept.
pub const SUBSET_BUDGET_N: usize = 22;

/// The originating side `X` of a cut `[X, X̄]`, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DicutCertificate {
    x: Vec<usize>,
}

impl DicutCertificate {
    pub fn new(mut x: Vec<usize>) -> Self {
        x.sort_unstable();
        x.dedup();
        Self { x }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.x
    }
}

impl fmt::Display for DicutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dicut: {{")?;
        for (i, v) in self.x.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Checks that `[X, X̄]` is a complete dicut of `g`: every forward edge is
/// present and no edge goes back into `X`.
pub fn verify_complete_dicut(g: &StrictDigraph, cert: &DicutCertificate) -> Result<bool, Error> {
    let n = g.n();
    if cert.x.is_empty() {
        return Err(Error::InvalidCertificate("X is empty".into()));
    }
    if let Some(&v) = cert.x.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidCertificate(format!(
            "vertex {v} out of range for n = {n}"
        )));
    }
    if cert.x.len() == n {
        return Err(Error::InvalidCertificate("X contains every vertex".into()));
    }
    let mut in_x = vec![false; n];
    for &v in &cert.x {
        in_x[v] = true;
    }
    let others: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();
    Ok(cert
        .x
        .iter()
        .all(|&x| others.iter().all(|&y| g.has_edge(x, y) && !g.has_edge(y, x))))
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        // Keep the smaller root so labels are reproducible.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// Finds a complete dicut in polynomial time, or `None` if there is none.
///
/// Non-adjacent vertices must lie on the same side of any complete dicut, and
/// so must two groups of vertices joined by edges in both directions. Merging
/// these to a fixpoint leaves blocks that form a tournament; complete dicuts
/// are exactly the dicuts of that tournament, i.e. the proper prefixes of its
/// condensation chain. Of those, the one with the lexicographically smallest
/// sorted vertex list is returned.
pub fn find_complete_dicut(g: &StrictDigraph) -> Option<DicutCertificate> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let mut dsu = Dsu::new(n);
    for (u, v) in g.non_adjacent_pairs() {
        dsu.union(u, v);
    }
    loop {
        let dirs: BTreeSet<(usize, usize)> = g
            .edges()
            .map(|(u, v)| (dsu.find(u), dsu.find(v)))
            .filter(|(a, b)| a != b)
            .collect();
        let mut merged = false;
        for &(a, b) in &dirs {
            if a < b && dirs.contains(&(b, a)) {
                merged |= dsu.union(a, b);
            }
        }
        if !merged {
            break;
        }
    }

    let mut block_id = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let root = dsu.find(v);
        if block_id[root] == usize::MAX {
            block_id[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_id[root]].push(v);
    }
    if blocks.len() < 2 {
        return None;
    }
    let mut quotient = StrictDigraph::new(blocks.len());
    for (u, v) in g.edges() {
        let (a, b) = (block_id[dsu.find(u)], block_id[dsu.find(v)]);
        if a != b {
            quotient
                .add_edge(a, b)
                .expect("merged blocks have one edge direction");
        }
    }
    let cond = strong_components(&quotient);
    if cond.r() < 2 {
        return None;
    }
    let mut prefix: Vec<usize> = Vec::new();
    let mut best: Option<Vec<usize>> = None;
    for comp in &cond.components[..cond.r() - 1] {
        for &b in comp {
            prefix.extend_from_slice(&blocks[b]);
        }
        prefix.sort_unstable();
        if best.as_ref().is_none_or(|b| prefix < *b) {
            best = Some(prefix.clone());
        }
    }
    best.map(DicutCertificate::new)
}

/// Visits nonempty proper subsets of `0..n` in lexicographic order of their
/// sorted vertex lists.
fn visit_subsets_lex<F>(n: usize, mut f: F)
where
    F: FnMut(&[usize], u64) -> ControlFlow<()>,
{
    fn rec<F: FnMut(&[usize], u64) -> ControlFlow<()>>(
        n: usize,
        start: usize,
        set: &mut Vec<usize>,
        mask: u64,
        f: &mut F,
    ) -> ControlFlow<()> {
        for v in start..n {
            set.push(v);
            let m = mask | (1 << v);
            if set.len() < n {
                f(set, m)?;
                rec(n, v + 1, set, m, f)?;
            }
            set.pop();
        }
        ControlFlow::Continue(())
    }
    let _ = rec(n, 0, &mut Vec::new(), 0, &mut f);
}

fn check_budget(g: &StrictDigraph) -> Result<(), Error> {
    if g.n() > SUBSET_BUDGET_N {
        return Err(Error::Budget(format!(
            "subset enumeration needs n <= {SUBSET_BUDGET_N}, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Exhaustive search for a complete dicut; the first in lexicographic order.
pub fn brute_force_complete_dicut(g: &StrictDigraph) -> Result<Option<DicutCertificate>, Error> {
    check_budget(g)?;
    let b = BitDigraph::from_graph(g);
    let all = full_mask(g.n());
    let mut found = None;
    visit_subsets_lex(g.n(), |set, mask| {
        let rest = all & !mask;
        if set.iter().all(|&x| b.out(x) & rest == rest) {
            found = Some(DicutCertificate::new(set.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Smallest number of forward edges missing from any dicut, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub missing: usize,
    pub x: Vec<usize>,
}

/// Minimum of `|X|·|X̄| − |[X, X̄]|` over all dicuts `[X, X̄]`. `None` when the
/// digraph has no dicut at all. Ties go to the lexicographically first `X`.
pub fn dicut_deficiency(g: &StrictDigraph) -> Result<Option<Deficiency>, Error> {
    check_budget(g)?;
    let b = BitDigraph::from_graph(g);
    let all = full_mask(g.n());
    let mut best: Option<Deficiency> = None;
    visit_subsets_lex(g.n(), |set, mask| {
        let rest = all & !mask;
        if set.iter().any(|&x| b.inn(x) & rest != 0) {
            return ControlFlow::Continue(());
        }
        let missing: u32 = set.iter().map(|&x| (rest & !b.out(x)).count_ones()).sum();
        let missing = missing as usize;
        if best.as_ref().is_none_or(|d| missing < d.missing) {
            best = Some(Deficiency {
                missing,
                x: set.to_vec(),
            });
        }
        ControlFlow::Continue(())
    });
    Ok(best)
}
