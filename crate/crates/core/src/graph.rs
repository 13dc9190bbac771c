//! Strict digraphs on dense vertex indices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;

/// An orientation of a simple graph on vertices `0..n`.
///
/// Loops and antiparallel pairs are rejected at insertion time, so every
/// value of this type is strict.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StrictDigraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    edge_count: usize,
}

impl StrictDigraph {
    /// Edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a digraph from an edge iterator. Duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `u -> v`. Returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if self.has_edge(v, u) {
            return Err(GraphError::Antiparallel { u, v });
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    /// Returns a copy with the extra edges inserted.
    pub fn with_edges<I>(&self, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// True when `u` and `v` are joined by an edge in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Unordered pairs `(u, v)`, `u < v`, with no edge in either direction.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    pub fn reversed(&self) -> Self {
        Self {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
            edge_count: self.edge_count,
        }
    }

    /// Every unordered pair of distinct vertices is joined by exactly one edge.
    pub fn is_tournament(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Checks that every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &StrictDigraph) -> bool {
        self.n == other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Edge-list serialization: a `n <N>` header followed by sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Graphviz output for visualization. Isolated vertices are listed so
    /// that they show up in the drawing.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in 0..self.n {
            if self.out[v].is_empty() && self.inn[v].is_empty() {
                s.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for StrictDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StrictDigraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for StrictDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl Serialize for StrictDigraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr {
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

/// Strong-component structure of a digraph together with its weak components.
///
/// Component ids follow a topological order of the quotient: sources first,
/// ties broken by the smallest vertex a component contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condensation {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub quotient_edges: BTreeSet<(usize, usize)>,
    pub weak_component_of: Vec<usize>,
    pub source_components: Vec<usize>,
    pub sink_components: Vec<usize>,
    #[serde(skip)]
    quotient_out: Vec<Vec<usize>>,
    #[serde(skip)]
    quotient_in: Vec<Vec<usize>>,
    #[serde(skip)]
    weak_count: usize,
}

impl Condensation {
    /// Number of strong components.
    pub fn r(&self) -> usize {
        self.components.len()
    }

    /// Number of source components.
    pub fn s(&self) -> usize {
        self.source_components.len()
    }

    /// Number of sink components.
    pub fn t(&self) -> usize {
        self.sink_components.len()
    }

    /// Number of weak components.
    pub fn c(&self) -> usize {
        self.weak_count
    }

    /// Number of weak components that are not a single strong component.
    pub fn c_prime(&self) -> usize {
        self.weak_component_sizes_in_components()
            .into_iter()
            .filter(|&k| k > 1)
            .count()
    }

    /// Number of components that are a source or a sink (or both).
    pub fn u(&self) -> usize {
        (0..self.r())
            .filter(|&i| self.is_source(i) || self.is_sink(i))
            .count()
    }

    pub fn is_source(&self, comp: usize) -> bool {
        self.quotient_in[comp].is_empty()
    }

    pub fn is_sink(&self, comp: usize) -> bool {
        self.quotient_out[comp].is_empty()
    }

    pub fn quotient_successors(&self, comp: usize) -> &[usize] {
        &self.quotient_out[comp]
    }

    pub fn quotient_predecessors(&self, comp: usize) -> &[usize] {
        &self.quotient_in[comp]
    }

    /// Weak component containing strong component `comp`.
    pub fn weak_of_component(&self, comp: usize) -> usize {
        self.weak_component_of[self.components[comp][0]]
    }

    /// Strong component ids grouped by weak component, each list ascending.
    pub fn components_by_weak(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.weak_count];
        for comp in 0..self.r() {
            groups[self.weak_of_component(comp)].push(comp);
        }
        groups
    }

    fn weak_component_sizes_in_components(&self) -> Vec<usize> {
        self.components_by_weak().iter().map(Vec::len).collect()
    }

    /// Components reachable from `from` in the quotient, `from` included.
    pub fn reachable_components(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.r()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(c) = stack.pop() {
            for &d in &self.quotient_out[c] {
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen
    }

    /// Components that can reach `to` in the quotient, `to` included.
    pub fn reaching_components(&self, to: usize) -> Vec<bool> {
        let mut seen = vec![false; self.r()];
        let mut stack = vec![to];
        seen[to] = true;
        while let Some(c) = stack.pop() {
            for &d in &self.quotient_in[c] {
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen
    }
}

/// Raw strongly connected components by iterative Tarjan. Ids are arbitrary.
fn tarjan(g: &StrictDigraph) -> (usize, Vec<usize>) {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut comp_count = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(top) = call.last_mut() {
            let (v, pos) = *top;
            if pos == 0 && index[v] == UNSEEN {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            let succ = g.out_neighbors(v);
            if pos < succ.len() {
                top.1 += 1;
                let w = succ[pos];
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if w == v {
                        break;
                    }
                }
                comp_count += 1;
            }
        }
    }
    (comp_count, comp)
}

/// Computes the strong components, the acyclic quotient, and weak components.
pub fn strong_components(g: &StrictDigraph) -> Condensation {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = g.n();
    let (raw_count, raw) = tarjan(g);

    let mut min_vertex = vec![usize::MAX; raw_count];
    for v in 0..n {
        min_vertex[raw[v]] = min_vertex[raw[v]].min(v);
    }
    let mut raw_edges = BTreeSet::new();
    for (u, v) in g.edges() {
        if raw[u] != raw[v] {
            raw_edges.insert((raw[u], raw[v]));
        }
    }
    let mut raw_out = vec![Vec::new(); raw_count];
    let mut indeg = vec![0usize; raw_count];
    for &(a, b) in &raw_edges {
        raw_out[a].push(b);
        indeg[b] += 1;
    }

    // Kahn's algorithm, smallest contained vertex first.
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..raw_count)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((min_vertex[c], c)))
        .collect();
    let mut new_id = vec![0; raw_count];
    let mut next = 0;
    while let Some(Reverse((_, c))) = heap.pop() {
        new_id[c] = next;
        next += 1;
        for &d in &raw_out[c] {
            indeg[d] -= 1;
            if indeg[d] == 0 {
                heap.push(Reverse((min_vertex[d], d)));
            }
        }
    }
    debug_assert_eq!(next, raw_count);

    let component_of: Vec<usize> = raw.iter().map(|&c| new_id[c]).collect();
    let mut components = vec![Vec::new(); raw_count];
    for v in 0..n {
        components[component_of[v]].push(v);
    }
    let quotient_edges: BTreeSet<(usize, usize)> = raw_edges
        .iter()
        .map(|&(a, b)| (new_id[a], new_id[b]))
        .collect();
    let mut quotient_out = vec![Vec::new(); raw_count];
    let mut quotient_in = vec![Vec::new(); raw_count];
    for &(a, b) in &quotient_edges {
        quotient_out[a].push(b);
        quotient_in[b].push(a);
    }
    for list in quotient_in.iter_mut() {
        list.sort_unstable();
    }
    let source_components = (0..raw_count).filter(|&c| quotient_in[c].is_empty()).collect();
    let sink_components = (0..raw_count).filter(|&c| quotient_out[c].is_empty()).collect();

    let (weak_count, weak_component_of) = weak_labels(g);

    Condensation {
        component_of,
        components,
        quotient_edges,
        weak_component_of,
        source_components,
        sink_components,
        quotient_out,
        quotient_in,
        weak_count,
    }
}

/// Labels vertices by weak component, ids in order of smallest member.
fn weak_labels(g: &StrictDigraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

/// Vertex sets of the weak components, ordered by smallest member.
pub fn weak_components(g: &StrictDigraph) -> Vec<Vec<usize>> {
    let (count, label) = weak_labels(g);
    let mut blocks = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        blocks[l].push(v);
    }
    blocks
}

/// True iff every ordered pair of vertices is joined by a directed path.
/// The empty digraph is not considered strong.
pub fn is_strong(g: &StrictDigraph) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        _ => strong_components(g).r() == 1,
    }
}
