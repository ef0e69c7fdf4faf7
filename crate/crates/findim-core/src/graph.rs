//! Directed graphs attached to generating sets, and the graph algorithms the
//! deciders need: strongly connected components, cycle vertices, deterministic
//! topological order, and DOT export.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::derivation::{TypeIData, TypeIIData};
use crate::error::{Error, Result};

/// A simple directed graph on vertices `0..vertex_count` with optional labels.
///
/// Edges are kept in a sorted set, so iteration (and everything derived from
/// it, including DOT output) is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

/// Result of a topological sort: either a total order with all edges forward,
/// or a closed walk witnessing a cycle (first vertex repeated at the end).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoResult {
    Ordered(Vec<usize>),
    Cycle(Vec<usize>),
}

impl DiGraph {
    pub fn new(vertex_count: usize) -> Self {
        DiGraph {
            vertex_count,
            edges: BTreeSet::new(),
            labels: None,
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        DiGraph {
            vertex_count: labels.len(),
            edges: BTreeSet::new(),
            labels: Some(labels),
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize) -> Result<()> {
        let dim = self.vertex_count;
        if from >= dim {
            return Err(Error::IndexOutOfRange { index: from, dim });
        }
        if to >= dim {
            return Err(Error::IndexOutOfRange { index: to, dim });
        }
        self.edges.insert((from, to));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .range((v, 0)..=(v, usize::MAX))
            .map(|&(_, to)| to)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }

    /// Strongly connected components (Tarjan). Each component is sorted and
    /// the component list is sorted by smallest member.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut state = TarjanState {
            index: 0,
            stack: Vec::new(),
            on_stack: vec![false; n],
            idx: vec![None; n],
            low: vec![0; n],
            comps: Vec::new(),
        };
        for v in 0..n {
            if state.idx[v].is_none() {
                strongconnect(v, &adj, &mut state);
            }
        }
        let mut comps = state.comps;
        for comp in &mut comps {
            comp.sort_unstable();
        }
        comps.sort_unstable_by_key(|comp| comp[0]);
        comps
    }

    /// Exactly the vertices lying on at least one directed cycle: members of
    /// strongly connected components of size >= 2, plus self-loop vertices.
    pub fn cycle_vertices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for comp in self.sccs() {
            if comp.len() >= 2 {
                out.extend(comp);
            }
        }
        for v in 0..self.vertex_count {
            if self.has_edge(v, v) {
                out.insert(v);
            }
        }
        out
    }

    /// Kahn's algorithm with a deterministic tie-break: among the ready
    /// vertices the smallest index goes first. On cyclic input returns a
    /// witness cycle instead, rotated to start at its smallest vertex.
    pub fn topological_order(&self) -> TopoResult {
        let n = self.vertex_count;
        let mut indegree = vec![0usize; n];
        for &(_, v) in &self.edges {
            indegree[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for w in self.successors(v) {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == n {
            return TopoResult::Ordered(order);
        }

        // Some vertices remain; each of them has a predecessor among the
        // remaining ones, so walking predecessors must revisit a vertex.
        let remaining: BTreeSet<usize> = {
            let placed: BTreeSet<usize> = order.iter().copied().collect();
            (0..n).filter(|v| !placed.contains(v)).collect()
        };
        let mut preds = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            if remaining.contains(&u) && remaining.contains(&v) {
                preds[v].push(u);
            }
        }
        let start = *remaining.iter().next().expect("remaining is nonempty");
        let mut walk = vec![start];
        let mut seen_at = vec![None; n];
        seen_at[start] = Some(0);
        loop {
            let last = *walk.last().expect("walk is nonempty");
            let prev = *preds[last]
                .iter()
                .min()
                .expect("every remaining vertex keeps a remaining predecessor");
            if let Some(pos) = seen_at[prev] {
                // Closed backward walk walk[pos..] from prev to prev; reverse
                // it to follow the edge direction.
                let mut cycle: Vec<usize> = walk[pos..].to_vec();
                cycle.push(prev);
                cycle.reverse();
                return TopoResult::Cycle(rotate_cycle(cycle));
            }
            seen_at[prev] = Some(walk.len());
            walk.push(prev);
        }
    }

    /// A shortest closed walk through `v`, as `[v, ..., v]`; `None` when `v`
    /// lies on no directed cycle. Deterministic (breadth-first, smallest
    /// successor first).
    pub fn cycle_through(&self, v: usize) -> Option<Vec<usize>> {
        if self.has_edge(v, v) {
            return Some(vec![v, v]);
        }
        let n = self.vertex_count;
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        visited[v] = true;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for w in self.successors(u) {
                if w == v {
                    // Found the way back; reconstruct v -> ... -> u -> v.
                    let mut path = vec![v];
                    let mut rev = Vec::new();
                    let mut cur = u;
                    while cur != v {
                        rev.push(cur);
                        cur = parent[cur].expect("bfs parents reach back to v");
                    }
                    rev.reverse();
                    path.extend(rev);
                    path.push(v);
                    return Some(path);
                }
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// DOT rendering: one node statement per vertex (1-based names, labels
    /// when present), then edges in lexicographic order. LF line endings.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in 0..self.vertex_count {
            match self.label(v) {
                Some(l) => out.push_str(&format!("  {} [label=\"{}\"];\n", v + 1, escape(l))),
                None => out.push_str(&format!("  {};\n", v + 1)),
            }
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {} -> {};\n", u + 1, v + 1));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Rotates a closed walk `[c0, ..., ck=c0]` so it starts at its smallest vertex.
fn rotate_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let interior = &cycle[..cycle.len() - 1];
    let pos = interior
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(k, _)| k)
        .expect("cycle is nonempty");
    let mut out: Vec<usize> = interior[pos..].to_vec();
    out.extend_from_slice(&interior[..pos]);
    out.push(interior[pos]);
    out
}

struct TarjanState {
    index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    idx: Vec<Option<usize>>,
    low: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

fn strongconnect(v: usize, adj: &[Vec<usize>], state: &mut TarjanState) {
    state.idx[v] = Some(state.index);
    state.low[v] = state.index;
    state.index += 1;
    state.stack.push(v);
    state.on_stack[v] = true;

    for &w in &adj[v] {
        if state.idx[w].is_none() {
            strongconnect(w, adj, state);
            state.low[v] = state.low[v].min(state.low[w]);
        } else if state.on_stack[w] {
            state.low[v] = state.low[v].min(state.idx[w].expect("visited"));
        }
    }

    if state.low[v] == state.idx[v].expect("set above") {
        let mut comp = Vec::new();
        loop {
            let w = state.stack.pop().expect("stack underflow");
            state.on_stack[w] = false;
            comp.push(w);
            if w == v {
                break;
            }
        }
        state.comps.push(comp);
    }
}

fn uniform_dim<'a, I: Iterator<Item = &'a crate::vector::LatticeVector>>(
    mut dims: I,
) -> Result<Option<usize>> {
    let first = match dims.next() {
        Some(v) => v.dim(),
        None => return Ok(None),
    };
    for v in dims {
        if v.dim() != first {
            return Err(Error::DimensionMismatch {
                left: first,
                right: v.dim(),
            });
        }
    }
    Ok(Some(first))
}

/// The generator graph of a type I set: vertex per generator, edge `(s, j)`
/// iff the exponent vector of generator `j` is positive at the variable of
/// generator `s`. Never produces self-loops, since `a_i = 0` for `x^a d_i`.
pub fn gamma_type1(gens: &[TypeIData]) -> Result<DiGraph> {
    uniform_dim(gens.iter().map(|g| &g.exponents))?;
    let m = gens.len();
    let mut graph = DiGraph::new(m);
    for s in 0..m {
        for j in 0..m {
            if gens[j].exponents.entry(gens[s].var).is_positive() {
                graph.add_edge(s, j)?;
            }
        }
    }
    Ok(graph)
}

/// The generator graph of a type II set: edge `(i, j)` iff the coefficient
/// vectors are not proportional and `<beta(i), p(j)> != 0`.
pub fn gamma_type2(gens: &[TypeIIData]) -> Result<DiGraph> {
    uniform_dim(gens.iter().map(|g| &g.degree))?;
    let m = gens.len();
    let mut graph = DiGraph::new(m);
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            if gens[i].coeffs.is_proportional_to(&gens[j].coeffs)? {
                continue;
            }
            if !gens[i].coeffs.pairing(&gens[j].degree)?.is_zero() {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(graph)
}

/// The variable graph of a type I set: vertex per variable, edge `(s, j)` iff
/// some generator `x^a d_j` in the set has `a_s > 0`.
pub fn variable_graph(n: usize, gens: &[TypeIData]) -> Result<DiGraph> {
    let mut graph = DiGraph::new(n);
    for g in gens {
        if g.exponents.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: g.exponents.dim(),
            });
        }
        if g.var >= n {
            return Err(Error::IndexOutOfRange {
                index: g.var,
                dim: n,
            });
        }
        for s in 0..n {
            if g.exponents.entry(s).is_positive() {
                graph.add_edge(s, g.var)?;
            }
        }
    }
    Ok(graph)
}
