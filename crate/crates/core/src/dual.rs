//! Dual graphs, graph Hamiltonicity, and (k-)strong connectivity.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::complex::{delete_vertex, PureComplex};
use crate::error::{Error, Result};
use crate::hamiltonicity::HamShape;

/// A simple undirected graph with named nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<Vec<usize>>,
}

/// The dual graph of a pure complex: one node per facet, an edge whenever
/// two facets share a ridge.
pub type DualGraph = Graph;

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            names: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.adj.len());
        self.names = names;
        self
    }

    /// Adds an undirected edge. Self-loops and repeats are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.has_edge(u, v) {
            return;
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn name(&self, u: usize) -> &str {
        &self.names[u]
    }

    pub fn node_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// One `u v` line per edge, nodes written by name.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", self.names[u], self.names[v]).unwrap();
        }
        out
    }

    /// The graph without node `x` (remaining nodes keep their order).
    pub fn without_node(&self, x: usize) -> Graph {
        let keep: Vec<usize> = (0..self.node_count()).filter(|&u| u != x).collect();
        let pos = |u: usize| if u < x { u } else { u - 1 };
        let mut g = Graph::new(keep.len()).with_names(keep.iter().map(|&u| self.names[u].clone()).collect());
        for (u, v) in self.edges() {
            if u != x && v != x {
                g.add_edge(pos(u), pos(v));
            }
        }
        g
    }
}

pub fn dual_graph(c: &PureComplex) -> Result<DualGraph> {
    if c.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    let facets = c.facets();
    let names = (0..facets.len())
        .map(|i| {
            c.facet_name(i)
                .map(str::to_string)
                .unwrap_or_else(|| facets[i].vertices().iter().join("-"))
        })
        .collect();
    let mut g = Graph::new(facets.len()).with_names(names);
    for (i, j) in (0..facets.len()).tuple_combinations() {
        if facets[i].intersection_len(&facets[j]) == c.dim() {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// The graph of a 1-dimensional complex: its vertices joined by its edges.
pub fn edge_graph(c: &PureComplex) -> Result<Graph> {
    if c.dim() != 1 {
        return Err(Error::InvalidParameters(format!(
            "expected a 1-complex, got dimension {}",
            c.dim()
        )));
    }
    let u = c.universe();
    let mut g = Graph::new(u.len()).with_names(u.iter().map(|v| v.to_string()).collect());
    for f in c.facets() {
        let [a, b] = f.vertices() else { unreachable!() };
        g.add_edge(u.binary_search(a).unwrap(), u.binary_search(b).unwrap());
    }
    Ok(g)
}

pub fn graph_connected(g: &Graph) -> Result<bool> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    Ok(count == n)
}

/// Nodes whose removal disconnects their component, by lowlink DFS.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        cut: Vec<bool>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let mut children = 0;
            for &v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    children += 1;
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if parent.is_some() && self.low[v] >= self.disc[u] {
                        self.cut[u] = true;
                    }
                } else if Some(v) != parent {
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut[u] = true;
            }
        }
    }

    let n = g.node_count();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        cut: vec![false; n],
    };
    for u in 0..n {
        if dfs.disc[u] == 0 {
            dfs.visit(u, None);
        }
    }
    (0..n).filter(|&u| dfs.cut[u]).collect()
}

/// Connected, at least 3 nodes, and no articulation point.
pub fn graph_two_connected(g: &Graph) -> Result<bool> {
    Ok(graph_connected(g)? && g.node_count() >= 3 && articulation_points(g).is_empty())
}

/// Exact Hamiltonian path or cycle by backtracking. The returned sequence
/// lists every node once; for cycles the last node is adjacent to the first.
pub fn graph_hamiltonian(g: &Graph, shape: HamShape) -> Result<Option<Vec<usize>>> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if shape.is_cycle() && n < 3 {
        return Ok(None);
    }
    if !graph_connected(g)? {
        return Ok(None);
    }

    fn extend(g: &Graph, path: &mut Vec<usize>, seen: &mut [bool], cycle: bool) -> bool {
        let n = g.node_count();
        let last = *path.last().unwrap();
        if path.len() == n {
            return !cycle || g.has_edge(last, path[0]);
        }
        for &v in g.neighbors(last) {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            path.push(v);
            if extend(g, path, seen, cycle) {
                return true;
            }
            path.pop();
            seen[v] = false;
        }
        false
    }

    let starts: Vec<usize> = if shape.is_cycle() { vec![0] } else { (0..n).collect() };
    for s in starts {
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut path = vec![s];
        if extend(g, &mut path, &mut seen, shape.is_cycle()) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Checks a node sequence returned by [`graph_hamiltonian`].
pub fn verify_graph_hamiltonian(g: &Graph, seq: &[usize], shape: HamShape) -> bool {
    let n = g.node_count();
    let mut seen = vec![false; n];
    if seq.len() != n || seq.iter().any(|&u| u >= n || std::mem::replace(&mut seen[u], true)) {
        return false;
    }
    let mut steps: Vec<(usize, usize)> = seq.iter().copied().tuple_windows().collect();
    if shape.is_cycle() {
        if n < 3 {
            return false;
        }
        steps.push((seq[n - 1], seq[0]));
    }
    steps.iter().all(|&(u, v)| g.has_edge(u, v))
}

/// Whether the dual graph is connected.
pub fn is_strongly_connected(c: &PureComplex) -> Result<bool> {
    graph_connected(&dual_graph(c)?)
}

/// Whether deleting any set of fewer than `k` vertices leaves a nonempty,
/// strongly connected complex.
pub fn is_k_strongly_connected(c: &PureComplex, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    if c.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    for size in 0..k {
        for removed in c.universe().iter().copied().combinations(size) {
            let mut rest = c.clone();
            for v in removed {
                if rest.contains_vertex(v) {
                    rest = delete_vertex(&rest, v)?;
                }
            }
            if rest.is_degenerate() || !is_strongly_connected(&rest)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
