#![allow(dead_code)]

use itertools::Itertools;
use pure_complex::dual::Graph;
use pure_complex::{Facet, PureComplex, VertexId};
use rand::Rng;

pub fn ids(n: usize) -> Vec<VertexId> {
    (1..=n as u32).map(|v| VertexId::new(v).unwrap()).collect()
}

/// A random pure d-complex on the universe 1..=n. Each d-face is kept with
/// probability `p`; at least one facet is always kept.
pub fn random_complex(rng: &mut impl Rng, n: usize, d: usize, p: f64) -> PureComplex {
    let all: Vec<Vec<u32>> = (1..=n as u32).combinations(d + 1).collect();
    let mut kept: Vec<Facet> = all
        .iter()
        .filter(|_| rng.gen_bool(p))
        .map(|f| Facet::from_labels(f).unwrap())
        .collect();
    if kept.is_empty() {
        kept.push(Facet::from_labels(&all[rng.gen_range(0..all.len())]).unwrap());
    }
    PureComplex::from_facets(kept, Some(ids(n))).unwrap()
}

/// Edge list on nodes 0..n as a graph.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges)
}

/// Hamiltonicity by trying every vertex order.
pub fn graph_hamiltonian_by_permutation(g: &Graph, cycle: bool) -> bool {
    let n = g.node_count();
    if n == 0 || (cycle && n < 3) {
        return false;
    }
    (0..n)
        .permutations(n)
        .any(|order| order.windows(2).all(|w| g.has_edge(w[0], w[1])) && (!cycle || g.has_edge(order[n - 1], order[0])))
}
