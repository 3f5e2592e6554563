//! Vertex-preserving bistellar flips and the square of a complex.
//!
//! A move is a pair `(A, B)` of disjoint vertex sets with `|A| + |B| = d + 2`
//! and `1 <= |A| <= d`, where `A` is a face and `B` is not. The move would
//! replace `A * ∂B` by `∂A * B`, introducing the facets `(A \ {a}) ∪ B`.
//! Moves with `|A| = d + 1` would need a new vertex and are never produced.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::complex::{Facet, PureComplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FlipMode {
    /// The link of `A` is exactly `∂B`.
    Strict,
    /// Every facet of `A * ∂B` is present; the link of `A` may be larger.
    #[default]
    Relaxed,
}

impl FlipMode {
    pub const ALL: [FlipMode; 2] = [FlipMode::Strict, FlipMode::Relaxed];

    pub fn as_str(self) -> &'static str {
        match self {
            FlipMode::Strict => "strict",
            FlipMode::Relaxed => "relaxed",
        }
    }
}

impl fmt::Display for FlipMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FlipMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strict" => Ok(FlipMode::Strict),
            "relaxed" => Ok(FlipMode::Relaxed),
            _ => Err(format!("unknown flip mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipMove {
    pub a_face: Facet,
    pub b_simplex: Facet,
    pub introduced: Vec<Facet>,
    pub mode: FlipMode,
}

impl FlipMove {
    fn new(a: Facet, b: Facet, mode: FlipMode) -> Self {
        let mut introduced: Vec<Facet> = a.vertices().iter().map(|&x| a.without(x).union(&b)).collect();
        introduced.sort();
        FlipMove {
            a_face: a,
            b_simplex: b,
            introduced,
            mode,
        }
    }
}

impl fmt::Display for FlipMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |x: &Facet| format!("{{{}}}", x.vertices().iter().join(","));
        write!(
            f,
            "A={} B={} adds={}",
            set(&self.a_face),
            set(&self.b_simplex),
            self.introduced.iter().map(set).join(" ")
        )
    }
}

/// All admissible moves, sorted by `(A, B)`.
pub fn enumerate_flips(c: &PureComplex, mode: FlipMode) -> Result<Vec<FlipMove>> {
    if c.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    let d = c.dim();
    let faces: BTreeSet<Facet> = c
        .facets()
        .iter()
        .flat_map(|f| {
            (1..=d).flat_map(move |k| {
                f.vertices()
                    .iter()
                    .copied()
                    .combinations(k)
                    .map(|vs| Facet::new(vs).expect("subset of a facet"))
            })
        })
        .collect();

    let mut moves = Vec::new();
    for a in faces {
        let link: BTreeSet<Facet> = c
            .facets()
            .iter()
            .filter(|f| a.is_subset_of(f))
            .map(|f| a.vertices().iter().fold(f.clone(), |acc, &x| acc.without(x)))
            .collect();
        let link_vertices: BTreeSet<VertexId> = link.iter().flat_map(|l| l.vertices().iter().copied()).collect();
        let b_size = d + 2 - a.len();
        if mode == FlipMode::Strict && link.len() != b_size {
            continue;
        }
        for b in link_vertices.iter().copied().combinations(b_size) {
            let b = Facet::new(b).expect("distinct link vertices");
            let boundary_in_link = b.vertices().iter().all(|&x| link.contains(&b.without(x)));
            if boundary_in_link && !c.has_face(&b) {
                moves.push(FlipMove::new(a.clone(), b, mode));
            }
        }
    }
    moves.sort_by(|x, y| (&x.a_face, &x.b_simplex).cmp(&(&y.a_face, &y.b_simplex)));
    Ok(moves)
}

/// `c` together with every facet some admissible move would introduce.
pub fn square(c: &PureComplex, mode: FlipMode) -> Result<PureComplex> {
    let added: BTreeSet<Facet> = enumerate_flips(c, mode)?
        .into_iter()
        .flat_map(|m| m.introduced)
        .filter(|f| !c.contains_facet(f))
        .collect();
    c.with_added(added)
}
