//! Generators for the five counterexample families and the literal complexes.

use crate::complex::{join, skeleton, vertex_ids, window, Facet, PureComplex, VertexId, WindowSpec};
use crate::error::{Error, Result};

fn need_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameters(format!(
            "dimension must be at least 2, got {d}"
        )));
    }
    Ok(())
}

/// The cone over the `(d-1)`-skeleton of the `2d`-simplex on `1..=2d+1`,
/// with apex `2d+2`.
pub fn dirac_complex(d: usize) -> Result<PureComplex> {
    need_d(d)?;
    let apex = VertexId::new(2 * d as u32 + 2)?;
    join(&PureComplex::points(&[apex])?, &skeleton(d - 1, 2 * d + 1)?)
}

/// The `(d-1)`-simplex on `1..=d` joined with the three apices
/// `d+1, d+2, d+3`.
pub fn triple_apex(d: usize) -> Result<PureComplex> {
    need_d(d)?;
    let d32 = d as u32;
    let base: Vec<u32> = (1..=d32).collect();
    let apices = PureComplex::points(&vertex_ids(&[d32 + 1, d32 + 2, d32 + 3])?)?;
    join(&apices, &PureComplex::from_lists([base])?)
}

/// The self-complementary 2-complex on six vertices, in reference order.
pub fn complex_s() -> PureComplex {
    PureComplex::from_lists([
        [1, 3, 5],
        [2, 3, 4],
        [1, 2, 4],
        [1, 3, 6],
        [1, 2, 5],
        [2, 3, 5],
        [1, 4, 5],
        [1, 2, 3],
        [1, 2, 6],
        [1, 3, 4],
    ])
    .expect("valid literal")
}

/// The reference complement of [`complex_s`].
pub fn complex_s_complement() -> PureComplex {
    PureComplex::from_lists([
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 4, 6],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6],
        [3, 5, 6],
        [4, 5, 6],
    ])
    .expect("valid literal")
}

/// The reference isomorphism from [`complex_s`] to its complement.
pub const S_TO_COMPLEMENT: [(u32, u32); 6] = [(1, 6), (2, 5), (3, 4), (4, 2), (5, 3), (6, 1)];

/// Facets of the 2-strongly-connected 2-complex on 13 vertices, in reference order.
pub const K_FACETS: [[u32; 3]; 23] = [
    [2, 4, 12],
    [1, 2, 4],
    [1, 2, 12],
    [1, 4, 12],
    [2, 4, 13],
    [2, 3, 13],
    [3, 12, 13],
    [2, 3, 12],
    [4, 5, 9],
    [4, 9, 13],
    [9, 10, 13],
    [10, 12, 13],
    [10, 11, 12],
    [4, 11, 12],
    [4, 5, 11],
    [5, 6, 9],
    [6, 7, 9],
    [7, 8, 10],
    [7, 8, 11],
    [5, 6, 7],
    [5, 7, 11],
    [7, 9, 10],
    [8, 10, 11],
];

pub fn complex_k() -> PureComplex {
    PureComplex::from_lists(K_FACETS).expect("valid literal")
}

/// The Hamiltonian `d`-complex on `n = d + 12` vertices whose dual graph is
/// 2-connected but not Hamiltonian: the `n` cyclic windows `H_1..H_n` plus
/// four pendant-ish facets `F_1..F_4`. Facets are named accordingly.
pub fn cycle_family(d: usize) -> Result<PureComplex> {
    need_d(d)?;
    let n = d + 12;
    let mut facets = Vec::with_capacity(n + 4);
    let mut names = Vec::with_capacity(n + 4);
    for start in 1..=n {
        let labels: Vec<u32> = window(WindowSpec {
            n,
            d,
            start,
            cyclic: true,
        })?
        .into_iter()
        .map(|l| l as u32)
        .collect();
        facets.push(Facet::from_labels(&labels)?);
        names.push(format!("H_{start}"));
    }
    let run = |from: usize, to: usize| (from as u32..=to as u32).collect::<Vec<u32>>();
    let extra: [Vec<u32>; 4] = [
        [vec![1, 5], run(7, d + 5)].concat(),
        [vec![1], run(7, d + 5), vec![d as u32 + 7]].concat(),
        [vec![2, 8], run(10, d + 8)].concat(),
        [vec![2], run(10, d + 8), vec![d as u32 + 10]].concat(),
    ];
    for (i, labels) in extra.iter().enumerate() {
        facets.push(Facet::from_labels(labels)?);
        names.push(format!("F_{}", i + 1));
    }
    Ok(PureComplex::from_facets(facets, None)?.with_names(names))
}
