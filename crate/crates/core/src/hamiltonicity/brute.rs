//! Exhaustive oracle: every labeling, every subset of facet windows.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::{precheck, Absence, ChainPolicy, HamKind, HamOutcome, HamShape, WindowChain};
use crate::complex::{Facet, PureComplex};
use crate::error::{Error, Result};

pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Same contract as [`super::find_hamiltonian`], by complete enumeration of
/// the `n!` labelings and, for each, all subsets of the windows that are
/// facets. Only for `n <= 8`.
pub fn find_hamiltonian_bruteforce(
    c: &PureComplex,
    kind: HamKind,
    shape: HamShape,
    policy: ChainPolicy,
) -> Result<HamOutcome> {
    if let Some(settled) = precheck(c, kind, shape)? {
        return Ok(settled);
    }
    let n = c.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let d = c.dim();
    let cyclic = shape.is_cycle();
    let admissible: Vec<usize> = if cyclic {
        (1..=n).collect()
    } else {
        (1..=n - d).collect()
    };

    for labeling in c.universe().iter().copied().permutations(n) {
        let window_labels = |s: usize| -> BTreeSet<usize> { (0..=d).map(|k| (s - 1 + k) % n + 1).collect() };
        let is_facet = |s: usize| {
            let vs = window_labels(s).into_iter().map(|l| labeling[l - 1]);
            c.contains_facet(&Facet::new(vs).expect("labeling is a bijection"))
        };
        let present: Vec<usize> = admissible.iter().copied().filter(|&s| is_facet(s)).collect();
        for bits in 1u32..(1 << present.len()) {
            let starts: Vec<usize> = (0..present.len())
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| present[i])
                .collect();
            if satisfies(&starts, n, d, kind, shape, policy, &admissible, &window_labels) {
                return Ok(HamOutcome::Found(WindowChain {
                    labeling: labeling.clone(),
                    starts,
                    kind,
                    shape,
                    policy,
                }));
            }
        }
    }
    Ok(HamOutcome::Absent(Absence::Exhausted))
}

/// The chain clauses, restated over label sets.
#[allow(clippy::too_many_arguments)]
fn satisfies(
    starts: &[usize],
    n: usize,
    d: usize,
    kind: HamKind,
    shape: HamShape,
    policy: ChainPolicy,
    admissible: &[usize],
    window_labels: &dyn Fn(usize) -> BTreeSet<usize>,
) -> bool {
    let covered: BTreeSet<usize> = starts.iter().flat_map(|&s| window_labels(s)).collect();
    if covered.len() != n {
        return false;
    }
    if shape == HamShape::Cycle && starts.len() < 3 {
        return false;
    }
    if shape == HamShape::Path && (starts.first() != Some(&1) || starts.last() != Some(&(n - d))) {
        return false;
    }
    let mut consecutive: Vec<(usize, usize)> = starts.iter().copied().tuple_windows().collect();
    if shape == HamShape::Cycle {
        consecutive.push((*starts.last().unwrap(), starts[0]));
    }
    match kind {
        HamKind::Tight => starts == admissible,
        HamKind::Loose => consecutive.iter().all(|&(a, b)| {
            let gap = if b > a { b - a } else { b + n - a };
            gap == d
        }),
        HamKind::Weak => match policy {
            ChainPolicy::CoverageOnly => true,
            ChainPolicy::SortedAdjacent => consecutive
                .iter()
                .all(|&(a, b)| !window_labels(a).is_disjoint(&window_labels(b))),
        },
    }
}
