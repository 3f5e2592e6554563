//! Isomorphism of pure complexes and self-complementarity.

use std::collections::BTreeMap;

use crate::complex::{complement, Facet, PureComplex, VertexId};
use crate::error::{Error, Result};

/// A vertex relabeling between two complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexBijection {
    pairs: BTreeMap<VertexId, VertexId>,
}

impl VertexBijection {
    pub fn new(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        VertexBijection {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn from_labels(pairs: &[(u32, u32)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(u, v)| Ok((VertexId::new(u)?, VertexId::new(v)?)))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn get(&self, v: VertexId) -> Option<VertexId> {
        self.pairs.get(&v).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().map(|(&u, &v)| (u, v))
    }

    /// Image of a facet, or `None` if some vertex is unmapped.
    pub fn apply(&self, f: &Facet) -> Option<Facet> {
        let image: Option<Vec<VertexId>> = f.vertices().iter().map(|&v| self.get(v)).collect();
        Facet::new(image?).ok()
    }

    /// True iff this is a bijection between the universes that carries the
    /// facets of `source` exactly onto the facets of `target`.
    pub fn verify(&self, source: &PureComplex, target: &PureComplex) -> bool {
        let domain: Vec<VertexId> = self.pairs.keys().copied().collect();
        let mut range: Vec<VertexId> = self.pairs.values().copied().collect();
        range.sort_unstable();
        range.dedup();
        domain == source.universe()
            && range == target.universe()
            && source.dim() == target.dim()
            && source.facet_count() == target.facet_count()
            && source
                .facets()
                .iter()
                .all(|f| self.apply(f).is_some_and(|g| target.contains_facet(&g)))
    }
}

/// Per-vertex data used to prune the search.
struct Profile {
    masks: Vec<u64>,
    /// together[u][v] = number of facets containing both u and v
    together: Vec<Vec<u32>>,
    /// facet degree, then the sorted (co-occurrence, neighbor degree) pairs
    invariant: Vec<(u32, Vec<(u32, u32)>)>,
}

impl Profile {
    fn new(c: &PureComplex) -> Self {
        let n = c.n();
        let idx = |v: VertexId| c.universe().binary_search(&v).unwrap();
        let masks: Vec<u64> = c
            .facets()
            .iter()
            .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | 1 << idx(v)))
            .collect();
        let mut together = vec![vec![0u32; n]; n];
        for &m in &masks {
            for u in bits(m) {
                for v in bits(m) {
                    together[u][v] += 1;
                }
            }
        }
        let invariant = (0..n)
            .map(|u| {
                let mut nbrs: Vec<(u32, u32)> = (0..n)
                    .filter(|&v| v != u && together[u][v] > 0)
                    .map(|v| (together[u][v], together[v][v]))
                    .collect();
                nbrs.sort_unstable();
                (together[u][u], nbrs)
            })
            .collect();
        Profile {
            masks,
            together,
            invariant,
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Finds a facet-preserving vertex bijection from `a` to `b`, if any.
pub fn are_isomorphic(a: &PureComplex, b: &PureComplex) -> Result<Option<VertexBijection>> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    if a.dim() != b.dim() || a.n() != b.n() || a.facet_count() != b.facet_count() {
        return Ok(None);
    }
    let n = a.n();
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let pa = Profile::new(a);
    let pb = Profile::new(b);
    let mut inv_a: Vec<_> = pa.invariant.clone();
    let mut inv_b: Vec<_> = pb.invariant.clone();
    inv_a.sort();
    inv_b.sort();
    if inv_a != inv_b {
        return Ok(None);
    }
    let target_facets: std::collections::HashSet<u64> = pb.masks.iter().copied().collect();

    // rarest invariant class first
    let class_size = |u: usize| pa.invariant.iter().filter(|x| **x == pa.invariant[u]).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (class_size(u), u));

    struct State<'a> {
        pa: &'a Profile,
        pb: &'a Profile,
        order: &'a [usize],
        target_facets: &'a std::collections::HashSet<u64>,
        image: Vec<Option<usize>>,
        used: u64,
        mapped: u64,
    }

    impl State<'_> {
        fn extend(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let u = self.order[depth];
            for v in 0..self.order.len() {
                if self.used >> v & 1 == 1 || self.pa.invariant[u] != self.pb.invariant[v] {
                    continue;
                }
                let pairs_ok = bits(self.mapped).all(|w| {
                    let wv = self.image[w].unwrap();
                    self.pa.together[u][w] == self.pb.together[v][wv]
                });
                if !pairs_ok {
                    continue;
                }
                self.image[u] = Some(v);
                self.used |= 1 << v;
                self.mapped |= 1 << u;
                let mapped = self.mapped;
                let facets_ok = self
                    .pa
                    .masks
                    .iter()
                    .filter(|&&m| m >> u & 1 == 1 && m & !mapped == 0)
                    .all(|&m| {
                        let img = bits(m).fold(0u64, |acc, w| acc | 1 << self.image[w].unwrap());
                        self.target_facets.contains(&img)
                    });
                if facets_ok && self.extend(depth + 1) {
                    return true;
                }
                self.image[u] = None;
                self.used &= !(1 << v);
                self.mapped &= !(1 << u);
            }
            false
        }
    }

    let mut state = State {
        pa: &pa,
        pb: &pb,
        order: &order,
        target_facets: &target_facets,
        image: vec![None; n],
        used: 0,
        mapped: 0,
    };
    if !state.extend(0) {
        return Ok(None);
    }
    let witness = VertexBijection::new((0..n).map(|u| {
        (
            a.universe()[u],
            b.universe()[state.image[u].expect("complete assignment")],
        )
    }));
    debug_assert!(witness.verify(a, b));
    Ok(Some(witness))
}

/// Whether `c` is isomorphic to its complement in the full skeleton.
pub fn is_self_complementary(c: &PureComplex) -> Result<bool> {
    if !c.is_canonical_universe() {
        return Err(Error::UniverseNotCanonical);
    }
    let total = binomial(c.n(), c.dim() + 1);
    if 2 * c.facet_count() != total {
        return Ok(false);
    }
    let co = complement(c)?;
    if co.is_degenerate() {
        return Ok(false);
    }
    Ok(are_isomorphic(c, &co)?.is_some())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::skeleton;

    fn c(lists: &[&[u32]]) -> PureComplex {
        PureComplex::from_lists(lists.iter().copied()).unwrap()
    }

    #[test]
    fn identity_and_relabeling() {
        let k = c(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let w = are_isomorphic(&k, &k).unwrap().unwrap();
        assert!(w.verify(&k, &k));
        let shifted = k.relabel(|v| VertexId::new(v.get() + 10).unwrap()).unwrap();
        let w = are_isomorphic(&k, &shifted).unwrap().unwrap();
        assert!(w.verify(&k, &shifted));
    }

    #[test]
    fn different_counts_are_not_isomorphic() {
        let a = c(&[&[1, 2, 3], &[2, 3, 4]]);
        let b = c(&[&[1, 2, 3]]);
        assert_eq!(are_isomorphic(&a, &b).unwrap(), None);
    }

    #[test]
    fn same_degrees_different_structure() {
        // a 6-cycle and two triangles: 2-regular both, not isomorphic
        let hex = c(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]]);
        let tris = c(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]]);
        assert_eq!(are_isomorphic(&hex, &tris).unwrap(), None);
    }

    #[test]
    fn self_complementary_basics() {
        assert!(!is_self_complementary(&skeleton(2, 6).unwrap()).unwrap());
        assert!(!is_self_complementary(&c(&[&[1, 2]])).unwrap());
        // the path 1-2-3-4 is self-complementary as a graph
        assert!(is_self_complementary(&c(&[&[1, 2], &[2, 3], &[3, 4]])).unwrap());
        assert_eq!(is_self_complementary(&c(&[&[2, 3]])), Err(Error::UniverseNotCanonical));
    }

    #[test]
    fn witness_rejects_wrong_maps() {
        let k = c(&[&[1, 2], &[2, 3]]);
        let swap = VertexBijection::from_labels(&[(1, 2), (2, 1), (3, 3)]).unwrap();
        assert!(!swap.verify(&k, &k));
        let partial = VertexBijection::from_labels(&[(1, 1), (2, 2)]).unwrap();
        assert!(!partial.verify(&k, &k));
    }
}
