//! Pure simplicial complexes given by their facets.
//!
//! Vertices carry positive labels. Every facet of a [`PureComplex`] has the
//! same number of vertices, facets are never repeated, and every facet vertex
//! belongs to the complex's vertex universe. Complexes are immutable once
//! built; every combinator returns a fresh value.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A positive vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(value: u32) -> Result<Self> {
        if value == 0 {
            return Err(Error::ZeroVertex);
        }
        Ok(VertexId(value))
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    /// Bit for this label in a 64-bit label mask, if the label fits.
    fn bit(self) -> Option<u64> {
        (self.0 <= 64).then(|| 1u64 << (self.0 - 1))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses a list of raw labels into vertex ids.
pub fn vertex_ids(labels: &[u32]) -> Result<Vec<VertexId>> {
    labels.iter().map(|&v| VertexId::new(v)).collect()
}

/// A facet: a sorted set of distinct vertices.
///
/// When every label is at most 64 the facet also keeps a label bitmask, used
/// as a fast path for intersections and subset tests.
#[derive(Clone, Debug)]
pub struct Facet {
    vertices: Vec<VertexId>,
    mask: Option<u64>,
}

impl Facet {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        if let Some((a, _)) = vertices.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::RepeatedVertex(*a));
        }
        Ok(Self::from_sorted(vertices))
    }

    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        Facet::new(vertex_ids(labels)?)
    }

    fn from_sorted(vertices: Vec<VertexId>) -> Self {
        let mask = vertices.iter().try_fold(0u64, |acc, v| v.bit().map(|b| acc | b));
        Facet { vertices, mask }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn labels(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.get()).collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> Option<u64> {
        self.mask
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn intersection_len(&self, other: &Facet) -> usize {
        let slow = || {
            let mut count = 0;
            let (mut i, mut j) = (0, 0);
            while i < self.vertices.len() && j < other.vertices.len() {
                match self.vertices[i].cmp(&other.vertices[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            count
        };
        match (self.mask, other.mask) {
            (Some(a), Some(b)) => {
                let fast = (a & b).count_ones() as usize;
                debug_assert_eq!(fast, slow());
                fast
            }
            _ => slow(),
        }
    }

    pub fn is_subset_of(&self, other: &Facet) -> bool {
        match (self.mask, other.mask) {
            (Some(a), Some(b)) => a & !b == 0,
            _ => self.vertices.iter().all(|v| other.contains(*v)),
        }
    }

    /// The facet with `v` removed.
    pub fn without(&self, v: VertexId) -> Facet {
        Facet::from_sorted(self.vertices.iter().copied().filter(|&u| u != v).collect())
    }

    pub fn union(&self, other: &Facet) -> Facet {
        let merged: BTreeSet<VertexId> = self.vertices.iter().chain(&other.vertices).copied().collect();
        Facet::from_sorted(merged.into_iter().collect())
    }
}

impl PartialEq for Facet {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Facet {}

impl std::hash::Hash for Facet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
    }
}

impl PartialOrd for Facet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Facet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vertices.iter().join(","))
    }
}

/// A pure `dim`-dimensional simplicial complex.
///
/// A complex with no facets is *degenerate*. Only [`complement`] and
/// [`delete_vertex`] can produce one; analyses reject it.
///
/// Facets keep their construction order, and may carry display names (the
/// constructed families use names like `H_5` or `F_1`). Equality ignores both.
#[derive(Clone, Debug)]
pub struct PureComplex {
    dim: usize,
    universe: Vec<VertexId>,
    facets: Vec<Facet>,
    names: Vec<Option<String>>,
    index: HashMap<Facet, usize>,
}

impl PureComplex {
    /// Validates a facet family. Duplicates are an error, not silently merged.
    pub fn from_facets(facets: Vec<Facet>, universe: Option<Vec<VertexId>>) -> Result<Self> {
        let first = facets.first().ok_or(Error::EmptyFamily)?;
        let size = first.len();
        if size < 2 {
            return Err(Error::DimensionTooSmall(size));
        }
        Self::build(size - 1, facets, universe)
    }

    /// Convenience constructor from raw label lists.
    pub fn from_lists<I, F>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[u32]>,
    {
        let facets = lists
            .into_iter()
            .map(|l| Facet::from_labels(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(facets, None)
    }

    /// A 0-dimensional complex: a set of isolated points. Only useful as a
    /// join operand.
    pub fn points(vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let facets = vertices.iter().map(|&v| Facet::from_sorted(vec![v])).collect();
        Self::build(0, facets, None)
    }

    fn build(dim: usize, facets: Vec<Facet>, universe: Option<Vec<VertexId>>) -> Result<Self> {
        let mut index = HashMap::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            if f.len() != dim + 1 {
                return Err(Error::NonUniformCardinality {
                    expected: dim + 1,
                    found: f.len(),
                });
            }
            if index.insert(f.clone(), i).is_some() {
                return Err(Error::DuplicateFacet(f.vertices.clone()));
            }
        }
        let support: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        let universe = match universe {
            None => support.into_iter().collect(),
            Some(u) => {
                let u: BTreeSet<VertexId> = u.into_iter().collect();
                if let Some(v) = support.iter().find(|v| !u.contains(v)) {
                    return Err(Error::VertexOutsideUniverse(*v));
                }
                u.into_iter().collect()
            }
        };
        let names = vec![None; facets.len()];
        Ok(PureComplex {
            dim,
            universe,
            facets,
            names,
            index,
        })
    }

    /// Degenerate-capable constructor for internal combinators.
    fn from_parts(dim: usize, universe: Vec<VertexId>, facets: Vec<Facet>, names: Vec<Option<String>>) -> Self {
        debug_assert!(facets.iter().all(|f| f.len() == dim + 1));
        debug_assert_eq!(facets.len(), names.len());
        let index = facets.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        PureComplex {
            dim,
            universe,
            facets,
            names,
            index,
        }
    }

    /// Attaches display names to facets, in facet order.
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<Option<String>> = names.into_iter().map(|s| Some(s.into())).collect();
        assert_eq!(names.len(), self.facets.len(), "one name per facet");
        self.names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices in the universe.
    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn universe(&self) -> &[VertexId] {
        &self.universe
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_name(&self, i: usize) -> Option<&str> {
        self.names.get(i).and_then(|n| n.as_deref())
    }

    /// Index of a facet in construction order.
    pub fn facet_index(&self, f: &Facet) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Index of the facet with the given name.
    pub fn named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n.as_deref() == Some(name))
    }

    pub fn is_degenerate(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_facet(&self, f: &Facet) -> bool {
        self.index.contains_key(f)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.universe.binary_search(&v).is_ok()
    }

    /// Whether some facet contains every vertex of `face`.
    pub fn has_face(&self, face: &Facet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// Number of facets containing `v`.
    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }

    /// True when the universe is exactly `{1..n}`.
    pub fn is_canonical_universe(&self) -> bool {
        self.universe.iter().enumerate().all(|(i, v)| v.get() as usize == i + 1)
    }

    /// Facets in lexicographic order.
    pub fn sorted_facets(&self) -> Vec<&Facet> {
        let mut out: Vec<&Facet> = self.facets.iter().collect();
        out.sort();
        out
    }

    /// Applies an injective relabeling to the whole complex, names included.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        let universe: Vec<VertexId> = self.universe.iter().map(|&v| map(v)).collect();
        let distinct: BTreeSet<VertexId> = universe.iter().copied().collect();
        if distinct.len() != universe.len() {
            return Err(Error::InvalidParameters("relabeling is not injective".into()));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| Facet::new(f.vertices.iter().map(|&v| map(v))))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::build(self.dim, facets, Some(universe))?;
        out.names = self.names.clone();
        Ok(out)
    }

    /// Adds facets (which must have the right size), keeping the universe.
    pub fn with_added(&self, extra: impl IntoIterator<Item = Facet>) -> Result<Self> {
        let mut facets = self.facets.clone();
        let mut names = self.names.clone();
        for f in extra {
            if !self.contains_facet(&f) && !facets[self.facets.len()..].contains(&f) {
                facets.push(f);
                names.push(None);
            }
        }
        let mut universe: BTreeSet<VertexId> = self.universe.iter().copied().collect();
        universe.extend(facets.iter().flat_map(|f| f.vertices.iter().copied()));
        let mut out = Self::build(self.dim, facets, Some(universe.into_iter().collect()))?;
        out.names = names;
        Ok(out)
    }

    /// The complex without the facets for which `drop` is true. The universe
    /// shrinks to the surviving support.
    pub fn without_facets(&self, drop: impl Fn(&Facet) -> bool) -> Self {
        let (facets, names): (Vec<Facet>, Vec<Option<String>>) = self
            .facets
            .iter()
            .zip(&self.names)
            .filter(|(f, _)| !drop(f))
            .map(|(f, n)| (f.clone(), n.clone()))
            .unzip();
        let universe: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        Self::from_parts(self.dim, universe.into_iter().collect(), facets, names)
    }
}

impl PartialEq for PureComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.universe == other.universe
            && self.facets.len() == other.facets.len()
            && self.facets.iter().all(|f| other.contains_facet(f))
    }
}

impl Eq for PureComplex {}

impl fmt::Display for PureComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sorted_facets().iter().join(" "))
    }
}

fn canonical_universe(n: usize) -> Vec<VertexId> {
    (1..=n as u32).map(VertexId).collect()
}

/// All `(d+1)`-subsets of `{1..n}`: the `d`-skeleton of the `(n-1)`-simplex.
pub fn skeleton(d: usize, n: usize) -> Result<PureComplex> {
    if d < 1 || n < d + 1 {
        return Err(Error::InvalidParameters(format!(
            "skeleton needs 1 <= d < n, got d={d}, n={n}"
        )));
    }
    if n > u32::MAX as usize {
        return Err(Error::InvalidParameters("n too large".into()));
    }
    let facets = canonical_universe(n)
        .into_iter()
        .combinations(d + 1)
        .map(Facet::from_sorted)
        .collect();
    PureComplex::from_facets(facets, None)
}

/// The join: every union of a facet of `a` with a facet of `b`.
///
/// The universes must already be disjoint; relabel one side first if needed.
pub fn join(a: &PureComplex, b: &PureComplex) -> Result<PureComplex> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    if let Some(v) = a.universe.iter().find(|v| b.contains_vertex(**v)) {
        return Err(Error::OverlappingUniverses(*v));
    }
    let facets = a
        .facets
        .iter()
        .cartesian_product(&b.facets)
        .map(|(fa, fb)| fa.union(fb))
        .collect();
    let universe = a.universe.iter().chain(&b.universe).copied().collect();
    PureComplex::build(a.dim + b.dim + 1, facets, Some(universe))
}

/// The facets of `skeleton(d, n)` missing from `c`. May be degenerate.
pub fn complement(c: &PureComplex) -> Result<PureComplex> {
    if !c.is_canonical_universe() {
        return Err(Error::UniverseNotCanonical);
    }
    let n = c.n();
    let facets: Vec<Facet> = canonical_universe(n)
        .into_iter()
        .combinations(c.dim + 1)
        .map(Facet::from_sorted)
        .filter(|f| !c.contains_facet(f))
        .collect();
    let names = vec![None; facets.len()];
    Ok(PureComplex::from_parts(c.dim, canonical_universe(n), facets, names))
}

/// Removes every facet containing `v`. May be degenerate.
pub fn delete_vertex(c: &PureComplex, v: VertexId) -> Result<PureComplex> {
    if !c.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    Ok(c.without_facets(|f| f.contains(v)))
}

/// Parameters of a window face `{start, start+1, ..., start+d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowSpec {
    pub n: usize,
    pub d: usize,
    pub start: usize,
    pub cyclic: bool,
}

/// Labels of a window, in window order. Cyclic windows wrap modulo `n` into
/// `1..=n`; path windows must fit without wrapping.
pub fn window(spec: WindowSpec) -> Result<Vec<usize>> {
    let WindowSpec { n, d, start, cyclic } = spec;
    let last = if cyclic { n } else { n.saturating_sub(d) };
    if d + 1 > n || start < 1 || start > last {
        return Err(Error::StartOutOfRange { n, d, start });
    }
    Ok((0..=d).map(|k| (start - 1 + k) % n + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lists: &[&[u32]]) -> PureComplex {
        PureComplex::from_lists(lists.iter().copied()).unwrap()
    }

    fn v(x: u32) -> VertexId {
        VertexId::new(x).unwrap()
    }

    #[test]
    fn builds_from_facets() {
        let k = c(&[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.universe(), vertex_ids(&[1, 2, 3, 4]).unwrap().as_slice());
        assert!(!k.is_degenerate());
    }

    #[test]
    fn rejects_bad_families() {
        assert_eq!(
            PureComplex::from_lists([&[1u32, 2][..], &[3, 4, 5]]).unwrap_err(),
            Error::NonUniformCardinality { expected: 2, found: 3 }
        );
        assert!(matches!(
            PureComplex::from_lists([[1u32, 2, 3], [3, 2, 1]]),
            Err(Error::DuplicateFacet(_))
        ));
        assert_eq!(
            PureComplex::from_lists(Vec::<Vec<u32>>::new()).unwrap_err(),
            Error::EmptyFamily
        );
        assert_eq!(
            PureComplex::from_lists([[1u32]]).unwrap_err(),
            Error::DimensionTooSmall(1)
        );
        assert_eq!(
            PureComplex::from_lists([[1u32, 1]]).unwrap_err(),
            Error::RepeatedVertex(v(1))
        );
        assert_eq!(PureComplex::from_lists([[0u32, 1]]).unwrap_err(), Error::ZeroVertex);
        let f = vec![Facet::from_labels(&[1, 2]).unwrap()];
        assert_eq!(
            PureComplex::from_facets(f, Some(vertex_ids(&[1, 3]).unwrap())).unwrap_err(),
            Error::VertexOutsideUniverse(v(2))
        );
    }

    #[test]
    fn explicit_universe_may_exceed_support() {
        let f = vec![Facet::from_labels(&[1, 2]).unwrap()];
        let k = PureComplex::from_facets(f, Some(vertex_ids(&[1, 2, 3]).unwrap())).unwrap();
        assert_eq!(k.n(), 3);
    }

    #[test]
    fn skeleton_counts() {
        let t = skeleton(1, 3).unwrap();
        assert_eq!(t, c(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(skeleton(2, 4).unwrap().facet_count(), 4);
        assert_eq!(skeleton(2, 6).unwrap().facet_count(), 20);
        assert!(matches!(skeleton(3, 3), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn skeleton_binomials() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 2..=12 {
            for d in 1..n {
                assert_eq!(skeleton(d, n).unwrap().facet_count(), binom(n, d + 1), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn join_examples() {
        let apex = PureComplex::points(&[v(6)]).unwrap();
        let d2 = join(&apex, &skeleton(1, 5).unwrap()).unwrap();
        assert_eq!(d2.dim(), 2);
        assert_eq!(d2.facet_count(), 10);
        assert!(d2.facets().iter().all(|f| f.contains(v(6))));

        let apices = PureComplex::points(&vertex_ids(&[3, 4, 5]).unwrap()).unwrap();
        let edge = c(&[&[1, 2]]);
        assert_eq!(join(&apices, &edge).unwrap(), c(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]));

        let p = PureComplex::points(&[v(1)]).unwrap();
        let q = PureComplex::points(&[v(2)]).unwrap();
        assert_eq!(join(&p, &q).unwrap(), c(&[&[1, 2]]));
        assert_eq!(join(&p, &p).unwrap_err(), Error::OverlappingUniverses(v(1)));
    }

    #[test]
    fn complement_examples() {
        let full = skeleton(2, 6).unwrap();
        let empty = complement(&full).unwrap();
        assert!(empty.is_degenerate());
        assert_eq!(empty.n(), 6);
        assert_eq!(complement(&empty).unwrap(), full);
        assert_eq!(complement(&c(&[&[2, 3]])).unwrap_err(), Error::UniverseNotCanonical);
    }

    #[test]
    fn delete_vertex_examples() {
        let k = c(&[&[1, 2, 3]]);
        assert!(delete_vertex(&k, v(3)).unwrap().is_degenerate());
        assert_eq!(delete_vertex(&k, v(9)).unwrap_err(), Error::UnknownVertex(v(9)));
        let strip = c(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        let cut = delete_vertex(&strip, v(1)).unwrap();
        assert_eq!(cut, c(&[&[2, 3, 4], &[3, 4, 5]]));
        assert_eq!(cut.universe(), vertex_ids(&[2, 3, 4, 5]).unwrap().as_slice());
    }

    #[test]
    fn windows() {
        let w = |n, d, start, cyclic| window(WindowSpec { n, d, start, cyclic });
        assert_eq!(w(5, 2, 5, true).unwrap(), vec![5, 1, 2]);
        assert_eq!(w(6, 2, 4, false).unwrap(), vec![4, 5, 6]);
        assert_eq!(
            w(6, 2, 5, false).unwrap_err(),
            Error::StartOutOfRange { n: 6, d: 2, start: 5 }
        );
        assert!(w(6, 2, 0, true).is_err());
        assert!(w(6, 2, 7, true).is_err());
    }

    #[test]
    fn mask_and_list_views_agree_past_64() {
        let a = Facet::from_labels(&[3, 70, 99]).unwrap();
        let b = Facet::from_labels(&[3, 99, 100]).unwrap();
        assert!(a.mask().is_none());
        assert_eq!(a.intersection_len(&b), 2);
        let k = PureComplex::from_facets(vec![a.clone(), b], None).unwrap();
        assert!(k.contains_facet(&a));
        assert!(!k.is_canonical_universe());
    }

    #[test]
    fn names_survive_relabel_and_deletion() {
        let k = c(&[&[1, 2, 3], &[2, 3, 4]]).with_names(["A", "B"]);
        assert_eq!(k.named("B"), Some(1));
        let r = k.relabel(|x| VertexId::new(x.get() + 10).unwrap()).unwrap();
        assert_eq!(r.facet_name(0), Some("A"));
        let cut = delete_vertex(&k, v(1)).unwrap();
        assert_eq!(cut.facet_name(0), Some("B"));
    }
}
