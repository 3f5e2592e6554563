//! Tight, loose and weak Hamiltonian paths and cycles of pure complexes.
//!
//! A certificate is a [`WindowChain`]: a labeling of the vertices by
//! `1..=n` together with a set of window starts. The window at start `i` is
//! the vertex set with labels `i, i+1, ..., i+d`; for cycles the labels wrap
//! modulo `n`, for paths windows never wrap. A chain is valid when
//!
//! * every chosen window is a facet,
//! * the chosen windows cover every label,
//! * paths start at window `1` and end at window `n-d`,
//! * tight chains use every window,
//! * loose chains step by exactly `d` between consecutive starts (cyclically
//!   for cycles),
//! * weak chains (under [`ChainPolicy::SortedAdjacent`]) have consecutive
//!   windows, in start order, sharing at least one vertex.
//!
//! [`verify_chain`] checks these clauses directly. [`find_hamiltonian`] is
//! an exact pruned search and [`find_hamiltonian_bruteforce`] an exhaustive
//! oracle for small instances.

mod brute;
mod search;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::complex::{PureComplex, VertexId};
use crate::error::{Error, Result};

pub use brute::{find_hamiltonian_bruteforce, BRUTE_FORCE_LIMIT};
pub use search::{find_hamiltonian, find_hamiltonian_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HamKind {
    Tight,
    Loose,
    Weak,
}

impl HamKind {
    pub const ALL: [HamKind; 3] = [HamKind::Tight, HamKind::Loose, HamKind::Weak];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HamShape {
    Path,
    Cycle,
}

impl HamShape {
    pub const ALL: [HamShape; 2] = [HamShape::Path, HamShape::Cycle];

    pub fn is_cycle(self) -> bool {
        self == HamShape::Cycle
    }
}

/// What weak chains require beyond facet membership and coverage.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainPolicy {
    /// Consecutive windows in start order must intersect.
    #[default]
    SortedAdjacent,
    /// Facet membership and coverage only.
    CoverageOnly,
}

impl ChainPolicy {
    pub const ALL: [ChainPolicy; 2] = [ChainPolicy::SortedAdjacent, ChainPolicy::CoverageOnly];
}

macro_rules! keyword_enum {
    ($ty:ty, $what:literal, $($variant:path => $text:literal $(| $alias:literal)*),+ $(,)?) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $($variant => $text),+ }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $ty {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($text $(| $alias)* => Ok($variant),)+
                    _ => Err(format!(concat!("unknown ", $what, " {:?}"), s)),
                }
            }
        }
    };
}

keyword_enum!(HamKind, "kind", HamKind::Tight => "tight", HamKind::Loose => "loose", HamKind::Weak => "weak");
keyword_enum!(HamShape, "shape", HamShape::Path => "path", HamShape::Cycle => "cycle");
keyword_enum!(ChainPolicy, "chain policy",
    ChainPolicy::SortedAdjacent => "sorted-adjacent" | "sorted",
    ChainPolicy::CoverageOnly => "coverage-only");

/// A Hamiltonicity certificate.
///
/// `labeling[i]` is the vertex carrying label `i + 1`; `starts` are 1-based
/// window starts in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowChain {
    pub labeling: Vec<VertexId>,
    pub starts: Vec<usize>,
    pub kind: HamKind,
    pub shape: HamShape,
    pub policy: ChainPolicy,
}

impl WindowChain {
    /// Vertices of the window starting at label `start` (1-based).
    pub fn window(&self, d: usize, start: usize) -> Vec<VertexId> {
        let n = self.labeling.len();
        (0..=d).map(|k| self.labeling[(start - 1 + k) % n]).collect()
    }
}

/// Renders the three-line certificate format.
impl fmt::Display for WindowChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(" ");
        writeln!(
            f,
            "labeling: {}",
            join(self.labeling.iter().map(|v| v.to_string()).collect())
        )?;
        writeln!(
            f,
            "starts: {}",
            join(self.starts.iter().map(|s| s.to_string()).collect())
        )?;
        writeln!(f, "kind: {} shape: {} policy: {}", self.kind, self.shape, self.policy)
    }
}

impl FromStr for WindowChain {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut lines = s.lines();
        let mut field = |key: &str| -> std::result::Result<String, String> {
            let line = lines.next().ok_or_else(|| format!("missing {key} line"))?;
            line.strip_prefix(key)
                .map(|rest| rest.trim().to_string())
                .ok_or_else(|| format!("expected {key:?}, found {line:?}"))
        };
        let labeling = field("labeling:")?
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| e.to_string())
                    .and_then(|v| VertexId::new(v).map_err(|e| e.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let starts = field("starts:")?
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| e.to_string()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let meta = field("kind:")?;
        let tokens: Vec<&str> = meta.split_whitespace().collect();
        match tokens.as_slice() {
            [kind, "shape:", shape, "policy:", policy] => Ok(WindowChain {
                labeling,
                starts,
                kind: kind.parse()?,
                shape: shape.parse()?,
                policy: policy.parse()?,
            }),
            _ => Err(format!("malformed kind line {meta:?}")),
        }
    }
}

/// Fewest windows a cycle may use. Two windows would be each other's
/// successor, which for `d = 1` turns a two-edge path into a "cycle".
pub const MIN_CYCLE_WINDOWS: usize = 3;

/// Why a search reported no certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Absence {
    /// The whole search space was exhausted.
    Exhausted,
    /// A loose chain cannot exist for this `n` and `d`.
    Divisibility,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamOutcome {
    Found(WindowChain),
    Absent(Absence),
}

impl HamOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, HamOutcome::Found(_))
    }

    pub fn chain(&self) -> Option<&WindowChain> {
        match self {
            HamOutcome::Found(c) => Some(c),
            HamOutcome::Absent(_) => None,
        }
    }
}

/// Search knobs. `threads <= 1` runs single-threaded and deterministically.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub threads: usize,
    pub deadline: Option<Instant>,
}

/// The first clause a chain fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    StartOutOfRange(usize),
    StartsNotIncreasing,
    NoWindows,
    ShortCycle { windows: usize },
    FacetMembership { start: usize },
    Coverage { label: usize },
    PathEndpoints,
    NotTight { missing: usize },
    LooseGap { after: usize },
    WeakAdjacency { first: usize, second: usize },
}

impl Violation {
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::StartOutOfRange(_) | Violation::StartsNotIncreasing | Violation::NoWindows => "starts",
            Violation::ShortCycle { .. } => "cycle-length",
            Violation::FacetMembership { .. } => "facet-membership",
            Violation::Coverage { .. } => "coverage",
            Violation::PathEndpoints => "path-endpoints",
            Violation::NotTight { .. } => "tight",
            Violation::LooseGap { .. } => "loose-gap",
            Violation::WeakAdjacency { .. } => "weak-adjacency",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StartOutOfRange(s) => write!(f, "starts: {s} is not an admissible start"),
            Violation::StartsNotIncreasing => write!(f, "starts: not strictly increasing"),
            Violation::NoWindows => write!(f, "starts: empty"),
            Violation::ShortCycle { windows } => {
                write!(
                    f,
                    "cycle-length: {windows} windows, a cycle needs at least {MIN_CYCLE_WINDOWS}"
                )
            }
            Violation::FacetMembership { start } => write!(f, "facet-membership: window {start} is not a facet"),
            Violation::Coverage { label } => write!(f, "coverage: label {label} is not covered"),
            Violation::PathEndpoints => write!(f, "path-endpoints: path must use windows 1 and n-d"),
            Violation::NotTight { missing } => write!(f, "tight: window {missing} missing"),
            Violation::LooseGap { after } => write!(f, "loose-gap: gap after window {after} is not d"),
            Violation::WeakAdjacency { first, second } => {
                write!(f, "weak-adjacency: windows {first} and {second} are disjoint")
            }
        }
    }
}

pub type Verdict = std::result::Result<(), Violation>;

/// Checks a certificate against `c`, independently of how it was found.
///
/// The outer error is for malformed input (the labeling is not a bijection
/// onto the universe); the inner verdict names the first failed clause.
pub fn verify_chain(c: &PureComplex, chain: &WindowChain, policy: ChainPolicy) -> Result<Verdict> {
    if c.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    let n = c.n();
    let d = c.dim();
    let mut seen = chain.labeling.clone();
    seen.sort_unstable();
    seen.dedup();
    if chain.labeling.len() != n || seen.len() != n || seen.as_slice() != c.universe() {
        return Err(Error::LabelingNotBijective);
    }
    let cyclic = chain.shape.is_cycle();
    let last_start = if cyclic { n } else { n.saturating_sub(d) };
    let starts = &chain.starts;
    if starts.is_empty() {
        return Ok(Err(Violation::NoWindows));
    }
    if let Some(&s) = starts.iter().find(|&&s| s < 1 || s > last_start) {
        return Ok(Err(Violation::StartOutOfRange(s)));
    }
    if starts.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(Err(Violation::StartsNotIncreasing));
    }
    if chain.shape.is_cycle() && starts.len() < MIN_CYCLE_WINDOWS {
        return Ok(Err(Violation::ShortCycle { windows: starts.len() }));
    }

    let windows: Vec<crate::complex::Facet> = starts
        .iter()
        .map(|&s| crate::complex::Facet::new(chain.window(d, s)))
        .collect::<Result<_>>()?;
    for (&s, w) in starts.iter().zip(&windows) {
        if !c.contains_facet(w) {
            return Ok(Err(Violation::FacetMembership { start: s }));
        }
    }

    let mut covered = vec![false; n + 1];
    for &s in starts {
        for k in 0..=d {
            covered[(s - 1 + k) % n + 1] = true;
        }
    }
    if let Some(label) = (1..=n).find(|&l| !covered[l]) {
        return Ok(Err(Violation::Coverage { label }));
    }

    if !cyclic && (starts[0] != 1 || *starts.last().unwrap() != n - d) {
        return Ok(Err(Violation::PathEndpoints));
    }

    // consecutive pairs in start order, closing the loop for cycles
    let mut pairs: Vec<(usize, usize)> = (0..starts.len() - 1).map(|i| (i, i + 1)).collect();
    if cyclic {
        pairs.push((starts.len() - 1, 0));
    }

    match chain.kind {
        HamKind::Tight => {
            if let Some(missing) = (1..=last_start).find(|s| starts.binary_search(s).is_err()) {
                return Ok(Err(Violation::NotTight { missing }));
            }
        }
        HamKind::Loose => {
            for &(i, j) in &pairs {
                let gap = (starts[j] + n - starts[i]) % n;
                let gap = if gap == 0 { n } else { gap };
                if gap != d {
                    return Ok(Err(Violation::LooseGap { after: starts[i] }));
                }
            }
        }
        HamKind::Weak => {
            if policy == ChainPolicy::SortedAdjacent {
                for &(i, j) in &pairs {
                    if windows[i].intersection_len(&windows[j]) == 0 {
                        return Ok(Err(Violation::WeakAdjacency {
                            first: starts[i],
                            second: starts[j],
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Preconditions shared by the search and the oracle. Returns `Some` when
/// the answer is settled without searching.
pub(crate) fn precheck(c: &PureComplex, kind: HamKind, shape: HamShape) -> Result<Option<HamOutcome>> {
    if c.is_degenerate() {
        return Err(Error::DegenerateComplex);
    }
    let (n, d) = (c.n(), c.dim());
    if d < 1 {
        return Err(Error::InvalidParameters(
            "Hamiltonicity needs dimension at least 1".into(),
        ));
    }
    if n < d + 2 {
        return Err(Error::TooFewVertices { n, needed: d + 2 });
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    if kind == HamKind::Loose {
        let divisible = match shape {
            HamShape::Cycle => n % d == 0,
            HamShape::Path => (n - 1) % d == 0,
        };
        if !divisible {
            return Ok(Some(HamOutcome::Absent(Absence::Divisibility)));
        }
    }
    Ok(None)
}
