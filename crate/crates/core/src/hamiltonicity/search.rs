//! Pruned backtracking over vertex labelings.
//!
//! Labels `1, 2, ..., n` are handed out in order. As soon as labels
//! `i..=i+d` are placed, the window at start `i` is known to be a facet or
//! not, and the kind-specific constraints are checked on the decided prefix:
//! tight chains need every window, loose chains need one residue class of
//! starts modulo `d`, and weak chains cannot leave a run of consecutive
//! missing windows longer than coverage (or adjacency) allows.
//!
//! For a fixed labeling, a weak chain exists iff the set of *all* windows
//! that are facets is itself a valid chain: adding windows to a valid chain
//! only shrinks gaps between consecutive starts. So the search only decides
//! window availability and never branches on start subsets.
//!
//! Symmetry: cycles are invariant under rotating and reflecting the labels,
//! so label 1 goes to the first vertex and the vertex with label 2 must be
//! smaller than the vertex with label n. Paths are invariant under
//! `i -> n+1-i`, so the vertex with label 1 must be smaller than the one
//! with label n.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{
    precheck, Absence, ChainPolicy, HamKind, HamOutcome, HamShape, SearchOptions, WindowChain, MIN_CYCLE_WINDOWS,
};
use crate::complex::PureComplex;
use crate::error::{Error, Result};

/// Deterministic single-threaded search.
pub fn find_hamiltonian(c: &PureComplex, kind: HamKind, shape: HamShape, policy: ChainPolicy) -> Result<HamOutcome> {
    find_hamiltonian_with(c, kind, shape, policy, &SearchOptions::default())
}

pub fn find_hamiltonian_with(
    c: &PureComplex,
    kind: HamKind,
    shape: HamShape,
    policy: ChainPolicy,
    options: &SearchOptions,
) -> Result<HamOutcome> {
    if let Some(settled) = precheck(c, kind, shape)? {
        return Ok(settled);
    }
    let inst = Instance::new(c);
    let found = if options.threads <= 1 {
        let mut s = Search::new(&inst, kind, shape, policy, options, None);
        s.run(None)?
    } else {
        run_parallel(&inst, kind, shape, policy, options)?
    };
    Ok(match found {
        Some((order, starts)) => HamOutcome::Found(WindowChain {
            labeling: order.iter().map(|&i| c.universe()[i]).collect(),
            starts: starts.iter().map(|s| s + 1).collect(),
            kind,
            shape,
            policy,
        }),
        None => HamOutcome::Absent(Absence::Exhausted),
    })
}

/// The complex with vertices renamed to `0..n` and facets as bitmasks.
struct Instance {
    n: usize,
    d: usize,
    facets: HashSet<u64>,
    /// ridge mask -> mask of vertices completing it to a facet
    completions: HashMap<u64, u64>,
}

impl Instance {
    fn new(c: &PureComplex) -> Self {
        let universe = c.universe();
        let index = |v| universe.binary_search(&v).expect("facet vertex in universe");
        let mut facets = HashSet::new();
        let mut completions: HashMap<u64, u64> = HashMap::new();
        for f in c.facets() {
            let mask = f.vertices().iter().fold(0u64, |m, &v| m | 1 << index(v));
            facets.insert(mask);
            for &v in f.vertices() {
                let bit = 1u64 << index(v);
                *completions.entry(mask & !bit).or_default() |= bit;
            }
        }
        Instance {
            n: c.n(),
            d: c.dim(),
            facets,
            completions,
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

type Found = Option<(Vec<usize>, Vec<usize>)>;

struct Search<'a> {
    inst: &'a Instance,
    kind: HamKind,
    cyclic: bool,
    policy: ChainPolicy,
    /// weak chains: at least one window among any `run` consecutive starts
    run: usize,
    order: Vec<usize>,
    used: u64,
    avail: Vec<bool>,
    /// loose cycles: residues mod d whose windows are all facets so far
    alive: u64,
    nodes: u64,
    deadline: Option<std::time::Instant>,
    stop: Option<&'a AtomicBool>,
    found: Found,
}

impl<'a> Search<'a> {
    fn new(
        inst: &'a Instance,
        kind: HamKind,
        shape: HamShape,
        policy: ChainPolicy,
        options: &SearchOptions,
        stop: Option<&'a AtomicBool>,
    ) -> Self {
        let (n, d) = (inst.n, inst.d);
        let cyclic = shape.is_cycle();
        // Sorted windows with start gap d+1 only meet by wrapping, which needs n <= 2d+1.
        let run = match policy {
            ChainPolicy::SortedAdjacent if !cyclic || n >= 2 * d + 2 => d,
            _ => d + 1,
        };
        Search {
            inst,
            kind,
            cyclic,
            policy,
            run,
            order: Vec::with_capacity(n),
            used: 0,
            avail: vec![false; n],
            alive: if d >= 64 { u64::MAX } else { (1u64 << d) - 1 },
            nodes: 0,
            deadline: options.deadline,
            stop,
            found: None,
        }
    }

    /// Runs the search, optionally pinning the vertex at the branching
    /// position (label 2 for cycles, label 1 for paths).
    fn run(&mut self, branch: Option<usize>) -> Result<Found> {
        self.extend(0, branch)?;
        Ok(self.found.take())
    }

    fn branch_position(&self) -> usize {
        if self.cyclic {
            1
        } else {
            0
        }
    }

    fn mask_of(&self, from: usize, to: usize) -> u64 {
        self.order[from..to].iter().fold(0u64, |m, &v| m | 1 << v)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes & 0xFFF == 1 {
            if let Some(deadline) = self.deadline {
                if std::time::Instant::now() > deadline {
                    return Err(Error::Timeout);
                }
            }
        }
        Ok(())
    }

    fn cancelled(&self) -> bool {
        self.stop.is_some_and(|s| s.load(Ordering::Relaxed))
    }

    /// Places label `p + 1`. Returns true once a certificate is stored.
    fn extend(&mut self, p: usize, branch: Option<usize>) -> Result<bool> {
        self.tick()?;
        let (n, d) = (self.inst.n, self.inst.d);
        if p == n {
            return Ok(self.finish());
        }
        if self.nodes & 0xFF == 0 && self.cancelled() {
            return Ok(false);
        }
        let free = self.inst.full() & !self.used;
        let mut candidates = if self.cyclic && p == 0 { 1 } else { free };
        if p == self.branch_position() {
            if let Some(b) = branch {
                candidates &= 1 << b;
            }
        }
        // reflection: some vertex larger than the anchor must stay free for label n
        let anchor = if self.cyclic { 1 } else { 0 };
        if p > anchor && free.checked_shr(self.order[anchor] as u32 + 1).unwrap_or(0) == 0 {
            return Ok(false);
        }

        let decided = p >= d;
        let (start, completions) = if decided {
            let s = p - d;
            let ridge = self.mask_of(s, p);
            (s, self.inst.completions.get(&ridge).copied().unwrap_or(0))
        } else {
            (0, 0)
        };
        if decided && self.window_required(start) {
            candidates &= completions;
        }

        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let saved_alive = self.alive;
            if decided {
                let ok = completions >> v & 1 == 1;
                self.avail[start] = ok;
                if self.kind == HamKind::Loose && self.cyclic && !ok {
                    self.alive &= !(1u64 << (start % d));
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            let done = self.extend(p + 1, branch)?;
            self.order.pop();
            self.used &= !(1 << v);
            self.alive = saved_alive;
            if done {
                return Ok(true);
            }
        }
        if decided {
            self.avail[start] = false;
        }
        Ok(false)
    }

    /// Whether the window at `start`, about to be decided, must be a facet.
    fn window_required(&self, start: usize) -> bool {
        let (n, d) = (self.inst.n, self.inst.d);
        match self.kind {
            HamKind::Tight => true,
            HamKind::Loose if self.cyclic => self.alive & !(1u64 << (start % d)) == 0,
            HamKind::Loose => start.is_multiple_of(d),
            HamKind::Weak => {
                if !self.cyclic && (start == 0 || start == n - d - 1) {
                    return true;
                }
                start + 1 >= self.run && !self.avail[start + 1 - self.run..start].iter().any(|&a| a)
            }
        }
    }

    fn window_mask(&self, start: usize) -> u64 {
        let n = self.inst.n;
        (0..=self.inst.d).fold(0u64, |m, k| m | 1 << self.order[(start + k) % n])
    }

    fn finish(&mut self) -> bool {
        let (n, d) = (self.inst.n, self.inst.d);
        let count = if self.cyclic {
            for s in n - d..n {
                self.avail[s] = self.inst.facets.contains(&self.window_mask(s));
            }
            n
        } else {
            n - d
        };
        let avail = &self.avail[..count];
        let starts: Option<Vec<usize>> = match self.kind {
            HamKind::Tight => avail.iter().all(|&a| a).then(|| (0..count).collect()),
            HamKind::Loose => (0..d)
                .filter(|&r| self.cyclic || r == 0)
                .map(|r| (r..count).step_by(d).collect::<Vec<_>>())
                .filter(|class| !self.cyclic || class.len() >= MIN_CYCLE_WINDOWS)
                .find(|class| class.iter().all(|&s| avail[s])),
            HamKind::Weak => {
                let starts: Vec<usize> = (0..count).filter(|&s| avail[s]).collect();
                self.weak_ok(&starts).then_some(starts)
            }
        };
        match starts {
            Some(starts) => {
                self.found = Some((self.order.clone(), starts));
                true
            }
            None => false,
        }
    }

    fn weak_ok(&self, starts: &[usize]) -> bool {
        let n = self.inst.n;
        if starts.is_empty() || (self.cyclic && starts.len() < MIN_CYCLE_WINDOWS) {
            return false;
        }
        if !self.cyclic && (starts[0] != 0 || *starts.last().unwrap() != n - self.inst.d - 1) {
            return false;
        }
        let masks: Vec<u64> = starts.iter().map(|&s| self.window_mask(s)).collect();
        if masks.iter().fold(0, |a, m| a | m) != self.inst.full() {
            return false;
        }
        if self.policy == ChainPolicy::SortedAdjacent {
            if masks.windows(2).any(|w| w[0] & w[1] == 0) {
                return false;
            }
            if self.cyclic && masks[0] & masks[masks.len() - 1] == 0 {
                return false;
            }
        }
        true
    }
}

/// Splits the tree on the branching position and stops all workers once any
/// of them finds a certificate. The answer does not depend on worker count;
/// which certificate is returned may.
fn run_parallel(
    inst: &Instance,
    kind: HamKind,
    shape: HamShape,
    policy: ChainPolicy,
    options: &SearchOptions,
) -> Result<Found> {
    let n = inst.n;
    let branches: Vec<usize> = if shape.is_cycle() {
        (1..n).collect()
    } else {
        (0..n).collect()
    };
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let results: Mutex<Vec<(usize, Found)>> = Mutex::new(Vec::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..options.threads.min(branches.len()) {
            scope.spawn(|| loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&b) = branches.get(i) else { break };
                let mut s = Search::new(inst, kind, shape, policy, options, Some(&stop));
                match s.run(Some(b)) {
                    Ok(found) => {
                        if found.is_some() {
                            stop.store(true, Ordering::Relaxed);
                        }
                        results.lock().unwrap().push((i, found));
                    }
                    Err(e) => {
                        stop.store(true, Ordering::Relaxed);
                        *failure.lock().unwrap() = Some(e);
                        break;
                    }
                }
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);
    if let Some(found) = results.into_iter().find_map(|(_, f)| f) {
        return Ok(Some(found));
    }
    match failure.into_inner().unwrap() {
        Some(e) => Err(e),
        None => Ok(None),
    }
}
