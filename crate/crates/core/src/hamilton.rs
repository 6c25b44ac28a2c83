//! Exact decision procedures for Hamiltonian paths and cycles.
//!
//! Two exact engines back the public API: subset dynamic programming over
//! (vertex set, endpoint) states for orders up to [`DP_MAX_N`], and
//! depth-first backtracking with connectivity and degree pruning for larger
//! orders or when a witness is likely cheap. Both are deterministic and
//! must agree (enforced by the test suite). A naive permutation oracle,
//! independent of both engines, is available for orders up to
//! [`NAIVE_MAX_N`].
//!
//! Witness tie-breaking: the dynamic program reconstructs by always taking
//! the least admissible endpoint, then the least admissible predecessor;
//! the backtracker extends to neighbors in increasing order and keeps the
//! first witness found. Paths are output with first vertex <= last vertex;
//! cycle witnesses start at vertex 0 with the lesser neighbor second.

use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order handled by the subset dynamic program.
pub const DP_MAX_N: usize = 20;
/// Largest order accepted by the naive permutation oracle.
pub const NAIVE_MAX_N: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HamiltonError {
    #[error("naive oracle limited to n <= {max}, got n = {n}")]
    TooLargeForNaive { n: usize, max: usize },
    #[error("{{{0},{1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Path,
    Cycle,
}

/// A Hamiltonian path or cycle as an explicit vertex order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub order: Vec<u8>,
}

impl Witness {
    /// Independent validity check: all vertices exactly once, consecutive
    /// vertices adjacent, and for cycles the ends adjacent too.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.order {
            let v = v as usize;
            if v >= n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        for w in self.order.windows(2) {
            if !g.has_edge(w[0] as usize, w[1] as usize) {
                return false;
            }
        }
        match self.kind {
            WitnessKind::Path => true,
            WitnessKind::Cycle => {
                n >= 3 && g.has_edge(self.order[0] as usize, self.order[n - 1] as usize)
            }
        }
    }

    fn from_path(mut order: Vec<usize>) -> Witness {
        if order.first() > order.last() {
            order.reverse();
        }
        Witness {
            kind: WitnessKind::Path,
            order: order.into_iter().map(|v| v as u8).collect(),
        }
    }

    fn from_cycle(mut order: Vec<usize>) -> Witness {
        debug_assert_eq!(order[0], 0);
        if order.len() >= 3 && order[1] > order[order.len() - 1] {
            order[1..].reverse();
        }
        Witness {
            kind: WitnessKind::Cycle,
            order: order.into_iter().map(|v| v as u8).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

/// Hamiltonian path, if one exists. Deterministic witness.
pub fn hamiltonian_path(g: &Graph) -> Option<Witness> {
    if !g.is_connected() {
        return None;
    }
    let order = if g.n() <= DP_MAX_N {
        dp::path_any(g)
    } else {
        backtrack::path_any(g, None).found()
    }?;
    let w = Witness::from_path(order);
    assert!(w.validate(g), "internal witness validator rejected a path");
    Some(w)
}

pub fn is_traceable(g: &Graph) -> bool {
    hamiltonian_path(g).is_some()
}

/// Hamiltonian cycle, if one exists. Deterministic witness.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Witness> {
    if !cycle_prefilter(g) {
        return None;
    }
    let order = if g.n() <= DP_MAX_N {
        dp::cycle(g)
    } else {
        backtrack::cycle(g, None).found()
    }?;
    let w = Witness::from_cycle(order);
    assert!(w.validate(g), "internal witness validator rejected a cycle");
    Some(w)
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g).is_some()
}

/// Does some Hamiltonian cycle use the edge `{u,v}`? Errors if `{u,v}` is
/// not an edge. Decided by searching for a Hamiltonian u-v path: closing
/// it with the edge gives the cycle, and removing the edge from such a
/// cycle gives the path.
pub fn has_ham_cycle_through_edge(g: &Graph, u: usize, v: usize) -> Result<bool, HamiltonError> {
    if !g.has_edge(u, v) {
        return Err(HamiltonError::NotAnEdge(u, v));
    }
    if g.n() < 3 {
        return Ok(false);
    }
    Ok(decide_path_between(g, u, v))
}

/// Naive oracle: tries vertex permutations directly (abandoning a prefix
/// as soon as two consecutive vertices are non-adjacent). Independent of
/// both fast engines.
pub fn naive_traceable(g: &Graph) -> Result<bool, HamiltonError> {
    if g.n() > NAIVE_MAX_N {
        return Err(HamiltonError::TooLargeForNaive {
            n: g.n(),
            max: NAIVE_MAX_N,
        });
    }
    Ok(naive::path_exists(g))
}

/// Naive oracle for Hamiltonian cycles; permutations fixing vertex 0 first.
pub fn naive_hamiltonian(g: &Graph) -> Result<bool, HamiltonError> {
    if g.n() > NAIVE_MAX_N {
        return Err(HamiltonError::TooLargeForNaive {
            n: g.n(),
            max: NAIVE_MAX_N,
        });
    }
    if g.n() < 3 {
        return Ok(false);
    }
    Ok(naive::cycle_exists(g))
}

/// Fast boolean decision for traceability: budgeted backtracking first
/// (cheap witnesses), exact fallback when the budget runs out.
pub(crate) fn decide_traceable(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    match backtrack::path_any(g, Some(QUICK_BUDGET)) {
        backtrack::Outcome::Found(_) => true,
        backtrack::Outcome::Exhausted => false,
        backtrack::Outcome::OutOfBudget => {
            if g.n() <= DP_MAX_N {
                dp::path_any(g).is_some()
            } else {
                backtrack::path_any(g, None).found().is_some()
            }
        }
    }
}

pub(crate) fn decide_hamiltonian(g: &Graph) -> bool {
    if !cycle_prefilter(g) {
        return false;
    }
    match backtrack::cycle(g, Some(QUICK_BUDGET)) {
        backtrack::Outcome::Found(_) => true,
        backtrack::Outcome::Exhausted => false,
        backtrack::Outcome::OutOfBudget => {
            if g.n() <= DP_MAX_N {
                dp::cycle(g).is_some()
            } else {
                backtrack::cycle(g, None).found().is_some()
            }
        }
    }
}

pub(crate) fn decide_path_between(g: &Graph, u: usize, v: usize) -> bool {
    if !g.is_connected() {
        return false;
    }
    match backtrack::path_between(g, u, v, Some(QUICK_BUDGET)) {
        backtrack::Outcome::Found(_) => true,
        backtrack::Outcome::Exhausted => false,
        backtrack::Outcome::OutOfBudget => {
            if g.n() <= DP_MAX_N {
                dp::path_between(g, u, v).is_some()
            } else {
                backtrack::path_between(g, u, v, None).found().is_some()
            }
        }
    }
}

const QUICK_BUDGET: u64 = 20_000;

/// Necessary conditions for a Hamiltonian cycle: order >= 3, min degree
/// >= 2, connected, no cut-vertex.
fn cycle_prefilter(g: &Graph) -> bool {
    if g.n() < 3 || g.vertices().any(|v| g.degree(v) < 2) || !g.is_connected() {
        return false;
    }
    match g.blocks_and_cut_vertices() {
        Ok((_, cuts)) => cuts.is_empty(),
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------------
// Engine: subset dynamic programming
// ---------------------------------------------------------------------------

pub mod dp {
    //! Subset DP over (vertex set, endpoint) states. `reach[mask]` is the
    //! bit set of endpoints v for which some simple path covers exactly
    //! `mask` and ends at v.

    use super::Graph;

    fn sweep(g: &Graph, seeds: &[usize]) -> Vec<u32> {
        let n = g.n();
        let full = (1u64 << n) - 1;
        let mut reach = vec![0u32; (full + 1) as usize];
        for &s in seeds {
            reach[1 << s] |= 1 << s;
        }
        for mask in 1..=full {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let mut bits = ends;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut ext = g.neighbors(v).bits() & !(mask as u32);
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    reach[(mask as usize) | (1 << w)] |= 1 << w;
                }
            }
        }
        reach
    }

    fn reconstruct(g: &Graph, reach: &[u32], final_end: usize) -> Vec<usize> {
        let n = g.n();
        let mut mask = ((1u64 << n) - 1) as usize;
        let mut order = Vec::with_capacity(n);
        let mut v = final_end;
        loop {
            order.push(v);
            let prev = mask & !(1 << v);
            if prev == 0 {
                break;
            }
            let cands = reach[prev] & g.neighbors(v).bits();
            debug_assert_ne!(cands, 0, "dp reconstruction lost the path");
            v = cands.trailing_zeros() as usize;
            mask = prev;
        }
        order.reverse();
        order
    }

    /// Hamiltonian path with any endpoints.
    pub fn path_any(g: &Graph) -> Option<Vec<usize>> {
        let n = g.n();
        debug_assert!(n <= super::DP_MAX_N);
        let seeds: Vec<usize> = (0..n).collect();
        let reach = sweep(g, &seeds);
        let full = ((1u64 << n) - 1) as usize;
        let ends = reach[full];
        if ends == 0 {
            return None;
        }
        Some(reconstruct(g, &reach, ends.trailing_zeros() as usize))
    }

    /// Hamiltonian path from `u` to `v`.
    pub fn path_between(g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
        let n = g.n();
        debug_assert!(n <= super::DP_MAX_N);
        let reach = sweep(g, &[u]);
        let full = ((1u64 << n) - 1) as usize;
        if reach[full] & (1 << v) == 0 {
            return None;
        }
        let order = reconstruct(g, &reach, v);
        debug_assert_eq!(order[0], u);
        Some(order)
    }

    /// Hamiltonian cycle, anchored at vertex 0.
    pub fn cycle(g: &Graph) -> Option<Vec<usize>> {
        let n = g.n();
        debug_assert!(n <= super::DP_MAX_N);
        if n < 3 {
            return None;
        }
        let reach = sweep(g, &[0]);
        let full = ((1u64 << n) - 1) as usize;
        let closers = reach[full] & g.neighbors(0).bits() & !1;
        if closers == 0 {
            return None;
        }
        Some(reconstruct(g, &reach, closers.trailing_zeros() as usize))
    }
}

// ---------------------------------------------------------------------------
// Engine: pruned depth-first backtracking
// ---------------------------------------------------------------------------

pub mod backtrack {
    //! Depth-first path extension with sound pruning: the unvisited set
    //! must stay connected, at most two unvisited vertices may have
    //! unvisited-degree <= 1, and forced path ends must be compatible
    //! with the current endpoint (and the anchor, for cycles).

    use super::Graph;

    #[derive(Debug, PartialEq, Eq)]
    pub enum Outcome {
        Found(Vec<usize>),
        Exhausted,
        OutOfBudget,
    }

    impl Outcome {
        pub fn found(self) -> Option<Vec<usize>> {
            match self {
                Outcome::Found(p) => Some(p),
                _ => None,
            }
        }
    }

    #[derive(Clone, Copy)]
    enum Goal {
        AnyEnd,
        EndAt(usize),
        // cycle anchored at `start`; the final vertex must neighbor it
        CloseTo(usize),
    }

    struct Searcher<'a> {
        g: &'a Graph,
        full: u32,
        goal: Goal,
        budget: Option<u64>,
        nodes: u64,
        path: Vec<usize>,
    }

    enum Step {
        Found,
        NotHere,
        Out,
    }

    impl Searcher<'_> {
        fn components_count(&self, allowed: u32) -> usize {
            let mut remaining = allowed;
            let mut count = 0;
            while remaining != 0 {
                let mut comp = 1u32 << remaining.trailing_zeros();
                loop {
                    let mut frontier = 0u32;
                    let mut bits = comp;
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        frontier |= self.g.neighbors(v).bits();
                    }
                    frontier &= remaining & !comp;
                    if frontier == 0 {
                        break;
                    }
                    comp |= frontier;
                }
                remaining &= !comp;
                count += 1;
            }
            count
        }

        fn prune(&self, visited: u32, endpoint: usize) -> bool {
            let remaining = self.full & !visited;
            debug_assert_ne!(remaining, 0);
            let end_adj = self.g.neighbors(endpoint).bits();
            if end_adj & remaining == 0 {
                return true;
            }
            if let Goal::CloseTo(start) = self.goal {
                if self.g.neighbors(start).bits() & remaining == 0 {
                    return true;
                }
            }
            if self.components_count(remaining) > 1 {
                return true;
            }
            // Unvisited vertices with at most one unvisited neighbor must
            // be ends of the future path.
            let target = match self.goal {
                Goal::EndAt(v) => Some(v),
                _ => None,
            };
            let mut low: [Option<usize>; 2] = [None, None];
            let mut low_count = 0usize;
            let mut bits = remaining;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if Some(v) == target {
                    continue;
                }
                let rd = self.g.neighbors(v).bits() & remaining;
                if rd.count_ones() <= 1 {
                    if low_count < 2 {
                        low[low_count] = Some(v);
                    }
                    low_count += 1;
                }
            }
            match self.goal {
                Goal::AnyEnd => {
                    if low_count > 2 {
                        return true;
                    }
                    if low_count == 2 {
                        // One of the two forced ends must follow the endpoint.
                        let (a, b) = (low[0].unwrap(), low[1].unwrap());
                        if end_adj & ((1 << a) | (1 << b)) == 0 {
                            return true;
                        }
                    }
                }
                Goal::EndAt(_) => {
                    // The target is the forced last vertex; any other low
                    // vertex must come first, right after the endpoint.
                    if low_count > 1 {
                        return true;
                    }
                    if low_count == 1 && end_adj & (1 << low[0].unwrap()) == 0 {
                        return true;
                    }
                }
                Goal::CloseTo(start) => {
                    if low_count > 2 {
                        return true;
                    }
                    let start_adj = self.g.neighbors(start).bits();
                    if low_count == 2 {
                        let (a, b) = (low[0].unwrap(), low[1].unwrap());
                        let fits = (end_adj & (1 << a) != 0 && start_adj & (1 << b) != 0)
                            || (end_adj & (1 << b) != 0 && start_adj & (1 << a) != 0);
                        if !fits {
                            return true;
                        }
                    }
                }
            }
            false
        }

        fn extend(&mut self, visited: u32, endpoint: usize) -> Step {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Step::Out;
                }
            }
            let remaining = self.full & !visited;
            if remaining == 0 {
                let done = match self.goal {
                    Goal::AnyEnd => true,
                    Goal::EndAt(v) => endpoint == v,
                    Goal::CloseTo(start) => self.g.has_edge(endpoint, start),
                };
                return if done { Step::Found } else { Step::NotHere };
            }
            if self.prune(visited, endpoint) {
                return Step::NotHere;
            }
            let mut ext = self.g.neighbors(endpoint).bits() & remaining;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                if let Goal::EndAt(v) = self.goal {
                    // The target may only be taken as the very last vertex.
                    if w == v && remaining != (1 << v) {
                        continue;
                    }
                }
                self.path.push(w);
                match self.extend(visited | (1 << w), w) {
                    Step::Found => return Step::Found,
                    Step::Out => return Step::Out,
                    Step::NotHere => {
                        self.path.pop();
                    }
                }
            }
            Step::NotHere
        }

        fn run_from(&mut self, start: usize) -> Step {
            self.path.clear();
            self.path.push(start);
            self.extend(1 << start, start)
        }
    }

    fn full_mask(n: usize) -> u32 {
        if n == 32 {
            u32::MAX
        } else {
            (1 << n) - 1
        }
    }

    /// Hamiltonian path, any endpoints; starts are tried in increasing order.
    pub fn path_any(g: &Graph, budget: Option<u64>) -> Outcome {
        let mut s = Searcher {
            g,
            full: full_mask(g.n()),
            goal: Goal::AnyEnd,
            budget,
            nodes: 0,
            path: Vec::with_capacity(g.n()),
        };
        for start in 0..g.n() {
            match s.run_from(start) {
                Step::Found => return Outcome::Found(s.path),
                Step::Out => return Outcome::OutOfBudget,
                Step::NotHere => {}
            }
        }
        Outcome::Exhausted
    }

    /// Hamiltonian path from `u` to `v`.
    pub fn path_between(g: &Graph, u: usize, v: usize, budget: Option<u64>) -> Outcome {
        debug_assert!(u != v);
        if g.n() == 1 {
            return Outcome::Exhausted;
        }
        let mut s = Searcher {
            g,
            full: full_mask(g.n()),
            goal: Goal::EndAt(v),
            budget,
            nodes: 0,
            path: Vec::with_capacity(g.n()),
        };
        match s.run_from(u) {
            Step::Found => Outcome::Found(s.path),
            Step::Out => Outcome::OutOfBudget,
            Step::NotHere => Outcome::Exhausted,
        }
    }

    /// Hamiltonian cycle, anchored at vertex 0.
    pub fn cycle(g: &Graph, budget: Option<u64>) -> Outcome {
        if g.n() < 3 {
            return Outcome::Exhausted;
        }
        let mut s = Searcher {
            g,
            full: full_mask(g.n()),
            goal: Goal::CloseTo(0),
            budget,
            nodes: 0,
            path: Vec::with_capacity(g.n()),
        };
        match s.run_from(0) {
            Step::Found => Outcome::Found(s.path),
            Step::Out => Outcome::OutOfBudget,
            Step::NotHere => Outcome::Exhausted,
        }
    }
}

// ---------------------------------------------------------------------------
// Naive permutation oracle
// ---------------------------------------------------------------------------

mod naive {
    use super::Graph;

    fn perms(g: &Graph, visited: u32, last: usize, depth: usize, close_to: Option<usize>) -> bool {
        if depth == g.n() {
            return match close_to {
                None => true,
                Some(s) => g.has_edge(last, s),
            };
        }
        for w in 0..g.n() {
            if visited & (1 << w) == 0
                && g.has_edge(last, w)
                && perms(g, visited | (1 << w), w, depth + 1, close_to)
            {
                return true;
            }
        }
        false
    }

    pub fn path_exists(g: &Graph) -> bool {
        (0..g.n()).any(|s| perms(g, 1 << s, s, 1, None))
    }

    pub fn cycle_exists(g: &Graph) -> bool {
        perms(g, 1, 0, 1, Some(0))
    }
}
