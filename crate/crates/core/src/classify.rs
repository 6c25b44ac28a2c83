//! Maximal-nontraceable / maximal-nonhamiltonian certification.
//!
//! A graph is MNT when it is nontraceable but every missing edge, once
//! added, makes it traceable; MNH is the analogue for Hamiltonian cycles.
//! Reports carry certificates: a Hamiltonian path/cycle witness on the
//! positive side, or a failing non-edge (one whose addition leaves the
//! property absent) refuting maximality.
//!
//! Degenerate corners, fixed here once: complete graphs and K1 are
//! traceable, hence never MNT. K1 and K2 have no missing edges and no
//! Hamiltonian cycle, so they satisfy the MNH definition vacuously.

use crate::exec::{self, ExecMode};
use crate::graph::{Edge, Graph};
use crate::hamilton::{self, Witness};
use serde::Serialize;

/// Full classification of one graph.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub traceable: bool,
    pub hamiltonian: bool,
    pub mnt: bool,
    pub mnh: bool,
    /// Non-edge whose addition leaves the graph nontraceable
    /// (lexicographically first; absent iff `mnt` or `traceable`).
    pub mnt_failing_edge: Option<Edge>,
    /// Non-edge whose addition leaves the graph nonhamiltonian.
    pub mnh_failing_edge: Option<Edge>,
    /// Hamiltonian path, when traceable.
    pub path_witness: Option<Witness>,
    /// Hamiltonian cycle, when hamiltonian.
    pub cycle_witness: Option<Witness>,
}

/// Classify a graph completely. Maximality loops scan non-edges in
/// lexicographic order and stop at the first failure, so certificates are
/// deterministic.
pub fn classify(g: &Graph) -> ClassificationReport {
    let path_witness = hamilton::hamiltonian_path(g);
    let cycle_witness = hamilton::hamiltonian_cycle(g);
    let traceable = path_witness.is_some();
    let hamiltonian = cycle_witness.is_some();

    let (mnt, mnt_failing_edge) = if traceable {
        (false, None)
    } else {
        match first_mnt_failure(g, ExecMode::Sequential) {
            Some(e) => (false, Some(e)),
            None => (true, None),
        }
    };
    let (mnh, mnh_failing_edge) = if hamiltonian {
        (false, None)
    } else {
        match first_mnh_failure(g, ExecMode::Sequential) {
            Some(e) => (false, Some(e)),
            None => (true, None),
        }
    };

    ClassificationReport {
        traceable,
        hamiltonian,
        mnt,
        mnh,
        mnt_failing_edge,
        mnh_failing_edge,
        path_witness,
        cycle_witness,
    }
}

/// See [`classify`]; kept as the operation name for MNT certification.
pub fn is_mnt(g: &Graph) -> ClassificationReport {
    classify(g)
}

/// See [`classify`]; kept as the operation name for MNH certification.
pub fn is_mnh(g: &Graph) -> ClassificationReport {
    classify(g)
}

/// Classify many graphs, order preserved.
pub fn classify_batch(graphs: &[Graph], mode: ExecMode) -> Vec<ClassificationReport> {
    exec::map_slice(mode, graphs, classify)
}

/// Lexicographically first non-edge whose addition leaves the graph
/// nontraceable, or None when every addition yields traceability.
/// Only meaningful on nontraceable input.
fn first_mnt_failure(g: &Graph, mode: ExecMode) -> Option<Edge> {
    let non_edges = g.non_edges();
    if non_edges.is_empty() {
        return None;
    }
    // Adding one edge joins at most two components: with three or more,
    // every addition leaves the graph nontraceable.
    if g.components().len() >= 3 {
        let (u, v) = non_edges[0];
        return Some(Edge::new(u, v));
    }
    exec::find_first_slice(mode, &non_edges, |&(u, v)| {
        !hamilton::decide_traceable(&g.add_edge(u, v).expect("non-edge"))
    })
    .map(|&(u, v)| Edge::new(u, v))
}

fn first_mnh_failure(g: &Graph, mode: ExecMode) -> Option<Edge> {
    let non_edges = g.non_edges();
    if non_edges.is_empty() {
        return None;
    }
    // A disconnected graph plus one edge is still disconnected or has a
    // bridge; either way it is nonhamiltonian.
    if !g.is_connected() {
        let (u, v) = non_edges[0];
        return Some(Edge::new(u, v));
    }
    exec::find_first_slice(mode, &non_edges, |&(u, v)| {
        !hamilton::decide_hamiltonian(&g.add_edge(u, v).expect("non-edge"))
    })
    .map(|&(u, v)| Edge::new(u, v))
}

/// Test mode: every non-edge whose addition leaves the graph nontraceable.
pub fn mnt_failures(g: &Graph) -> Vec<Edge> {
    if hamilton::decide_traceable(g) {
        return Vec::new();
    }
    g.non_edges()
        .into_iter()
        .filter(|&(u, v)| !hamilton::decide_traceable(&g.add_edge(u, v).expect("non-edge")))
        .map(|(u, v)| Edge::new(u, v))
        .collect()
}

/// Test mode: every non-edge whose addition leaves the graph nonhamiltonian.
pub fn mnh_failures(g: &Graph) -> Vec<Edge> {
    if hamilton::decide_hamiltonian(g) {
        return Vec::new();
    }
    g.non_edges()
        .into_iter()
        .filter(|&(u, v)| !hamilton::decide_hamiltonian(&g.add_edge(u, v).expect("non-edge")))
        .map(|(u, v)| Edge::new(u, v))
        .collect()
}

/// Boolean-only MNT check for search hot paths.
pub(crate) fn is_mnt_fast(g: &Graph) -> bool {
    if hamilton::decide_traceable(g) {
        return false;
    }
    if g.components().len() >= 3 {
        return false;
    }
    g.non_edges()
        .into_iter()
        .all(|(u, v)| hamilton::decide_traceable(&g.add_edge(u, v).expect("non-edge")))
}

/// Boolean-only MNH check for search hot paths.
pub(crate) fn is_mnh_fast(g: &Graph) -> bool {
    if hamilton::decide_hamiltonian(g) {
        return false;
    }
    if !g.is_connected() && !g.non_edges().is_empty() {
        return false;
    }
    g.non_edges()
        .into_iter()
        .all(|(u, v)| hamilton::decide_hamiltonian(&g.add_edge(u, v).expect("non-edge")))
}

/// Edges eligible as the attachment edge of the two-appendage extension of
/// a cubic MNH base: both endpoints share no neighbor, and for every
/// non-edge e of g, g+e has a Hamiltonian cycle through the edge. Empty
/// unless g is 3-regular and MNH.
pub fn dkw_eligible(g: &Graph) -> Vec<Edge> {
    dkw_eligible_with(g, ExecMode::default())
}

pub fn dkw_eligible_with(g: &Graph, mode: ExecMode) -> Vec<Edge> {
    if !g.is_regular(3) || !is_mnh_fast(g) {
        return Vec::new();
    }
    let non_edges = g.non_edges();
    let edges = g.edges();
    let verdicts = exec::map_slice(mode, &edges, |&(y1, y2)| {
        g.neighbors(y1).intersection(g.neighbors(y2)).is_empty()
            && non_edges.iter().all(|&(u, v)| {
                let extended = g.add_edge(u, v).expect("non-edge");
                hamilton::has_ham_cycle_through_edge(&extended, y1, y2)
                    .expect("edge of g is an edge of g+e")
            })
    });
    edges
        .iter()
        .zip(verdicts)
        .filter(|&(_, ok)| ok)
        .map(|(&(u, v), _)| Edge::new(u, v))
        .collect()
}
