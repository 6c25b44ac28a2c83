//! Exact toolkit for maximal nontraceable (MNT) and maximal
//! nonhamiltonian (MNH) graphs.
//!
//! A graph is *traceable* if it has a Hamiltonian path and *hamiltonian*
//! if it has a Hamiltonian cycle. MNT graphs are nontraceable but become
//! traceable under every possible edge addition; MNH is the cycle
//! analogue. This crate provides:
//!
//! - [`graph`]: compact graphs on up to 32 vertices, structural queries,
//!   and block/cut-vertex decomposition; [`graph6`]: the interchange
//!   format; [`named`]: a small catalog (Petersen, paw, paths, ...).
//! - [`hamilton`]: exact traceability/hamiltonicity deciders (subset DP
//!   and pruned backtracking) with witnesses, plus an independent naive
//!   permutation oracle.
//! - [`classify`]: MNT/MNH certification with certificates, and
//!   eligibility of cubic MNH base edges for the two-appendage extension.
//! - [`constructions`]: the MNT families (disjoint cliques, Zelinka types
//!   I/II, Petersen-based extensions) with exact order/size contracts.
//! - [`laws`]: the structural laws MNT graphs satisfy, run as property
//!   checks returning violation lists.
//! - [`bounds`]: lower bounds, best constructive upper bounds, and
//!   known/open status for the minimum MNT size g(n).
//! - [`search`]: isomorph-free exhaustive search recomputing g(n) (and
//!   the MNH analogue at tiny orders) with certified witnesses.
//!
//! Graphs are immutable `Copy` values and every operation is pure, so all
//! batch layers are freely data-parallel; the `parallel` feature (default)
//! runs them on rayon, and without it the same code paths run
//! sequentially with identical output.

pub mod bounds;
pub mod canon;
pub mod classify;
pub mod constructions;
mod exec;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod laws;
pub mod named;
pub mod search;

pub use exec::ExecMode;
pub use graph::{Edge, Graph, GraphError, VertexSet, MAXN};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use hamilton::{
    has_ham_cycle_through_edge, hamiltonian_cycle, hamiltonian_path, is_hamiltonian, is_traceable,
    naive_hamiltonian, naive_traceable, Witness, WitnessKind,
};
pub use classify::{classify, dkw_eligible, is_mnh, is_mnt, ClassificationReport};
