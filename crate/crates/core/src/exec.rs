//! Execution-mode plumbing: the batch layers (search levels, eligibility
//! sweeps, multi-graph classification) run data-parallel on rayon when the
//! `parallel` feature is enabled, and fall back to plain iteration
//! otherwise. Results are merged in input order either way, so outputs are
//! identical across modes and worker counts.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How batch operations execute. `ExecMode::default()` prefers the
/// parallel path when compiled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Order-preserving map over a slice.
pub(crate) fn map_slice<G, T, F>(mode: ExecMode, items: &[G], f: F) -> Vec<T>
where
    G: Sync,
    T: Send,
    F: Fn(&G) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items.par_iter().map(f).collect(),
    }
}

/// First item (in slice order) satisfying the predicate.
pub(crate) fn find_first_slice<G, F>(mode: ExecMode, items: &[G], pred: F) -> Option<&G>
where
    G: Sync,
    F: Fn(&G) -> bool + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().find(|g| pred(g)),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items.par_iter().find_first(|g| pred(g)),
    }
}
