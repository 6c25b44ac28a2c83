//! Isomorph-free exhaustive search for the minimum sizes of maximal
//! nontraceable (and, at tiny orders, maximal nonhamiltonian) graphs.
//!
//! Generation is orderly: a labeled graph is kept iff its adjacency bit
//! string is the lexicographically greatest over all relabelings, and
//! children extend a parent only by edges past its greatest edge slot.
//! Every isomorphism class with m edges then appears exactly once at level
//! m, each level derived from the previous one. The level stream is
//! partitioned by parent for data-parallel expansion and classification;
//! a deterministic merge (parent order, then canonical-code sort for
//! witnesses) keeps results identical across worker counts.
//!
//! Disconnected candidates never enter the MNT scan: a disconnected MNT
//! graph is necessarily two disjoint cliques (adding an edge inside a part
//! keeps the graph disconnected, so both parts must be complete), which is
//! handled in closed form. Disconnected graphs are never MNH.

use crate::bounds;
use crate::canon;
use crate::classify;
use crate::exec::{self, ExecMode};
use crate::graph::Graph;
use crate::graph6;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error;

/// Largest order the exhaustive search accepts.
pub const SEARCH_MAX_N: usize = 10;

const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search supports orders {min}..={max}, got {got}")]
    OrderOutOfRange { got: usize, min: usize, max: usize },
    #[error("edge count {m} out of range for order {n} (max {max})")]
    EdgesOutOfRange { n: usize, m: usize, max: usize },
    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),
    #[error("malformed checkpoint: {0}")]
    BadCheckpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchTarget {
    Mnt,
    Mnh,
}

impl std::fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchTarget::Mnt => write!(f, "mnt"),
            SearchTarget::Mnh => write!(f, "mnh"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SearchResult {
    /// The minimum size, proved by exhausting all smaller levels.
    Exact { value: usize },
    /// Budget ran out: the value lies in [lower, upper] (upper from the
    /// best known construction, when one exists).
    Bracket { lower: usize, upper: Option<usize> },
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SearchStats {
    /// Isomorphism classes produced by the generator, all levels.
    pub classes_enumerated: u64,
    /// Classifier invocations (connected representatives tested).
    pub decider_calls: u64,
    /// Wall time of this run (not carried across resume).
    pub wall_ms: u128,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub target: SearchTarget,
    pub result: SearchResult,
    /// Canonical forms of every minimum witness, sorted by canonical code.
    pub witnesses: Vec<Graph>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn witness_g6_lines(&self) -> Vec<String> {
        self.witnesses.iter().map(graph6::to_graph6).collect()
    }

    /// JSON stats record (the only place wall time is reported).
    pub fn stats_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "target": self.target,
            "result": self.result,
            "witness_count": self.witnesses.len(),
            "witnesses": self.witness_g6_lines(),
            "stats": self.stats,
        })
    }
}

/// Serialized per-level progress; resume re-derives the generator state
/// (deterministic) and continues at `next_m`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub n: usize,
    pub target: SearchTarget,
    pub next_m: usize,
    pub classes_enumerated: u64,
    pub decider_calls: u64,
}

pub fn load_checkpoint(path: &Path) -> Result<Checkpoint, SearchError> {
    let text = std::fs::read_to_string(path)?;
    let cp: Checkpoint =
        serde_json::from_str(&text).map_err(|e| SearchError::BadCheckpoint(e.to_string()))?;
    if cp.version != CHECKPOINT_VERSION {
        return Err(SearchError::BadCheckpoint(format!(
            "version {} unsupported",
            cp.version
        )));
    }
    Ok(cp)
}

#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    /// Soft budget: stop (with a bracket) once the generator has produced
    /// this many classes.
    pub max_classes: Option<u64>,
    /// Write a checkpoint here after each completed level.
    pub checkpoint_path: Option<PathBuf>,
    /// Continue a previous run.
    pub resume: Option<Checkpoint>,
    pub mode: ExecMode,
}

// --------------------------------------------------------------------------
// Orderly generation
// --------------------------------------------------------------------------

type LevelEntry = (Graph, i32);

fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

fn children(g: &Graph, last: i32, pairs: &[(usize, usize)]) -> Vec<LevelEntry> {
    let mut out = Vec::new();
    for (t, &(i, j)) in pairs.iter().enumerate().skip((last + 1) as usize) {
        let mut cand = *g;
        cand.add_edge_unchecked(i, j);
        if canon::is_max_canonical(&cand) {
            out.push((cand, t as i32));
        }
    }
    out
}

fn advance_level(level: &[LevelEntry], pairs: &[(usize, usize)], mode: ExecMode) -> Vec<LevelEntry> {
    exec::map_slice(mode, level, |(g, last)| children(g, *last, pairs))
        .into_iter()
        .flatten()
        .collect()
}

/// Exactly one representative per isomorphism class of graphs with n
/// vertices and m edges (restricted to connected graphs when asked), in a
/// deterministic order.
pub fn enumerate_classes(n: usize, m: usize, connected_only: bool) -> Result<Vec<Graph>, SearchError> {
    enumerate_classes_with(n, m, connected_only, ExecMode::default())
}

pub fn enumerate_classes_with(
    n: usize,
    m: usize,
    connected_only: bool,
    mode: ExecMode,
) -> Result<Vec<Graph>, SearchError> {
    if !(1..=SEARCH_MAX_N).contains(&n) {
        return Err(SearchError::OrderOutOfRange {
            got: n,
            min: 1,
            max: SEARCH_MAX_N,
        });
    }
    let pairs = pair_table(n);
    if m > pairs.len() {
        return Err(SearchError::EdgesOutOfRange {
            n,
            m,
            max: pairs.len(),
        });
    }
    let mut level: Vec<LevelEntry> = vec![(Graph::empty(n).expect("order checked"), -1)];
    for _ in 0..m {
        level = advance_level(&level, &pairs, mode);
    }
    Ok(level
        .into_iter()
        .map(|(g, _)| g)
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

// --------------------------------------------------------------------------
// Minimum-size searches
// --------------------------------------------------------------------------

/// Exact g(n) by isomorph-free search, 2 <= n <= 10. Levels run in
/// ascending edge count; the first level with a witness is the minimum.
pub fn min_mnt_size(n: usize, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if !(2..=SEARCH_MAX_N).contains(&n) {
        return Err(SearchError::OrderOutOfRange {
            got: n,
            min: 2,
            max: SEARCH_MAX_N,
        });
    }
    run_search(n, SearchTarget::Mnt, config)
}

/// Exact f(n) analogue for MNH graphs, 4 <= n <= 9.
pub fn min_mnh_size(n: usize, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if !(4..=9).contains(&n) {
        return Err(SearchError::OrderOutOfRange {
            got: n,
            min: 4,
            max: 9,
        });
    }
    run_search(n, SearchTarget::Mnh, config)
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn run_search(
    n: usize,
    target: SearchTarget,
    config: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let pairs = pair_table(n);
    let total = pairs.len();

    let mut stats = SearchStats::default();
    let mut start_m = 0usize;
    if let Some(cp) = &config.resume {
        if cp.n != n || cp.target != target {
            return Err(SearchError::CheckpointMismatch(format!(
                "checkpoint is for {} n={}, run is {} n={}",
                cp.target, cp.n, target, n
            )));
        }
        start_m = cp.next_m;
        stats.classes_enumerated = cp.classes_enumerated;
        stats.decider_calls = cp.decider_calls;
    }

    // Replay the generator up to the resume level; counts were already
    // recorded by the interrupted run.
    let mut level: Vec<LevelEntry> = vec![(Graph::empty(n).expect("order checked"), -1)];
    for _ in 0..start_m.min(total) {
        level = advance_level(&level, &pairs, config.mode);
    }

    let bracket_upper = match target {
        SearchTarget::Mnt => bounds::best_known_upper_g(n)
            .expect("n >= 2 checked")
            .map(|(e, _)| e),
        SearchTarget::Mnh => None,
    };

    for m in start_m..=total {
        stats.classes_enumerated += level.len() as u64;
        if let Some(budget) = config.max_classes {
            if stats.classes_enumerated > budget {
                stats.wall_ms = start.elapsed().as_millis();
                return Ok(SearchOutcome {
                    n,
                    target,
                    result: SearchResult::Bracket {
                        lower: m,
                        upper: bracket_upper,
                    },
                    witnesses: Vec::new(),
                    stats,
                });
            }
        }

        let connected: Vec<Graph> = level
            .iter()
            .map(|(g, _)| *g)
            .filter(Graph::is_connected)
            .collect();
        stats.decider_calls += connected.len() as u64;
        let verdicts = exec::map_slice(config.mode, &connected, |g| match target {
            SearchTarget::Mnt => classify::is_mnt_fast(g),
            SearchTarget::Mnh => classify::is_mnh_fast(g),
        });
        let mut witnesses: Vec<Graph> = connected
            .iter()
            .zip(&verdicts)
            .filter(|&(_, &ok)| ok)
            .map(|(g, _)| canon::canonical_form(g))
            .collect();

        if target == SearchTarget::Mnt {
            for k in 1..=n / 2 {
                if binom2(k) + binom2(n - k) == m {
                    let g = crate::constructions::disjoint_cliques(k, n - k)
                        .expect("orders within range");
                    witnesses.push(canon::canonical_form(&g));
                }
            }
        }

        if !witnesses.is_empty() {
            witnesses.sort_by_key(Graph::code_u64);
            stats.wall_ms = start.elapsed().as_millis();
            return Ok(SearchOutcome {
                n,
                target,
                result: SearchResult::Exact { value: m },
                witnesses,
                stats,
            });
        }

        if let Some(path) = &config.checkpoint_path {
            let cp = Checkpoint {
                version: CHECKPOINT_VERSION,
                n,
                target,
                next_m: m + 1,
                classes_enumerated: stats.classes_enumerated,
                decider_calls: stats.decider_calls,
            };
            std::fs::write(path, serde_json::to_string_pretty(&cp).expect("serializable"))?;
        }

        if m < total {
            level = advance_level(&level, &pairs, config.mode);
        }
    }
    unreachable!("every order in range admits a witness (two cliques / clique pairs)");
}

/// Write witnesses of an exact outcome as graph6 lines into
/// `dir/{target}-n{n}-m{value}.g6`; returns the path.
pub fn write_witnesses(dir: &Path, outcome: &SearchOutcome) -> Result<PathBuf, SearchError> {
    let value = match outcome.result {
        SearchResult::Exact { value } => value,
        SearchResult::Bracket { .. } => {
            return Err(SearchError::BadCheckpoint(
                "bracket outcomes have no witness file".into(),
            ))
        }
    };
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}-n{}-m{}.g6", outcome.target, outcome.n, value));
    let mut text = outcome.witness_g6_lines().join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    std::fs::write(&path, text)?;
    Ok(path)
}
