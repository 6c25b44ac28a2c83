//! Generators for the maximal-nontraceable graph families used by the
//! size bounds: two disjoint cliques, the two Zelinka appendage families,
//! and the two-appendage extension of an eligible cubic MNH base (the
//! route that settles orders 12 and 13 from the Petersen graph).
//!
//! Labelings are fixed and documented per constructor so outputs are
//! reproducible byte-for-byte through the graph6 pipeline.

use crate::classify;
use crate::graph::{Graph, GraphError, MAXN};
use crate::graph6::{self, Graph6Error};
use crate::named;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("clique part must have at least {min} vertices, got {got}")]
    CliqueTooSmall { min: usize, got: usize },
    #[error("appendage size must be 1 or 2, got {0}")]
    BadAppendageSize(usize),
    #[error("output order {0} exceeds the supported maximum {MAXN}")]
    OrderTooLarge(usize),
    #[error("edge {{{0},{1}}} is not eligible on this base graph")]
    IneligibleEdge(usize, usize),
    #[error("base graph error: {0}")]
    Base(#[from] GraphError),
    #[error("base graph6 error: {0}")]
    BaseFormat(#[from] Graph6Error),
    #[error(transparent)]
    Graph(GraphError),
}

/// Parameters identifying one construction instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    DisjointCliques { k: usize, l: usize },
    Zelinka1 { clique: usize, sizes: [usize; 2] },
    Zelinka2 { clique: usize, sizes: [usize; 3] },
    /// `base` is a catalog name (e.g. "petersen") or a graph6 line.
    Dkw { base: String, edge: (usize, usize), h2_size: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match self {
            ConstructionSpec::DisjointCliques { k, l } => disjoint_cliques(*k, *l),
            ConstructionSpec::Zelinka1 { clique, sizes } => zelinka_type1(*clique, *sizes),
            ConstructionSpec::Zelinka2 { clique, sizes } => zelinka_type2(*clique, *sizes),
            ConstructionSpec::Dkw { base, edge, h2_size } => {
                let base_graph = match named::named(base) {
                    Ok(g) => g,
                    Err(GraphError::UnknownName(_)) => graph6::from_graph6(base)?,
                    Err(e) => return Err(e.into()),
                };
                dkw_construct(&base_graph, edge.0, edge.1, *h2_size)
            }
        }
    }
}

impl std::fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstructionSpec::DisjointCliques { k, l } => write!(f, "disjoint_cliques({k},{l})"),
            ConstructionSpec::Zelinka1 { clique, sizes } => {
                write!(f, "zelinka1(r={clique}, sizes={sizes:?})")
            }
            ConstructionSpec::Zelinka2 { clique, sizes } => {
                write!(f, "zelinka2(r={clique}, sizes={sizes:?})")
            }
            ConstructionSpec::Dkw { base, edge, h2_size } => {
                write!(f, "dkw(base={base}, edge=({},{}), h2={h2_size})", edge.0, edge.1)
            }
        }
    }
}

fn check_appendage(size: usize) -> Result<(), ConstructionError> {
    if size == 1 || size == 2 {
        Ok(())
    } else {
        Err(ConstructionError::BadAppendageSize(size))
    }
}

fn check_order(n: usize) -> Result<(), ConstructionError> {
    if n > MAXN {
        Err(ConstructionError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

/// K_k disjoint union K_l; the only disconnected MNT graphs.
pub fn disjoint_cliques(k: usize, l: usize) -> Result<Graph, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::CliqueTooSmall { min: 1, got: k });
    }
    if l < 1 {
        return Err(ConstructionError::CliqueTooSmall { min: 1, got: l });
    }
    check_order(k + l)?;
    let a = named::complete(k).map_err(ConstructionError::Graph)?;
    let b = named::complete(l).map_err(ConstructionError::Graph)?;
    a.disjoint_union(&b).map_err(ConstructionError::Graph)
}

/// K_r (vertices 0..r) with two appendages (each K1 or K2) whose every
/// vertex is joined to the single attachment vertex y = 0. With
/// s = sizes[0] + sizes[1], the size is C(r,2) + 2s - 2.
pub fn zelinka_type1(r: usize, sizes: [usize; 2]) -> Result<Graph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::CliqueTooSmall { min: 3, got: r });
    }
    for s in sizes {
        check_appendage(s)?;
    }
    let n = r + sizes[0] + sizes[1];
    check_order(n)?;
    let mut g = named::complete(r).map_err(ConstructionError::Graph)?;
    g = g
        .disjoint_union(&Graph::empty(n - r).map_err(ConstructionError::Graph)?)
        .map_err(ConstructionError::Graph)?;
    let mut next = r;
    for size in sizes {
        for i in 0..size {
            g.add_edge_unchecked(0, next + i);
        }
        if size == 2 {
            g.add_edge_unchecked(next, next + 1);
        }
        next += size;
    }
    Ok(g)
}

/// K_r (vertices 0..r, r >= 3) with three appendages (each K1 or K2);
/// appendage i is fully joined to attachment vertex y_i = i. With
/// s = sizes[0] + sizes[1] + sizes[2], the size is C(r,2) + 2s - 3.
pub fn zelinka_type2(r: usize, sizes: [usize; 3]) -> Result<Graph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::CliqueTooSmall { min: 3, got: r });
    }
    for s in sizes {
        check_appendage(s)?;
    }
    let n = r + sizes.iter().sum::<usize>();
    check_order(n)?;
    let mut g = named::complete(r).map_err(ConstructionError::Graph)?;
    g = g
        .disjoint_union(&Graph::empty(n - r).map_err(ConstructionError::Graph)?)
        .map_err(ConstructionError::Graph)?;
    let mut next = r;
    for (attach, size) in sizes.into_iter().enumerate() {
        for i in 0..size {
            g.add_edge_unchecked(attach, next + i);
        }
        if size == 2 {
            g.add_edge_unchecked(next, next + 1);
        }
        next += size;
    }
    Ok(g)
}

/// Append K1 joined to y1 and K1-or-K2 joined to y2 across an eligible
/// edge y1y2 of a cubic MNH base. New vertices follow the base's. Output
/// order/size: v+2, e+2 when h2_size = 1; v+3, e+4 when h2_size = 2.
/// Eligibility of (y1, y2) is re-validated; see
/// [`dkw_construct_unchecked`] for the trusting variant.
pub fn dkw_construct(
    base: &Graph,
    y1: usize,
    y2: usize,
    h2_size: usize,
) -> Result<Graph, ConstructionError> {
    let eligible = classify::dkw_eligible(base);
    let key = crate::graph::Edge::new(y1, y2);
    if !eligible.contains(&key) {
        return Err(ConstructionError::IneligibleEdge(y1, y2));
    }
    dkw_construct_unchecked(base, y1, y2, h2_size)
}

/// As [`dkw_construct`] but without the eligibility check (bounds only).
pub fn dkw_construct_unchecked(
    base: &Graph,
    y1: usize,
    y2: usize,
    h2_size: usize,
) -> Result<Graph, ConstructionError> {
    check_appendage(h2_size)?;
    if !base.has_edge(y1, y2) {
        return Err(ConstructionError::IneligibleEdge(y1, y2));
    }
    let v = base.n();
    let n = v + 1 + h2_size;
    check_order(n)?;
    let mut g = base
        .disjoint_union(&Graph::empty(1 + h2_size).map_err(ConstructionError::Graph)?)
        .map_err(ConstructionError::Graph)?;
    g.add_edge_unchecked(y1, v);
    g.add_edge_unchecked(y2, v + 1);
    if h2_size == 2 {
        g.add_edge_unchecked(y2, v + 2);
        g.add_edge_unchecked(v + 1, v + 2);
    }
    Ok(g)
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Exact size contract of each family, used by tests and the bounds table.
pub fn expected_size(spec: &ConstructionSpec) -> Option<usize> {
    match spec {
        ConstructionSpec::DisjointCliques { k, l } => Some(binom2(*k) + binom2(*l)),
        ConstructionSpec::Zelinka1 { clique, sizes } => {
            let s = sizes[0] + sizes[1];
            Some(binom2(*clique) + 2 * s - 2)
        }
        ConstructionSpec::Zelinka2 { clique, sizes } => {
            let s: usize = sizes.iter().sum();
            Some(binom2(*clique) + 2 * s - 3)
        }
        ConstructionSpec::Dkw { .. } => None, // e(base) + 2 or + 4; base-dependent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    #[test]
    fn disjoint_cliques_examples() {
        let g = disjoint_cliques(1, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        assert!(classify(&g).mnt);

        let g = disjoint_cliques(3, 4).unwrap();
        assert_eq!(g.edge_count(), 9);

        let g = disjoint_cliques(1, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        assert!(classify(&g).mnt);

        assert_eq!(
            disjoint_cliques(0, 2).unwrap_err(),
            ConstructionError::CliqueTooSmall { min: 1, got: 0 }
        );
        assert_eq!(
            disjoint_cliques(20, 20).unwrap_err(),
            ConstructionError::OrderTooLarge(40)
        );
    }

    #[test]
    fn zelinka1_sizes() {
        let g = zelinka_type1(6, [1, 1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 17));
        assert!(classify(&g).mnt);

        let g = zelinka_type1(5, [2, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 16));

        let g = zelinka_type1(6, [1, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 19));

        assert_eq!(
            zelinka_type1(2, [1, 1]).unwrap_err(),
            ConstructionError::CliqueTooSmall { min: 3, got: 2 }
        );
        assert_eq!(
            zelinka_type1(4, [3, 1]).unwrap_err(),
            ConstructionError::BadAppendageSize(3)
        );
    }

    #[test]
    fn zelinka2_sizes() {
        let g = zelinka_type2(3, [2, 2, 1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 10));
        assert!(classify(&g).mnt);

        let g = zelinka_type2(3, [2, 2, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        assert!(classify(&g).mnt);

        let g = zelinka_type2(4, [1, 1, 1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 9));
    }

    #[test]
    fn zelinka2_block_structure() {
        // Three cut-vertices, four blocks, each complete.
        for (r, sizes) in [(3, [1, 1, 1]), (4, [2, 2, 2]), (5, [1, 2, 1])] {
            let g = zelinka_type2(r, sizes).unwrap();
            let (blocks, cuts) = g.blocks_and_cut_vertices().unwrap();
            assert_eq!(cuts.len(), 3, "r={r} sizes={sizes:?}");
            assert_eq!(blocks.len(), 4, "r={r} sizes={sizes:?}");
            assert!(blocks.iter().all(|&b| g.is_clique(b)));
        }
    }

    #[test]
    fn dkw_from_petersen() {
        let p = crate::named::petersen();
        let g = dkw_construct(&p, 0, 1, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 17));
        let g = dkw_construct(&p, 0, 1, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (13, 19));
    }

    #[test]
    fn dkw_rejects_ineligible() {
        let k4 = crate::named::complete(4).unwrap();
        assert_eq!(
            dkw_construct(&k4, 0, 1, 1).unwrap_err(),
            ConstructionError::IneligibleEdge(0, 1)
        );
        let p = crate::named::petersen();
        assert_eq!(
            dkw_construct_unchecked(&p, 0, 2, 1).unwrap_err(),
            ConstructionError::IneligibleEdge(0, 2)
        );
        assert_eq!(
            dkw_construct_unchecked(&p, 0, 1, 3).unwrap_err(),
            ConstructionError::BadAppendageSize(3)
        );
    }

    #[test]
    fn spec_build_round_trip() {
        let spec = ConstructionSpec::Zelinka2 { clique: 3, sizes: [2, 2, 1] };
        let g = spec.build().unwrap();
        assert_eq!(g.edge_count(), expected_size(&spec).unwrap());

        let spec = ConstructionSpec::Dkw {
            base: "petersen".into(),
            edge: (0, 1),
            h2_size: 2,
        };
        assert_eq!(spec.build().unwrap().n(), 13);
    }
}
