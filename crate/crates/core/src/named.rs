//! Catalog of named graphs with fixed, documented labelings.

use crate::graph::{Graph, GraphError};

/// The Petersen graph: outer cycle 0-1-2-3-4, inner pentagram 5-9
/// (vertex 5+i adjacent to 5+((i+2) mod 5)), spokes i <-> i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((5 + i, 5 + (i + 2) % 5)); // pentagram
    }
    Graph::from_edges(10, &edges).expect("fixed construction")
}

/// Path on n vertices, 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on n >= 3 vertices, 0-1-...-(n-1)-0.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g = g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Edgeless graph on n vertices.
pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

/// Star with k leaves: center 0, leaves 1..=k (order k+1).
pub fn star(k: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// The paw: triangle 0-1-2 plus pendant vertex 3 attached to 0.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).expect("fixed construction")
}

/// The bowtie: two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        .expect("fixed construction")
}

/// Names accepted by [`named`], for help output.
pub const CATALOG: &[&str] = &[
    "petersen",
    "paw",
    "bowtie",
    "path_N",
    "cycle_N",
    "complete_N",
    "empty_N",
    "star_K",
];

/// Look up a graph by name. Parameterized names take a suffix, e.g.
/// `path_7`, `cycle_6`, `complete_4`, `empty_3`, `star_4` (star_K = K
/// leaves, order K+1).
pub fn named(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownName(name.to_string());
    match name {
        "petersen" => return Ok(petersen()),
        "paw" => return Ok(paw()),
        "bowtie" => return Ok(bowtie()),
        _ => {}
    }
    if let Some((family, param)) = name.rsplit_once('_') {
        let k: usize = param.parse().map_err(|_| unknown())?;
        return match family {
            "path" => path(k),
            "cycle" => cycle(k),
            "complete" => complete(k),
            "empty" => empty(k),
            "star" => star(k),
            _ => Err(unknown()),
        };
    }
    Err(unknown())
}
