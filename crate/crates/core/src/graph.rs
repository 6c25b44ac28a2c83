//! Compact undirected simple graphs on at most [`MAXN`] vertices.
//!
//! Vertices are dense indices `0..n`. Each neighbor set is a single `u32`
//! bit mask, so graphs are small `Copy` values; mutation-style operations
//! return new graphs, which keeps backtracking search and parallel callers
//! trivially safe.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Maximum supported vertex count. One machine word per neighbor set.
pub const MAXN: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range (must be 1..={MAXN})")]
    OrderOutOfRange(usize),
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} already present")]
    EdgeExists(usize, usize),
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
}

/// A subset of the vertices `0..n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAXN);
        VertexSet(1 << v)
    }

    /// All vertices of a graph of order `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!((1..=MAXN).contains(&n));
        VertexSet(if n == 32 { u32::MAX } else { (1 << n) - 1 })
    }

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAXN && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAXN);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAXN);
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An undirected simple graph with `1..=MAXN` vertices.
///
/// Invariants maintained by every constructor and operation:
/// adjacency is symmetric and irreflexive, and all neighbor indices are
/// below the order. `Graph` is `Copy`; nothing mutates in place through
/// the public API.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAXN],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAXN {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: [0; MAXN] })
    }

    /// Build a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// e(G). The degree sum is always even by adjacency symmetry.
    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj[..self.n].iter().map(|a| a.count_ones()).sum();
        (total / 2) as usize
    }

    /// New graph with edge `{u,v}` added; `self` is unchanged.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// New graph with edge `{u,v}` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u.min(v), u.max(v)));
        }
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// All edges as pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let higher = self.adj[u] >> (u + 1);
            for off in VertexSet(higher).iter() {
                out.push((u, u + 1 + off));
            }
        }
        out
    }

    /// All unordered non-adjacent distinct pairs, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced by `set`, relabeled densely. Returns the new graph
    /// together with the relabeling map (new index -> old index, ascending).
    pub fn induced(&self, set: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let members: Vec<usize> = set.iter().collect();
        if let Some(&v) = members.last() {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok((g, members))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.full_set())
    }

    /// Components of the subgraph induced by `allowed`, in original labels.
    /// Useful for cutset checks (components of G - T) without relabeling.
    pub fn components_within(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let mut remaining = allowed.bits() & VertexSet::full(self.n).bits();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            loop {
                let mut frontier = 0u32;
                for v in VertexSet(comp).iter() {
                    frontier |= self.adj[v];
                }
                frontier &= remaining & !comp;
                if frontier == 0 {
                    break;
                }
                comp |= frontier;
            }
            remaining &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Block decomposition of a connected graph: the blocks (maximal
    /// 2-connected subgraphs and bridges) as vertex sets, plus the set of
    /// cut-vertices. Blocks are reported in the order the DFS finishes them.
    pub fn blocks_and_cut_vertices(&self) -> Result<(Vec<VertexSet>, VertexSet), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        if n == 1 {
            // A single vertex has no blocks in the edge sense; report the
            // vertex itself as one trivial block and no cut-vertices.
            return Ok((vec![VertexSet::singleton(0)], VertexSet::EMPTY));
        }

        struct Dfs<'a> {
            g: &'a Graph,
            num: [u32; MAXN],
            low: [u32; MAXN],
            timer: u32,
            edge_stack: Vec<(usize, usize)>,
            blocks: Vec<VertexSet>,
            cuts: VertexSet,
        }

        impl Dfs<'_> {
            fn run(&mut self, v: usize, parent: Option<usize>) {
                self.timer += 1;
                self.num[v] = self.timer;
                self.low[v] = self.timer;
                let mut child_count = 0usize;
                for w in self.g.neighbors(v).iter() {
                    if Some(w) == parent {
                        continue;
                    }
                    if self.num[w] == 0 {
                        child_count += 1;
                        self.edge_stack.push((v, w));
                        self.run(w, Some(v));
                        self.low[v] = self.low[v].min(self.low[w]);
                        if self.low[w] >= self.num[v] {
                            // v separates w's subtree: pop one block.
                            let mut block = VertexSet::EMPTY;
                            while let Some(&(a, b)) = self.edge_stack.last() {
                                if self.num[a] >= self.num[w] {
                                    block.insert(a);
                                    block.insert(b);
                                    self.edge_stack.pop();
                                } else {
                                    break;
                                }
                            }
                            if let Some(&(a, b)) = self.edge_stack.last() {
                                if (a, b) == (v, w) {
                                    block.insert(a);
                                    block.insert(b);
                                    self.edge_stack.pop();
                                }
                            }
                            self.blocks.push(block);
                            if parent.is_some() || child_count > 1 {
                                self.cuts.insert(v);
                            }
                        }
                    } else if self.num[w] < self.num[v] {
                        self.edge_stack.push((v, w));
                        self.low[v] = self.low[v].min(self.num[w]);
                    }
                }
            }
        }

        let mut dfs = Dfs {
            g: self,
            num: [0; MAXN],
            low: [0; MAXN],
            timer: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
            cuts: VertexSet::EMPTY,
        };
        dfs.run(0, None);
        Ok((dfs.blocks, dfs.cuts))
    }

    /// True when `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        for v in set.iter() {
            let others = set.bits() & !(1 << v);
            if self.adj[v] & others != others {
                return false;
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.full_set())
    }

    /// True when every vertex has degree exactly `d`.
    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// Adjacency bits of the pair order used across the crate:
    /// column-major upper triangle (0,1), (0,2), (1,2), (0,3), ...
    /// Bit `k` of the result is 1 iff the `k`-th pair is an edge.
    /// Only defined for graphs whose triangle fits in 64 bits (n <= 11).
    pub fn code_u64(&self) -> u64 {
        debug_assert!(self.n * (self.n - 1) / 2 <= 64);
        let mut code = 0u64;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        code
    }

    /// Inverse of [`Graph::code_u64`] for a given order.
    pub fn from_code_u64(n: usize, code: u64) -> Graph {
        debug_assert!(n >= 1 && n * (n - 1) / 2 <= 64);
        let mut g = Graph { n, adj: [0; MAXN] };
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code & (1 << k) != 0 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        g
    }

    /// Relabel through a permutation: vertex `v` of `self` becomes
    /// `perm[v]` in the result.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [0; MAXN],
        };
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An edge as an ordered pair `u < v`, for reports and JSON output.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge(pub u8, pub u8);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        let (a, b) = (u.min(v), u.max(v));
        Edge(a as u8, b as u8)
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn empty_rejects_bad_order() {
        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::OrderOutOfRange(0));
        assert_eq!(
            Graph::empty(MAXN + 1).unwrap_err(),
            GraphError::OrderOutOfRange(MAXN + 1)
        );
        assert!(Graph::empty(MAXN).is_ok());
    }

    #[test]
    fn add_edge_value_semantics() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.is_complete());
        assert_eq!(p3.add_edge(0, 1).unwrap_err(), GraphError::EdgeExists(0, 1));
        assert_eq!(p3.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop(1));
    }

    #[test]
    fn petersen_plus_edge_degrees() {
        let g = named::petersen();
        let g2 = g.add_edge(0, 2).unwrap();
        assert_eq!(g2.edge_count(), 16);
        let deg4 = g2.vertices().filter(|&v| g2.degree(v) == 4).count();
        let deg3 = g2.vertices().filter(|&v| g2.degree(v) == 3).count();
        assert_eq!((deg4, deg3), (2, 8));
    }

    #[test]
    fn non_edges_examples() {
        let k4 = named::complete(4).unwrap();
        assert!(k4.non_edges().is_empty());
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.non_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(named::petersen().non_edges().len(), 30);
    }

    #[test]
    fn induced_examples() {
        let k5 = named::complete(5).unwrap();
        let (sub, map) = k5.induced([0, 2, 4].into_iter().collect()).unwrap();
        assert!(sub.is_complete());
        assert_eq!(sub.n(), 3);
        assert_eq!(map, vec![0, 2, 4]);

        // Outer five vertices of the Petersen graph induce C5.
        let p = named::petersen();
        let (outer, _) = p.induced(VertexSet::from_bits(0b11111)).unwrap();
        assert_eq!(outer, named::cycle(5).unwrap());

        // Inducing on the whole vertex set is the identity.
        let (same, _) = p.induced(p.full_set()).unwrap();
        assert_eq!(same, p);

        assert_eq!(
            k5.induced(VertexSet::EMPTY).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn components_examples() {
        let g = named::complete(3)
            .unwrap()
            .disjoint_union(&named::complete(2).unwrap())
            .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[1].len(), 2);

        assert_eq!(named::petersen().components().len(), 1);

        // P5 minus its middle vertex: two parts of size 2.
        let p5 = named::path(5).unwrap();
        let without_mid = p5.full_set().difference(VertexSet::singleton(2));
        let comps = p5.components_within(without_mid);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn blocks_examples() {
        let p4 = named::path(4).unwrap();
        let (blocks, cuts) = p4.blocks_and_cut_vertices().unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(cuts.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 2));

        let k5 = named::complete(5).unwrap();
        let (blocks, cuts) = k5.blocks_and_cut_vertices().unwrap();
        assert_eq!(blocks.len(), 1);
        assert!(cuts.is_empty());

        let paw = named::paw();
        let (blocks, cuts) = paw.blocks_and_cut_vertices().unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(cuts.len(), 1);

        let two = named::complete(2)
            .unwrap()
            .disjoint_union(&named::complete(2).unwrap())
            .unwrap();
        assert_eq!(
            two.blocks_and_cut_vertices().unwrap_err(),
            GraphError::Disconnected
        );
    }

    #[test]
    fn degree_sum_even() {
        for g in [
            named::petersen(),
            named::paw(),
            named::path(7).unwrap(),
            named::star(5).unwrap(),
        ] {
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(sum % 2, 0);
            assert_eq!(sum / 2, g.edge_count());
        }
    }

    #[test]
    fn code_roundtrip() {
        let g = named::petersen();
        assert_eq!(Graph::from_code_u64(10, g.code_u64()), g);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s: VertexSet = [3, 1, 7].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 7]);
        s.remove(3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.min(), Some(1));
        assert_eq!(format!("{s:?}"), "{1,7}");
    }
}
