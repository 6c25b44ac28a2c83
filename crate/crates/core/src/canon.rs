//! Exact canonical forms for small graphs.
//!
//! The canonical form of a graph is the relabeling whose upper-triangle
//! adjacency bit string — pairs ordered (0,1), (0,2), (1,2), (0,3), ... —
//! is lexicographically least over all vertex permutations. The search is
//! an exact branch-and-bound over labelings, column by column, with one
//! sound reduction: vertices with identical neighborhoods (twins, adjacent
//! or not) are interchangeable, so only the least unplaced member of a
//! twin class is ever tried at a position.
//!
//! The same machinery answers the canonicity question needed by orderly
//! generation: whether the identity labeling attains the lexicographically
//! greatest bit string.

use crate::graph::{Graph, MAXN};

/// Largest order whose upper triangle fits the u64 code space.
pub const CANON_MAX_N: usize = 11;

fn twin_classes(g: &Graph) -> [u8; MAXN] {
    let n = g.n();
    let mut class = [0u8; MAXN];
    for (v, c) in class.iter_mut().enumerate().take(n) {
        *c = v as u8;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if class[v] != v as u8 {
                continue;
            }
            let (au, av) = (g.neighbors(u).bits(), g.neighbors(v).bits());
            let pair = (1u32 << u) | (1u32 << v);
            let twins = au == av || (g.has_edge(u, v) && (au & !pair) == (av & !pair));
            if twins && class[u] == u as u8 {
                class[v] = u as u8;
            }
        }
    }
    class
}

/// Column value of candidate vertex `v` at position `k`: adjacency bits to
/// the already placed vertices, earliest position most significant.
#[inline]
fn column(pos_mask: u32, k: usize) -> u32 {
    let masked = pos_mask & ((1u32 << k) - 1);
    if k == 0 {
        0
    } else {
        masked.reverse_bits() >> (32 - k)
    }
}

struct Placement<'a> {
    g: &'a Graph,
    n: usize,
    class: [u8; MAXN],
    /// bit j of pos_mask[v]: v is adjacent to the vertex placed at position j
    pos_mask: [u32; MAXN],
    placed: u32,
    order: [usize; MAXN],
}

impl<'a> Placement<'a> {
    fn new(g: &'a Graph) -> Self {
        Placement {
            g,
            n: g.n(),
            class: twin_classes(g),
            pos_mask: [0; MAXN],
            placed: 0,
            order: [0; MAXN],
        }
    }

    fn place(&mut self, v: usize, k: usize) {
        self.order[k] = v;
        self.placed |= 1 << v;
        for w in self.g.neighbors(v).iter() {
            self.pos_mask[w] |= 1 << k;
        }
    }

    fn unplace(&mut self, v: usize, k: usize) {
        self.placed &= !(1 << v);
        for w in self.g.neighbors(v).iter() {
            self.pos_mask[w] &= !(1 << k);
        }
    }

    /// Skip `v` when a lesser unplaced twin exists; trying both would
    /// explore identical codes twice.
    fn twin_skip(&self, v: usize) -> bool {
        let c = self.class[v];
        for u in 0..v {
            if self.class[u] == c && self.placed & (1 << u) == 0 {
                return true;
            }
        }
        false
    }
}

struct MinSearch<'a> {
    p: Placement<'a>,
    total_bits: u32,
    best: u64,
    best_order: [usize; MAXN],
}

impl MinSearch<'_> {
    fn dfs(&mut self, k: usize, prefix: u64, bits_used: u32) {
        let n = self.p.n;
        if k == n {
            if prefix < self.best {
                self.best = prefix;
                self.best_order = self.p.order;
            }
            return;
        }
        let mut cands: Vec<(u32, usize)> = Vec::with_capacity(n - k);
        for v in 0..n {
            if self.p.placed & (1 << v) != 0 || self.p.twin_skip(v) {
                continue;
            }
            cands.push((column(self.p.pos_mask[v], k), v));
        }
        cands.sort_unstable();
        for (col, v) in cands {
            let new_bits = bits_used + k as u32;
            let new_prefix = (prefix << k) | col as u64;
            let best_prefix = self.best >> (self.total_bits - new_bits);
            if new_prefix > best_prefix {
                break; // sorted ascending: nothing later can improve
            }
            self.p.place(v, k);
            self.dfs(k + 1, new_prefix, new_bits);
            self.p.unplace(v, k);
        }
    }
}

/// Canonical form: the lexicographically-least relabeling of `g`.
/// Supported for n <= [`CANON_MAX_N`].
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    assert!(
        n <= CANON_MAX_N,
        "canonical form supported for n <= {CANON_MAX_N}, got {n}"
    );
    if n == 1 {
        return *g;
    }
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut search = MinSearch {
        p: Placement::new(g),
        total_bits,
        best: u64::MAX,
        best_order: [0; MAXN],
    };
    search.dfs(0, 0, 0);
    let mut perm = [0usize; MAXN];
    for k in 0..n {
        perm[search.best_order[k]] = k;
    }
    g.permuted(&perm[..n])
}

/// Stable u64 key of the canonical form; equal iff isomorphic (n <= 11).
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).code_u64()
}

/// Is the identity labeling the lexicographically greatest bit string?
/// This is the canonicity test used by the orderly generator.
pub(crate) fn is_max_canonical(g: &Graph) -> bool {
    let n = g.n();
    if n == 1 {
        return true;
    }
    // Target columns of the identity labeling.
    let mut target = [0u32; MAXN];
    for (k, t) in target.iter_mut().enumerate().take(n) {
        *t = column(g.neighbors(k).bits(), k);
    }

    struct MaxSearch<'a> {
        p: Placement<'a>,
        target: [u32; MAXN],
    }

    enum Verdict {
        BetterExists,
        NoneHere,
    }

    impl MaxSearch<'_> {
        fn dfs(&mut self, k: usize) -> Verdict {
            let n = self.p.n;
            if k == n {
                return Verdict::NoneHere; // automorphism: ties everywhere
            }
            let mut cands: Vec<(u32, usize)> = Vec::with_capacity(n - k);
            for v in 0..n {
                if self.p.placed & (1 << v) != 0 || self.p.twin_skip(v) {
                    continue;
                }
                cands.push((column(self.p.pos_mask[v], k), v));
            }
            cands.sort_unstable_by(|a, b| b.cmp(a)); // descending
            for (col, v) in cands {
                if col > self.target[k] {
                    return Verdict::BetterExists;
                }
                if col < self.target[k] {
                    break; // descending: all later are smaller
                }
                self.p.place(v, k);
                let verdict = self.dfs(k + 1);
                self.p.unplace(v, k);
                if matches!(verdict, Verdict::BetterExists) {
                    return Verdict::BetterExists;
                }
            }
            Verdict::NoneHere
        }
    }

    let mut search = MaxSearch {
        p: Placement::new(g),
        target,
    };
    matches!(search.dfs(0), Verdict::NoneHere)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = named::paw();
        let perms = [[0, 1, 2, 3], [3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]];
        let forms: Vec<Graph> = perms.iter().map(|p| canonical_form(&g.permuted(p))).collect();
        for f in &forms {
            assert_eq!(f, &forms[0]);
        }
    }

    #[test]
    fn canonical_separates_non_isomorphic() {
        // The three 4-vertex, 3-edge classes.
        let p4 = named::path(4).unwrap();
        let k3_plus_isolated = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let star = named::star(3).unwrap();
        let codes = [
            canonical_code(&p4),
            canonical_code(&k3_plus_isolated),
            canonical_code(&star),
        ];
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[0], codes[2]);
        assert_ne!(codes[1], codes[2]);
    }

    #[test]
    fn petersen_relabelings_share_code() {
        let p = named::petersen();
        let sigma: Vec<usize> = vec![4, 7, 1, 9, 0, 3, 8, 2, 6, 5];
        assert_eq!(canonical_code(&p), canonical_code(&p.permuted(&sigma)));
    }

    #[test]
    fn max_canonical_small_cases() {
        // Empty graphs and complete graphs are canonical under any order.
        assert!(is_max_canonical(&Graph::empty(5).unwrap()));
        assert!(is_max_canonical(&named::complete(4).unwrap()));
        // A single edge is max-canonical only at pair (0,1).
        assert!(is_max_canonical(&Graph::from_edges(3, &[(0, 1)]).unwrap()));
        assert!(!is_max_canonical(&Graph::from_edges(3, &[(0, 2)]).unwrap()));
        assert!(!is_max_canonical(&Graph::from_edges(3, &[(1, 2)]).unwrap()));
    }

    #[test]
    fn twin_collapse_keeps_exactness() {
        // Star: all leaves are twins; every relabeling canonicalizes alike.
        let s = named::star(6).unwrap();
        let rotated = s.permuted(&[6, 0, 1, 2, 3, 4, 5]);
        assert_eq!(canonical_form(&s), canonical_form(&rotated));
    }
}
