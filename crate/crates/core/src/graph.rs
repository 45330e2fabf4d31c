//! Bit-matrix graphs and the primitive structural queries everything else
//! builds on.
//!
//! A [`Graph`] is an undirected simple graph on at most [`MAX_VERTICES`]
//! vertices; each vertex owns one `u128` adjacency row, so neighborhood
//! intersections, component scans and backtracking candidate sets are all
//! single word operations at desk scale.

use std::fmt;

/// Hard vertex cap. One bit row per vertex keeps every containment kernel
/// word-parallel; all desk-scale work fits comfortably.
pub const MAX_VERTICES: usize = 128;

// ============================================================================
// VertexSet
// ============================================================================

/// A subset of the vertices `0..n-1` of some host graph, stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest-index member, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
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

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Undirected simple graph with contiguous vertex labels `0..n-1`.
///
/// Adjacency rows are kept symmetric with an empty diagonal by construction;
/// every operation treats the graph as an immutable value once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` is zero or exceeds [`MAX_VERTICES`]; external inputs are
    /// validated at their ingestion points (graph6 decoding, family parsing).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph must have at least one vertex");
        assert!(n <= MAX_VERTICES, "vertex cap is {MAX_VERTICES}, got {n}");
        Graph {
            n,
            rows: vec![0u128; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    #[inline]
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert!(u != v, "self-loop at {u}");
        self.rows[u] |= 1u128 << v;
        self.rows[v] |= 1u128 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n);
        self.rows[u] &= !(1u128 << v);
        self.rows[v] &= !(1u128 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v] | (1u128 << v))
    }

    /// Set of vertices adjacent to at least one member of `a`.
    pub fn neighborhood_of_set(&self, a: VertexSet) -> VertexSet {
        let mut out = 0u128;
        for v in a.iter() {
            out |= self.rows[v];
        }
        VertexSet(out)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut bits = self.rows[u] >> (u + 1) << (u + 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Complement: edge `uv` present iff absent here, `u != v`. An involution.
    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).0;
        let rows = (0..self.n)
            .map(|v| (!self.rows[v] & mask) & !(1u128 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    // ------------------------------------------------------------------
    // Connectivity
    // ------------------------------------------------------------------

    /// Vertices reachable from `start` while staying inside `within`.
    /// `start` must itself be in `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u128;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.rows[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.all_vertices()).len() == self.n
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.all_vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reach(v, remaining);
            remaining = remaining.minus(comp);
            out.push(comp);
        }
        out
    }

    pub fn max_component_size(&self) -> usize {
        self.components().iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Two-colors each component; `None` if an odd cycle is found.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![usize::MAX; self.n];
        let mut sides = (VertexSet::EMPTY, VertexSet::EMPTY);
        for start in 0..self.n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v).iter() {
                    if color[w] == usize::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        for v in 0..self.n {
            if color[v] == 0 {
                sides.0.insert(v);
            } else {
                sides.1.insert(v);
            }
        }
        Some(sides)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    // ------------------------------------------------------------------
    // Subgraphs
    // ------------------------------------------------------------------

    /// Induced subgraph on `keep`, relabeled compactly in ascending original
    /// order. Returns the subgraph and the original label of each new vertex.
    ///
    /// Panics if `keep` is empty (a graph has at least one vertex).
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let labels = keep.to_vec();
        assert!(!labels.is_empty(), "induced subgraph must be non-empty");
        let mut g = Graph::new(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, labels)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "union exceeds vertex cap");
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    // ------------------------------------------------------------------
    // Leaves, supports, suspended paths
    // ------------------------------------------------------------------

    /// Vertices of degree exactly 1.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf. In `K_2` both endpoints are
    /// leaves and both are supports; callers that care must special-case it.
    pub fn support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.n)
            .filter(|&v| !self.neighbors(v).intersect(leaves).is_empty())
            .collect()
    }

    /// Whether this graph is a star `K_{1,n-1}` (including `K_2`).
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edge_count() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// All maximal suspended paths, plus any components that are bare cycles.
    ///
    /// A suspended path is a path whose internal vertices all have degree 2
    /// in the host graph. Maximal ones are cut at vertices of degree != 2;
    /// a component in which *every* vertex has degree 2 has no such cut
    /// vertex and is reported separately as a degenerate whole-cycle case.
    pub fn suspended_paths(&self) -> SuspendedPaths {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let branch: VertexSet = (0..self.n).filter(|&v| self.degree(v) != 2).collect();
        let mut on_chain = VertexSet::EMPTY;

        for u in branch.iter() {
            for w in self.neighbors(u).iter() {
                // Walk from u through degree-2 vertices until the next
                // branch vertex (possibly u itself, closing a cycle).
                let mut chain = vec![u, w];
                let (mut prev, mut cur) = (u, w);
                while self.degree(cur) == 2 && cur != u {
                    let step = self
                        .neighbors(cur)
                        .iter()
                        .find(|&x| x != prev)
                        .expect("degree-2 vertex has two neighbors");
                    chain.push(step);
                    prev = cur;
                    cur = step;
                }
                for &v in &chain {
                    if self.degree(v) == 2 {
                        on_chain.insert(v);
                    }
                }
                let last = *chain.last().unwrap();
                if last == u {
                    // One-branch cycle: u, c1, ..., cm, u. Report the open
                    // path u..cm once, oriented toward the smaller first step.
                    let m = chain.len() - 1;
                    if chain[1] < chain[m - 1] {
                        chain.pop();
                        paths.push(chain);
                    }
                } else {
                    // Open chain between two branch vertices; discovered once
                    // from each end, keep the lexicographically smaller head.
                    if (u, w) <= (last, chain[chain.len() - 2]) {
                        paths.push(chain);
                    }
                }
            }
        }

        // Components made entirely of degree-2 vertices are cycles that no
        // branch walk reaches.
        let mut missed = self
            .all_vertices()
            .minus(branch)
            .minus(on_chain);
        while let Some(start) = missed.first() {
            let mut cyc = vec![start];
            let (mut prev, mut cur) = (start, self.neighbors(start).first().unwrap());
            while cur != start {
                cyc.push(cur);
                let step = self
                    .neighbors(cur)
                    .iter()
                    .find(|&x| x != prev)
                    .expect("degree-2 vertex has two neighbors");
                prev = cur;
                cur = step;
            }
            for &v in &cyc {
                missed.remove(v);
            }
            cycles.push(cyc);
        }

        SuspendedPaths { paths, cycles }
    }

    /// Vertex count of the longest suspended path. A degenerate whole-cycle
    /// component counts with its full vertex count. Falls back to 1 for
    /// graphs with no reported path (a lone vertex is trivially a path).
    pub fn max_suspended_path_size(&self) -> usize {
        let sp = self.suspended_paths();
        sp.paths
            .iter()
            .map(Vec::len)
            .chain(sp.cycles.iter().map(Vec::len))
            .max()
            .unwrap_or(1)
    }
}

/// Output of [`Graph::suspended_paths`].
#[derive(Clone, Debug)]
pub struct SuspendedPaths {
    /// Maximal suspended paths as vertex sequences (at least 2 vertices).
    pub paths: Vec<Vec<usize>>,
    /// Components in which every vertex has degree 2, listed in cycle order.
    pub cycles: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn complement_of_triangle_is_empty() {
        let g = families::complete(3).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn complement_is_involution_on_p4() {
        let p4 = families::path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn complement_of_two_k4_is_k44() {
        let g = families::complete(4).disjoint_union(&families::complete(4));
        let c = g.complement();
        // K_{4,4}: bipartite, 16 edges, every degree 4.
        assert_eq!(c.edge_count(), 16);
        assert!(c.is_bipartite());
        assert!((0..8).all(|v| c.degree(v) == 4));
    }

    #[test]
    fn components_and_connectivity() {
        let g = families::path(3).disjoint_union(&families::cycle(4));
        assert!(!g.is_connected());
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[1].len(), 4);
        assert!(families::path(7).is_connected());
    }

    #[test]
    fn star_has_leaves_and_one_support() {
        let g = families::star(8); // K_{1,7}
        assert_eq!(g.leaves().len(), 7);
        assert_eq!(g.support_vertices().len(), 1);
        assert!(g.is_star());
    }

    #[test]
    fn spider_supports() {
        let g = families::spider(3, 2);
        assert_eq!(g.n(), 7);
        assert_eq!(g.leaves().len(), 3);
        assert_eq!(g.support_vertices().len(), 3);
    }

    #[test]
    fn cycle_has_no_leaves() {
        let g = families::cycle(6);
        assert!(g.leaves().is_empty());
        assert!(g.support_vertices().is_empty());
    }

    #[test]
    fn k2_leaf_convention() {
        let g = families::complete(2);
        assert_eq!(g.leaves().len(), 2);
        assert_eq!(g.support_vertices().len(), 2);
    }

    #[test]
    fn suspended_path_of_path_is_whole_path() {
        let sp = families::path(6).suspended_paths();
        assert_eq!(sp.paths.len(), 1);
        assert_eq!(sp.paths[0].len(), 6);
        assert!(sp.cycles.is_empty());
        assert_eq!(families::path(6).max_suspended_path_size(), 6);
    }

    #[test]
    fn suspended_paths_of_spider_are_legs() {
        let g = families::spider(3, 2);
        let sp = g.suspended_paths();
        assert_eq!(sp.paths.len(), 3);
        assert!(sp.paths.iter().all(|p| p.len() == 3));
        assert_eq!(g.max_suspended_path_size(), 3);
    }

    #[test]
    fn cycle_reports_degenerate_whole_cycle() {
        let g = families::cycle(8);
        let sp = g.suspended_paths();
        assert!(sp.paths.is_empty());
        assert_eq!(sp.cycles.len(), 1);
        assert_eq!(sp.cycles[0].len(), 8);
        assert_eq!(g.max_suspended_path_size(), 8);
    }

    #[test]
    fn one_branch_cycle_reported_once() {
        // Triangle 0-1-2 with a pendant 3 attached at 0.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        let sp = g.suspended_paths();
        // The pendant edge and the opened cycle.
        assert_eq!(sp.paths.len(), 2);
        assert_eq!(g.max_suspended_path_size(), 3);
        // Every reported path has internal degrees exactly 2.
        for p in &sp.paths {
            for &v in &p[1..p.len() - 1] {
                assert_eq!(g.degree(v), 2);
            }
        }
    }

    #[test]
    fn k4_suspended_paths_are_single_edges() {
        let g = families::complete(4);
        let sp = g.suspended_paths();
        assert_eq!(sp.paths.len(), 6);
        assert!(sp.paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn induced_relabels_compactly() {
        let g = families::path(5);
        let keep: VertexSet = [0, 2, 3].into_iter().collect();
        let (h, labels) = g.induced(keep);
        assert_eq!(labels, vec![0, 2, 3]);
        assert_eq!(h.n(), 3);
        assert!(h.has_edge(1, 2)); // 2-3 in the original
        assert!(!h.has_edge(0, 1)); // 0-2 not adjacent in P_5
    }
}
