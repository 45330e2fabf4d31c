//! Structural analyses: sparsity profiles, the minimum independence number
//! over deleted closed neighborhoods, divisibility correction, leaf lower
//! bounds, end-edge matchings, suspended-path surgery and degree peeling.

use crate::graph::{Graph, VertexSet};
use crate::independence::independence_number_within;
use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

/// Exact rational used for every bound and threshold; no floating point
/// anywhere, so divisibility and hypothesis checks are bit-exact.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    NotConnected,
    IsStar,
    TooSmall { n: usize },
    /// Every vertex has degree 2: the graph is a cycle, which the reduction
    /// premise excludes (the degenerate whole-cycle suspended path).
    CycleInput,
    InvalidMatching(String),
    InvalidPath(String),
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::NotConnected => write!(f, "input graph must be connected"),
            StructureError::IsStar => write!(f, "input graph must not be a star"),
            StructureError::TooSmall { n } => {
                write!(f, "input graph has {n} vertices; at least 3 required")
            }
            StructureError::CycleInput => {
                write!(f, "input graph is a cycle (degenerate suspended path)")
            }
            StructureError::InvalidMatching(msg) => write!(f, "invalid matching: {msg}"),
            StructureError::InvalidPath(msg) => write!(f, "invalid suspended path: {msg}"),
        }
    }
}

impl std::error::Error for StructureError {}

// ============================================================================
// Profile
// ============================================================================

/// Aggregated sparsity statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparsityProfile {
    pub n: usize,
    pub e: usize,
    /// `e - n`; -1 for trees, 0 for unicyclic graphs.
    pub excess: i64,
    pub connected: bool,
    pub is_star: bool,
    pub leaf_count: usize,
    /// Support-vertex count: vertices adjacent to at least one leaf.
    pub p: usize,
    /// Vertex count of the longest suspended path (whole cycle when the
    /// graph is a bare cycle).
    pub max_susp: usize,
}

pub fn profile(g: &Graph) -> SparsityProfile {
    SparsityProfile {
        n: g.n(),
        e: g.edge_count(),
        excess: g.edge_count() as i64 - g.n() as i64,
        connected: g.is_connected(),
        is_star: g.is_star(),
        leaf_count: g.leaves().len(),
        p: g.support_vertices().len(),
        max_susp: g.max_suspended_path_size(),
    }
}

/// True iff `e(g) <= (1 + 1/(c k^2)) n`, evaluated in exact rationals.
pub fn sparsity_ok(g: &Graph, k: usize, c: Rational) -> bool {
    assert!(k >= 2, "sparsity condition needs k >= 2");
    assert!(c > Rational::zero(), "sparsity constant must be positive");
    let n = Rational::from_integer(g.n() as i128);
    let e = Rational::from_integer(g.edge_count() as i128);
    let k2 = Rational::from_integer((k * k) as i128);
    e <= n + n / (c * k2)
}

// ============================================================================
// alpha' and gamma
// ============================================================================

/// Minimum over all vertices `v` of the independence number of the graph
/// obtained by deleting `v` together with its whole neighborhood.
/// The empty remainder counts as 0, so stars evaluate to 0.
pub fn alpha_prime(g: &Graph) -> usize {
    g.vertices()
        .map(|v| {
            let rest = g.all_vertices().minus(g.closed_neighborhood(v));
            independence_number_within(g, rest)
        })
        .min()
        .expect("graph has at least one vertex")
}

/// Divisibility correction: 0 iff `k-1` divides `n + k - 3 - alpha_prime`.
pub fn gamma(n: usize, k: usize, alpha_prime: usize) -> u8 {
    assert!(k >= 2);
    assert!(alpha_prime < n);
    let m = n as i64 + k as i64 - 3 - alpha_prime as i64;
    if m.rem_euclid(k as i64 - 1) == 0 {
        0
    } else {
        1
    }
}

// ============================================================================
// Leaf bounds
// ============================================================================

/// The two leaf lower bounds for a connected non-star graph with no
/// suspended path on more than `s` vertices:
/// `n - (s-1)(2p + 3t) - 1` and `(n - 3(s-1)t - 1) / (2s - 1)`.
///
/// Signed arithmetic throughout (`t` is -1 for trees); the second bound is
/// returned as an exact rational, never floored silently.
pub fn leaf_bounds(prof: &SparsityProfile, s: usize) -> (i64, Rational) {
    assert!(s >= 2, "suspended-path parameter must be at least 2");
    assert!(prof.n >= s + 1, "need n >= s + 1");
    let n = prof.n as i64;
    let t = prof.excess;
    let p = prof.p as i64;
    let s = s as i64;
    let bound1 = n - (s - 1) * (2 * p + 3 * t) - 1;
    let bound2 = Rational::new((n - 3 * (s - 1) * t - 1) as i128, (2 * s - 1) as i128);
    (bound1, bound2)
}

// ============================================================================
// End-edge matchings and leaf removal
// ============================================================================

/// `l` pairwise-disjoint end-edges as `(support, leaf)` pairs, or `None`.
/// One leaf per support vertex; exists iff the support count reaches `l`
/// (with the lone exception of `K_2`, where the two end-edges coincide).
pub fn end_edge_matching(g: &Graph, l: usize) -> Option<Vec<(usize, usize)>> {
    assert!(l >= 1);
    let leaves = g.leaves();
    let mut used = VertexSet::EMPTY;
    let mut out = Vec::with_capacity(l);
    for s in g.support_vertices().iter() {
        if used.contains(s) {
            continue;
        }
        if let Some(leaf) = g.neighbors(s).intersect(leaves).minus(used).first() {
            out.push((s, leaf));
            used.insert(s);
            used.insert(leaf);
            if out.len() == l {
                return Some(out);
            }
        }
    }
    None
}

/// Removes the leaf endpoint of each matched end-edge; the survivors keep
/// their relative order under compact relabeling.
pub fn remove_matched_leaves(
    g: &Graph,
    matching: &[(usize, usize)],
) -> Result<Graph, StructureError> {
    let leaves = g.leaves();
    let mut seen = VertexSet::EMPTY;
    for &(s, leaf) in matching {
        if s >= g.n() || leaf >= g.n() || !g.has_edge(s, leaf) {
            return Err(StructureError::InvalidMatching(format!(
                "({s},{leaf}) is not an edge"
            )));
        }
        if !leaves.contains(leaf) {
            return Err(StructureError::InvalidMatching(format!(
                "{leaf} is not a leaf"
            )));
        }
        if seen.contains(s) || seen.contains(leaf) {
            return Err(StructureError::InvalidMatching(format!(
                "({s},{leaf}) overlaps another matched edge"
            )));
        }
        seen.insert(s);
        seen.insert(leaf);
    }
    let drop: VertexSet = matching.iter().map(|&(_, leaf)| leaf).collect();
    let keep = g.all_vertices().minus(drop);
    if keep.is_empty() {
        return Err(StructureError::InvalidMatching(
            "removal would empty the graph".into(),
        ));
    }
    Ok(g.induced(keep).0)
}

// ============================================================================
// Suspended-path surgery
// ============================================================================

fn validate_suspended_path(g: &Graph, path: &[usize]) -> Result<(), StructureError> {
    if path.len() < 2 {
        return Err(StructureError::InvalidPath("need at least 2 vertices".into()));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in path {
        if v >= g.n() {
            return Err(StructureError::InvalidPath(format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(StructureError::InvalidPath(format!("vertex {v} repeats")));
        }
        seen.insert(v);
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(StructureError::InvalidPath(format!(
                "({},{}) is not an edge",
                w[0], w[1]
            )));
        }
    }
    for &v in &path[1..path.len() - 1] {
        if g.degree(v) != 2 {
            return Err(StructureError::InvalidPath(format!(
                "internal vertex {v} has degree {}",
                g.degree(v)
            )));
        }
    }
    Ok(())
}

/// Shortens a suspended path by removing `d` of its internal vertices and
/// reconnecting; the result has exactly `n - d` vertices and stays connected
/// wherever the input was. Requires `d` strictly below the internal count.
pub fn shorten_suspended(g: &Graph, path: &[usize], d: usize) -> Result<Graph, StructureError> {
    validate_suspended_path(g, path)?;
    let internals = path.len() - 2;
    if d == 0 {
        return Ok(g.clone());
    }
    if d >= internals {
        return Err(StructureError::InvalidPath(format!(
            "cannot shorten by {d}: only {internals} internal vertices"
        )));
    }
    let drop: VertexSet = path[1..=d].iter().copied().collect();
    let keep = g.all_vertices().minus(drop);
    let (mut h, labels) = g.induced(keep);
    // Reconnect the cut: path[0] to the first surviving internal vertex.
    let a = labels.iter().position(|&x| x == path[0]).unwrap();
    let b = labels.iter().position(|&x| x == path[d + 1]).unwrap();
    h.add_edge(a, b);
    Ok(h)
}

/// Lengthens a suspended path by subdividing its first edge `d` times; the
/// new internal vertices take labels `n..n+d`. Inverse of shortening, up to
/// isomorphism.
pub fn lengthen_suspended(g: &Graph, path: &[usize], d: usize) -> Result<Graph, StructureError> {
    validate_suspended_path(g, path)?;
    if d == 0 {
        return Ok(g.clone());
    }
    let n = g.n();
    let mut h = Graph::new(n + d);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    h.remove_edge(path[0], path[1]);
    let mut prev = path[0];
    for i in 0..d {
        h.add_edge(prev, n + i);
        prev = n + i;
    }
    h.add_edge(prev, path[1]);
    Ok(h)
}

// ============================================================================
// Degree peeling
// ============================================================================

/// Repeatedly removes a vertex of degree at least `d` inside the surviving
/// set (lowest label among those of maximum degree), until none remains.
/// Returns the survivors and the number of removal steps; afterwards the
/// induced maximum degree is below `d` and each step removed at least `d`
/// edges, so `steps <= e(g)/d`.
pub fn peel_high_degree(g: &Graph, d: Rational) -> (VertexSet, usize) {
    assert!(d > Rational::zero());
    let mut surviving = g.all_vertices();
    let mut steps = 0;
    loop {
        let mut best: Option<(usize, usize)> = None; // (degree, vertex)
        for v in surviving.iter() {
            let deg = g.neighbors(v).intersect(surviving).len();
            if Rational::from_integer(deg as i128) >= d {
                best = match best {
                    Some((bd, bv)) if bd >= deg => Some((bd, bv)),
                    _ => Some((deg, v)),
                };
            }
        }
        match best {
            Some((_, v)) => {
                surviving.remove(v);
                steps += 1;
            }
            None => return (surviving, steps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn profile_of_path_five() {
        let p = profile(&families::path(5));
        assert_eq!(
            (p.n, p.e, p.excess, p.leaf_count, p.p, p.max_susp),
            (5, 4, -1, 2, 2, 5)
        );
        assert!(p.connected && !p.is_star);
    }

    #[test]
    fn profile_of_spider() {
        let p = profile(&families::spider(3, 2));
        assert_eq!(
            (p.n, p.e, p.excess, p.leaf_count, p.p, p.max_susp),
            (7, 6, -1, 3, 3, 3)
        );
    }

    #[test]
    fn profile_of_k4() {
        let p = profile(&families::complete(4));
        assert_eq!((p.excess, p.leaf_count, p.p), (2, 0, 0));
    }

    #[test]
    fn trees_always_sparse() {
        for g in [families::path(9), families::spider(4, 2), families::star(12)] {
            for k in 2..6 {
                assert!(sparsity_ok(&g, k, Rational::from_integer(117)));
            }
        }
    }

    #[test]
    fn sparsity_threshold_is_exact() {
        // Unicyclic-plus-one-chord on 36 vertices: e = n + 1. With k = 3 and
        // c = 4 the allowance n/(c k^2) = 36/36 is exactly 1, so the check
        // holds with equality; one more edge breaks it.
        let mut g = families::cycle(36);
        g.add_edge(0, 18);
        assert!(sparsity_ok(&g, 3, Rational::from_integer(4)));
        g.add_edge(1, 19);
        assert!(!sparsity_ok(&g, 3, Rational::from_integer(4)));
        assert!(!sparsity_ok(&families::complete(4), 3, Rational::from_integer(117)));
    }

    #[test]
    fn alpha_prime_of_star_is_zero() {
        for n in [3, 5, 9] {
            assert_eq!(alpha_prime(&families::star(n)), 0);
        }
    }

    #[test]
    fn alpha_prime_of_path_five() {
        assert_eq!(alpha_prime(&families::path(5)), 1);
    }

    #[test]
    fn alpha_prime_of_c6() {
        // Every deleted closed neighborhood leaves P_3 with independence 2.
        assert_eq!(alpha_prime(&families::cycle(6)), 2);
    }

    #[test]
    fn gamma_divisibility() {
        assert_eq!(gamma(9, 4, 1), 0); // 3 | 9
        assert_eq!(gamma(10, 4, 1), 1); // 3 does not divide 10
        assert_eq!(gamma(11, 3, 0), 1); // 2 does not divide 11
    }

    #[test]
    fn leaf_bounds_spider() {
        let p = profile(&families::spider(3, 2));
        let (b1, b2) = leaf_bounds(&p, 3);
        assert_eq!(b1, 0); // 7 - 2*(6 - 3) - 1
        assert_eq!(b2, Rational::new(12, 5)); // (7 + 6 - 1)/5
        assert!(p.leaf_count as i64 >= b1);
        assert!(Rational::from_integer(p.leaf_count as i128) >= b2);
    }

    #[test]
    fn leaf_bounds_broom() {
        let g = families::broom(4, 3);
        let p = profile(&g);
        let (b1, b2) = leaf_bounds(&p, 4);
        assert!(p.leaf_count as i64 >= b1);
        assert!(Rational::from_integer(p.leaf_count as i128) >= b2);
    }

    #[test]
    fn end_edge_matching_spider() {
        let g = families::spider(3, 2);
        let m = end_edge_matching(&g, 3).unwrap();
        assert_eq!(m.len(), 3);
        let mut used = VertexSet::EMPTY;
        for (s, leaf) in m {
            assert!(g.has_edge(s, leaf));
            assert_eq!(g.degree(leaf), 1);
            assert!(!used.contains(s) && !used.contains(leaf));
            used.insert(s);
            used.insert(leaf);
        }
    }

    #[test]
    fn star_end_edges_share_the_hub() {
        assert!(end_edge_matching(&families::star(6), 2).is_none());
        assert!(end_edge_matching(&families::star(6), 1).is_some());
    }

    #[test]
    fn path_has_two_end_edges() {
        let m = end_edge_matching(&families::path(4), 2).unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn remove_matched_leaves_from_spider_gives_star() {
        let g = families::spider(3, 2);
        let m = end_edge_matching(&g, 3).unwrap();
        let h = remove_matched_leaves(&g, &m).unwrap();
        assert_eq!(h.n(), 4);
        assert!(h.is_star());
    }

    #[test]
    fn shorten_p10_by_3_gives_p7() {
        let g = families::path(10);
        let path: Vec<usize> = (0..10).collect();
        let h = shorten_suspended(&g, &path, 3).unwrap();
        assert_eq!(h.n(), 7);
        assert!(h.is_connected());
        assert_eq!(h.edge_count(), 6);
        assert_eq!(h.leaves().len(), 2);
        assert_eq!(h.max_suspended_path_size(), 7);
    }

    #[test]
    fn shorten_rejects_removing_all_internals() {
        let g = families::path(4);
        let path: Vec<usize> = (0..4).collect();
        assert!(shorten_suspended(&g, &path, 2).is_err());
        assert!(shorten_suspended(&g, &path, 1).is_ok());
    }

    #[test]
    fn surgery_preserves_vertex_counts() {
        let g = families::spider(3, 4);
        let sp = g.suspended_paths();
        let leg = sp.paths.iter().find(|p| p.len() == 5).unwrap().clone();
        let shorter = shorten_suspended(&g, &leg, 2).unwrap();
        assert_eq!(shorter.n(), g.n() - 2);
        let longer = lengthen_suspended(&g, &leg, 2).unwrap();
        assert_eq!(longer.n(), g.n() + 2);
        assert!(longer.is_connected());
    }

    #[test]
    fn peel_k5_with_threshold_3() {
        let (s, steps) = peel_high_degree(&families::complete(5), Rational::from_integer(3));
        assert_eq!(s.len(), 3);
        assert_eq!(steps, 2);
        assert!(Rational::from_integer(steps as i128) <= Rational::new(10, 3));
    }

    #[test]
    fn peel_empty_graph_is_noop() {
        let g = Graph::new(6);
        let (s, steps) = peel_high_degree(&g, Rational::from_integer(1));
        assert_eq!(s.len(), 6);
        assert_eq!(steps, 0);
    }

    #[test]
    fn peel_star_removes_hub_first() {
        let (s, steps) = peel_high_degree(&families::star(10), Rational::from_integer(2));
        assert_eq!(steps, 1);
        assert_eq!(s.len(), 9);
        assert!(!s.contains(0)); // the hub went first
    }
}
