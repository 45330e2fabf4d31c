//! Exact containment kernels: paths, cycles, cliques and general subgraph
//! embedding, all by backtracking over bit-set candidate sets.
//!
//! Every search is exact; the budgeted variants let callers bound the number
//! of visited search nodes and fail loudly instead of silently truncating.

use crate::graph::{Graph, VertexSet};
use std::fmt;

/// A bounded search ran out of nodes before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub nodes: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search budget of {} nodes exceeded", self.nodes)
    }
}

impl std::error::Error for BudgetExceeded {}

struct Budget {
    remaining: u64,
    initial: u64,
}

impl Budget {
    fn limited(nodes: u64) -> Self {
        Budget {
            remaining: nodes,
            initial: nodes,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        if self.remaining == 0 {
            return Err(BudgetExceeded {
                nodes: self.initial,
            });
        }
        self.remaining -= 1;
        Ok(())
    }
}

// ============================================================================
// Simple paths
// ============================================================================

/// True iff `g` has a simple path on `k` vertices. `k > n` is simply false.
pub fn contains_path(g: &Graph, k: usize) -> bool {
    contains_path_budgeted(g, k, u64::MAX).expect("unlimited search cannot exhaust")
}

pub fn contains_path_budgeted(g: &Graph, k: usize, budget: u64) -> Result<bool, BudgetExceeded> {
    assert!(k >= 1);
    if k > g.n() {
        return Ok(false);
    }
    if k == 1 {
        return Ok(true);
    }
    let mut budget = Budget::limited(budget);
    // Only components with at least k vertices can host the path, and any
    // such path can be started from its lowest-labelled vertex's component.
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        for v in comp.iter() {
            if path_dfs(g, v, VertexSet::singleton(v), k - 1, &mut budget)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn path_dfs(
    g: &Graph,
    cur: usize,
    visited: VertexSet,
    remaining: usize,
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    if remaining == 0 {
        return Ok(true);
    }
    let cands = g.neighbors(cur).minus(visited);
    if cands.is_empty() {
        return Ok(false);
    }
    // The rest of the path lives in vertices reachable from `cur` without
    // re-entering `visited`; prune when too few remain.
    if remaining > 1 {
        let free = g.all_vertices().minus(visited);
        let reach = g.reach(cur, free.union(VertexSet::singleton(cur)));
        if reach.len() - 1 < remaining {
            return Ok(false);
        }
    }
    for w in cands.iter() {
        let mut vis = visited;
        vis.insert(w);
        if path_dfs(g, w, vis, remaining - 1, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff `g` has a simple path on exactly `t` vertices joining `u` and `v`.
pub fn has_path_between(g: &Graph, u: usize, v: usize, t: usize) -> bool {
    assert!(u != v && t >= 2);
    if t > g.n() {
        return false;
    }
    between_dfs(g, u, v, VertexSet::singleton(u), t - 1)
}

fn between_dfs(g: &Graph, cur: usize, target: usize, visited: VertexSet, remaining: usize) -> bool {
    if remaining == 0 {
        return cur == target;
    }
    if cur == target {
        return false;
    }
    let free = g.all_vertices().minus(visited);
    let reach = g.reach(cur, free.union(VertexSet::singleton(cur)));
    if !reach.contains(target) || reach.len() - 1 < remaining {
        return false;
    }
    for w in g.neighbors(cur).minus(visited).iter() {
        let mut vis = visited;
        vis.insert(w);
        if between_dfs(g, w, target, vis, remaining - 1) {
            return true;
        }
    }
    false
}

// ============================================================================
// Cycles
// ============================================================================

/// True iff `g` has a cycle on exactly `k` vertices.
pub fn contains_cycle(g: &Graph, k: usize) -> bool {
    contains_cycle_budgeted(g, k, u64::MAX).expect("unlimited search cannot exhaust")
}

pub fn contains_cycle_budgeted(g: &Graph, k: usize, budget: u64) -> Result<bool, BudgetExceeded> {
    assert!(k >= 3);
    if k > g.n() {
        return Ok(false);
    }
    let mut budget = Budget::limited(budget);
    // Anchor each candidate cycle at its lowest-labelled vertex.
    for s in 0..g.n() {
        let allowed = VertexSet(VertexSet::full(g.n()).0 >> s << s);
        if g.neighbors(s).intersect(allowed).len() < 2 {
            continue;
        }
        if cycle_dfs(g, s, s, VertexSet::singleton(s), k - 1, allowed, &mut budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn cycle_dfs(
    g: &Graph,
    anchor: usize,
    cur: usize,
    visited: VertexSet,
    remaining: usize,
    allowed: VertexSet,
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    if remaining == 0 {
        return Ok(g.has_edge(cur, anchor));
    }
    let free = allowed.minus(visited);
    if remaining > 1 {
        let reach = g.reach(cur, free.union(VertexSet::singleton(cur)));
        if reach.len() - 1 < remaining {
            return Ok(false);
        }
        // The cycle must close: some future vertex adjacent to the anchor.
        if reach
            .intersect(g.neighbors(anchor))
            .minus(VertexSet::singleton(cur))
            .is_empty()
        {
            return Ok(false);
        }
    }
    for w in g.neighbors(cur).intersect(free).iter() {
        let mut vis = visited;
        vis.insert(w);
        if cycle_dfs(g, anchor, w, vis, remaining - 1, allowed, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

// ============================================================================
// Cliques
// ============================================================================

/// True iff `g` has a clique on `k` vertices.
pub fn contains_clique(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    if k > g.n() {
        return false;
    }
    clique_dfs(g, g.all_vertices(), k)
}

fn clique_dfs(g: &Graph, cands: VertexSet, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    if cands.len() < remaining {
        return false;
    }
    let mut rest = cands;
    while let Some(v) = rest.first() {
        rest.remove(v);
        if clique_dfs(g, rest.intersect(g.neighbors(v)), remaining - 1) {
            return true;
        }
        // Without v, the remaining candidates must still suffice.
        if rest.len() < remaining {
            return false;
        }
    }
    false
}

// ============================================================================
// General subgraph embedding
// ============================================================================

/// True iff some injective map `V(pattern) -> V(host)` preserves edges
/// (plain subgraph embedding, not induced).
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    contains_subgraph_budgeted(host, pattern, u64::MAX).expect("unlimited search cannot exhaust")
}

pub fn contains_subgraph_budgeted(
    host: &Graph,
    pattern: &Graph,
    budget: u64,
) -> Result<bool, BudgetExceeded> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }
    // Sorted degree sequences must dominate pointwise.
    let mut pd: Vec<usize> = pattern.vertices().map(|v| pattern.degree(v)).collect();
    let mut hd: Vec<usize> = host.vertices().map(|v| host.degree(v)).collect();
    pd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return Ok(false);
    }

    let order = embedding_order(pattern);
    let mut budget = Budget::limited(budget);
    let mut assigned = vec![usize::MAX; pattern.n()];
    embed_dfs(
        host,
        pattern,
        &order,
        0,
        &mut assigned,
        VertexSet::EMPTY,
        &mut budget,
    )
}

/// Pattern vertices ordered so each one (after the first) touches as many
/// already-placed vertices as possible; ties broken by degree then label.
fn embedding_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    for _ in 0..n {
        let best = pattern
            .vertices()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersect(placed).len(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(best);
        placed.insert(best);
    }
    order
}

fn embed_dfs(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    assigned: &mut [usize],
    used: VertexSet,
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    if depth == order.len() {
        return Ok(true);
    }
    let p = order[depth];
    let pdeg = pattern.degree(p);
    let mut cands = host.all_vertices().minus(used);
    for q in pattern.neighbors(p).iter() {
        if assigned[q] != usize::MAX {
            cands = cands.intersect(host.neighbors(assigned[q]));
        }
    }
    for h in cands.iter() {
        if host.degree(h) < pdeg {
            continue;
        }
        assigned[p] = h;
        let mut u2 = used;
        u2.insert(h);
        if embed_dfs(host, pattern, order, depth + 1, assigned, u2, budget)? {
            return Ok(true);
        }
        assigned[p] = usize::MAX;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cycle_contains_spanning_path() {
        assert!(contains_path(&families::cycle(5), 5));
    }

    #[test]
    fn star_longest_path_is_three_vertices() {
        let g = families::star(4); // K_{1,3}
        assert!(contains_path(&g, 3));
        assert!(!contains_path(&g, 4));
    }

    #[test]
    fn complement_of_k5_plus_isolated_has_no_p4() {
        let g = families::complete(5)
            .disjoint_union(&families::path(1))
            .complement(); // K_{1,5}
        assert!(contains_path(&g, 3));
        assert!(!contains_path(&g, 4));
    }

    #[test]
    fn path_longer_than_graph_is_false() {
        assert!(!contains_path(&families::path(3), 4));
    }

    #[test]
    fn k4_has_triangle() {
        assert!(contains_cycle(&families::complete(4), 3));
    }

    #[test]
    fn bipartite_graphs_have_no_odd_cycles() {
        let g = families::complete_multipartite(&[6, 6]); // K_{6,6}
        for k in [3, 5, 7] {
            assert!(!contains_cycle(&g, k));
        }
        assert!(contains_cycle(&g, 4));
    }

    #[test]
    fn petersen_girth_five() {
        let g = families::petersen();
        assert!(contains_cycle(&g, 5));
        assert!(!contains_cycle(&g, 3));
        assert!(!contains_cycle(&g, 4));
        assert!(contains_cycle(&g, 6));
    }

    #[test]
    fn k33_is_hamiltonian() {
        let host = families::complete_multipartite(&[3, 3]);
        assert!(contains_subgraph(&host, &families::cycle(6)));
    }

    #[test]
    fn degree_filter_blocks_big_star() {
        let host = families::complete_multipartite(&[3, 3, 3, 3]);
        assert!(!contains_subgraph(&host, &families::star(12))); // K_{1,11}
        assert!(contains_subgraph(&host, &families::star(10))); // K_{1,9} fits
    }

    #[test]
    fn every_graph_contains_itself() {
        for g in [families::petersen(), families::spider(3, 2), families::path(1)] {
            assert!(contains_subgraph(&g, &g));
        }
    }

    #[test]
    fn path_between_exact_length() {
        let g = families::cycle(6);
        // Between opposite vertices: one arc has 4 vertices, the other 4.
        assert!(has_path_between(&g, 0, 3, 4));
        assert!(!has_path_between(&g, 0, 3, 5));
        assert!(has_path_between(&g, 0, 1, 2));
        assert!(has_path_between(&g, 0, 1, 6));
    }

    #[test]
    fn clique_detection() {
        assert!(contains_clique(&families::complete(5), 5));
        assert!(!contains_clique(&families::complete(5), 6));
        assert!(!contains_clique(&families::petersen(), 3));
        assert!(contains_clique(&families::cycle(9).complement(), 4));
    }

    #[test]
    fn budget_exhaustion_is_loud() {
        let g = families::complete(12);
        let err = contains_path_budgeted(&g, 12, 5).unwrap_err();
        assert_eq!(err.nodes, 5);
    }

    /// Oracle cross-check: exhaustive enumeration of all simple paths.
    fn longest_path_brute(g: &Graph) -> usize {
        fn extend(g: &Graph, cur: usize, visited: VertexSet, len: usize, best: &mut usize) {
            *best = (*best).max(len);
            for w in g.neighbors(cur).minus(visited).iter() {
                let mut vis = visited;
                vis.insert(w);
                extend(g, w, vis, len + 1, best);
            }
        }
        let mut best = 1;
        for v in g.vertices() {
            extend(g, v, VertexSet::singleton(v), 1, &mut best);
        }
        best
    }

    #[test]
    fn path_search_agrees_with_brute_force_on_samples() {
        let samples = vec![
            families::petersen(),
            families::spider(4, 2),
            families::broom(5, 3),
            families::complete_multipartite(&[2, 3, 1]),
            families::cycle(7).complement(),
        ];
        for g in samples {
            let longest = longest_path_brute(&g);
            for k in 1..=g.n() {
                assert_eq!(contains_path(&g, k), k <= longest, "k={k} on {g:?}");
            }
        }
    }
}
