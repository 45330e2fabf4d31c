//! Exact maximum independent set size by branch and bound, with a greedy
//! clique cover as the pruning upper bound.

use crate::graph::{Graph, VertexSet};

/// Exact independence number of `g`.
pub fn independence_number(g: &Graph) -> usize {
    independence_number_within(g, g.all_vertices())
}

/// Exact independence number of the subgraph induced by `cands`.
/// The empty set has independence number 0.
pub fn independence_number_within(g: &Graph, cands: VertexSet) -> usize {
    let mut best = 0;
    branch(g, cands, 0, &mut best);
    best
}

fn branch(g: &Graph, cands: VertexSet, size: usize, best: &mut usize) {
    let mut cands = cands;
    let mut size = size;
    // Vertices of candidate-degree 0 or 1 can be taken greedily.
    loop {
        let mut changed = false;
        for v in cands.iter() {
            let deg = g.neighbors(v).intersect(cands).len();
            if deg == 0 {
                cands.remove(v);
                size += 1;
                changed = true;
            } else if deg == 1 {
                cands = cands.minus(g.closed_neighborhood(v));
                size += 1;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    if cands.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(g, cands) <= *best {
        return;
    }
    // Branch on a vertex of maximum candidate-degree.
    let pivot = cands
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersect(cands).len())
        .unwrap();
    branch(g, cands.minus(g.closed_neighborhood(pivot)), size + 1, best);
    let mut without = cands;
    without.remove(pivot);
    branch(g, without, size, best);
}

/// Greedy partition of `cands` into cliques; the class count bounds the
/// independence number of the induced subgraph from above.
fn clique_cover_bound(g: &Graph, cands: VertexSet) -> usize {
    let mut rest = cands;
    let mut classes = 0;
    while let Some(v) = rest.first() {
        rest.remove(v);
        classes += 1;
        let mut common = rest.intersect(g.neighbors(v));
        while let Some(w) = common.first() {
            rest.remove(w);
            common = common.intersect(g.neighbors(w));
        }
    }
    classes
}
