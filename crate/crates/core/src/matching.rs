//! Bipartite matching via augmenting paths, returning either a matching that
//! saturates the left side or a Hall violator extracted from the failed
//! search frontier.

use crate::graph::{Graph, VertexSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    /// `X` and `Y` must be disjoint vertex sets of the host graph.
    SidesOverlap { common: Vec<usize> },
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::SidesOverlap { common } => {
                write!(f, "matching sides overlap in {common:?}")
            }
        }
    }
}

impl std::error::Error for MatchingError {}

/// Result of [`hall_check`]: either a matching saturating every vertex of
/// `X`, or a set `S ⊆ X` with `|N(S) ∩ Y| < |S|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    /// One `(x, y)` pair per vertex of `X`.
    Matching(Vec<(usize, usize)>),
    Violator(VertexSet),
}

/// Tries to match every vertex of `x` into `y` using only the `x`-`y` edges
/// of `host`. On failure the violator comes from the final augmenting-path
/// failure frontier, so it genuinely violates Hall's condition.
pub fn hall_check(host: &Graph, x: VertexSet, y: VertexSet) -> Result<HallOutcome, MatchingError> {
    if !x.intersect(y).is_empty() {
        return Err(MatchingError::SidesOverlap {
            common: x.intersect(y).to_vec(),
        });
    }

    // match_of[y_vertex] = matched x vertex
    let mut match_of: Vec<Option<usize>> = vec![None; host.n()];
    for xv in x.iter() {
        let mut visited_y = VertexSet::EMPTY;
        if !augment(host, xv, y, &mut visited_y, &mut match_of) {
            // Alternating search from xv failed. The x-side of the search
            // tree is xv plus the matches of every visited y vertex, and its
            // whole neighborhood inside y is exactly the visited set.
            let mut violator = VertexSet::singleton(xv);
            for yv in visited_y.iter() {
                violator.insert(match_of[yv].expect("visited y vertices are matched"));
            }
            debug_assert_eq!(host.neighborhood_of_set(violator).intersect(y), visited_y);
            debug_assert!(visited_y.len() < violator.len());
            return Ok(HallOutcome::Violator(violator));
        }
    }

    let mut pairs: Vec<(usize, usize)> = match_of
        .iter()
        .enumerate()
        .filter_map(|(yv, xv)| xv.map(|xv| (xv, yv)))
        .collect();
    pairs.sort_unstable();
    Ok(HallOutcome::Matching(pairs))
}

fn augment(
    host: &Graph,
    xv: usize,
    y: VertexSet,
    visited_y: &mut VertexSet,
    match_of: &mut Vec<Option<usize>>,
) -> bool {
    for yv in host.neighbors(xv).intersect(y).minus(*visited_y).iter() {
        visited_y.insert(yv);
        match match_of[yv] {
            None => {
                match_of[yv] = Some(xv);
                return true;
            }
            Some(other) => {
                if augment(host, other, y, visited_y, match_of) {
                    match_of[yv] = Some(xv);
                    return true;
                }
            }
        }
    }
    false
}
