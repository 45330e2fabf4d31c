//! Named graph families and the constructor registry used by the CLI and
//! the tests (`path:7`, `spider:3x2`, ...).

use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::{self, Graph6Error};
use std::fmt;

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Star `K_{1,n-1}` on `n` vertices, hub at 0.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Complete multipartite graph; `parts` lists the independent-set sizes.
/// Zero-sized parts are skipped.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let total: usize = parts.iter().sum();
    assert!(total >= 1, "multipartite graph needs at least one vertex");
    let mut g = Graph::new(total);
    let mut bounds = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    bounds.push(0);
    for &p in parts {
        acc += p;
        bounds.push(acc);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in bounds[i]..bounds[i + 1] {
                for v in bounds[j]..bounds[j + 1] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// Spider with `legs` legs of `leg_len` edges each, hub at 0.
/// `n = 1 + legs * leg_len`.
pub fn spider(legs: usize, leg_len: usize) -> Graph {
    assert!(legs >= 1 && leg_len >= 1);
    let mut g = Graph::new(1 + legs * leg_len);
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..leg_len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

/// Broom: a path on `handle` vertices with `bristles` extra leaves attached
/// to its last vertex. `n = handle + bristles`.
pub fn broom(handle: usize, bristles: usize) -> Graph {
    assert!(handle >= 1);
    let mut g = Graph::new(handle + bristles);
    for v in 1..handle {
        g.add_edge(v - 1, v);
    }
    for b in 0..bristles {
        g.add_edge(handle - 1, handle + b);
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

// ============================================================================
// Registry grammar
// ============================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    UnknownFamily(String),
    BadParams { spec: String, reason: String },
    Graph6 { spec: String, err: Graph6Error },
    TooLarge { spec: String, n: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::UnknownFamily(s) => write!(f, "unknown graph family: {s:?}"),
            FamilyError::BadParams { spec, reason } => {
                write!(f, "bad parameters in {spec:?}: {reason}")
            }
            FamilyError::Graph6 { spec, err } => write!(f, "bad graph6 in {spec:?}: {err}"),
            FamilyError::TooLarge { spec, n } => {
                write!(f, "{spec:?} has {n} vertices; cap is {MAX_VERTICES}")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

fn parse_usize(spec: &str, s: &str) -> Result<usize, FamilyError> {
    s.trim().parse().map_err(|_| FamilyError::BadParams {
        spec: spec.to_string(),
        reason: format!("expected an integer, got {s:?}"),
    })
}

fn check_size(spec: &str, n: usize) -> Result<(), FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParams {
            spec: spec.to_string(),
            reason: "graph must have at least one vertex".into(),
        });
    }
    if n > MAX_VERTICES {
        return Err(FamilyError::TooLarge {
            spec: spec.to_string(),
            n,
        });
    }
    Ok(())
}

/// Parses a constructor spec such as `path:7`, `cycle:5`, `star:12`,
/// `complete:4`, `multipartite:3,3,3,3`, `spider:3x2`, `broom:4x3`,
/// `petersen`, or `g6:<code>`. Specs joined with `+` form a disjoint union.
pub fn parse_spec(spec: &str) -> Result<Graph, FamilyError> {
    let parts: Vec<&str> = spec.split('+').collect();
    let mut graphs = Vec::with_capacity(parts.len());
    for part in parts {
        graphs.push(parse_single(part.trim())?);
    }
    let total: usize = graphs.iter().map(Graph::n).sum();
    check_size(spec, total)?;
    let mut it = graphs.into_iter();
    let mut g = it.next().unwrap();
    for h in it {
        g = g.disjoint_union(&h);
    }
    Ok(g)
}

fn parse_single(spec: &str) -> Result<Graph, FamilyError> {
    if spec == "petersen" {
        return Ok(petersen());
    }
    if let Some(code) = spec.strip_prefix("g6:") {
        return graph6::decode(code).map_err(|err| FamilyError::Graph6 {
            spec: spec.to_string(),
            err,
        });
    }
    let (name, args) = match spec.split_once(':') {
        Some(pair) => pair,
        None => return Err(FamilyError::UnknownFamily(spec.to_string())),
    };
    let bad = |reason: &str| FamilyError::BadParams {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    match name {
        "path" => {
            let n = parse_usize(spec, args)?;
            check_size(spec, n)?;
            Ok(path(n))
        }
        "cycle" => {
            let n = parse_usize(spec, args)?;
            check_size(spec, n)?;
            if n < 3 {
                return Err(bad("cycle needs at least 3 vertices"));
            }
            Ok(cycle(n))
        }
        "star" => {
            let n = parse_usize(spec, args)?;
            check_size(spec, n)?;
            Ok(star(n))
        }
        "complete" => {
            let n = parse_usize(spec, args)?;
            check_size(spec, n)?;
            Ok(complete(n))
        }
        "multipartite" => {
            let mut parts = Vec::new();
            for piece in args.split(',') {
                parts.push(parse_usize(spec, piece)?);
            }
            let total: usize = parts.iter().sum();
            check_size(spec, total)?;
            Ok(complete_multipartite(&parts))
        }
        "spider" => {
            let (l, len) = args.split_once('x').ok_or_else(|| bad("expected legs x length"))?;
            let legs = parse_usize(spec, l)?;
            let leg_len = parse_usize(spec, len)?;
            if legs == 0 || leg_len == 0 {
                return Err(bad("spider needs at least one leg of length one"));
            }
            check_size(spec, 1 + legs * leg_len)?;
            Ok(spider(legs, leg_len))
        }
        "broom" => {
            let (h, b) = args.split_once('x').ok_or_else(|| bad("expected handle x bristles"))?;
            let handle = parse_usize(spec, h)?;
            let bristles = parse_usize(spec, b)?;
            if handle == 0 {
                return Err(bad("broom handle needs at least one vertex"));
            }
            check_size(spec, handle + bristles)?;
            Ok(broom(handle, bristles))
        }
        _ => Err(FamilyError::UnknownFamily(spec.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(star(8).edge_count(), 7);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(spider(3, 2).n(), 7);
        assert_eq!(broom(4, 3).n(), 7);
        assert_eq!(broom(4, 3).leaves().len(), 4);
        assert_eq!(petersen().edge_count(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
    }

    #[test]
    fn multipartite_structure() {
        let g = complete_multipartite(&[3, 3, 3, 3]);
        assert_eq!(g.n(), 12);
        assert_eq!(g.edge_count(), 54);
        assert!((0..12).all(|v| g.degree(v) == 9));
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_spec("path:7").unwrap().n(), 7);
        assert_eq!(parse_spec("spider:3x2").unwrap().n(), 7);
        assert_eq!(parse_spec("multipartite:3,3,3,3").unwrap().edge_count(), 54);
        let union = parse_spec("complete:4+complete:4").unwrap();
        assert_eq!(union.n(), 8);
        assert_eq!(union.edge_count(), 12);
        assert!(parse_spec("pentagon:5").is_err());
        assert!(parse_spec("cycle:2").is_err());
        assert!(parse_spec("path:200").is_err());
    }
}
