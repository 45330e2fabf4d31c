//! Multigraphs with edge multiplicities and per-vertex loops, as produced by
//! the dichotomy reduction. Loops contribute 1 each to the edge count.

use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u32>,
    loops: Vec<u32>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        MultiGraph {
            n,
            mult: BTreeMap::new(),
            loops: vec![0; n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds one parallel copy of the edge `uv`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        let key = (u.min(v), u.max(v));
        *self.mult.entry(key).or_insert(0) += 1;
    }

    pub fn add_loop(&mut self, v: usize) {
        assert!(v < self.n);
        self.loops[v] += 1;
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        *self.mult.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    pub fn loop_count(&self, v: usize) -> u32 {
        self.loops[v]
    }

    pub fn total_loops(&self) -> usize {
        self.loops.iter().map(|&c| c as usize).sum()
    }

    /// Edge count: sum of multiplicities plus sum of loop counts.
    pub fn edge_count(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum::<usize>() + self.total_loops()
    }

    /// Distinct non-loop edges with their multiplicities, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.mult.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Degree with loops counting twice.
    pub fn degree(&self, v: usize) -> usize {
        let mut d = 2 * self.loops[v] as usize;
        for (&(a, b), &m) in &self.mult {
            if a == v || b == v {
                d += m as usize;
            }
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (&(a, b), _) in &self.mult {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}
