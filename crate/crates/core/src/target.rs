//! Target patterns for arrowing and witness checks: paths, cycles, cliques.

use crate::containment::{
    contains_clique, contains_cycle_budgeted, contains_path_budgeted, BudgetExceeded,
};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Path(usize),
    Cycle(usize),
    Clique(usize),
}

impl Target {
    pub fn size(&self) -> usize {
        match *self {
            Target::Path(k) | Target::Cycle(k) | Target::Clique(k) => k,
        }
    }

    /// Exact containment of the target in `h`, cheapest checks first:
    /// component sizes, then bipartite parity for odd cycles, then
    /// backtracking.
    pub fn contained_in(&self, h: &Graph) -> bool {
        self.contained_in_budgeted(h, u64::MAX)
            .expect("unlimited search cannot exhaust")
    }

    pub fn contained_in_budgeted(&self, h: &Graph, budget: u64) -> Result<bool, BudgetExceeded> {
        let k = self.size();
        if k > h.n() {
            return Ok(false);
        }
        match *self {
            Target::Path(k) => {
                if k >= 2 && h.max_component_size() < k {
                    return Ok(false);
                }
                contains_path_budgeted(h, k, budget)
            }
            Target::Cycle(k) => {
                if h.max_component_size() < k {
                    return Ok(false);
                }
                if k % 2 == 1 && h.is_bipartite() {
                    return Ok(false);
                }
                contains_cycle_budgeted(h, k, budget)
            }
            Target::Clique(k) => Ok(contains_clique(h, k)),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Target::Path(k) => write!(f, "P:{k}"),
            Target::Cycle(k) => write!(f, "C:{k}"),
            Target::Clique(k) => write!(f, "K:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetParseError(pub String);

impl fmt::Display for TargetParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bad target {:?}: expected P:<k>, C:<k> or K:<k>",
            self.0
        )
    }
}

impl std::error::Error for TargetParseError {}

impl FromStr for Target {
    type Err = TargetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, num) = s
            .split_once(':')
            .ok_or_else(|| TargetParseError(s.to_string()))?;
        let k: usize = num
            .trim()
            .parse()
            .map_err(|_| TargetParseError(s.to_string()))?;
        match kind.trim() {
            "P" | "p" => {
                if k < 1 {
                    return Err(TargetParseError(s.to_string()));
                }
                Ok(Target::Path(k))
            }
            "C" | "c" => {
                if k < 3 {
                    return Err(TargetParseError(s.to_string()));
                }
                Ok(Target::Cycle(k))
            }
            "K" | "k" => {
                if k < 1 {
                    return Err(TargetParseError(s.to_string()));
                }
                Ok(Target::Clique(k))
            }
            _ => Err(TargetParseError(s.to_string())),
        }
    }
}
