//! Exact desk-scale workbench for Ramsey numbers of sparse connected graphs
//! versus paths and cycles.
//!
//! The crate provides:
//!
//! - compact bit-matrix graphs with exact containment, independence and
//!   matching kernels ([`graph`], [`containment`], [`independence`],
//!   [`matching`]);
//! - structural analyses: sparsity profiles, the minimum independence number
//!   over deleted closed neighborhoods, the dichotomy reduction to a
//!   multigraph with its bookkeeping identities, end-edge matchings,
//!   suspended-path surgery and degree peeling ([`structure`],
//!   [`reduction`]);
//! - closed-form goodness predictors and upper-bound evaluators in exact
//!   rational arithmetic ([`goodness`]);
//! - extremal lower-bound colorings with machine validation ([`witness`]);
//! - ground truth at desk scale: isomorphism-free enumeration, arrowing,
//!   exact small Ramsey and Turán numbers, and exhaustive property sweeps
//!   ([`oracle`]).

pub mod containment;
pub mod families;
pub mod goodness;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod matching;
pub mod multigraph;
pub mod oracle;
pub mod reduction;
pub mod structure;
pub mod target;
pub mod witness;

pub use containment::{
    contains_clique, contains_cycle, contains_path, contains_subgraph, has_path_between,
    BudgetExceeded,
};
pub use graph::{Graph, SuspendedPaths, VertexSet, MAX_VERTICES};
pub use independence::{independence_number, independence_number_within};
pub use matching::{hall_check, HallOutcome};
pub use multigraph::MultiGraph;
