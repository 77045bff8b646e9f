//! Solvers for the Firebreak and Key Player vertex-separation problems.
//!
//! Firebreak asks for `k` vertices, other than a fire origin `vf`, whose
//! deletion cuts off at least `t` vertices from `vf`; `F(G, k, vf)` is the
//! best achievable count. Key Player asks for `k` vertices whose deletion
//! leaves at least `t` components.
//!
//! Exhaustive oracles in [`oracle`] are the reference for every structural
//! solver: closed forms, trees, bounded treewidth, permutation graphs and
//! subtree intersection graphs, plus the Key Player algorithm at budget
//! `κ(G)`.

pub mod bench;
pub mod closed_form;
pub mod dispatch;
pub mod error;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod intersection;
pub mod io;
pub mod keyplayer;
pub mod oracle;
pub mod reductions;
pub mod subsets;
pub mod tree;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{verify_witness, Algorithm, FirebreakInstance, KeyPlayerInstance, SolveResult};
