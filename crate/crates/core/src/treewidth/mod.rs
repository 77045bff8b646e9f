//! Tree decompositions and the Firebreak dynamic program over them.

mod decomposition;
mod dp;
mod nice;

pub use decomposition::{build_tree_decomposition, TreeDecomposition};
pub use dp::{coloring_is_legal, firebreak_treewidth_dp, firebreak_treewidth_profile, Color, ColoringState};
pub use nice::{make_nice, NiceKind, NiceNode, NiceTreeDecomposition};
