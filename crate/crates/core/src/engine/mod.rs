//! Structure of the set of host trees: basis, counting, enumeration,
//! completion, equivalence and exchanges.

mod basis;
mod completion;
mod count;
mod enumerate;
mod equivalence;
mod feasible;
mod swap;

pub use basis::{basic_sets, basis_from_tree, BasicSetRecord, Basis};
pub use completion::{completion_contains, enumerate_completion, DEFAULT_COMPLETION_CAP};
pub use count::{admissible_count, bareiss_determinant, count_host_trees, count_host_trees_with};
pub use enumerate::{admissible_sets, enumerate_host_trees, DEFAULT_TREE_CAP};
pub use equivalence::{
    basic_by_witnesses, equivalent, equivalent_with, is_basic_hypertree, EquivalenceMode,
};
pub use feasible::{feasible_edges, is_feasible_edge};
pub use swap::{edge_weight_multiset, swap_sequence, SwapStep};
