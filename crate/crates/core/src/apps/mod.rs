//! Chordal graphs and clique trees, dually chordal graphs and compatible
//! trees, all through the hypertree engine.

mod cliques;
mod dually;

pub use cliques::{
    clique_hypergraph, clique_tree, clique_tree_edge_feasible, clique_trees, is_basic_chordal,
    maximal_cliques, maximal_cliques_chordal, CliqueFamily, CliqueTree, DEFAULT_CLIQUE_CAP,
};
pub use dually::{
    closed_neighborhood_hypergraph, compatible_edge_feasible, compatible_tree, compatible_trees,
    is_dually_chordal, CompatibleTree, Weighting,
};
