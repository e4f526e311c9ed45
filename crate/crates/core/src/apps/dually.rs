//! Dually chordal graphs and compatible trees.

use super::cliques::{clique_hypergraph, maximal_cliques};
use crate::engine::enumerate_host_trees;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::recognition::{self, is_hypertree, Method};
use crate::set::VertexSet;
use crate::tree::SpanningTree;

/// Edge weights for the maximum-weight spanning tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// Number of maximal cliques holding both ends; lists all maximal cliques
    /// (up to a cap).
    CliqueCount { cap: usize },
    /// `|N[u] ∩ N[v]|`.
    NeighborhoodIntersection,
}

/// A spanning tree of `G` in which every maximal clique and every closed
/// neighbourhood induces a subtree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleTree {
    pub tree: SpanningTree,
    pub weight: u64,
}

/// The closed neighbourhoods `N[v]`, in vertex order.
pub fn closed_neighborhood_hypergraph(g: &SimpleGraph) -> Hypergraph {
    let edges = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    Hypergraph::new(g.labels().to_vec(), edges).expect("closed neighbourhoods are nonempty")
}

fn require_connected(g: &SimpleGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn weighted_hypergraph(g: &SimpleGraph, weighting: Weighting) -> Result<Hypergraph> {
    match weighting {
        Weighting::NeighborhoodIntersection => Ok(closed_neighborhood_hypergraph(g)),
        Weighting::CliqueCount { cap } => clique_hypergraph(g, &maximal_cliques(g, cap)?),
    }
}

pub fn is_dually_chordal(g: &SimpleGraph) -> Result<bool> {
    require_connected(g)?;
    let r = is_hypertree(&closed_neighborhood_hypergraph(g), Method::MaxWeightSpanningTree)?;
    Ok(r.is_hypertree)
}

/// Maximum-weight spanning tree under `weighting`. Under
/// [`Weighting::NeighborhoodIntersection`] the weight is `2|E(G)|`.
pub fn compatible_tree(g: &SimpleGraph, weighting: Weighting) -> Result<CompatibleTree> {
    require_connected(g)?;
    let h = weighted_hypergraph(g, weighting)?;
    let tree = recognition::host_tree(&h).map_err(|e| match e {
        Error::NotHypertree => Error::NotDuallyChordal,
        other => other,
    })?;
    let weight = h.tree_weight(&tree);
    Ok(CompatibleTree { tree, weight })
}

/// Every compatible tree, as host trees of the weighting's hypergraph.
pub fn compatible_trees(
    g: &SimpleGraph,
    weighting: Weighting,
    cap: usize,
) -> Result<Vec<SpanningTree>> {
    require_connected(g)?;
    let h = weighted_hypergraph(g, weighting)?;
    enumerate_host_trees(&h, cap).map_err(|e| match e {
        Error::NotHypertree => Error::NotDuallyChordal,
        other => other,
    })
}

/// Whether `uv` is an edge of some compatible tree: `u` and `v` have no
/// path in the graph `G'` formed by the closed neighbourhoods that do not
/// hold both.
pub fn compatible_edge_feasible(g: &SimpleGraph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::SameVertex);
    }
    if u.max(v) >= g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: u.max(v) + 1,
        });
    }
    if !is_dually_chordal(g)? {
        return Err(Error::NotDuallyChordal);
    }
    let comp = closed_neighborhood_hypergraph(g).complement_components(&VertexSet::pair(u, v));
    Ok(comp[u] != comp[v])
}
