//! Maximal cliques and clique trees.

use crate::engine::{enumerate_host_trees, is_basic_hypertree};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::recognition::{self, is_chordal};
use crate::set::VertexSet;
use crate::tree::SpanningTree;

/// Bound on the number of maximal cliques listed for non-chordal graphs.
pub const DEFAULT_CLIQUE_CAP: usize = 10_000;

/// Maximal cliques in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    pub cliques: Vec<VertexSet>,
}

impl CliqueFamily {
    fn from_unsorted(mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort();
        cliques.dedup();
        Self { cliques }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn index_of(&self, c: &VertexSet) -> Option<usize> {
        self.cliques.binary_search(c).ok()
    }

    /// `C_v`: indices of the cliques holding `v`.
    pub fn containing(&self, v: usize) -> VertexSet {
        self.cliques
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(v))
            .map(|(i, _)| i)
            .collect()
    }
}

/// A tree on clique indices in which every `C_v` is a subtree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: CliqueFamily,
    pub tree: SpanningTree,
    /// `Σ |C ∩ C'|` over tree edges.
    pub weight: u64,
}

fn require_chordal(g: &SimpleGraph) -> Result<Vec<usize>> {
    let cert = is_chordal(g);
    match cert.witness_cycle {
        Some(cycle) => Err(Error::NotChordal { cycle }),
        None => Ok(cert.ordering),
    }
}

fn require_connected(g: &SimpleGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Maximal cliques of a chordal graph read off a perfect elimination
/// ordering: each is some `{v} ∪ (later neighbours of v)`.
pub fn maximal_cliques_chordal(g: &SimpleGraph) -> Result<CliqueFamily> {
    let order = require_chordal(g)?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
            c.insert(v);
            c
        })
        .collect();
    let maximal = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .cloned()
        .collect();
    Ok(CliqueFamily::from_unsorted(maximal))
}

/// Maximal cliques of an arbitrary graph (Bron–Kerbosch with pivoting).
/// Fails with [`Error::Overflow`] past `cap` cliques.
pub fn maximal_cliques(g: &SimpleGraph, cap: usize) -> Result<CliqueFamily> {
    fn expand(
        g: &SimpleGraph,
        r: &mut VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
                if out.len() > cap {
                    return Err(Error::Overflow { cap });
                }
            }
            return Ok(());
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        for v in p.difference(g.neighbors(pivot)).iter() {
            r.insert(v);
            expand(
                g,
                r,
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                out,
                cap,
            )?;
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
    let mut out = Vec::new();
    let all = VertexSet::full(g.n());
    expand(g, &mut VertexSet::new(), all, VertexSet::new(), &mut out, cap)?;
    Ok(CliqueFamily::from_unsorted(out))
}

/// The cliques as edges of a hypergraph on `V(G)`.
pub fn clique_hypergraph(g: &SimpleGraph, cliques: &CliqueFamily) -> Result<Hypergraph> {
    Hypergraph::new(g.labels().to_vec(), cliques.cliques.clone())
}

/// `D(C(G))`: one vertex per clique, one edge `C_v` per vertex. Its host
/// trees are the clique trees.
fn dual_clique_hypergraph(g: &SimpleGraph, cliques: &CliqueFamily) -> Result<Hypergraph> {
    Ok(clique_hypergraph(g, cliques)?.dual())
}

/// Maximum-weight spanning tree of the clique intersection graph.
pub fn clique_tree(g: &SimpleGraph) -> Result<CliqueTree> {
    let cliques = maximal_cliques_chordal(g)?;
    require_connected(g)?;
    let dual = dual_clique_hypergraph(g, &cliques)?;
    let tree = recognition::host_tree(&dual)
        .map_err(|_| Error::InvariantViolation("chordal graph without a clique tree".into()))?;
    let weight = dual.tree_weight(&tree);
    Ok(CliqueTree {
        cliques,
        tree,
        weight,
    })
}

/// Every clique tree, in host-tree enumeration order.
pub fn clique_trees(g: &SimpleGraph, cap: usize) -> Result<(CliqueFamily, Vec<SpanningTree>)> {
    let cliques = maximal_cliques_chordal(g)?;
    require_connected(g)?;
    let dual = dual_clique_hypergraph(g, &cliques)?;
    let trees = enumerate_host_trees(&dual, cap)?;
    Ok((cliques, trees))
}

/// Whether `c1 c2` is an edge of some clique tree: removing `c1 ∩ c2`
/// separates `c1 \ c2` from `c2 \ c1`.
pub fn clique_tree_edge_feasible(g: &SimpleGraph, c1: &VertexSet, c2: &VertexSet) -> Result<bool> {
    let cliques = maximal_cliques_chordal(g)?;
    if cliques.index_of(c1).is_none() || cliques.index_of(c2).is_none() {
        return Err(Error::NotMaximalClique);
    }
    if c1 == c2 {
        return Err(Error::SameVertex);
    }
    let comp = g.components_avoiding(&c1.intersection(c2));
    // Both differences are nonempty cliques, so one representative each
    // suffices.
    let a = c1.difference(c2).first().expect("distinct maximal cliques");
    let b = c2.difference(c1).first().expect("distinct maximal cliques");
    Ok(comp[a] != comp[b])
}

/// Clique trees coincide with compatible trees of the clique graph.
pub fn is_basic_chordal(g: &SimpleGraph) -> Result<bool> {
    let cliques = maximal_cliques_chordal(g)?;
    require_connected(g)?;
    is_basic_hypertree(&dual_clique_hypergraph(g, &cliques)?)
}
