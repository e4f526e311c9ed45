//! Hypertree and dual-hypertree recognition.
//!
//! Three independent routes decide whether a hypergraph has a host tree:
//!
//! * **Helly + chordal line graph**: a structural test, no tree produced.
//! * **Maximum-weight spanning tree**: weight each pair `uv` by the number of
//!   edges containing both; a host tree exists iff a maximum spanning tree
//!   reaches `Σ|F| - m`, and then every such tree is a host tree.
//! * **Brute force**: try every spanning tree of `K_n` (small `n` only).

mod chordal;
mod gyo;
mod mst;

pub use chordal::{
    is_chordal, is_chordless_cycle, is_perfect_elimination_ordering, lex_bfs,
    ChordalityCertificate,
};
pub use gyo::{gyo_reduce, is_dual_hypertree, ReductionStep, ReductionTrace};
pub use mst::{max_weight_spanning_tree, TieBreak};

use crate::brute;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hypergraph::Hypergraph;
use crate::tree::SpanningTree;

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    HellyChordal,
    MaxWeightSpanningTree,
    BruteForce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecognitionOptions {
    /// Largest vertex count accepted by [`Method::BruteForce`].
    pub brute_force_cap: usize,
    pub exec: Exec,
}

impl Default for RecognitionOptions {
    fn default() -> Self {
        Self {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub is_hypertree: bool,
    /// A host tree, for the routes that construct one.
    pub host_tree: Option<SpanningTree>,
    /// Best spanning-tree weight found; `None` for the Helly route.
    pub achieved_weight: Option<u64>,
    /// `Σ|F| - m`.
    pub target_weight: u64,
    pub method: Method,
}

pub fn is_hypertree(h: &Hypergraph, method: Method) -> Result<RecognitionResult> {
    is_hypertree_with(h, method, RecognitionOptions::default())
}

pub fn is_hypertree_with(
    h: &Hypergraph,
    method: Method,
    options: RecognitionOptions,
) -> Result<RecognitionResult> {
    let target_weight = h.target_weight();
    match method {
        Method::HellyChordal => {
            let ok = h.is_helly() && is_chordal(&h.line_graph()).is_peo;
            Ok(RecognitionResult {
                is_hypertree: ok,
                host_tree: None,
                achieved_weight: None,
                target_weight,
                method,
            })
        }
        Method::MaxWeightSpanningTree => Ok(by_max_weight(h, TieBreak::Lexicographic)),
        Method::BruteForce => {
            if h.n() > options.brute_force_cap {
                return Err(Error::BruteForceCap {
                    n: h.n(),
                    cap: options.brute_force_cap,
                });
            }
            let achieved = brute::max_tree_weight(h, options.exec);
            let host_tree = if achieved == target_weight {
                let n = h.n();
                (0..brute::tree_count(n))
                    .map(|i| brute::tree_at(n, i))
                    .find(|t| h.hosts(t))
            } else {
                None
            };
            Ok(RecognitionResult {
                is_hypertree: host_tree.is_some(),
                host_tree,
                achieved_weight: Some(achieved),
                target_weight,
                method,
            })
        }
    }
}

fn by_max_weight(h: &Hypergraph, tie: TieBreak) -> RecognitionResult {
    let (tree, achieved) = max_weight_spanning_tree(h.n(), tie, |u, v| h.pair_weight(u, v));
    let target_weight = h.target_weight();
    let ok = achieved == target_weight;
    RecognitionResult {
        is_hypertree: ok,
        host_tree: ok.then_some(tree),
        achieved_weight: Some(achieved),
        target_weight,
        method: Method::MaxWeightSpanningTree,
    }
}

/// The canonical host tree: Kruskal with lexicographic tie-breaking.
pub fn host_tree(h: &Hypergraph) -> Result<SpanningTree> {
    host_tree_with(h, TieBreak::Lexicographic)
}

pub fn host_tree_with(h: &Hypergraph, tie: TieBreak) -> Result<SpanningTree> {
    by_max_weight(h, tie).host_tree.ok_or(Error::NotHypertree)
}
