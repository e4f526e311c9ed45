//! Moving between host trees one edge exchange at a time.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::tree::{Pair, SpanningTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwapStep {
    pub removed: Pair,
    pub added: Pair,
}

/// Exchanges turning `t1` into `t2` through host trees only. Each step adds
/// the next missing edge of `t2` (lexicographic order) and drops the first
/// edge on its cycle, outside `t2`, whose removal keeps a host tree. The
/// sequence has exactly `|E(t1) \ E(t2)|` steps.
pub fn swap_sequence(h: &Hypergraph, t1: &SpanningTree, t2: &SpanningTree) -> Result<Vec<SwapStep>> {
    if !h.is_host_tree(t1)? || !h.is_host_tree(t2)? {
        return Err(Error::NotHostTree);
    }
    let mut cur = t1.clone();
    let mut steps = Vec::new();
    for added in t2.edges_not_in(t1) {
        let mut cycle = cur.path_edges(added.0, added.1);
        cycle.sort_unstable();
        let mut done = false;
        for removed in cycle.into_iter().filter(|f| !t2.contains_edge(f.0, f.1)) {
            let next = cur.exchange(removed, added)?;
            if h.hosts(&next) {
                steps.push(SwapStep { removed, added });
                cur = next;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::InvariantViolation(format!(
                "no host-preserving exchange for edge {added:?}"
            )));
        }
    }
    debug_assert_eq!(cur, *t2);
    Ok(steps)
}

/// Sorted multiset of `|I_H(uv)|` over the edges of a host tree. Equal for
/// all host trees of a hypertree.
pub fn edge_weight_multiset(h: &Hypergraph, t: &SpanningTree) -> Result<Vec<usize>> {
    if !h.is_host_tree(t)? {
        return Err(Error::NotHostTree);
    }
    let mut w: Vec<usize> = t.edges().iter().map(|&(u, v)| h.pair_core(u, v).len()).collect();
    w.sort_unstable();
    Ok(w)
}
