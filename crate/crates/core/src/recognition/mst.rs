//! Maximum-weight spanning trees of the complete graph by Kruskal.

use petgraph::unionfind::UnionFind;

use crate::tree::{Pair, SpanningTree};

/// How equal-weight candidate edges are ordered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Ascending `(min endpoint, max endpoint)`.
    #[default]
    Lexicographic,
    /// Descending `(min endpoint, max endpoint)`.
    Reversed,
}

/// Kruskal on `K_n` with weights `weight(u, v)` (`u < v`). Returns the tree
/// and its weight.
pub fn max_weight_spanning_tree(
    n: usize,
    tie: TieBreak,
    weight: impl Fn(usize, usize) -> u64,
) -> (SpanningTree, u64) {
    let mut candidates: Vec<(u64, Pair)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            candidates.push((weight(u, v), (u, v)));
        }
    }
    match tie {
        TieBreak::Lexicographic => candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1))),
        TieBreak::Reversed => candidates.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1))),
    }
    let mut uf = UnionFind::<usize>::new(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut total = 0;
    for (w, (u, v)) in candidates {
        if uf.union(u, v) {
            edges.push((u, v));
            total += w;
            if edges.len() + 1 == n {
                break;
            }
        }
    }
    edges.sort_unstable();
    (SpanningTree::from_sorted_unchecked(n, edges), total)
}
