//! Exhaustive enumeration of the spanning trees of `K_n` via Prüfer codes.
//!
//! Used by the brute-force recognition route and as a reference when
//! checking the structural algorithms on small instances.

use crate::exec::Exec;
use crate::hypergraph::Hypergraph;
use crate::tree::{pair, Pair, SpanningTree};

/// `n^(n-2)` (1 for `n <= 2`). Panics on overflow.
pub fn tree_count(n: usize) -> u64 {
    if n <= 2 {
        return 1;
    }
    (n as u64).checked_pow(n as u32 - 2).expect("tree count overflows u64")
}

/// Spanning tree of `K_n` whose Prüfer code is the base-`n` expansion of
/// `index` (most significant digit first).
pub fn tree_at(n: usize, index: u64) -> SpanningTree {
    if n <= 1 {
        return SpanningTree::from_sorted_unchecked(n, Vec::new());
    }
    if n == 2 {
        return SpanningTree::from_sorted_unchecked(2, vec![(0, 1)]);
    }
    let len = n - 2;
    let mut code = vec![0usize; len];
    let mut rest = index;
    for slot in code.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    tree_from_prufer(n, &code)
}

/// Decodes a Prüfer code of length `n - 2` (`n >= 2`).
pub fn tree_from_prufer(n: usize, code: &[usize]) -> SpanningTree {
    debug_assert!(n >= 2 && code.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges: Vec<Pair> = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("leaf exists");
        edges.push(pair(leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push(pair(last[0], last[1]));
    edges.sort_unstable();
    SpanningTree::from_sorted_unchecked(n, edges)
}

/// Every spanning tree of `K_n`, in Prüfer-index order.
pub fn all_spanning_trees(n: usize, exec: Exec) -> Vec<SpanningTree> {
    exec.map_range(tree_count(n), |i| tree_at(n, i))
}

/// Every host tree of `h` found by exhaustive search, in Prüfer-index order.
pub fn host_trees(h: &Hypergraph, exec: Exec) -> Vec<SpanningTree> {
    let n = h.n();
    exec.filter_map_range(tree_count(n), |i| {
        let t = tree_at(n, i);
        h.hosts(&t).then_some(t)
    })
}

/// Maximum tree weight under the pair-count weighting, by exhaustion.
pub fn max_tree_weight(h: &Hypergraph, exec: Exec) -> u64 {
    let n = h.n();
    exec.max_range(tree_count(n), |i| h.tree_weight(&tree_at(n, i)))
        .unwrap_or(0)
}
