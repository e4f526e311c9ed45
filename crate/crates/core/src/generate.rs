//! Seeded random instances.
//!
//! Every generator takes an explicit RNG; [`rng`] builds the ChaCha stream
//! used by the CLI and the test suites from a `u64` seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brute::tree_from_prufer;
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::tree::SpanningTree;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Uniform spanning tree of `K_n` via a random Prüfer code.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> SpanningTree {
    if n <= 1 {
        return SpanningTree::new(n, []).expect("trivial tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    tree_from_prufer(n, &code)
}

/// Random connected vertex set of `t`: a random root grown by random
/// frontier vertices up to a random size.
pub fn random_subtree<R: Rng>(t: &SpanningTree, rng: &mut R) -> VertexSet {
    let n = t.n();
    let adj = t.adjacency();
    let size = rng.random_range(1..=n);
    let mut set = VertexSet::singleton(rng.random_range(0..n));
    while set.len() < size {
        let mut frontier = VertexSet::new();
        for v in set.iter() {
            frontier.union_with(&adj[v]);
        }
        let frontier: Vec<usize> = frontier.difference(&set).iter().collect();
        set.insert(frontier[rng.random_range(0..frontier.len())]);
    }
    set
}

/// `m` random subtrees of one random tree on `n ≥ 1` vertices; always a
/// hypertree.
pub fn random_hypertree<R: Rng>(n: usize, m: usize, rng: &mut R) -> Hypergraph {
    let t = random_tree(n, rng);
    let edges = (0..m).map(|_| random_subtree(&t, rng)).collect();
    Hypergraph::new(labels(n), edges).expect("generated edges are valid")
}

/// `m` independent nonempty subsets, each vertex kept with probability 1/2.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Hypergraph {
    let edges = (0..m)
        .map(|_| loop {
            let s: VertexSet = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            if !s.is_empty() {
                break s;
            }
        })
        .collect();
    Hypergraph::new(labels(n), edges).expect("generated edges are valid")
}

/// Connected chordal graph: each new vertex is joined to a random clique
/// of the graph so far (so it is simplicial when added).
pub fn random_chordal_graph<R: Rng>(n: usize, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut adj = vec![VertexSet::new(); n];
    for v in 1..n {
        let anchor = rng.random_range(0..v);
        let mut clique = VertexSet::singleton(anchor);
        let mut nbrs: Vec<usize> = adj[anchor].iter().collect();
        nbrs.shuffle(rng);
        for w in nbrs {
            if rng.random_bool(0.5) && clique.is_subset(&adj[w]) {
                clique.insert(w);
            }
        }
        for u in clique.iter() {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edges(labels(n), &edges).expect("generated edges are valid")
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(labels(n), &edges).expect("generated edges are valid")
}

/// Every hypergraph on `n` vertices with exactly `m` nonempty edges, one per
/// multiset of edges (edges listed in nondecreasing bitmask order).
pub fn all_hypergraphs(n: usize, m: usize) -> Vec<Hypergraph> {
    fn rec(masks: u64, start: u64, left: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for mask in start..masks {
            cur.push(mask);
            rec(masks, mask, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut families = Vec::new();
    rec(1 << n, 1, m, &mut Vec::new(), &mut families);
    families
        .into_iter()
        .map(|f| {
            let edges = f
                .iter()
                .map(|&mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
                .collect();
            Hypergraph::new(labels(n), edges).expect("nonempty edges")
        })
        .collect()
}

/// All graphs on `n` labelled vertices (one per edge subset).
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            SimpleGraph::from_edges(labels(n), &edges).expect("distinct pairs")
        })
        .collect()
}
