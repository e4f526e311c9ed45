#![allow(dead_code)]

use hypertree_core::generate::{random_hypergraph, random_hypertree, rng};
use hypertree_core::{Hypergraph, SimpleGraph, VertexSet};

/// Every nonempty subset of `0..n`.
pub fn subsets(n: usize) -> Vec<VertexSet> {
    (1u64..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect()
}

/// Helly by definition: every pairwise-intersecting subfamily has a common
/// vertex.
pub fn helly_by_definition(h: &Hypergraph) -> bool {
    let m = h.m();
    for mask in 1u64..1 << m {
        let family: Vec<&VertexSet> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| &h.edges()[i]).collect();
        let pairwise = family
            .iter()
            .enumerate()
            .all(|(i, a)| family[i + 1..].iter().all(|b| a.intersects(b)));
        if pairwise {
            let mut common = h.universe();
            for e in &family {
                common.intersect_with(e);
            }
            if common.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Chordal by definition: no vertex subset of size ≥ 4 induces a cycle.
pub fn chordal_by_definition(g: &SimpleGraph) -> bool {
    let n = g.n();
    for s in subsets(n) {
        if s.len() < 4 {
            continue;
        }
        let degrees_two = s.iter().all(|v| g.neighbors(v).intersection(&s).len() == 2);
        if !degrees_two {
            continue;
        }
        let removed = VertexSet::full(n).difference(&s);
        let comp = g.components_avoiding(&removed);
        let first = comp[s.first().unwrap()];
        if s.iter().all(|v| comp[v] == first) {
            return false;
        }
    }
    true
}

/// Mixed sample: half guaranteed hypertrees, half unconstrained.
pub fn mixed_sample(count: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Hypergraph> {
    use rand::Rng;
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.random_range(1..=max_n);
            let m = r.random_range(0..=max_m);
            if i % 2 == 0 {
                random_hypertree(n, m, &mut r)
            } else {
                random_hypergraph(n, m, &mut r)
            }
        })
        .collect()
}

pub fn hypertree_sample(count: usize, max_n: usize, max_m: usize, seed: u64) -> Vec<Hypergraph> {
    use rand::Rng;
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(1..=max_n);
            let m = r.random_range(1..=max_m);
            random_hypertree(n, m, &mut r)
        })
        .collect()
}
