//! Host-tree enumeration as a product of per-basic-set admissible sets.

use num_bigint::BigUint;

use super::basis::{basic_sets, BasicSetRecord};
use super::count::admissible_count;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::tree::{Pair, SpanningTree};

pub const DEFAULT_TREE_CAP: usize = 1_000_000;

struct Contraction<'a> {
    /// `(edge, part_u, part_v)` in lexicographic edge order.
    edges: Vec<(Pair, usize, usize)>,
    parts: usize,
    out: &'a mut Vec<Vec<Pair>>,
}

impl Contraction<'_> {
    fn can_finish(&self, from: usize, label: &[usize]) -> bool {
        let mut label = label.to_vec();
        for &(_, a, b) in &self.edges[from..] {
            merge(&mut label, a, b);
        }
        label.iter().all(|&l| l == label[0])
    }

    /// Include-then-exclude recursion; `label[p]` names the contracted
    /// super-node of part `p`.
    fn recurse(&mut self, at: usize, label: Vec<usize>, chosen: &mut Vec<Pair>) {
        if chosen.len() + 1 == self.parts {
            self.out.push(chosen.clone());
            return;
        }
        if at == self.edges.len() || !self.can_finish(at, &label) {
            return;
        }
        let (e, a, b) = self.edges[at];
        if label[a] != label[b] {
            let mut merged = label.clone();
            merge(&mut merged, a, b);
            chosen.push(e);
            self.recurse(at + 1, merged, chosen);
            chosen.pop();
        }
        self.recurse(at + 1, label, chosen);
    }
}

fn merge(label: &mut [usize], a: usize, b: usize) {
    let (from, to) = (label[b], label[a]);
    if from != to {
        for l in label.iter_mut() {
            if *l == from {
                *l = to;
            }
        }
    }
}

/// All `B`-admissible edge sets, each sorted, in lexicographic order.
pub fn admissible_sets(record: &BasicSetRecord) -> Vec<Vec<Pair>> {
    let parts = record.alpha;
    let mut out = Vec::new();
    if parts <= 1 {
        out.push(Vec::new());
        return out;
    }
    let edges = record
        .delta
        .iter()
        .map(|&(u, v)| ((u, v), record.part_of(u), record.part_of(v)))
        .collect();
    let mut c = Contraction {
        edges,
        parts,
        out: &mut out,
    };
    c.recurse(0, (0..parts).collect(), &mut Vec::new());
    for set in &mut out {
        set.sort_unstable();
    }
    out
}

/// Every host tree of `h`. The last basic set (in canonical order) varies
/// fastest. Fails with [`Error::Overflow`] before doing any work if the
/// count exceeds `cap`.
pub fn enumerate_host_trees(h: &Hypergraph, cap: usize) -> Result<Vec<SpanningTree>> {
    let basis = basic_sets(h)?;
    let total: BigUint = basis.records.iter().map(admissible_count).product();
    if total > BigUint::from(cap) {
        return Err(Error::Overflow { cap });
    }
    let choices: Vec<Vec<Vec<Pair>>> = basis.records.iter().map(admissible_sets).collect();
    let mut trees = Vec::new();
    let mut odometer = vec![0usize; choices.len()];
    loop {
        let edges: Vec<Pair> = choices
            .iter()
            .zip(&odometer)
            .flat_map(|(c, &i)| c[i].iter().copied())
            .collect();
        let tree = SpanningTree::new(h.n(), edges)
            .map_err(|e| Error::InvariantViolation(format!("admissible union: {e}")))?;
        if !h.hosts(&tree) {
            return Err(Error::InvariantViolation(format!(
                "admissible union {:?} is not a host tree",
                tree.edges()
            )));
        }
        trees.push(tree);

        let mut slot = choices.len();
        loop {
            if slot == 0 {
                return Ok(trees);
            }
            slot -= 1;
            odometer[slot] += 1;
            if odometer[slot] < choices[slot].len() {
                break;
            }
            odometer[slot] = 0;
        }
    }
}
