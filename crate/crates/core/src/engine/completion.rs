//! Membership in, and listing of, the completion: every vertex set that
//! induces a subtree of every host tree.

use std::collections::HashSet;

use super::basis::basic_sets;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::recognition;
use crate::set::VertexSet;

pub const DEFAULT_COMPLETION_CAP: usize = 10_000;

/// Singletons and the full set always belong. Otherwise `f` must induce a
/// subtree of the canonical host tree `T` and contain `I_H(uv)` for every
/// edge `uv` of `T[f]`; `f` is then the connected union of those cores.
pub fn completion_contains(h: &Hypergraph, f: &VertexSet) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if f.bound() > h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: f.bound(),
        });
    }
    let t = recognition::host_tree(h)?;
    if f.len() == 1 || *f == h.universe() {
        return Ok(true);
    }
    if !t.induces_subtree(f) {
        return Ok(false);
    }
    Ok(t
        .induced_edges(f)
        .into_iter()
        .all(|(u, v)| h.pair_core(u, v).is_subset(f)))
}

/// Closes the basis under unions of intersecting sets and adds singletons
/// and the full set. Sorted by size, then lexicographically.
pub fn enumerate_completion(h: &Hypergraph, cap: usize) -> Result<Vec<VertexSet>> {
    let basis = basic_sets(h)?;
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut closed: Vec<VertexSet> = Vec::new();
    let push = |s: VertexSet, seen: &mut HashSet<VertexSet>, closed: &mut Vec<VertexSet>| {
        if seen.insert(s.clone()) {
            closed.push(s);
            if closed.len() > cap {
                return Err(Error::Overflow { cap });
            }
        }
        Ok(())
    };
    for v in 0..h.n() {
        push(VertexSet::singleton(v), &mut seen, &mut closed)?;
    }
    if h.n() > 0 {
        push(h.universe(), &mut seen, &mut closed)?;
    }
    // Unions only need to be taken among sets of size ≥ 2: a singleton meeting
    // X lies inside X.
    let mut work: Vec<VertexSet> = Vec::new();
    for r in basis.iter() {
        push(r.set.clone(), &mut seen, &mut closed)?;
        work.push(r.set.clone());
    }
    let mut wide: Vec<VertexSet> = Vec::new();
    while let Some(x) = work.pop() {
        if wide.contains(&x) {
            continue;
        }
        let mut fresh = Vec::new();
        for y in &wide {
            if x.intersects(y) {
                let u = x.union(y);
                if !seen.contains(&u) {
                    fresh.push(u);
                }
            }
        }
        wide.push(x);
        for u in fresh {
            if !seen.contains(&u) {
                push(u.clone(), &mut seen, &mut closed)?;
                work.push(u);
            }
        }
    }
    closed.sort_by(|a, b| a.canonical_cmp(b));
    Ok(closed)
}
