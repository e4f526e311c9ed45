//! Edge operations that leave the set of host trees unchanged.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// One host-tree-preserving edge operation. Edge arguments are indices into
/// the current edge list; removals shift later indices down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperationSpec {
    AddSingleton { vertex: usize },
    RemoveSingleton { edge: usize },
    AddFull,
    RemoveFull { edge: usize },
    AddDuplicate { edge: usize },
    /// Requires another edge with the same vertices.
    RemoveDuplicate { edge: usize },
    /// Requires a nonempty intersection.
    AddIntersection { edges: Vec<usize> },
    /// Requires the two edges to meet.
    AddUnion { first: usize, second: usize },
    /// Requires the listed edges to have a connected line graph.
    AddConnectedUnion { edges: Vec<usize> },
    /// Requires the edge to be the intersection of some other edges.
    RemoveIntersection { edge: usize },
    /// Requires the edge to be the connected union of some other edges.
    RemoveConnectedUnion { edge: usize },
}

fn illegal(msg: impl Into<String>) -> Error {
    Error::IllegalOperation(msg.into())
}

fn check_edge(h: &Hypergraph, edge: usize) -> Result<()> {
    if edge < h.m() {
        Ok(())
    } else {
        Err(illegal(format!("edge index {edge} out of range")))
    }
}

fn without(h: &Hypergraph, edge: usize) -> Result<Hypergraph> {
    let mut edges = h.edges().to_vec();
    edges.remove(edge);
    h.with_edges(edges)
}

fn with_added(h: &Hypergraph, set: VertexSet) -> Result<Hypergraph> {
    let mut edges = h.edges().to_vec();
    edges.push(set);
    h.with_edges(edges)
}

/// Whether the line graph of `sets` is connected (false when empty).
fn union_is_connected(sets: &[&VertexSet]) -> bool {
    if sets.is_empty() {
        return false;
    }
    let mut reached = vec![false; sets.len()];
    reached[0] = true;
    let mut covered = sets[0].clone();
    loop {
        let mut grew = false;
        for (i, s) in sets.iter().enumerate() {
            if !reached[i] && s.intersects(&covered) {
                reached[i] = true;
                covered.union_with(s);
                grew = true;
            }
        }
        if !grew {
            return reached.iter().all(|&r| r);
        }
    }
}

pub fn apply_equivalence_op(h: &Hypergraph, op: &OperationSpec) -> Result<Hypergraph> {
    use OperationSpec::*;
    match op {
        AddSingleton { vertex } => {
            if *vertex >= h.n() {
                return Err(illegal(format!("vertex {vertex} out of range")));
            }
            with_added(h, VertexSet::singleton(*vertex))
        }
        RemoveSingleton { edge } => {
            check_edge(h, *edge)?;
            if h.edges()[*edge].len() != 1 {
                return Err(illegal(format!("edge {edge} is not a singleton")));
            }
            without(h, *edge)
        }
        AddFull => {
            if h.n() == 0 {
                return Err(illegal("empty vertex universe"));
            }
            with_added(h, h.universe())
        }
        RemoveFull { edge } => {
            check_edge(h, *edge)?;
            if h.edges()[*edge] != h.universe() {
                return Err(illegal(format!("edge {edge} is not the full vertex set")));
            }
            without(h, *edge)
        }
        AddDuplicate { edge } => {
            check_edge(h, *edge)?;
            with_added(h, h.edges()[*edge].clone())
        }
        RemoveDuplicate { edge } => {
            check_edge(h, *edge)?;
            let target = &h.edges()[*edge];
            let repeated = h
                .edges()
                .iter()
                .enumerate()
                .any(|(i, e)| i != *edge && e == target);
            if !repeated {
                return Err(illegal(format!("edge {edge} has no duplicate")));
            }
            without(h, *edge)
        }
        AddIntersection { edges } => {
            let Some((&first, rest)) = edges.split_first() else {
                return Err(illegal("intersection of no edges"));
            };
            check_edge(h, first)?;
            let mut acc = h.edges()[first].clone();
            for &i in rest {
                check_edge(h, i)?;
                acc.intersect_with(&h.edges()[i]);
            }
            if acc.is_empty() {
                return Err(illegal("intersection is empty"));
            }
            with_added(h, acc)
        }
        AddUnion { first, second } => {
            check_edge(h, *first)?;
            check_edge(h, *second)?;
            let (a, b) = (&h.edges()[*first], &h.edges()[*second]);
            if !a.intersects(b) {
                return Err(illegal(format!("edges {first} and {second} are disjoint")));
            }
            with_added(h, a.union(b))
        }
        AddConnectedUnion { edges } => {
            for &i in edges {
                check_edge(h, i)?;
            }
            let sets: Vec<&VertexSet> = edges.iter().map(|&i| &h.edges()[i]).collect();
            if !union_is_connected(&sets) {
                return Err(illegal("union is not connected"));
            }
            let mut acc = VertexSet::new();
            for s in sets {
                acc.union_with(s);
            }
            with_added(h, acc)
        }
        RemoveIntersection { edge } => {
            check_edge(h, *edge)?;
            let target = &h.edges()[*edge];
            // The largest candidate family is every other edge containing it.
            let mut acc: Option<VertexSet> = None;
            for (i, e) in h.edges().iter().enumerate() {
                if i != *edge && target.is_subset(e) {
                    match acc.as_mut() {
                        None => acc = Some(e.clone()),
                        Some(a) => a.intersect_with(e),
                    }
                }
            }
            if acc.as_ref() != Some(target) {
                return Err(illegal(format!(
                    "edge {edge} is not an intersection of other edges"
                )));
            }
            without(h, *edge)
        }
        RemoveConnectedUnion { edge } => {
            check_edge(h, *edge)?;
            let target = &h.edges()[*edge];
            let parts: Vec<&VertexSet> = h
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, e)| i != *edge && e.is_subset(target))
                .map(|(_, e)| e)
                .collect();
            let mut acc = VertexSet::new();
            for s in &parts {
                acc.union_with(s);
            }
            if &acc != target || !union_is_connected(&parts) {
                return Err(illegal(format!(
                    "edge {edge} is not a connected union of other edges"
                )));
            }
            without(h, *edge)
        }
    }
}
