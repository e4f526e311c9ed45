//! GYO reduction: deciding α-acyclicity (dual hypertrees).

use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Edge `removed` is contained in edge `container`.
    RemoveContainedEdge { removed: usize, container: usize },
    /// `vertex` occurs only in edge `edge` and is deleted from it.
    ShrinkPrivateVertex { vertex: usize, edge: usize },
    /// The last remaining edge became empty.
    RemoveEmptyEdge { edge: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Residual edges as `(original index, remaining vertices)`.
    pub final_state: Vec<(usize, VertexSet)>,
}

impl ReductionTrace {
    pub fn success(&self) -> bool {
        self.final_state.is_empty()
    }

    /// Re-applies the steps to `h`, checking each precondition, and returns
    /// the residual state (`None` if some step is not applicable).
    pub fn replay(&self, h: &Hypergraph) -> Option<Vec<(usize, VertexSet)>> {
        let mut state: Vec<Option<VertexSet>> = h.edges().iter().cloned().map(Some).collect();
        for step in &self.steps {
            match *step {
                ReductionStep::RemoveContainedEdge { removed, container } => {
                    let (a, b) = (state.get(removed)?.as_ref()?, state.get(container)?.as_ref()?);
                    if removed == container || !a.is_subset(b) {
                        return None;
                    }
                    state[removed] = None;
                }
                ReductionStep::ShrinkPrivateVertex { vertex, edge } => {
                    if !state.get(edge)?.as_ref()?.contains(vertex) {
                        return None;
                    }
                    let holders = state
                        .iter()
                        .flatten()
                        .filter(|e| e.contains(vertex))
                        .count();
                    if holders != 1 {
                        return None;
                    }
                    state[edge].as_mut()?.remove(vertex);
                }
                ReductionStep::RemoveEmptyEdge { edge } => {
                    if !state.get(edge)?.as_ref()?.is_empty() {
                        return None;
                    }
                    state[edge] = None;
                }
            }
        }
        Some(
            state
                .into_iter()
                .enumerate()
                .filter_map(|(i, e)| e.map(|e| (i, e)))
                .collect(),
        )
    }
}

fn next_step(state: &[Option<VertexSet>]) -> Option<ReductionStep> {
    let live: Vec<(usize, &VertexSet)> = state
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.as_ref().map(|e| (i, e)))
        .collect();
    for &(i, a) in &live {
        for &(j, b) in &live {
            if i != j && a.is_subset(b) {
                return Some(ReductionStep::RemoveContainedEdge {
                    removed: i,
                    container: j,
                });
            }
        }
    }
    for &(i, a) in &live {
        for v in a.iter() {
            if live.iter().all(|&(j, b)| j == i || !b.contains(v)) {
                return Some(ReductionStep::ShrinkPrivateVertex { vertex: v, edge: i });
            }
        }
    }
    match live.as_slice() {
        [(i, e)] if e.is_empty() => Some(ReductionStep::RemoveEmptyEdge { edge: *i }),
        _ => None,
    }
}

/// Applies the two GYO rules to a fixpoint: containment removals first,
/// then private-vertex shrinks, lowest indices first.
pub fn gyo_reduce(h: &Hypergraph) -> ReductionTrace {
    let mut state: Vec<Option<VertexSet>> = h.edges().iter().cloned().map(Some).collect();
    let mut steps = Vec::new();
    while let Some(step) = next_step(&state) {
        match step {
            ReductionStep::RemoveContainedEdge { removed, .. } => state[removed] = None,
            ReductionStep::ShrinkPrivateVertex { vertex, edge } => {
                state[edge].as_mut().expect("live edge").remove(vertex);
            }
            ReductionStep::RemoveEmptyEdge { edge } => state[edge] = None,
        }
        steps.push(step);
    }
    let final_state = state
        .into_iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| (i, e)))
        .collect();
    ReductionTrace { steps, final_state }
}

pub fn is_dual_hypertree(h: &Hypergraph) -> bool {
    gyo_reduce(h).success()
}
