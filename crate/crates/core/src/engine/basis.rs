use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hypergraph::Hypergraph;
use crate::recognition;
use crate::set::VertexSet;
use crate::tree::{Pair, SpanningTree};

/// One basic set `B` with the component structure of the 2-section of the
/// edges not containing `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSetRecord {
    pub set: VertexSet,
    /// Partition of the whole vertex set, ordered by smallest member.
    pub components: Vec<VertexSet>,
    /// Indices into `components` of the components meeting `B` (`A(B)`).
    pub meeting: Vec<usize>,
    /// `|A(B)|`.
    pub alpha: usize,
    /// Pairs `{u, v} ⊆ B` split across components: exactly the host-tree
    /// edges tagged with `B`. Sorted.
    pub delta: Vec<Pair>,
    component_of: Vec<usize>,
}

impl BasicSetRecord {
    pub fn new(h: &Hypergraph, set: VertexSet) -> Self {
        let component_of = h.complement_components(&set);
        let count = component_of.iter().copied().max().map_or(0, |c| c + 1);
        let mut components = vec![VertexSet::new(); count];
        for (v, &c) in component_of.iter().enumerate() {
            components[c].insert(v);
        }
        let meeting: Vec<usize> = (0..count)
            .filter(|&c| components[c].intersects(&set))
            .collect();
        let members = set.to_vec();
        let mut delta = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if component_of[u] != component_of[v] {
                    delta.push((u, v));
                }
            }
        }
        Self {
            alpha: meeting.len(),
            set,
            components,
            meeting,
            delta,
            component_of,
        }
    }

    /// Component index (into `components`) holding `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// `A ∩ B` for each `A` in `A(B)`, in `meeting` order.
    pub fn parts(&self) -> Vec<VertexSet> {
        self.meeting
            .iter()
            .map(|&c| self.components[c].intersection(&self.set))
            .collect()
    }

    /// Position within `meeting` of the component holding `v` (`v ∈ B`).
    pub fn part_of(&self, v: usize) -> usize {
        let c = self.component_of[v];
        self.meeting
            .iter()
            .position(|&m| m == c)
            .expect("vertex of B lies in a meeting component")
    }
}

/// The basic sets of a hypertree in canonical order (size, then
/// lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub records: Vec<BasicSetRecord>,
}

impl Basis {
    pub fn sets(&self) -> Vec<&VertexSet> {
        self.records.iter().map(|r| &r.set).collect()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BasicSetRecord> {
        self.records.iter()
    }

    /// The record whose Δ holds `{u, v}`.
    pub fn record_for_pair(&self, u: usize, v: usize) -> Option<&BasicSetRecord> {
        let p = crate::tree::pair(u, v);
        self.records
            .iter()
            .find(|r| r.delta.binary_search(&p).is_ok())
    }
}

/// Basic sets read off the canonical host tree.
pub fn basic_sets(h: &Hypergraph) -> Result<Basis> {
    let t = recognition::host_tree(h)?;
    Ok(basis_from_tree_unchecked(h, &t, Exec::default()))
}

/// Basic sets read off an arbitrary host tree `t` of `h`.
pub fn basis_from_tree(h: &Hypergraph, t: &SpanningTree) -> Result<Basis> {
    if !h.is_host_tree(t)? {
        return Err(Error::NotHostTree);
    }
    Ok(basis_from_tree_unchecked(h, t, Exec::default()))
}

pub(crate) fn basis_from_tree_unchecked(h: &Hypergraph, t: &SpanningTree, exec: Exec) -> Basis {
    let mut sets: Vec<VertexSet> = t.edges().iter().map(|&(u, v)| h.pair_core(u, v)).collect();
    sets.sort_by(|a, b| a.canonical_cmp(b));
    sets.dedup();
    Basis {
        records: exec.map(&sets, |b| BasicSetRecord::new(h, b.clone())),
    }
}
