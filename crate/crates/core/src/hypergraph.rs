//! Hypergraphs and their elementary constructions.
//!
//! Vertices are dense indices `0..n` with string labels; edges are stored
//! as a list (repeats allowed) in input order, so edge `i` keeps a stable
//! identity through every construction that does not drop edges.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::set::VertexSet;
use crate::tree::SpanningTree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates labels (unique) and edges (nonempty, inside the universe).
    pub fn new(labels: Vec<String>, edges: Vec<VertexSet>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if e.bound() > n {
                return Err(Error::VertexOutOfRange {
                    edge: i,
                    vertex: e.bound() - 1,
                    n,
                });
            }
        }
        Ok(Self { labels, edges })
    }

    /// Vertices labelled `0..n`, edges given by index lists.
    pub fn from_indices(n: usize, edges: &[&[usize]]) -> Result<Self> {
        Self::new(
            (0..n).map(|i| i.to_string()).collect(),
            edges.iter().map(|e| e.iter().copied().collect()).collect(),
        )
    }

    /// Edges given by labels; vertices are numbered in order of first
    /// appearance.
    pub fn from_labelled_edges<S: AsRef<str>>(edges: &[&[S]]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            let mut s = VertexSet::new();
            for l in e.iter() {
                let l = l.as_ref();
                let i = *index.entry(l.to_string()).or_insert_with(|| {
                    labels.push(l.to_string());
                    labels.len() - 1
                });
                s.insert(i);
            }
            sets.push(s);
        }
        Self::new(labels, sets)
    }

    /// Same edges over a universe with additional labelled vertices.
    pub fn with_vertices<S: AsRef<str>>(labels: &[S], edges: &[&[S]]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            let mut s = VertexSet::new();
            for l in e.iter() {
                let l = l.as_ref();
                s.insert(*index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
            }
            sets.push(s);
        }
        Self::new(labels, sets)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// `Σ|F| - m`, the weight every host tree attains.
    pub fn target_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.len() as u64 - 1).sum()
    }

    /// Number of edges containing both `u` and `v`.
    pub fn pair_weight(&self, u: usize, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.contains(u) && e.contains(v))
            .count() as u64
    }

    /// Same universe, different edge list.
    pub fn with_edges(&self, edges: Vec<VertexSet>) -> Result<Self> {
        Self::new(self.labels.clone(), edges)
    }

    /// Edge list re-expressed in the vertex order of `other` (same label set).
    pub fn relabel_onto(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.n() != other.n() {
            return Err(Error::DifferentUniverse);
        }
        let map: Vec<usize> = self
            .labels
            .iter()
            .map(|l| other.index_of(l).ok_or(Error::DifferentUniverse))
            .collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| map[v]).collect())
            .collect();
        other.with_edges(edges)
    }

    /// Dual hypergraph: one vertex `e<i>` per edge and one edge
    /// `D_v = {e : v ∈ e}` per covered vertex `v`, in vertex order.
    pub fn dual(&self) -> Hypergraph {
        let labels = (0..self.m()).map(|i| format!("e{i}")).collect();
        let edges = (0..self.n())
            .map(|v| self.incident_edges(v))
            .filter(|d| !d.is_empty())
            .collect();
        Hypergraph { labels, edges }
    }

    /// `D_v` as a set of edge indices.
    pub fn incident_edges(&self, v: usize) -> VertexSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn two_section(&self) -> SimpleGraph {
        let mut adj = vec![VertexSet::new(); self.n()];
        for e in &self.edges {
            for v in e.iter() {
                adj[v].union_with(e);
            }
        }
        for (v, a) in adj.iter_mut().enumerate() {
            a.remove(v);
        }
        SimpleGraph::from_adjacency(self.labels.clone(), adj)
    }

    pub fn line_graph(&self) -> SimpleGraph {
        let m = self.m();
        let mut adj = vec![VertexSet::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                if self.edges[i].intersects(&self.edges[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        SimpleGraph::from_adjacency((0..m).map(|i| format!("e{i}")).collect(), adj)
    }

    /// Drops repeated edges, keeping first occurrences in order.
    pub fn simplify(&self) -> Hypergraph {
        let mut seen = HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert((*e).clone()))
            .cloned()
            .collect();
        Hypergraph {
            labels: self.labels.clone(),
            edges,
        }
    }

    /// `N(H)`: for every vertex, the union of the edges containing it
    /// (`{v}` when no edge does).
    pub fn neighborhood_hypergraph(&self) -> Hypergraph {
        let edges = (0..self.n())
            .map(|v| {
                let mut acc = VertexSet::singleton(v);
                for e in self.edges.iter().filter(|e| e.contains(v)) {
                    acc.union_with(e);
                }
                acc
            })
            .collect();
        Hypergraph {
            labels: self.labels.clone(),
            edges,
        }
    }

    /// Helly test by the triple criterion: for every three vertices, the
    /// edges holding at least two of them share a vertex.
    pub fn is_helly(&self) -> bool {
        let n = self.n();
        let incident: Vec<VertexSet> = (0..n).map(|v| self.incident_edges(v)).collect();
        for a in 0..n {
            for b in a + 1..n {
                let ab = incident[a].intersection(&incident[b]);
                for c in b + 1..n {
                    let ac = incident[a].intersection(&incident[c]);
                    let bc = incident[b].intersection(&incident[c]);
                    let family = ab.union(&ac).union(&bc);
                    if !self.has_common_vertex(&family) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the edges indexed by `family` have a common vertex
    /// (vacuously true for the empty family).
    pub(crate) fn has_common_vertex(&self, family: &VertexSet) -> bool {
        let mut it = family.iter();
        let Some(first) = it.next() else {
            return true;
        };
        let mut acc = self.edges[first].clone();
        for i in it {
            acc.intersect_with(&self.edges[i]);
            if acc.is_empty() {
                return false;
            }
        }
        !acc.is_empty()
    }

    pub fn is_conformal(&self) -> bool {
        self.dual().is_helly()
    }

    /// For every ordered pair `u ≠ v` some edge contains `u` but not `v`.
    pub fn is_separating(&self) -> bool {
        let n = self.n();
        let incident: Vec<VertexSet> = (0..n).map(|v| self.incident_edges(v)).collect();
        (0..n).all(|u| {
            (0..n).all(|v| u == v || !incident[u].is_subset(&incident[v]))
        })
    }

    /// `I_H(s)`: intersection of the edges containing `s`, or the whole
    /// universe when none does.
    pub fn intersection_core(&self, s: &VertexSet) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if s.bound() > self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: s.bound(),
            });
        }
        Ok(self.core_unchecked(s))
    }

    /// `I_H(uv)`.
    pub fn pair_core(&self, u: usize, v: usize) -> VertexSet {
        self.core_unchecked(&VertexSet::pair(u, v))
    }

    fn core_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut acc: Option<VertexSet> = None;
        for e in self.edges.iter().filter(|e| s.is_subset(e)) {
            match acc.as_mut() {
                None => acc = Some(e.clone()),
                Some(a) => a.intersect_with(e),
            }
        }
        acc.unwrap_or_else(|| self.universe())
    }

    /// `(H_a, complement of H_a)`: edges containing `a`, and the rest.
    pub fn split_by_set(&self, a: &VertexSet) -> Result<(Hypergraph, Hypergraph)> {
        if a.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let (inside, outside): (Vec<VertexSet>, Vec<VertexSet>) =
            self.edges.iter().cloned().partition(|e| a.is_subset(e));
        Ok((
            Hypergraph {
                labels: self.labels.clone(),
                edges: inside,
            },
            Hypergraph {
                labels: self.labels.clone(),
                edges: outside,
            },
        ))
    }

    /// Component id per vertex in the 2-section of the edges *not*
    /// containing `a` (components numbered by smallest member).
    pub fn complement_components(&self, a: &VertexSet) -> Vec<usize> {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(self.n());
        for e in self.edges.iter().filter(|e| !a.is_subset(e)) {
            let mut it = e.iter();
            if let Some(r) = it.next() {
                for v in it {
                    uf.union(r, v);
                }
            }
        }
        let mut ids = HashMap::new();
        (0..self.n())
            .map(|v| {
                let root = uf.find(v);
                let next = ids.len();
                *ids.entry(root).or_insert(next)
            })
            .collect()
    }

    /// Every edge induces a connected subgraph of `t`.
    pub fn is_host_tree(&self, t: &SpanningTree) -> Result<bool> {
        if t.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: t.n(),
            });
        }
        Ok(self.hosts(t))
    }

    pub(crate) fn hosts(&self, t: &SpanningTree) -> bool {
        self.edges.iter().all(|e| t.induces_subtree(e))
    }

    /// `w(T) = Σ_{uv ∈ T} w(uv)`.
    pub fn tree_weight(&self, t: &SpanningTree) -> u64 {
        t.edges().iter().map(|&(u, v)| self.pair_weight(u, v)).sum()
    }

    /// Renders a vertex set as `{a,b,c}` using labels.
    pub fn format_set(&self, s: &VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Resolves labels to a vertex set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }
}
