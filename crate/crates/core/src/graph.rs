//! Undirected simple graphs with bitset adjacency.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices labelled `0..n`.
    pub fn empty(n: usize) -> Self {
        Self {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Builds a graph from labels and index pairs. Loops, out-of-range
    /// endpoints and repeated edges are rejected.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut g = Self {
            labels,
            adj: vec![VertexSet::new(); n],
        };
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.adj[u].contains(v) {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Unlabelled convenience constructor; panics on invalid input.
    pub fn from_pairs(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
            .expect("valid edge list")
    }

    /// Internal constructor from a symmetric, loop-free adjacency.
    pub(crate) fn from_adjacency(labels: Vec<String>, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Self { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
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

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Component id per vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Component ids of the subgraph induced by `V \ removed`. Removed vertices
    /// get `usize::MAX`.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX || removed.contains(s) {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if comp[w] == usize::MAX && !removed.contains(w) {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Shortest path from `s` to `t` (inclusive) avoiding `forbidden`, by BFS
    /// with neighbours visited in index order.
    pub fn shortest_path_avoiding(
        &self,
        s: usize,
        t: usize,
        forbidden: &VertexSet,
    ) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[u].iter() {
                if parent[w] == usize::MAX && !forbidden.contains(w) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Subgraph keeping only the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![VertexSet::new(); self.n()];
        for (u, v) in self.edges() {
            if keep(u, v) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Self::from_adjacency(self.labels.clone(), adj)
    }
}
