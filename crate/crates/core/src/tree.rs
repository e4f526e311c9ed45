//! Spanning trees over a dense vertex range.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Unordered vertex pair, stored with the smaller endpoint first.
pub type Pair = (usize, usize);

pub fn pair(u: usize, v: usize) -> Pair {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A tree on exactly the vertices `0..n`.
///
/// Edges are kept normalized and sorted, so equal trees compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<Pair>,
}

impl SpanningTree {
    /// Validates that `edges` form a spanning tree of `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let mut edges: Vec<Pair> = edges.into_iter().map(|(u, v)| pair(u, v)).collect();
        edges.sort_unstable();
        let expected = n.saturating_sub(1);
        if edges.len() != expected {
            return Err(Error::InvalidTree(format!(
                "expected {expected} edges, found {}",
                edges.len()
            )));
        }
        let mut uf = UnionFind::<usize>::new(n);
        for &(u, v) in &edges {
            if v >= n {
                return Err(Error::InvalidTree(format!("edge {u}-{v} out of range")));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("loop at {u}")));
            }
            if !uf.union(u, v) {
                return Err(Error::InvalidTree(format!("edge {u}-{v} closes a cycle")));
            }
        }
        // n - 1 acyclic edges on n vertices: connected.
        Ok(Self { n, edges })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Pair>) -> Self {
        debug_assert!(Self::new(n, edges.iter().copied()).is_ok());
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Pair] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&pair(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Number of tree edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count()
    }

    /// Edges of `T[set]`.
    pub fn induced_edges(&self, set: &VertexSet) -> Vec<Pair> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .collect()
    }

    /// Whether `set` induces a subtree (a nonempty connected subgraph).
    pub fn induces_subtree(&self, set: &VertexSet) -> bool {
        !set.is_empty() && self.induced_edge_count(set) + 1 == set.len()
    }

    /// Vertices of the tree path `T[u, v]`, from `u` to `v`.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.n];
        parent[u] = u;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            if x == v {
                break;
            }
            for y in adj[x].iter() {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut out = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            out.push(x);
        }
        out.reverse();
        out
    }

    /// Edges along `T[u, v]`.
    pub fn path_edges(&self, u: usize, v: usize) -> Vec<Pair> {
        self.path(u, v).windows(2).map(|w| pair(w[0], w[1])).collect()
    }

    /// `T - removed + added`, validated.
    pub fn exchange(&self, removed: Pair, added: Pair) -> Result<Self> {
        let removed = pair(removed.0, removed.1);
        if !self.contains_edge(removed.0, removed.1) {
            return Err(Error::InvalidTree(format!(
                "edge {}-{} not in tree",
                removed.0, removed.1
            )));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != removed)
            .chain(std::iter::once(added));
        Self::new(self.n, edges)
    }

    /// `E(self) \ E(other)`.
    pub fn edges_not_in(&self, other: &Self) -> Vec<Pair> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| !other.contains_edge(u, v))
            .collect()
    }
}
