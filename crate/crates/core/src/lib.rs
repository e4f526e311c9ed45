//! Hypertrees (hypergraphs with a host tree), their host trees, and the
//! related chordal-graph constructions.

pub mod apps;
pub mod brute;
pub mod engine;
pub mod error;
pub mod exec;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod operations;
pub mod recognition;
pub mod set;
pub mod tree;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::SimpleGraph;
pub use hypergraph::Hypergraph;
pub use set::VertexSet;
pub use tree::{Pair, SpanningTree};
