//! Shared fixtures for unit tests.

use crate::hypergraph::Hypergraph;

pub fn hg(edges: &[&[&str]]) -> Hypergraph {
    Hypergraph::from_labelled_edges(edges).unwrap()
}

/// `{1,2},{2,3}`.
pub fn path3() -> Hypergraph {
    hg(&[&["1", "2"], &["2", "3"]])
}

/// `{1,2,3},{2,3,4},{1,2,3,4}`.
pub fn paper1() -> Hypergraph {
    hg(&[&["1", "2", "3"], &["2", "3", "4"], &["1", "2", "3", "4"]])
}

/// `{1,2},{2,3},{1,2,3,4}`.
pub fn paper2() -> Hypergraph {
    Hypergraph::with_vertices(
        &["1", "2", "3", "4"],
        &[&["1", "2"], &["2", "3"], &["1", "2", "3", "4"]],
    )
    .unwrap()
}

/// `{1,2},{2,3},{1,3}`.
pub fn triangle() -> Hypergraph {
    hg(&[&["1", "2"], &["2", "3"], &["1", "3"]])
}
