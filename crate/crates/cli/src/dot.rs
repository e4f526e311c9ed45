//! Graphviz output.

use std::fmt::Write as _;

use hypertree_core::{Hypergraph, SimpleGraph, SpanningTree};

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

fn body(out: &mut String, labels: &[String], edges: &[(usize, usize)]) {
    for l in labels {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for &(u, v) in edges {
        writeln!(out, "  {} -- {};", quote(&labels[u]), quote(&labels[v])).unwrap();
    }
}

/// The tree's edges (or the 2-section when no tree is given), with each
/// hyperedge as a comment line.
pub fn to_dot(h: &Hypergraph, tree: Option<&SpanningTree>) -> String {
    let mut out = String::from("graph hypertree {\n");
    for (i, e) in h.edges().iter().enumerate() {
        writeln!(out, "  // e{i} = {}", h.format_set(e)).unwrap();
    }
    let edges = match tree {
        Some(t) => t.edges().to_vec(),
        None => h.two_section().edges(),
    };
    body(&mut out, h.labels(), &edges);
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    body(&mut out, g.labels(), &g.edges());
    out.push_str("}\n");
    out
}
