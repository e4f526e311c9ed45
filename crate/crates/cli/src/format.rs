//! Plain-text instance files.
//!
//! ```text
//! # comment
//! vertices 1 2 3 4      optional; declares order and isolated vertices
//! e 1 2                 one hyperedge per line (.hg)
//! g 1 2                 one graph edge per line (.gr)
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use hypertree_core::{Hypergraph, SimpleGraph, VertexSet};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Hypergraph(Hypergraph),
    Graph(SimpleGraph),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(PartialEq)]
enum Kind {
    Hyper,
    Graph,
}

struct Labels {
    names: Vec<String>,
    index: HashMap<String, usize>,
    declared: bool,
}

impl Labels {
    fn resolve(&mut self, label: &str, line: usize) -> Result<usize, ParseError> {
        if let Some(&i) = self.index.get(label) {
            return Ok(i);
        }
        if self.declared {
            return Err(err(line, format!("vertex `{label}` not in the vertices header")));
        }
        self.names.push(label.to_string());
        self.index.insert(label.to_string(), self.names.len() - 1);
        Ok(self.names.len() - 1)
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut labels = Labels {
        names: Vec::new(),
        index: HashMap::new(),
        declared: false,
    };
    let mut kind: Option<Kind> = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let head = tokens.next().expect("nonempty line");
        let rest: Vec<&str> = tokens.collect();
        match head {
            "vertices" => {
                if labels.declared {
                    return Err(err(line, "second vertices header"));
                }
                if !edges.is_empty() {
                    return Err(err(line, "vertices header after edges"));
                }
                labels.declared = true;
                for l in rest {
                    if labels.index.insert(l.to_string(), labels.names.len()).is_some() {
                        return Err(err(line, format!("duplicate vertex `{l}` in header")));
                    }
                    labels.names.push(l.to_string());
                }
            }
            "e" | "g" => {
                let this = if head == "e" { Kind::Hyper } else { Kind::Graph };
                if kind.as_ref().is_some_and(|k| *k != this) {
                    return Err(err(line, "mixed `e` and `g` lines"));
                }
                if rest.is_empty() {
                    return Err(err(line, "empty edge"));
                }
                if this == Kind::Graph && rest.len() != 2 {
                    return Err(err(line, "graph edge needs exactly two vertices"));
                }
                let ids = rest
                    .iter()
                    .map(|l| labels.resolve(l, line))
                    .collect::<Result<Vec<_>, _>>()?;
                kind = Some(this);
                edges.push((line, ids));
            }
            other => return Err(err(line, format!("unknown line kind `{other}`"))),
        }
    }
    let names = labels.names;
    match kind {
        Some(Kind::Graph) => {
            let mut pairs = Vec::new();
            for (line, ids) in &edges {
                if ids[0] == ids[1] {
                    return Err(err(*line, "loop edge"));
                }
                let p = (ids[0].min(ids[1]), ids[0].max(ids[1]));
                if pairs.contains(&p) {
                    return Err(err(*line, "repeated edge"));
                }
                pairs.push(p);
            }
            SimpleGraph::from_edges(names, &pairs)
                .map(Instance::Graph)
                .map_err(|e| err(0, e.to_string()))
        }
        _ => {
            let sets = edges.into_iter().map(|(_, ids)| ids.into_iter().collect()).collect();
            Hypergraph::new(names, sets)
                .map(Instance::Hypergraph)
                .map_err(|e| err(0, e.to_string()))
        }
    }
}

/// A header is written only when parsing the body alone would give a
/// different vertex order (isolated vertices, or a declared order).
fn needs_header(labels: &[String], body_order: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; labels.len()];
    let mut next = 0;
    for v in body_order {
        if !seen[v] {
            if v != next {
                return true;
            }
            seen[v] = true;
            next += 1;
        }
    }
    next != labels.len()
}

fn header(labels: &[String]) -> String {
    let mut s = String::from("vertices");
    for l in labels {
        s.push(' ');
        s.push_str(l);
    }
    s.push('\n');
    s
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let order = h.edges().iter().flat_map(VertexSet::iter);
    let mut out = String::new();
    if needs_header(h.labels(), order) {
        out.push_str(&header(h.labels()));
    }
    for e in h.edges() {
        out.push('e');
        for v in e.iter() {
            write!(out, " {}", h.label(v)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn serialize_graph(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    if needs_header(g.labels(), edges.iter().flat_map(|&(u, v)| [u, v])) {
        out.push_str(&header(g.labels()));
    }
    for (u, v) in edges {
        writeln!(out, "g {} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}

pub fn serialize(instance: &Instance) -> String {
    match instance {
        Instance::Hypergraph(h) => serialize_hypergraph(h),
        Instance::Graph(g) => serialize_graph(g),
    }
}
