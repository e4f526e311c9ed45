//! Argument parsing and dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypertree_core::apps::{
    clique_tree, compatible_tree, is_basic_chordal, is_dually_chordal, CliqueTree, Weighting,
    DEFAULT_CLIQUE_CAP,
};
use hypertree_core::engine::{
    basic_sets, completion_contains, count_host_trees, enumerate_completion,
    enumerate_host_trees, equivalent_with, feasible_edges, is_basic_hypertree, swap_sequence,
    EquivalenceMode, DEFAULT_COMPLETION_CAP, DEFAULT_TREE_CAP,
};
use hypertree_core::generate::{
    random_chordal_graph, random_graph, random_hypergraph, random_hypertree, rng,
};
use hypertree_core::recognition::{
    gyo_reduce, host_tree, is_chordal, is_hypertree_with, Method, RecognitionOptions,
    ReductionStep,
};
use hypertree_core::{Error, Hypergraph, SimpleGraph, SpanningTree, VertexSet};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dot::{graph_to_dot, to_dot};
use crate::format::{parse_instance, serialize_graph, serialize_hypergraph, Instance};
use crate::report::{digest, CommandReport, EXIT_NEGATIVE, EXIT_OK, EXIT_OVERFLOW, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(name = "hypertree-lab", version, about = "Hypertrees, host trees and clique trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print one JSON report per input instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Limit on listed trees, sets or cliques.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Mst)]
    pub method: MethodArg,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = WeightingArg::Neighborhoods)]
    pub weighting: WeightingArg,
    /// Run the command on every instance file in a directory (.hg for
    /// hypergraph commands, .gr for graph commands).
    #[arg(long, global = true, value_name = "DIR")]
    pub each: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Helly,
    Mst,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightingArg {
    Cliques,
    Neighborhoods,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Hypergraph,
    Graph,
    Chordal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Guarantee {
    Hypertree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a hypergraph is a hypertree.
    Recognize { file: Option<PathBuf> },
    /// Print the canonical host tree.
    HostTree { file: Option<PathBuf> },
    /// Print the basic sets.
    Basis { file: Option<PathBuf> },
    /// Test whether a vertex set belongs to the completion.
    CompletionMember {
        file: Option<PathBuf>,
        /// Space-separated vertex labels.
        #[arg(long)]
        set: String,
    },
    /// List the completion.
    CompletionList { file: Option<PathBuf> },
    /// List the pairs that are edges of some host tree.
    FeasibleEdges { file: Option<PathBuf> },
    /// Count host trees exactly.
    CountTrees { file: Option<PathBuf> },
    /// List every host tree.
    EnumerateTrees { file: Option<PathBuf> },
    /// Compare the host-tree sets of two hypergraphs.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Treat any two non-hypertrees as equivalent instead of failing.
        #[arg(long)]
        permissive: bool,
    },
    /// Test whether a hypertree is basic.
    IsBasic { file: Option<PathBuf> },
    /// Run the GYO reduction and print its trace.
    Gyo { file: Option<PathBuf> },
    /// Build a clique tree of a chordal graph.
    CliqueTree { file: Option<PathBuf> },
    /// Build a compatible tree of a dually chordal graph.
    CompatibleTree { file: Option<PathBuf> },
    IsDuallyChordal { file: Option<PathBuf> },
    IsBasicChordal { file: Option<PathBuf> },
    /// Exchange sequence between two host trees.
    SwapSeq {
        file: Option<PathBuf>,
        /// Tree edges as `u-v` tokens.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Write a seeded random instance.
    GenRandom {
        #[arg(long, value_enum, default_value_t = KindArg::Hypergraph)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum)]
        guarantee: Option<Guarantee>,
    },
    /// Graphviz output of a host tree, the 2-section, or a graph.
    ToDot {
        file: Option<PathBuf>,
        /// Tree edges as `u-v` tokens.
        #[arg(long)]
        tree: Option<String>,
        /// Draw the canonical host tree.
        #[arg(long, conflicts_with = "tree")]
        host_tree: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Recognize { .. } => "recognize",
            Command::HostTree { .. } => "host-tree",
            Command::Basis { .. } => "basis",
            Command::CompletionMember { .. } => "completion-member",
            Command::CompletionList { .. } => "completion-list",
            Command::FeasibleEdges { .. } => "feasible-edges",
            Command::CountTrees { .. } => "count-trees",
            Command::EnumerateTrees { .. } => "enumerate-trees",
            Command::Equiv { .. } => "equiv",
            Command::IsBasic { .. } => "is-basic",
            Command::Gyo { .. } => "gyo",
            Command::CliqueTree { .. } => "clique-tree",
            Command::CompatibleTree { .. } => "compatible-tree",
            Command::IsDuallyChordal { .. } => "is-dually-chordal",
            Command::IsBasicChordal { .. } => "is-basic-chordal",
            Command::SwapSeq { .. } => "swap-seq",
            Command::GenRandom { .. } => "gen-random",
            Command::ToDot { .. } => "to-dot",
        }
    }

    /// File extension the command reads, when it reads only one kind.
    fn input_kind(&self) -> Option<&'static str> {
        match self {
            Command::CliqueTree { .. }
            | Command::CompatibleTree { .. }
            | Command::IsDuallyChordal { .. }
            | Command::IsBasicChordal { .. } => Some("gr"),
            Command::ToDot { .. } => None,
            _ => Some("hg"),
        }
    }

    fn file(&self) -> Option<&Option<PathBuf>> {
        match self {
            Command::Recognize { file }
            | Command::HostTree { file }
            | Command::Basis { file }
            | Command::CompletionMember { file, .. }
            | Command::CompletionList { file }
            | Command::FeasibleEdges { file }
            | Command::CountTrees { file }
            | Command::EnumerateTrees { file }
            | Command::IsBasic { file }
            | Command::Gyo { file }
            | Command::CliqueTree { file }
            | Command::CompatibleTree { file }
            | Command::IsDuallyChordal { file }
            | Command::IsBasicChordal { file }
            | Command::SwapSeq { file, .. }
            | Command::ToDot { file, .. } => Some(file),
            Command::Equiv { .. } | Command::GenRandom { .. } => None,
        }
    }
}

/// What a process run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A result line plus its machine-readable form.
struct Outcome {
    verdict: String,
    payload: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(verdict: impl Into<String>, payload: Value, text: String) -> Self {
        Self {
            verdict: verdict.into(),
            payload,
            text,
            code: EXIT_OK,
        }
    }

    fn negative(verdict: impl Into<String>, payload: Value, text: String) -> Self {
        Self {
            code: EXIT_NEGATIVE,
            ..Self::ok(verdict, payload, text)
        }
    }
}

/// A failure that ends the command: usage, parse, or cap overflow.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Run = Result<Outcome, Failure>;

/// Maps library errors: structural "no" answers become negative verdicts,
/// caps become overflow, the rest are usage errors.
fn from_error(e: Error) -> Run {
    match e {
        Error::NotHypertree => Ok(Outcome::negative(
            "not a hypertree",
            Value::Null,
            "not a hypertree\n".into(),
        )),
        Error::NotHostTree => Ok(Outcome::negative(
            "not a host tree",
            Value::Null,
            "not a host tree\n".into(),
        )),
        Error::NotDuallyChordal => Ok(Outcome::negative(
            "not dually chordal",
            Value::Null,
            "not dually chordal\n".into(),
        )),
        Error::Disconnected => Ok(Outcome::negative(
            "disconnected",
            Value::Null,
            "disconnected\n".into(),
        )),
        Error::Overflow { cap } => Err(Failure {
            code: EXIT_OVERFLOW,
            message: format!("more than {cap} results; raise --cap"),
        }),
        Error::BruteForceCap { n, cap } => Err(Failure {
            code: EXIT_OVERFLOW,
            message: format!("brute force limited to {cap} vertices, got {n}"),
        }),
        other => Err(usage(other.to_string())),
    }
}

fn chordless(g: &SimpleGraph, cycle: &[usize]) -> Outcome {
    let labels: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
    Outcome::negative(
        "not chordal",
        json!({ "cycle": labels }),
        format!("not chordal; chordless cycle {}\n", labels.join("-")),
    )
}

/// Either a value or an early verdict.
macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return from_error(e),
        }
    };
}

struct Ctx<'a> {
    cli: &'a Cli,
}

fn set_json(h: &Hypergraph, s: &VertexSet) -> Value {
    json!(s.iter().map(|v| h.label(v)).collect::<Vec<_>>())
}

fn tree_text(labels: &[String], t: &SpanningTree) -> String {
    t.edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", labels[u], labels[v]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tree_json(labels: &[String], t: &SpanningTree) -> Value {
    json!(t
        .edges()
        .iter()
        .map(|&(u, v)| [labels[u].as_str(), labels[v].as_str()])
        .collect::<Vec<_>>())
}

fn label_index(labels: &[String], l: &str) -> Result<usize, Failure> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| usage(format!("unknown vertex `{l}`")))
}

/// Parses `u-v` tokens separated by spaces or commas.
fn parse_tree(labels: &[String], text: &str) -> Result<SpanningTree, Failure> {
    let mut edges = Vec::new();
    for token in text.split([' ', ',']).filter(|t| !t.is_empty()) {
        let (a, b) = token
            .split_once('-')
            .ok_or_else(|| usage(format!("tree edge `{token}` is not of the form u-v")))?;
        edges.push((label_index(labels, a)?, label_index(labels, b)?));
    }
    SpanningTree::new(labels.len(), edges).map_err(|e| usage(e.to_string()))
}

impl Ctx<'_> {
    fn cap(&self, default: usize) -> usize {
        self.cli.cap.unwrap_or(default)
    }

    fn hyper(&self, h: &Hypergraph) -> Run {
        let cmd = &self.cli.command;
        match cmd {
            Command::Recognize { .. } => self.recognize(h),
            Command::HostTree { .. } => {
                let t = attempt!(host_tree(h));
                let text = tree_text(h.labels(), &t);
                Ok(Outcome::ok("hypertree", json!({ "tree": tree_json(h.labels(), &t) }), text + "\n"))
            }
            Command::Basis { .. } => {
                let basis = attempt!(basic_sets(h));
                let sets: Vec<Value> = basis.iter().map(|r| set_json(h, &r.set)).collect();
                let text: String = basis.iter().map(|r| h.format_set(&r.set) + "\n").collect();
                Ok(Outcome::ok("hypertree", json!({ "basic_sets": sets }), text))
            }
            Command::CompletionMember { set, .. } => {
                let labels: Vec<&str> = set.split_whitespace().collect();
                let f = h.set_of(&labels).map_err(|e| usage(e.to_string()))?;
                let member = attempt!(completion_contains(h, &f));
                let payload = json!({ "set": set_json(h, &f), "member": member });
                Ok(if member {
                    Outcome::ok("member", payload, "member\n".into())
                } else {
                    Outcome::negative("not a member", payload, "not a member\n".into())
                })
            }
            Command::CompletionList { .. } => {
                let sets = attempt!(enumerate_completion(h, self.cap(DEFAULT_COMPLETION_CAP)));
                let text: String = sets.iter().map(|s| h.format_set(s) + "\n").collect();
                let json_sets: Vec<Value> = sets.iter().map(|s| set_json(h, s)).collect();
                Ok(Outcome::ok("hypertree", json!({ "sets": json_sets }), text))
            }
            Command::FeasibleEdges { .. } => {
                let edges = attempt!(feasible_edges(h));
                let mut text = String::new();
                let mut rows = Vec::new();
                for ((u, v), b) in &edges {
                    text.push_str(&format!("{}-{} {}\n", h.label(*u), h.label(*v), h.format_set(b)));
                    rows.push(json!({ "edge": [h.label(*u), h.label(*v)], "basic_set": set_json(h, b) }));
                }
                Ok(Outcome::ok("hypertree", json!({ "edges": rows }), text))
            }
            Command::CountTrees { .. } => {
                let count = attempt!(count_host_trees(h));
                Ok(Outcome::ok(
                    "hypertree",
                    json!({ "count": count.to_string() }),
                    format!("{count}\n"),
                ))
            }
            Command::EnumerateTrees { .. } => {
                let trees = attempt!(enumerate_host_trees(h, self.cap(DEFAULT_TREE_CAP)));
                let text: String = trees.iter().map(|t| tree_text(h.labels(), t) + "\n").collect();
                let rows: Vec<Value> = trees.iter().map(|t| tree_json(h.labels(), t)).collect();
                Ok(Outcome::ok("hypertree", json!({ "trees": rows }), text))
            }
            Command::IsBasic { .. } => {
                let basic = attempt!(is_basic_hypertree(h));
                let payload = json!({ "basic": basic });
                Ok(if basic {
                    Outcome::ok("basic", payload, "basic\n".into())
                } else {
                    Outcome::negative("not basic", payload, "not basic\n".into())
                })
            }
            Command::Gyo { .. } => Ok(gyo(h)),
            Command::SwapSeq { from, to, .. } => {
                let t1 = parse_tree(h.labels(), from)?;
                let t2 = parse_tree(h.labels(), to)?;
                let steps = attempt!(swap_sequence(h, &t1, &t2));
                let l = |(u, v): (usize, usize)| format!("{}-{}", h.label(u), h.label(v));
                let mut text: String = steps
                    .iter()
                    .map(|s| format!("remove {}, add {}\n", l(s.removed), l(s.added)))
                    .collect();
                if steps.is_empty() {
                    text.push_str("trees are equal\n");
                }
                let rows: Vec<Value> = steps
                    .iter()
                    .map(|s| json!({ "removed": l(s.removed), "added": l(s.added) }))
                    .collect();
                Ok(Outcome::ok("ok", json!({ "steps": rows }), text))
            }
            Command::ToDot { tree, host_tree: want_host, .. } => {
                let t = match (tree, want_host) {
                    (Some(text), _) => Some(parse_tree(h.labels(), text)?),
                    (None, true) => Some(attempt!(host_tree(h))),
                    (None, false) => None,
                };
                let dot = to_dot(h, t.as_ref());
                Ok(Outcome::ok("ok", json!({ "dot": dot }), dot))
            }
            _ => Err(usage(format!("`{}` expects a graph (.gr) file", cmd.name()))),
        }
    }

    fn recognize(&self, h: &Hypergraph) -> Run {
        let method = match self.cli.method {
            MethodArg::Helly => Method::HellyChordal,
            MethodArg::Mst => Method::MaxWeightSpanningTree,
            MethodArg::Brute => Method::BruteForce,
        };
        let r = attempt!(is_hypertree_with(h, method, RecognitionOptions::default()));
        let mut payload = json!({
            "is_hypertree": r.is_hypertree,
            "target_weight": r.target_weight,
            "achieved_weight": r.achieved_weight,
            "host_tree": r.host_tree.as_ref().map(|t| tree_json(h.labels(), t)),
        });
        let text = match (r.achieved_weight, r.is_hypertree) {
            (Some(w), true) => format!("hypertree; tree weight {w} = target {}\n", r.target_weight),
            (Some(w), false) => {
                format!("not a hypertree; max tree weight {w} < target {}\n", r.target_weight)
            }
            (None, verdict) => {
                let helly = h.is_helly();
                let chordal = is_chordal(&h.line_graph()).is_chordal();
                payload["helly"] = json!(helly);
                payload["chordal_line_graph"] = json!(chordal);
                let yn = |b: bool| if b { "yes" } else { "no" };
                let head = if verdict { "hypertree" } else { "not a hypertree" };
                format!("{head}; Helly {}, chordal line graph {}\n", yn(helly), yn(chordal))
            }
        };
        Ok(if r.is_hypertree {
            Outcome::ok("hypertree", payload, text)
        } else {
            Outcome::negative("not a hypertree", payload, text)
        })
    }

    fn graph(&self, g: &SimpleGraph) -> Run {
        let cmd = &self.cli.command;
        match cmd {
            Command::CliqueTree { .. } => match clique_tree(g) {
                Ok(ct) => Ok(clique_tree_outcome(g, &ct)),
                Err(Error::NotChordal { cycle }) => Ok(chordless(g, &cycle)),
                Err(e) => from_error(e),
            },
            Command::CompatibleTree { .. } => {
                let weighting = match self.cli.weighting {
                    WeightingArg::Cliques => Weighting::CliqueCount {
                        cap: self.cap(DEFAULT_CLIQUE_CAP),
                    },
                    WeightingArg::Neighborhoods => Weighting::NeighborhoodIntersection,
                };
                let ct = attempt!(compatible_tree(g, weighting));
                let text = format!("tree: {}\nweight {}\n", tree_text(g.labels(), &ct.tree), ct.weight);
                Ok(Outcome::ok(
                    "dually chordal",
                    json!({ "tree": tree_json(g.labels(), &ct.tree), "weight": ct.weight }),
                    text,
                ))
            }
            Command::IsDuallyChordal { .. } => {
                let yes = attempt!(is_dually_chordal(g));
                let payload = json!({ "dually_chordal": yes });
                Ok(if yes {
                    Outcome::ok("dually chordal", payload, "dually chordal\n".into())
                } else {
                    Outcome::negative("not dually chordal", payload, "not dually chordal\n".into())
                })
            }
            Command::IsBasicChordal { .. } => match is_basic_chordal(g) {
                Ok(yes) => {
                    let payload = json!({ "basic_chordal": yes });
                    Ok(if yes {
                        Outcome::ok("basic chordal", payload, "basic chordal\n".into())
                    } else {
                        Outcome::negative("not basic chordal", payload, "not basic chordal\n".into())
                    })
                }
                Err(Error::NotChordal { cycle }) => Ok(chordless(g, &cycle)),
                Err(e) => from_error(e),
            },
            Command::ToDot { tree: None, host_tree: false, .. } => {
                let dot = graph_to_dot(g);
                Ok(Outcome::ok("ok", json!({ "dot": dot }), dot))
            }
            Command::ToDot { .. } => Err(usage("--tree and --host-tree apply to hypergraphs")),
            _ => Err(usage(format!("`{}` expects a hypergraph (.hg) file", cmd.name()))),
        }
    }

    fn instance(&self, inst: &Instance) -> Run {
        match inst {
            Instance::Hypergraph(h) => self.hyper(h),
            Instance::Graph(g) => self.graph(g),
        }
    }

    fn gen_random(&self, kind: KindArg, n: usize, m: usize, guarantee: Option<Guarantee>) -> Run {
        if n == 0 {
            return Err(usage("--n must be at least 1"));
        }
        let mut r = rng(self.cli.seed);
        let text = match (kind, guarantee) {
            (KindArg::Hypergraph, Some(Guarantee::Hypertree)) => {
                serialize_hypergraph(&random_hypertree(n, m, &mut r))
            }
            (KindArg::Hypergraph, None) => serialize_hypergraph(&random_hypergraph(n, m, &mut r)),
            (KindArg::Chordal, None) => serialize_graph(&random_chordal_graph(n, &mut r)),
            (KindArg::Graph, None) => serialize_graph(&random_graph(n, 0.5, &mut r)),
            (_, Some(_)) => return Err(usage("--guarantee applies to hypergraphs")),
        };
        Ok(Outcome::ok("ok", json!({ "instance": text }), text))
    }
}

fn gyo(h: &Hypergraph) -> Outcome {
    let trace = gyo_reduce(h);
    let mut text = String::new();
    let mut rows = Vec::new();
    for step in &trace.steps {
        let line = match *step {
            ReductionStep::RemoveContainedEdge { removed, container } => {
                format!("remove e{removed} (inside e{container})")
            }
            ReductionStep::ShrinkPrivateVertex { vertex, edge } => {
                format!("drop {} from e{edge}", h.label(vertex))
            }
            ReductionStep::RemoveEmptyEdge { edge } => format!("remove empty e{edge}"),
        };
        text.push_str(&line);
        text.push('\n');
        rows.push(json!(line));
    }
    let left: Vec<String> = trace
        .final_state
        .iter()
        .map(|(i, s)| format!("e{i} {}", h.format_set(s)))
        .collect();
    let payload = json!({ "steps": rows, "remaining": left });
    if trace.success() {
        text.push_str("reduced to nothing\n");
        Outcome::ok("reducible", payload, text)
    } else {
        text.push_str(&format!("stuck: {}\n", left.join(", ")));
        Outcome::negative("not reducible", payload, text)
    }
}

fn clique_tree_outcome(g: &SimpleGraph, ct: &CliqueTree) -> Outcome {
    let name = |i: usize| format!("C{}", i + 1);
    let fmt = |s: &VertexSet| {
        let inner: Vec<&str> = s.iter().map(|v| g.label(v)).collect();
        format!("{{{}}}", inner.join(","))
    };
    let mut text = String::new();
    for (i, c) in ct.cliques.cliques.iter().enumerate() {
        text.push_str(&format!("{} {}\n", name(i), fmt(c)));
    }
    let edges: Vec<String> = ct
        .tree
        .edges()
        .iter()
        .map(|&(a, b)| format!("{}-{}", name(a), name(b)))
        .collect();
    if edges.is_empty() {
        text.push_str("tree: (single clique)\n");
    } else {
        text.push_str(&format!("tree: {}\n", edges.join(" ")));
    }
    text.push_str(&format!("weight {}\n", ct.weight));
    let cliques: Vec<Vec<&str>> = ct
        .cliques
        .cliques
        .iter()
        .map(|c| c.iter().map(|v| g.label(v)).collect())
        .collect();
    Outcome::ok(
        "chordal",
        json!({ "cliques": cliques, "tree": edges, "weight": ct.weight }),
        text,
    )
}

fn read(path: &Path) -> Result<(Vec<u8>, Instance), Failure> {
    let at = |msg: String| usage(format!("{}: {msg}", path.display()));
    let bytes = fs::read(path).map_err(|e| at(e.to_string()))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| at("not UTF-8".into()))?;
    let inst = parse_instance(&text).map_err(|e| at(format!("parse error: {e}")))?;
    Ok((bytes, inst))
}

fn report(
    command: &str,
    file: Option<String>,
    digest: Option<String>,
    run: Run,
) -> (CommandReport, String) {
    match run {
        Ok(o) => (
            CommandReport {
                command: command.into(),
                file,
                input_digest: digest,
                verdict: o.verdict,
                payload: o.payload,
                exit_code: o.code,
                text: o.text,
            },
            String::new(),
        ),
        Err(f) => (
            CommandReport {
                command: command.into(),
                file,
                input_digest: digest,
                verdict: if f.code == EXIT_OVERFLOW { "overflow" } else { "error" }.into(),
                payload: json!({ "message": f.message }),
                exit_code: f.code,
                text: String::new(),
            },
            format!("error: {}\n", f.message),
        ),
    }
}

fn single(cli: &Cli, path: &Path, label: Option<String>) -> (CommandReport, String) {
    let ctx = Ctx { cli };
    let name = cli.command.name();
    match read(path) {
        Ok((bytes, inst)) => {
            let run = ctx.instance(&inst).map_err(|f| Failure {
                message: format!("{}: {}", path.display(), f.message),
                ..f
            });
            report(name, label, Some(digest(&[&bytes])), run)
        }
        Err(f) => report(name, label, None, Err(f)),
    }
}

fn batch(cli: &Cli, dir: &Path) -> Result<Vec<(CommandReport, String)>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let ext = p.extension().and_then(|x| x.to_str());
            match cli.command.input_kind() {
                Some(want) => ext == Some(want),
                None => matches!(ext, Some("hg" | "gr")),
            }
        })
        .collect();
    files.sort();
    Ok(files
        .par_iter()
        .map(|p| {
            let label = p.file_name().map(|n| n.to_string_lossy().into_owned());
            single(cli, p, label)
        })
        .collect())
}

fn execute(cli: &Cli) -> Vec<(CommandReport, String)> {
    let ctx = Ctx { cli };
    let name = cli.command.name();
    match (&cli.command, cli.command.file(), &cli.each) {
        (Command::GenRandom { kind, n, m, guarantee }, _, None) => {
            vec![report(name, None, None, ctx.gen_random(*kind, *n, *m, *guarantee))]
        }
        (Command::Equiv { first, second, permissive }, _, None) => {
            let run = (|| {
                let (b1, i1) = read(first)?;
                let (b2, i2) = read(second)?;
                let d = digest(&[&b1, &b2]);
                let (Instance::Hypergraph(h1), Instance::Hypergraph(h2)) = (i1, i2) else {
                    return Err(usage("`equiv` expects two hypergraph (.hg) files"));
                };
                let mode = if *permissive {
                    EquivalenceMode::Permissive
                } else {
                    EquivalenceMode::Strict
                };
                let run = match equivalent_with(&h1, &h2, mode) {
                    Ok(true) => Ok(Outcome::ok("equivalent", json!({ "equivalent": true }), "equivalent\n".into())),
                    Ok(false) => Ok(Outcome::negative(
                        "not equivalent",
                        json!({ "equivalent": false }),
                        "not equivalent\n".into(),
                    )),
                    Err(e) => from_error(e),
                };
                Ok((d, run))
            })();
            match run {
                Ok((d, run)) => vec![report(name, None, Some(d), run)],
                Err(f) => vec![report(name, None, None, Err(f))],
            }
        }
        (_, Some(Some(path)), None) => vec![single(cli, path, None)],
        (_, Some(None), Some(dir)) => match batch(cli, dir) {
            Ok(reports) => reports,
            Err(f) => vec![report(name, None, None, Err(f))],
        },
        (_, Some(Some(_)), Some(_)) => vec![report(name, None, None, Err(usage("give a file or --each, not both")))],
        (_, Some(None), None) => vec![report(name, None, None, Err(usage("missing input file")))],
        _ => vec![report(name, None, None, Err(usage(format!("`{name}` does not support --each"))))],
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                Output {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                }
            };
        }
    };
    let results = execute(&cli);
    let batch = cli.each.is_some();
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut code = EXIT_OK;
    for (r, err) in &results {
        code = code.max(r.exit_code);
        if cli.json {
            stdout.push_str(&r.to_json());
            stdout.push('\n');
        } else {
            if batch {
                stdout.push_str(&format!("== {} ==\n", r.file.as_deref().unwrap_or("?")));
            }
            stdout.push_str(&r.text);
        }
        stderr.push_str(err);
    }
    Output { stdout, stderr, code }
}
