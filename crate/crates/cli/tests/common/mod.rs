#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

/// `(golden name, arguments)`; `@` stands for the fixtures directory.
pub const CASES: &[(&str, &[&str])] = &[
    ("recognize_path", &["recognize", "@/path.hg"]),
    ("recognize_paper2", &["recognize", "@/paper2.hg"]),
    ("recognize_triangle", &["recognize", "@/triangle.hg"]),
    ("recognize_triangle_helly", &["recognize", "--method", "helly", "@/triangle.hg"]),
    ("recognize_paper1_brute", &["recognize", "--method", "brute", "@/paper1.hg"]),
    ("recognize_triangle_json", &["recognize", "--json", "@/triangle.hg"]),
    ("recognize_each", &["recognize", "--each", "@"]),
    ("host_tree_paper2", &["host-tree", "@/paper2.hg"]),
    ("host_tree_triangle", &["host-tree", "@/triangle.hg"]),
    ("basis_paper1", &["basis", "@/paper1.hg"]),
    ("basis_paper2", &["basis", "@/paper2.hg"]),
    ("basis_paper2_json", &["basis", "--json", "@/paper2.hg"]),
    ("completion_member_yes", &["completion-member", "@/paper1.hg", "--set", "2 3"]),
    ("completion_member_no", &["completion-member", "@/paper1.hg", "--set", "1 4"]),
    ("completion_member_unknown", &["completion-member", "@/paper1.hg", "--set", "1 9"]),
    ("completion_list_paper1", &["completion-list", "@/paper1.hg"]),
    ("completion_list_overflow", &["completion-list", "--cap", "3", "@/paper1.hg"]),
    ("feasible_edges_paper2", &["feasible-edges", "@/paper2.hg"]),
    ("feasible_edges_paper1", &["feasible-edges", "@/paper1.hg"]),
    ("count_trees_paper2", &["count-trees", "@/paper2.hg"]),
    ("count_trees_paper1", &["count-trees", "@/paper1.hg"]),
    ("count_trees_triangle", &["count-trees", "@/triangle.hg"]),
    ("count_trees_json", &["count-trees", "--json", "@/paper2.hg"]),
    ("enumerate_trees_paper2", &["enumerate-trees", "@/paper2.hg"]),
    ("enumerate_trees_paper1", &["enumerate-trees", "@/paper1.hg"]),
    ("enumerate_trees_overflow", &["enumerate-trees", "--cap", "2", "@/paper2.hg"]),
    ("equiv_paper1_reduced", &["equiv", "@/paper1.hg", "@/paper1_reduced.hg"]),
    ("equiv_path_full", &["equiv", "@/path.hg", "@/path_full.hg"]),
    ("equiv_universe", &["equiv", "@/path.hg", "@/paper1.hg"]),
    ("equiv_triangle", &["equiv", "@/triangle.hg", "@/triangle.hg"]),
    ("equiv_triangle_permissive", &["equiv", "--permissive", "@/triangle.hg", "@/triangle.hg"]),
    ("is_basic_path", &["is-basic", "@/path.hg"]),
    ("is_basic_path_neighborhoods", &["is-basic", "@/path_neighborhoods.hg"]),
    ("gyo_paper1", &["gyo", "@/paper1.hg"]),
    ("gyo_triangle", &["gyo", "@/triangle.hg"]),
    ("clique_tree_p3", &["clique-tree", "@/p3.gr"]),
    ("clique_tree_star", &["clique-tree", "@/star.gr"]),
    ("clique_tree_k4", &["clique-tree", "@/k4.gr"]),
    ("clique_tree_c4", &["clique-tree", "@/c4.gr"]),
    ("clique_tree_wrong_kind", &["clique-tree", "@/paper2.hg"]),
    ("compatible_tree_p3", &["compatible-tree", "@/p3.gr"]),
    ("compatible_tree_k3_cliques", &["compatible-tree", "--weighting", "cliques", "@/k3.gr"]),
    ("compatible_tree_c4", &["compatible-tree", "@/c4.gr"]),
    ("is_dually_chordal_p3", &["is-dually-chordal", "@/p3.gr"]),
    ("is_dually_chordal_k4", &["is-dually-chordal", "@/k4.gr"]),
    ("is_dually_chordal_c4", &["is-dually-chordal", "@/c4.gr"]),
    ("is_basic_chordal_p3", &["is-basic-chordal", "@/p3.gr"]),
    ("is_basic_chordal_smallest_no", &["is-basic-chordal", "@/non_basic_chordal.gr"]),
    ("swap_seq_paper2", &["swap-seq", "@/paper2.hg", "--from", "1-2 2-3 1-4", "--to", "1-2 2-3 3-4"]),
    ("swap_seq_same", &["swap-seq", "@/paper2.hg", "--from", "1-2 2-3 1-4", "--to", "1-4,1-2,2-3"]),
    ("swap_seq_not_host", &["swap-seq", "@/paper2.hg", "--from", "1-2 2-3 1-4", "--to", "1-3 2-3 1-4"]),
    ("gen_random_hypertree", &["gen-random", "--n", "6", "--m", "3", "--seed", "7", "--guarantee", "hypertree"]),
    ("gen_random_hypergraph", &["gen-random", "--n", "5", "--m", "4", "--seed", "1"]),
    ("gen_random_chordal", &["gen-random", "--kind", "chordal", "--n", "6", "--seed", "7"]),
    ("gen_random_graph", &["gen-random", "--kind", "graph", "--n", "4", "--seed", "2"]),
    ("to_dot_path", &["to-dot", "@/path.hg"]),
    ("to_dot_path_tree", &["to-dot", "@/path.hg", "--tree", "1-2 2-3"]),
    ("to_dot_paper2_host_tree", &["to-dot", "--host-tree", "@/paper2.hg"]),
    ("to_dot_graph", &["to-dot", "@/c4.gr"]),
    ("parse_error_empty_edge", &["count-trees", "@/bad_empty_edge.hg"]),
    ("parse_error_duplicate_header", &["basis", "@/bad_duplicate_header.hg"]),
    ("missing_file", &["basis", "@/missing.hg"]),
    ("missing_argument", &["basis"]),
    ("unknown_command", &["frobnicate"]),
];

pub fn tests_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

/// Transcript of one run: command line, exit code, stdout, and stderr
/// when present. Paths are shown relative to the fixtures directory.
pub fn transcript(args: &[&str]) -> String {
    let fixtures = tests_dir().join("fixtures");
    let fixtures = fixtures.to_str().unwrap();
    let argv: Vec<String> = std::iter::once("hypertree-lab".to_string())
        .chain(args.iter().map(|a| a.replace('@', fixtures)))
        .collect();
    let out = hypertree_lab::run(&argv);
    let shown: Vec<String> = args
        .iter()
        .map(|a| {
            let a = a.replace("@/", "").replace('@', ".");
            if a.contains(' ') {
                format!("'{a}'")
            } else {
                a
            }
        })
        .collect();
    let strip = |s: &str| s.replace(&format!("{fixtures}/"), "");
    let mut t = format!("$ hypertree-lab {}\nexit {}\n", shown.join(" "), out.code);
    t.push_str("--- stdout\n");
    t.push_str(&strip(&out.stdout));
    if !out.stderr.is_empty() {
        t.push_str("--- stderr\n");
        t.push_str(&strip(&out.stderr));
    }
    t
}

/// Names of cases whose transcript differs from the stored golden file.
/// With `UPDATE_GOLDEN=1` the files are rewritten instead.
pub fn golden_mismatches() -> Vec<String> {
    let dir = tests_dir().join("golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (name, args) in CASES {
        let path = dir.join(format!("{name}.txt"));
        let actual = transcript(args);
        if update {
            fs::write(&path, &actual).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            _ => bad.push(name.to_string()),
        }
    }
    bad
}
