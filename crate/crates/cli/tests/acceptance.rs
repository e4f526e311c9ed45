//! Acceptance criteria, one line each: `[PASS]` or `[FAIL]`, the measured
//! time, and the limit where one applies. Exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hypertree_core::apps::{
    clique_hypergraph, clique_tree_edge_feasible, clique_trees, closed_neighborhood_hypergraph,
    compatible_edge_feasible, compatible_trees, is_dually_chordal, Weighting,
};
use hypertree_core::brute;
use hypertree_core::engine::{
    basic_sets, count_host_trees, edge_weight_multiset, enumerate_host_trees, equivalent,
    feasible_edges, is_basic_hypertree, is_feasible_edge, swap_sequence,
};
use hypertree_core::generate::{
    all_hypergraphs, random_chordal_graph, random_hypergraph, random_hypertree, rng,
};
use hypertree_core::recognition::{gyo_reduce, is_hypertree, Method};
use hypertree_core::{Exec, Hypergraph, SimpleGraph, SpanningTree, VertexSet};
use num_bigint::BigUint;
use rand::Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hg(edges: &[&[&str]]) -> Hypergraph {
    Hypergraph::from_labelled_edges(edges).unwrap()
}

fn paper1() -> Hypergraph {
    hg(&[&["1", "2", "3"], &["2", "3", "4"], &["1", "2", "3", "4"]])
}

fn paper2() -> Hypergraph {
    hg(&[&["1", "2"], &["2", "3"], &["1", "2", "3", "4"]])
}

fn sets(h: &Hypergraph, list: &[&[&str]]) -> Vec<VertexSet> {
    list.iter().map(|s| h.set_of(s).unwrap()).collect()
}

fn labelled_tree(h: &Hypergraph, edges: &[(&str, &str)]) -> SpanningTree {
    let idx = |l: &str| h.index_of(l).unwrap();
    SpanningTree::new(h.n(), edges.iter().map(|&(a, b)| (idx(a), idx(b)))).unwrap()
}

fn ac1() -> Check {
    let h = paper2();
    let basis: Vec<VertexSet> = basic_sets(&h).unwrap().iter().map(|r| r.set.clone()).collect();
    ensure(basis == sets(&h, &[&["1", "2"], &["2", "3"], &["1", "2", "3", "4"]]), || {
        format!("basis {basis:?}")
    })?;
    let feasible: Vec<String> = feasible_edges(&h)
        .unwrap()
        .iter()
        .map(|((u, v), _)| format!("{}{}", h.label(*u), h.label(*v)))
        .collect();
    ensure(feasible == ["12", "14", "23", "24", "34"], || format!("feasible {feasible:?}"))?;
    ensure(!is_feasible_edge(&h, 0, 2).unwrap(), || "13 feasible".into())?;
    let count = count_host_trees(&h).unwrap();
    ensure(count == BigUint::from(3u32), || format!("count {count}"))?;
    let trees: BTreeSet<SpanningTree> = enumerate_host_trees(&h, 100).unwrap().into_iter().collect();
    let expected: BTreeSet<SpanningTree> = [
        [("1", "2"), ("2", "3"), ("1", "4")],
        [("1", "2"), ("2", "3"), ("2", "4")],
        [("1", "2"), ("2", "3"), ("3", "4")],
    ]
    .iter()
    .map(|e| labelled_tree(&h, e))
    .collect();
    ensure(trees == expected, || format!("trees {trees:?}"))?;
    Ok("basis {12},{23},{1234}; feasible 12 14 23 24 34; 3 host trees".into())
}

fn ac2() -> Check {
    let h = paper1();
    let basis: Vec<VertexSet> = basic_sets(&h).unwrap().iter().map(|r| r.set.clone()).collect();
    ensure(basis == sets(&h, &[&["2", "3"], &["1", "2", "3"], &["2", "3", "4"]]), || {
        format!("basis {basis:?}")
    })?;
    let reduced = hg(&[&["1", "2", "3"], &["2", "3", "4"]]);
    ensure(equivalent(&h, &reduced) == Ok(true), || "not equivalent to {123},{234}".into())?;
    let count = count_host_trees(&h).unwrap();
    let all = brute::all_spanning_trees(4, Exec::Sequential);
    let brute_hosts = all.iter().filter(|t| h.is_host_tree(t).unwrap()).count();
    ensure(all.len() == 16, || format!("{} spanning trees of K4", all.len()))?;
    ensure(count == BigUint::from(4u32) && brute_hosts == 4, || {
        format!("count {count}, brute force {brute_hosts}")
    })?;
    Ok("basis {23},{123},{234}; equivalent to {123},{234}; 4 host trees of 16".into())
}

fn ac3() -> Check {
    let path = hg(&[&["1", "2"], &["2", "3"]]);
    let a = is_basic_hypertree(&path).unwrap();
    let b = is_basic_hypertree(&path.neighborhood_hypergraph()).unwrap();
    ensure(a && !b, || format!("path {a}, N(path) {b}"))?;
    Ok("path basic, N(path) not basic".into())
}

fn ac4() -> Check {
    let mut family: Vec<Hypergraph> = (1..=4)
        .flat_map(|n| (0..=3).flat_map(move |m| all_hypergraphs(n, m)))
        .collect();
    let exhaustive = family.len();
    let mut r = rng(4);
    for i in 0..10_000 {
        let n = r.random_range(1..=5);
        let m = r.random_range(0..=4);
        family.push(if i % 2 == 0 {
            random_hypertree(n, m, &mut r)
        } else {
            random_hypergraph(n, m, &mut r)
        });
    }
    let verdicts = Exec::default().map(&family, |h| {
        [Method::HellyChordal, Method::MaxWeightSpanningTree, Method::BruteForce]
            .map(|m| is_hypertree(h, m).unwrap().is_hypertree)
    });
    let disagreements = verdicts.iter().filter(|v| v[0] != v[1] || v[1] != v[2]).count();
    let yes = verdicts.iter().filter(|v| v[0]).count();
    ensure(disagreements == 0, || format!("{disagreements} disagreements"))?;
    Ok(format!(
        "0 disagreements over {exhaustive} exhaustive + 10000 random instances ({yes} hypertrees)"
    ))
}

fn hypertree_sample(count: usize, max_n: usize, seed: u64) -> Vec<Hypergraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(1..=max_n);
            let m = r.random_range(1..=5);
            random_hypertree(n, m, &mut r)
        })
        .collect()
}

fn ac5() -> Check {
    let sample = hypertree_sample(200, 7, 5);
    let mismatches = Exec::Sequential
        .map(&sample, |h| {
            let brute = brute::host_trees(h, Exec::default()).len();
            count_host_trees(h).unwrap() != BigUint::from(brute)
        })
        .iter()
        .filter(|&&b| b)
        .count();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok("200 random hypertrees (n <= 7): count = brute force".into())
}

fn ac6() -> Check {
    let mut violations = Vec::new();
    let mut trees_checked = 0;
    for h in hypertree_sample(200, 7, 5) {
        let basis = basic_sets(&h).unwrap();
        if basis.iter().map(|r| r.alpha - 1).sum::<usize>() != h.n() - 1 {
            violations.push(format!("sum of alpha - 1 on {h:?}"));
        }
        let trees = enumerate_host_trees(&h, 1_000_000).unwrap();
        let weights = edge_weight_multiset(&h, &trees[0]).unwrap();
        for t in &trees {
            trees_checked += 1;
            for r in basis.iter() {
                let tagged: Vec<_> =
                    t.edges().iter().filter(|&&(u, v)| h.pair_core(u, v) == r.set).collect();
                if tagged.len() + 1 != r.alpha {
                    violations.push(format!("edge count for {:?} in {t:?}", r.set));
                }
                // Γ: α − 1 edges on α parts, connected iff acyclic.
                let mut uf = petgraph::unionfind::UnionFind::<usize>::new(r.alpha);
                if !tagged.iter().all(|&&(u, v)| uf.union(r.part_of(u), r.part_of(v))) {
                    violations.push(format!("gamma for {:?} in {t:?}", r.set));
                }
            }
            if edge_weight_multiset(&h, t).unwrap() != weights {
                violations.push(format!("weight multiset of {t:?}"));
            }
        }
    }
    ensure(violations.is_empty(), || violations[..violations.len().min(3)].join("; "))?;
    Ok(format!("0 violations over {trees_checked} host trees"))
}

fn ac7() -> Check {
    let family: Vec<Hypergraph> = (1..=4)
        .flat_map(|n| (0..=4).flat_map(move |m| all_hypergraphs(n, m)))
        .collect();
    let mismatches = Exec::default()
        .map(&family, |h| {
            gyo_reduce(h).success()
                != is_hypertree(&h.dual(), Method::MaxWeightSpanningTree)
                    .unwrap()
                    .is_hypertree
        })
        .iter()
        .filter(|&&b| b)
        .count();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!("0 mismatches over {} hypergraphs", family.len()))
}

fn ac8() -> Check {
    let labels = ["1", "2", "3", "4"];
    let full = Hypergraph::with_vertices(&labels, &[&labels[..]]).unwrap();
    let count = count_host_trees(&full).unwrap();
    ensure(count == BigUint::from(16u32), || format!("count {count}"))?;
    // Weighted K4: cycle edges weigh 2, diagonals 1.
    let weight = |t: &SpanningTree| {
        t.edges()
            .iter()
            .map(|&(u, v)| if v - u == 2 { 1 } else { 2 })
            .sum::<u32>()
    };
    let all = brute::all_spanning_trees(4, Exec::Sequential);
    let best = all.iter().map(weight).max().unwrap();
    let cycle: BTreeSet<SpanningTree> = all.into_iter().filter(|t| weight(t) == best).collect();
    ensure(cycle.len() == 4, || format!("{} maximum trees", cycle.len()))?;
    let realized = (0..=4)
        .flat_map(|m| all_hypergraphs(4, m))
        .filter(|h| {
            let hosts: BTreeSet<SpanningTree> = brute::host_trees(h, Exec::Sequential).into_iter().collect();
            hosts == cycle
        })
        .count();
    ensure(realized == 0, || format!("{realized} hypergraphs realize the cycle trees"))?;
    Ok("{V} on 4 vertices has 16 host trees; the 4 cycle trees are no host-tree set (m <= 4)".into())
}

fn ac9() -> Check {
    let mut r = rng(9);
    let mut violations = Vec::new();
    for _ in 0..100 {
        let n = r.random_range(1..=8);
        let g = random_chordal_graph(n, &mut r);
        let (cliques, trees) = clique_trees(&g, 1_000_000).unwrap();
        let dual = clique_hypergraph(&g, &cliques).unwrap().dual();
        let expected = (0..n).map(|v| cliques.containing(v).len()).sum::<usize>() - n;
        for t in &trees {
            if dual.tree_weight(t) != expected as u64 {
                violations.push(format!("weight of {t:?} in {g:?}"));
            }
        }
        for (i, c1) in cliques.cliques.iter().enumerate() {
            for (j, c2) in cliques.cliques.iter().enumerate().skip(i + 1) {
                let f = clique_tree_edge_feasible(&g, c1, c2).unwrap();
                if f != trees.iter().any(|t| t.contains_edge(i, j)) {
                    violations.push(format!("feasibility of C{i}C{j} in {g:?}"));
                }
            }
        }
    }
    ensure(violations.is_empty(), || violations[..violations.len().min(3)].join("; "))?;
    Ok("100 random chordal graphs: weights and edge feasibility agree".into())
}

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_pairs(n, edges)
}

fn ac10() -> Check {
    const NBHD: Weighting = Weighting::NeighborhoodIntersection;
    let p3 = graph(3, &[(0, 1), (1, 2)]);
    let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    for g in [&p3, &k3, &k4] {
        ensure(is_dually_chordal(g) == Ok(true), || format!("{g:?} rejected"))?;
    }
    ensure(is_dually_chordal(&c4) == Ok(false), || "C4 accepted".into())?;
    let p3_trees = compatible_trees(&p3, NBHD, 100).unwrap();
    ensure(p3_trees.len() == 1 && p3_trees[0].edges() == [(0, 1), (1, 2)], || {
        format!("P3 trees {p3_trees:?}")
    })?;
    ensure(compatible_trees(&k3, NBHD, 100).unwrap().len() == 3, || "K3 trees".into())?;
    ensure(compatible_trees(&k4, NBHD, 100).unwrap().len() == 16, || "K4 trees".into())?;
    ensure(compatible_edge_feasible(&p3, 0, 2) == Ok(false), || "P3 pair 13 feasible".into())?;

    let mut r = rng(10);
    let mut graphs = 0;
    while graphs < 50 {
        let n = r.random_range(2..=7);
        let m = r.random_range(1..=5);
        let g = random_hypertree(n, m, &mut r).two_section();
        if !g.is_connected() {
            continue;
        }
        graphs += 1;
        let a: BTreeSet<_> = compatible_trees(&g, Weighting::CliqueCount { cap: 1000 }, 1_000_000)
            .unwrap()
            .into_iter()
            .collect();
        let b: BTreeSet<_> = compatible_trees(&g, NBHD, 1_000_000).unwrap().into_iter().collect();
        ensure(a == b, || format!("weightings disagree on {g:?}"))?;
        let nh = closed_neighborhood_hypergraph(&g);
        for t in &b {
            ensure(nh.tree_weight(t) == 2 * g.edge_count() as u64, || {
                format!("weight of {t:?} in {g:?}")
            })?;
        }
        let brute_trees = brute::host_trees(&nh, Exec::Sequential);
        for u in 0..n {
            for v in u + 1..n {
                let f = compatible_edge_feasible(&g, u, v).unwrap();
                ensure(f == brute_trees.iter().any(|t| t.contains_edge(u, v)), || {
                    format!("pair {u}{v} of {g:?}")
                })?;
            }
        }
    }
    Ok("P3/K3/K4 accepted, C4 rejected, P3 pair 13 infeasible; 50 random graphs agree".into())
}

fn ac11() -> Check {
    let mut r = rng(11);
    let mut pairs = 0;
    for h in hypertree_sample(50, 7, 12) {
        let trees = enumerate_host_trees(&h, 1_000_000).unwrap();
        for _ in 0..4 {
            let a = &trees[r.random_range(0..trees.len())];
            let b = &trees[r.random_range(0..trees.len())];
            let steps = swap_sequence(&h, a, b).unwrap();
            ensure(steps.len() == a.edges_not_in(b).len(), || format!("length on {h:?}"))?;
            let mut cur = a.clone();
            for s in steps {
                cur = cur.exchange(s.removed, s.added).unwrap();
                ensure(h.is_host_tree(&cur).unwrap(), || format!("{cur:?} not a host tree"))?;
            }
            ensure(&cur == b, || "sequence does not end at the target".into())?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} tree pairs over 50 hypertrees"))
}

fn ac12() -> Check {
    let bad = common::golden_mismatches();
    ensure(bad.is_empty(), || format!("mismatched: {bad:?}"))?;
    Ok(format!("{} golden transcripts match", common::CASES.len()))
}

struct Criterion {
    id: u32,
    limit: Option<Duration>,
    check: fn() -> Check,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, limit: secs(1), check: ac1 },
    Criterion { id: 2, limit: secs(1), check: ac2 },
    Criterion { id: 3, limit: secs(1), check: ac3 },
    Criterion { id: 4, limit: secs(60), check: ac4 },
    Criterion { id: 5, limit: secs(120), check: ac5 },
    Criterion { id: 6, limit: None, check: ac6 },
    Criterion { id: 7, limit: secs(30), check: ac7 },
    Criterion { id: 8, limit: None, check: ac8 },
    Criterion { id: 9, limit: secs(60), check: ac9 },
    Criterion { id: 10, limit: None, check: ac10 },
    Criterion { id: 11, limit: None, check: ac11 },
    Criterion { id: 12, limit: None, check: ac12 },
];

fn main() -> ExitCode {
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = panic::catch_unwind(c.check)
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
            }
            (r, _) => r,
        };
        let limit = c.limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        let timing = format!("({:.2} s{limit})", elapsed.as_secs_f64());
        match result {
            Ok(detail) => println!("[PASS] AC-{}: {detail} {timing}", c.id),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{}: {why} {timing}", c.id);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
