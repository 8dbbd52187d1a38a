//! Built-in graphs: cycles, K4, K2,3, wheels, the prism, the bowtie, bonds
//! and the one- and two-ended ladders, with planar embeddings where the
//! duality checks need them.

use std::collections::BTreeMap;

use crate::graph::MultiGraph;
use crate::periodic::{Ends, Motif, PeriodicGraph};

fn build(edges: Vec<(String, String, String)>) -> MultiGraph {
    MultiGraph::from_edges(edges).expect("built-in graph is well-formed")
}

fn e(id: impl Into<String>, u: impl Into<String>, v: impl Into<String>) -> (String, String, String) {
    (id.into(), u.into(), v.into())
}

/// `C_n` on `v1..vn` with edges `e{i}{i+1}` and the closing edge `e{n}1`.
pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    build(
        (1..=n)
            .map(|i| {
                let j = i % n + 1;
                e(format!("e{i}{j}"), format!("v{i}"), format!("v{j}"))
            })
            .collect(),
    )
}

pub fn k4() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            edges.push(e(format!("e{i}{j}"), format!("v{i}"), format!("v{j}")));
        }
    }
    build(edges)
}

/// `K_{2,3}` with sides `a1,a2` and `b1,b2,b3`.
pub fn k23() -> MultiGraph {
    let mut edges = Vec::new();
    for a in 1..=2 {
        for b in 1..=3 {
            edges.push(e(format!("a{a}b{b}"), format!("a{a}"), format!("b{b}")));
        }
    }
    build(edges)
}

/// Wheel with hub `h`, rim `v1..vn`, spokes `s{i}` and rim edges `r{i}`
/// joining `v{i}` to `v{i+1}`.
pub fn wheel(n: usize) -> MultiGraph {
    assert!(n >= 3);
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push(e(format!("s{i}"), "h", format!("v{i}")));
        edges.push(e(format!("r{i}"), format!("v{i}"), format!("v{}", i % n + 1)));
    }
    build(edges)
}

/// Triangular prism: triangles `a*` on `u1..u3` and `b*` on `w1..w3`,
/// matching edges `m{i}` joining `u{i}` to `w{i}`.
pub fn prism() -> MultiGraph {
    let mut edges = Vec::new();
    for (i, j) in [(1, 2), (2, 3), (3, 1)] {
        edges.push(e(format!("a{i}{j}"), format!("u{i}"), format!("u{j}")));
        edges.push(e(format!("b{i}{j}"), format!("w{i}"), format!("w{j}")));
    }
    for i in 1..=3 {
        edges.push(e(format!("m{i}"), format!("u{i}"), format!("w{i}")));
    }
    build(edges)
}

/// Two triangles `v0 v1 v2` and `v0 v3 v4` sharing the vertex `v0`.
pub fn bowtie() -> MultiGraph {
    build(vec![
        e("e01", "v0", "v1"),
        e("e02", "v0", "v2"),
        e("e12", "v1", "v2"),
        e("e03", "v0", "v3"),
        e("e04", "v0", "v4"),
        e("e34", "v3", "v4"),
    ])
}

/// `B_n`: two vertices `x`, `y` joined by parallel edges `p1..pn`.
pub fn bond(n: usize) -> MultiGraph {
    build((1..=n).map(|i| e(format!("p{i}"), "x", "y")).collect())
}

pub fn cycle_faces(n: usize) -> Vec<Vec<String>> {
    let all = cycle(n).edge_ids();
    vec![all.clone(), all]
}

pub fn k4_faces() -> Vec<Vec<String>> {
    let f = |ids: [&str; 3]| ids.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        f(["e12", "e24", "e14"]),
        f(["e23", "e34", "e24"]),
        f(["e13", "e34", "e14"]),
        f(["e12", "e23", "e13"]),
    ]
}

pub fn wheel_faces(n: usize) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = (1..=n)
        .map(|i| vec![format!("s{i}"), format!("r{i}"), format!("s{}", i % n + 1)])
        .collect();
    out.push((1..=n).map(|i| format!("r{i}")).collect());
    out
}

pub fn bond_faces(n: usize) -> Vec<Vec<String>> {
    (1..=n)
        .map(|i| vec![format!("p{i}"), format!("p{}", i % n + 1)])
        .collect()
}

pub fn prism_faces() -> Vec<Vec<String>> {
    let f = |ids: &[&str]| ids.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        f(&["a12", "a23", "a31"]),
        f(&["b12", "b23", "b31"]),
        f(&["a12", "m2", "b12", "m1"]),
        f(&["a23", "m3", "b23", "m2"]),
        f(&["a31", "m1", "b31", "m3"]),
    ]
}

fn ladder_motif() -> Motif {
    // Copy i owns a@i, b@i; a0/b0 stand for the previous copy's a1/b1.
    let graph = build(vec![e("r", "a1", "b1"), e("t", "a0", "a1"), e("s", "b0", "b1")]);
    let mut classes = BTreeMap::new();
    classes.insert("rungs".to_string(), vec!["r".to_string()]);
    classes.insert("rails".to_string(), vec!["s".to_string(), "t".to_string()]);
    Motif::new(graph, vec!["a0".into(), "b0".into()], vec!["a1".into(), "b1".into()], classes)
        .expect("ladder motif is well-formed")
}

/// The double ladder: rungs `r@i` and rails `t@i`, `s@i` for every integer
/// copy index `i`, with two ends.
pub fn double_ladder() -> PeriodicGraph {
    PeriodicGraph::new(build(vec![]), vec![], ladder_motif(), Ends::Two)
        .expect("double ladder is well-formed")
}

/// The one-ended ladder: a core rung `r` between `a` and `b`, followed by
/// copies `0, 1, ..` of the ladder motif.
pub fn one_ended_ladder() -> PeriodicGraph {
    let core = build(vec![e("r", "a", "b")]);
    PeriodicGraph::new(core, vec!["a".into(), "b".into()], ladder_motif(), Ends::One)
        .expect("one-ended ladder is well-formed")
}

/// Named finite graphs, as accepted by `builtin:<name>` on the command line.
pub fn finite_by_name(name: &str) -> Option<MultiGraph> {
    let rest = |p: &str| name.strip_prefix(p).and_then(|n| n.parse::<usize>().ok());
    Some(match name {
        "k4" => k4(),
        "k23" => k23(),
        "prism" => prism(),
        "bowtie" => bowtie(),
        _ => {
            if let Some(n) = rest("c").filter(|&n| n >= 1) {
                cycle(n)
            } else if let Some(n) = rest("w").filter(|&n| n >= 3) {
                wheel(n)
            } else {
                bond(rest("b").filter(|&n| n >= 1)?)
            }
        }
    })
}

/// Face lists for the built-in graphs that carry a planar embedding.
pub fn faces_by_name(name: &str) -> Option<Vec<Vec<String>>> {
    let rest = |p: &str| name.strip_prefix(p).and_then(|n| n.parse::<usize>().ok());
    match name {
        "k4" => Some(k4_faces()),
        "prism" => Some(prism_faces()),
        _ => {
            if let Some(n) = rest("c").filter(|&n| n >= 1) {
                Some(cycle_faces(n))
            } else if let Some(n) = rest("w").filter(|&n| n >= 3) {
                Some(wheel_faces(n))
            } else {
                rest("b").filter(|&n| n >= 2).map(bond_faces)
            }
        }
    }
}

pub fn periodic_by_name(name: &str) -> Option<PeriodicGraph> {
    match name {
        "ladder" | "double-ladder" => Some(double_ladder()),
        "one-ended-ladder" => Some(one_ended_ladder()),
        _ => None,
    }
}

/// The 2-connected finite corpus: `C3..C6`, `K4`, `K2,3`, `W4`, prism.
pub fn two_connected_corpus() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("K4", k4()),
        ("K2,3", k23()),
        ("W4", wheel(4)),
        ("prism", prism()),
    ]
}

/// The 2-connected corpus plus the bowtie and `B3`.
pub fn finite_corpus() -> Vec<(&'static str, MultiGraph)> {
    let mut all = two_connected_corpus();
    all.push(("bowtie", bowtie()));
    all.push(("B3", bond(3)));
    all
}
