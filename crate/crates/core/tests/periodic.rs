mod common;

use common::*;
use matconn::connectivity::{tutte_connectivity_periodic, verify_window_stability};
use matconn::graphic::{kappa_formula_periodic, mc_window, mfc, topological_spanning_tree};
use matconn::io::{load_graph, parse_graph, GraphJson};
use matconn::{corpus, Cardinality, Options, PeriodicEdgeSet, PeriodicGraph};

#[test]
fn both_ladders_are_stable_across_windows() {
    for gp in [corpus::double_ladder(), corpus::one_ended_ladder()] {
        for n in [3, 4] {
            let r = verify_window_stability(&gp, n, 30, 7).unwrap();
            assert!(r.checked > 30);
            assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        }
    }
}

#[test]
fn ladder_connectivity_is_witnessed_by_a_period_cut() {
    let gp = corpus::double_ladder();
    let c = tutte_connectivity_periodic(&gp, 5, &Options::default()).unwrap();
    assert_eq!(c.value, 2);
    assert!(!c.exhaustive);
    let w = c.witness.unwrap();
    assert_eq!(w.boundary, Some(Cardinality::Finite(2)));
}

#[test]
fn one_ended_ladder_has_a_two_vertex_separator() {
    let gp = corpus::one_ended_ladder();
    let c = tutte_connectivity_periodic(&gp, 5, &Options::sequential()).unwrap();
    assert_eq!(c.value, 2);
}

#[test]
fn finite_sides_of_the_one_ended_ladder() {
    let gp = corpus::one_ended_ladder();
    let core = PeriodicEdgeSet::finite(&gp, &["r"]).unwrap();
    assert_eq!(kappa_formula_periodic(&gp, &core).unwrap(), 1.into());
    let rungs = PeriodicEdgeSet::parse(&gp, "rungs").unwrap();
    assert_eq!(kappa_formula_periodic(&gp, &rungs).unwrap(), Cardinality::Infinite);
}

#[test]
fn finite_graphs_pass_through_unchanged() {
    let gp = PeriodicGraph::from_finite(corpus::prism());
    let c = tutte_connectivity_periodic(&gp, 5, &Options::default()).unwrap();
    assert_eq!(c.value, oracle_tutte_connectivity(&corpus::prism(), 5));
    assert!(c.exhaustive);
}

#[test]
fn windows_grow_by_one_period() {
    let gp = corpus::double_ladder();
    for n in 1..5 {
        let (a, b) = (gp.window_contract(n), gp.window_contract(n + 1));
        assert_eq!(b.edge_count(), a.edge_count() + 6);
        assert_eq!(b.vertex_count(), a.vertex_count() + 4);
    }
}

#[test]
fn contracted_windows_obey_the_cut_criterion_with_end_vertices() {
    let gp = corpus::double_ladder();
    let w = gp.window_contract(1);
    assert!(w.edge_count() <= 12);
    for z in all_subsets(w.edge_count()) {
        assert_eq!(w.cut_parity_check(z), oracle_cycle_cover(&w, z), "{:?}", w.edge_names(z));
    }
}

#[test]
fn topological_trees_have_the_right_size() {
    for gp in [corpus::double_ladder(), corpus::one_ended_ladder()] {
        for n in 1..4 {
            let w = gp.window_contract(n);
            let t = topological_spanning_tree(&gp, n).unwrap();
            assert_eq!(t.len(), w.vertex_count() - 1);
            // the same set is acyclic in the uncontracted window too
            let span = gp.window_span(n);
            assert!(mfc(&span).is_independent(span.edge_set(&t).unwrap()));
        }
    }
}

#[test]
fn window_matroid_rank_counts_contracted_vertices() {
    let gp = corpus::double_ladder();
    for n in 1..4 {
        let m = mc_window(&gp, n).unwrap();
        let w = gp.window_contract(n);
        assert_eq!(m.rank(m.full()), oracle_rank(&w, w.all_edges()));
        assert_eq!(m.rank(m.full()), w.vertex_count() - 1);
    }
}

#[test]
fn periodic_files_round_trip_through_builtins() {
    let gp = load_graph("builtin:one-ended-ladder").unwrap().periodic();
    let text = r#"{"periodic":{"ends":1,
        "core":{"edges":[{"id":"r","u":"a","v":"b"}]},
        "attach":["a","b"],
        "motif":{"edges":[{"id":"r","u":"a1","v":"b1"},{"id":"t","u":"a0","v":"a1"},{"id":"s","u":"b0","v":"b1"}],
                 "left":["a0","b0"],"right":["a1","b1"],"classes":{"rungs":["r"],"rails":["s","t"]}}}}"#;
    let parsed = parse_graph(text).unwrap().periodic();
    for n in 0..4 {
        assert_eq!(parsed.window_contract(n), gp.window_contract(n));
    }
    let finite = serde_json::to_string(&GraphJson::from_graph(&corpus::k23(), None)).unwrap();
    assert_eq!(parse_graph(&finite).unwrap().finite().unwrap(), &corpus::k23());
}
