mod common;

use common::*;
use matconn::connectivity::{matroid_sep_to_tutte_sep, tutte_sep_to_matroid_sep, verify_equivalence};
use matconn::duality::planar_dual;
use matconn::graphic::{kappa_by_components, kappa_formula, mfb, mfc};
use matconn::matroid::{check_axioms, matroid_connectivity, matroid_connectivity_by_rank};
use matconn::{corpus, ElementSet, Exec, Matroid, Options};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn subset_of(g: &matconn::MultiGraph, bits: u128) -> ElementSet {
    ElementSet::from_bits(bits) & g.all_edges()
}

fn seq() -> Options {
    Options::sequential()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kappa_is_symmetric(g in connected_strategy(10), bits in any::<u128>()) {
        let m = mfc(&g);
        let x = subset_of(&g, bits);
        prop_assert_eq!(m.kappa(x).value, m.kappa(m.full() - x).value);
    }

    #[test]
    fn kappa_does_not_depend_on_the_greedy_order(g in connected_strategy(10), bits in any::<u128>(), seed in any::<u64>()) {
        let m = mfc(&g);
        let x = subset_of(&g, bits);
        let reference = m.kappa(x).value;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..m.size()).collect();
        for _ in 0..20 {
            order.shuffle(&mut rng);
            prop_assert_eq!(m.kappa_with_order(x, Some(&order)).value, reference);
        }
    }

    #[test]
    fn kappa_matches_the_rank_identity(g in connected_strategy(10), bits in any::<u128>()) {
        let m = mfc(&g);
        let x = subset_of(&g, bits);
        let y = m.full() - x;
        let expected = oracle_rank(&g, x) + oracle_rank(&g, y) - oracle_rank(&g, m.full());
        let k = m.kappa(x);
        prop_assert_eq!(k.value, expected);
        prop_assert_eq!(k.witness.len(), k.value);
        prop_assert!(k.witness.is_subset(k.basis_x | k.basis_y));
        prop_assert!(m.is_basis((k.basis_x | k.basis_y) - k.witness));
        prop_assert_eq!(kappa_by_components(&g, x), expected);
    }

    #[test]
    fn kappa_is_bounded_by_both_ranks(g in connected_strategy(10), bits in any::<u128>()) {
        let m = mfc(&g);
        let x = subset_of(&g, bits);
        let k = m.kappa(x).value;
        prop_assert!(k <= oracle_rank(&g, x));
        prop_assert!(k <= oracle_rank(&g, m.full() - x));
    }

    #[test]
    fn three_routes_agree_on_two_connected_graphs(g in two_connected_strategy(9), bits in any::<u128>()) {
        let m = mfc(&g);
        let x = subset_of(&g, bits);
        let y = m.full() - x;
        let by_rank = oracle_rank(&g, x) + oracle_rank(&g, y) - oracle_rank(&g, m.full());
        prop_assert_eq!(kappa_formula(&g, x).unwrap(), by_rank);
        prop_assert_eq!(m.kappa(x).value, by_rank);
    }

    #[test]
    fn bond_matroid_is_the_dual_of_the_cycle_matroid(g in connected_strategy(9)) {
        let (fb, dual) = (mfb(&g), mfc(&g).dual());
        for s in all_subsets(g.edge_count()) {
            prop_assert_eq!(fb.is_independent(s), dual.is_independent(s), "{:?}", fb.names(s));
        }
    }

    #[test]
    fn bonds_match_minimal_cuts(g in connected_strategy(8)) {
        let bonds = oracle_bonds(&g);
        for s in all_subsets(g.edge_count()) {
            prop_assert_eq!(g.is_bond(s), bonds.contains(&s), "{:?}", g.edge_names(s));
        }
    }

    #[test]
    fn parity_check_matches_cycle_covers(g in connected_strategy(8)) {
        for z in all_subsets(g.edge_count()) {
            prop_assert_eq!(g.cut_parity_check(z), oracle_cycle_cover(&g, z), "{:?}", g.edge_names(z));
        }
    }

    #[test]
    fn single_cycles_match(g in connected_strategy(8)) {
        for z in all_subsets(g.edge_count()) {
            prop_assert_eq!(g.is_cycle_edge_set(z), oracle_is_cycle(&g, z));
        }
    }

    #[test]
    fn circuits_of_the_cycle_matroid_are_cycles(g in connected_strategy(8)) {
        let m = mfc(&g);
        for z in all_subsets(g.edge_count()) {
            let circuit = !m.is_independent(z) && z.iter().all(|e| m.is_independent(z.without(e)));
            prop_assert_eq!(circuit, oracle_is_cycle(&g, z));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tutte_and_matroid_connectivity_agree(g in connected_strategy(9)) {
        let r = verify_equivalence(&g, g.edge_count(), &seq()).unwrap();
        prop_assert!(r.agree, "{:?} on {:?}", r, g.edge_ids());
    }

    #[test]
    fn sequential_and_parallel_give_the_same_answers(g in connected_strategy(9)) {
        let m = mfc(&g);
        let par = Options::default().with_exec(Exec::Parallel);
        let cap = g.edge_count();
        prop_assert_eq!(matroid_connectivity(&m, cap, &seq()).unwrap(), matroid_connectivity(&m, cap, &par).unwrap());
        prop_assert_eq!(
            matroid_connectivity_by_rank(&m, cap, &seq()).unwrap(),
            matroid_connectivity_by_rank(&m, cap, &par).unwrap()
        );
        prop_assert_eq!(
            matconn::connectivity::tutte_connectivity(&g, cap, &seq()).unwrap(),
            matconn::connectivity::tutte_connectivity(&g, cap, &par).unwrap()
        );
        prop_assert_eq!(check_axioms(&m, &seq()).unwrap(), check_axioms(&m, &par).unwrap());
    }

    #[test]
    fn graphic_matroids_satisfy_the_axioms(g in connected_strategy(8)) {
        prop_assert_eq!(check_axioms(&mfc(&g), &seq()).unwrap(), None);
        prop_assert_eq!(check_axioms(&mfb(&g), &seq()).unwrap(), None);
    }

    #[test]
    fn converters_keep_the_order(g in two_connected_strategy(9), bits in any::<u128>()) {
        let x = subset_of(&g, bits);
        let y = g.all_edges() - x;
        let small = x.len().min(y.len());
        let boundary = g.boundary_size(x);
        // as a Tutte-separation of order ℓ
        let ell = boundary.max(1);
        if ell <= small {
            let r = tutte_sep_to_matroid_sep(&g, x, ell).unwrap();
            prop_assert!(r.kappa.unwrap().finite().unwrap() < ell);
        }
        // as a matroid separation of order κ + 1
        let ell = kappa_by_components(&g, x) + 1;
        if ell <= small {
            let c = matroid_sep_to_tutte_sep(&g, x, ell, &seq()).unwrap();
            prop_assert!(c.separation.ell <= ell);
            for step in &c.steps {
                prop_assert!(step.kappa_after <= step.kappa_before);
            }
            let sides = (c.separation.x.ids().unwrap().to_vec(), c.separation.y.ids().unwrap().to_vec());
            let sx = g.edge_set(&sides.0).unwrap();
            prop_assert_eq!(sx | g.edge_set(&sides.1).unwrap(), g.all_edges());
            prop_assert!(g.boundary_size(sx).max(1) <= c.separation.ell);
            prop_assert!(sides.0.len().min(sides.1.len()) >= c.separation.ell);
        }
    }
}

#[test]
fn k4_has_sixteen_spanning_trees() {
    let g = corpus::k4();
    let m = mfc(&g);
    let bases = all_subsets(6).filter(|&s| m.is_basis(s)).count();
    assert_eq!(bases, 16);
    assert_eq!(kirchhoff_count(&g), 16);
}

#[test]
fn spanning_tree_counts_match_kirchhoff() {
    for (name, g) in corpus::finite_corpus() {
        let m = mfc(&g);
        let bases = all_subsets(g.edge_count()).filter(|&s| m.is_basis(s)).count() as i128;
        assert_eq!(bases, kirchhoff_count(&g), "{name}");
    }
}

#[test]
fn planar_dual_is_an_involution_on_the_cycle_matroid() {
    for name in ["c3", "c5", "k4", "w4", "w5", "prism", "b3"] {
        let g = corpus::finite_by_name(name).unwrap();
        let d = planar_dual(&g, &corpus::faces_by_name(name).unwrap()).unwrap();
        let (dd, fc) = (mfc(&d).dual(), mfc(&g));
        assert_eq!(d.edge_ids(), g.edge_ids());
        assert_eq!(d.vertex_count(), g.edge_count() + 2 - g.vertex_count(), "{name}: Euler");
        for s in all_subsets(g.edge_count()) {
            assert_eq!(dd.is_independent(s), fc.is_independent(s), "{name}");
        }
    }
}

#[test]
fn uniform_matroids_are_self_consistent() {
    for (r, n) in [(0, 3), (1, 4), (2, 4), (3, 5), (5, 5)] {
        let u = Matroid::uniform(r, n);
        assert_eq!(check_axioms(&u, &seq()).unwrap(), None);
        let d = u.dual();
        assert_eq!(d.rank(d.full()), n - r);
        for x in all_subsets(n) {
            assert_eq!(u.kappa(x).value, d.kappa(x).value);
        }
    }
}

#[test]
fn three_routes_agree_on_every_subset_of_random_two_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for _ in 0..200 {
        let g = random_two_connected(&mut rng, 9);
        let m = mfc(&g);
        let full = oracle_rank(&g, m.full());
        for x in all_subsets(g.edge_count()) {
            let by_rank = oracle_rank(&g, x) + oracle_rank(&g, m.full() - x) - full;
            assert_eq!(kappa_formula(&g, x).unwrap(), by_rank, "{:?} {:?}", g.edge_ids(), m.names(x));
            assert_eq!(m.kappa(x).value, by_rank);
            assert_eq!(m.kappa_by_rank(x), by_rank);
        }
    }
}
