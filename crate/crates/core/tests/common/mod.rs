//! Random graph generators and brute-force oracles shared by the
//! integration tests. Nothing here calls into the library's own graph
//! algorithms: oracles work on raw endpoint lists.

#![allow(dead_code)]

use matconn::{ElementSet, MultiGraph};
use proptest::prelude::*;
use rand::Rng;

fn graph(n_vertices: usize, edges: &[(usize, usize)]) -> MultiGraph {
    let vertices: Vec<String> = (0..n_vertices).map(|v| format!("v{v}")).collect();
    MultiGraph::new(
        vertices,
        edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (format!("e{i:02}"), format!("v{u}"), format!("v{v}"))),
    )
    .expect("generated graph is well-formed")
}

/// A random connected multigraph with at most `max_edges` edges; loops and
/// parallel edges allowed.
pub fn random_connected<R: Rng>(rng: &mut R, max_edges: usize) -> MultiGraph {
    let m = rng.gen_range(1..=max_edges);
    let n = rng.gen_range(1..=(m + 1).min(7));
    let mut edges = Vec::with_capacity(m);
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < m {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    graph(n, &edges)
}

/// A random loopless 2-connected graph by ear decomposition, with at most
/// `max_edges` edges. Single-edge ears may create parallel edges.
pub fn random_two_connected<R: Rng>(rng: &mut R, max_edges: usize) -> MultiGraph {
    let start = rng.gen_range(3..=max_edges.clamp(3, 5));
    let mut n = start;
    let mut edges: Vec<(usize, usize)> = (0..start).map(|v| (v, (v + 1) % start)).collect();
    while edges.len() < max_edges && rng.gen_bool(0.7) {
        let room = max_edges - edges.len();
        let len = rng.gen_range(1..=room.min(3));
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let mut prev = a;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, b));
    }
    graph(n, &edges)
}

pub fn connected_strategy(max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    any::<u64>().prop_map(move |seed| {
        use rand::SeedableRng;
        random_connected(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), max_edges)
    })
}

pub fn two_connected_strategy(max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    any::<u64>().prop_map(move |seed| {
        use rand::SeedableRng;
        random_two_connected(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), max_edges)
    })
}

fn endpoints(g: &MultiGraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    parent[v] = r;
    r
}

/// Rank of `x` in the cycle matroid: `|V[X]| - c(V[X], X)` by union-find.
pub fn oracle_rank(g: &MultiGraph, x: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    let mut rank = 0;
    for (i, (u, v)) in endpoints(g).into_iter().enumerate() {
        if x.contains(i) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                rank += 1;
            }
        }
    }
    rank
}

/// Edge set of one cycle: a loop, or a connected edge set in which every
/// touched vertex has degree two.
pub fn oracle_is_cycle(g: &MultiGraph, z: ElementSet) -> bool {
    if z.is_empty() {
        return false;
    }
    let ends = endpoints(g);
    let mut degree = vec![0usize; g.vertex_count()];
    for i in z.iter() {
        degree[ends[i].0] += 1;
        degree[ends[i].1] += 1;
    }
    if degree.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let touched: Vec<usize> = (0..g.vertex_count()).filter(|&v| degree[v] > 0).collect();
    oracle_rank(g, z) + 1 == touched.len()
}

/// Whether `z` splits into edge-disjoint cycles, by trying every cycle
/// through the first edge of `z`.
pub fn oracle_cycle_cover(g: &MultiGraph, z: ElementSet) -> bool {
    let Some(first) = z.first() else {
        return true;
    };
    let rest = z.without(first);
    let others: Vec<usize> = rest.iter().collect();
    (0..1u64 << others.len()).any(|mask| {
        let c = ElementSet::from_indices(others.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &e)| e))
            .with(first);
        oracle_is_cycle(g, c) && oracle_cycle_cover(g, z - c)
    })
}

/// Every nonempty edge cut `E(S, V \ S)`.
pub fn oracle_cuts(g: &MultiGraph) -> Vec<ElementSet> {
    let ends = endpoints(g);
    let n = g.vertex_count();
    let mut cuts: Vec<ElementSet> = (0..1u64 << n)
        .map(|side| {
            ElementSet::from_indices(
                ends.iter()
                    .enumerate()
                    .filter(|(_, &(u, v))| (side >> u & 1) != (side >> v & 1))
                    .map(|(i, _)| i),
            )
        })
        .filter(|c| !c.is_empty())
        .collect();
    cuts.sort();
    cuts.dedup();
    cuts
}

/// Minimal nonempty cuts.
pub fn oracle_bonds(g: &MultiGraph) -> Vec<ElementSet> {
    let cuts = oracle_cuts(g);
    cuts.iter()
        .copied()
        .filter(|&c| !cuts.iter().any(|&d| d != c && d.is_subset(c)))
        .collect()
}

/// Number of spanning trees from the matrix-tree theorem, by exact
/// fraction-free elimination on the reduced Laplacian. Loops are ignored.
pub fn kirchhoff_count(g: &MultiGraph) -> i128 {
    let n = g.vertex_count();
    if n <= 1 {
        return 1;
    }
    let mut lap = vec![vec![0i128; n]; n];
    for (u, v) in endpoints(g) {
        if u != v {
            lap[u][u] += 1;
            lap[v][v] += 1;
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
    }
    let mut a: Vec<Vec<i128>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let k = n - 1;
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            let Some(swap) = (p + 1..k).find(|&r| a[r][p] != 0) else {
                return 0;
            };
            a.swap(p, swap);
            sign = -sign;
        }
        for r in p + 1..k {
            for c in p + 1..k {
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

/// All subsets of the first `n` elements.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0..1u128 << n).map(ElementSet::from_bits)
}

/// `|V[X] ∩ V[Y]|` from raw endpoints.
pub fn oracle_boundary(g: &MultiGraph, x: ElementSet) -> usize {
    let mut touched = vec![(false, false); g.vertex_count()];
    for (i, (u, v)) in endpoints(g).into_iter().enumerate() {
        for w in [u, v] {
            if x.contains(i) {
                touched[w].0 = true;
            } else {
                touched[w].1 = true;
            }
        }
    }
    touched.iter().filter(|&&(a, b)| a && b).count()
}

/// Largest `k ≤ cap` with no ℓ-Tutte-separation for any `ℓ < k`.
pub fn oracle_tutte_connectivity(g: &MultiGraph, cap: usize) -> usize {
    let m = g.edge_count();
    let mut best = cap;
    for x in all_subsets(m) {
        let small = x.len().min(m - x.len());
        let ell = oracle_boundary(g, x).max(1);
        if ell <= small && ell < best {
            best = ell;
        }
    }
    best
}

/// Largest `k ≤ cap` with no matroid ℓ-separation of the cycle matroid for
/// any `ℓ < k`, from union-find ranks.
pub fn oracle_matroid_connectivity(g: &MultiGraph, cap: usize) -> usize {
    let m = g.edge_count();
    let full = oracle_rank(g, ElementSet::full(m));
    let mut best = cap;
    for x in all_subsets(m) {
        let small = x.len().min(m - x.len());
        let kappa = oracle_rank(g, x) + oracle_rank(g, ElementSet::full(m) - x) - full;
        if kappa < small && kappa + 1 < best {
            best = kappa + 1;
        }
    }
    best
}
