//! Dual graph pairs on a shared edge set, planar duals from face lists, and
//! the invariance of connectivity under duality.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_capacity, input, precondition, Error, Result};
use crate::exec::Options;
use crate::graph::MultiGraph;
use crate::graphic::mfc;
use crate::matroid::{matroid_connectivity, Matroid};
use crate::connectivity::tutte_connectivity;
use crate::set::ElementSet;

/// Builds the planar dual from a face list: one vertex `f{i}` per face, and
/// each edge joins the two faces it borders (a loop when both sides are
/// the same face).
pub fn planar_dual<S: AsRef<str>>(g: &MultiGraph, faces: &[Vec<S>]) -> Result<MultiGraph> {
    let embedding = |msg: String| Error::Embedding(msg);
    let mut sides: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (f, face) in faces.iter().enumerate() {
        if face.is_empty() {
            return Err(embedding(format!("face {f} is empty")));
        }
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for id in face {
            let e = g
                .edge_index(id.as_ref())
                .ok_or_else(|| embedding(format!("face {f} uses unknown edge {}", id.as_ref())))?;
            sides[e].push(f);
            let edge = g.edge(e);
            *degree.entry(edge.u).or_default() += 1;
            *degree.entry(edge.v).or_default() += 1;
        }
        if degree.values().any(|d| d % 2 == 1) {
            return Err(embedding(format!("face {f} is not a closed walk")));
        }
    }
    if let Some(e) = sides.iter().position(|s| s.len() != 2) {
        return Err(embedding(format!(
            "edge {} borders {} face sides instead of 2",
            g.edge_id(e),
            sides[e].len()
        )));
    }
    if !g.is_connected() {
        return Err(embedding("face lists are only accepted for connected graphs".into()));
    }
    let v = g.vertex_count();
    if v + faces.len() != g.edge_count() + 2 {
        return Err(embedding(format!(
            "Euler count fails: {} vertices, {} edges, {} faces",
            v,
            g.edge_count(),
            faces.len()
        )));
    }
    let vertices: Vec<String> = (0..faces.len()).map(|f| format!("f{f}")).collect();
    let edges: Vec<(String, String, String)> = g
        .edges()
        .iter()
        .zip(&sides)
        .map(|(e, s)| (e.id.clone(), vertices[s[0]].clone(), vertices[s[1]].clone()))
        .collect();
    MultiGraph::new(vertices, edges)
}

/// Two finite graphs on the same edge ids.
#[derive(Clone, Debug)]
pub struct DualPair {
    g: MultiGraph,
    g_star: MultiGraph,
    verified: bool,
}

/// A set on which the two graphs disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualWitness {
    pub set: Vec<String>,
    pub cycle_in_g: bool,
    pub bond_in_g_star: bool,
    pub bond_in_g: bool,
    pub cycle_in_g_star: bool,
}

impl DualPair {
    pub fn new(g: MultiGraph, g_star: MultiGraph) -> Result<Self> {
        if g.edge_ids() != g_star.edge_ids() {
            return Err(input("the two graphs of a dual pair must have the same edge ids"));
        }
        Ok(DualPair {
            g,
            g_star,
            verified: false,
        })
    }

    pub fn g(&self) -> &MultiGraph {
        &self.g
    }

    pub fn g_star(&self) -> &MultiGraph {
        &self.g_star
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs [`verify_dual_pair`] and records a pass.
    pub fn verify(&mut self, opts: &Options) -> Result<Option<DualWitness>> {
        let w = verify_dual_pair(self, opts)?;
        self.verified = w.is_none();
        Ok(w)
    }
}

/// Cycles of `g` are exactly the bonds of `g_star`, and bonds of `g` are
/// exactly the cycles of `g_star`. Returns the first disagreeing set.
pub fn verify_dual_pair(p: &DualPair, opts: &Options) -> Result<Option<DualWitness>> {
    let m = p.g.edge_count();
    check_capacity("dual pair edge set", m, opts.limits.dual_pair)?;
    Ok(opts.exec.find_first(1..1u64 << m, |bits| {
        let f = ElementSet::from_bits(bits as u128);
        let w = DualWitness {
            set: p.g.edge_names(f),
            cycle_in_g: p.g.is_cycle_edge_set(f),
            bond_in_g_star: p.g_star.is_bond(f),
            bond_in_g: p.g.is_bond(f),
            cycle_in_g_star: p.g_star.is_cycle_edge_set(f),
        };
        (w.cycle_in_g != w.bond_in_g_star || w.bond_in_g != w.cycle_in_g_star).then_some(w)
    }))
}

/// First subset on which the two matroids disagree about independence.
fn first_difference(a: &Matroid, b: &Matroid, opts: &Options, limit: usize) -> Result<Option<Vec<String>>> {
    if a.ground() != b.ground() {
        return Err(input("matroids on different ground sets"));
    }
    check_capacity("matroid comparison ground set", a.size(), limit)?;
    Ok(opts.exec.find_first(0..1u64 << a.size(), |bits| {
        let s = ElementSet::from_bits(bits as u128);
        (a.is_independent(s) != b.is_independent(s)).then(|| a.names(s))
    }))
}

/// The dual of the cycle matroid of `g` against the cycle matroid of
/// `g_star`, on every subset.
pub fn verify_graphdual(p: &DualPair, opts: &Options) -> Result<Option<Vec<String>>> {
    first_difference(&mfc(&p.g).dual(), &mfc(&p.g_star), opts, opts.limits.dual_pair)
}

/// First `x` with `κ_M(x) ≠ κ_{M*}(x)`.
pub fn check_kappa_duality(m: &Matroid, opts: &Options) -> Result<Option<Vec<String>>> {
    check_capacity("κ-duality ground set", m.size(), opts.limits.kappa_duality)?;
    let d = m.dual();
    Ok(opts.exec.find_first(0..1u64 << m.size(), |bits| {
        let x = ElementSet::from_bits(bits as u128);
        (m.kappa(x).value != d.kappa(x).value).then(|| m.names(x))
    }))
}

/// Tutte-connectivity of both graphs, through the matroid connectivities
/// that link them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteDuality {
    pub cap: usize,
    pub tutte_g: usize,
    pub fc_g: usize,
    pub fc_g_dual: usize,
    pub fc_g_star: usize,
    pub tutte_g_star: usize,
    pub agree: bool,
}

pub fn tutte_duality_check(p: &DualPair, cap: usize, opts: &Options) -> Result<TutteDuality> {
    if !p.verified {
        return Err(precondition("dual pair has not been verified"));
    }
    let strict = Options { heuristic: false, ..*opts };
    let fc = mfc(&p.g);
    let chain = [
        tutte_connectivity(&p.g, cap, &strict)?.value,
        matroid_connectivity(&fc, cap, &strict)?.value,
        matroid_connectivity(&fc.dual(), cap, &strict)?.value,
        matroid_connectivity(&mfc(&p.g_star), cap, &strict)?.value,
        tutte_connectivity(&p.g_star, cap, &strict)?.value,
    ];
    Ok(TutteDuality {
        cap,
        tutte_g: chain[0],
        fc_g: chain[1],
        fc_g_dual: chain[2],
        fc_g_star: chain[3],
        tutte_g_star: chain[4],
        agree: chain.iter().all(|&c| c == chain[0]),
    })
}
