//! Graphic matroids and the closed formula for their connectivity function.

use crate::cardinality::Cardinality;
use crate::error::{precondition, Error, Result};
use crate::graph::MultiGraph;
use crate::matroid::Matroid;
use crate::periodic::{PeriodicEdgeSet, PeriodicGraph};
use crate::set::ElementSet;

/// Finite-cycle matroid: independent sets are the forests.
pub fn mfc(g: &MultiGraph) -> Matroid {
    let graph = g.clone();
    Matroid::new(g.edge_ids(), "fc", move |s| graph.is_acyclic(s)).expect("edge ids are distinct")
}

/// Finite-bond matroid: independent sets contain no bond, i.e. deleting
/// them does not split a component.
pub fn mfb(g: &MultiGraph) -> Matroid {
    let graph = g.clone();
    let whole = g.vertex_components(g.all_edges()).1;
    Matroid::new(g.edge_ids(), "fb", move |s| {
        graph.vertex_components(graph.all_edges() - s).1 == whole
    })
    .expect("edge ids are distinct")
}

/// Cycle matroid of a periodic graph seen through the contracted window of
/// size `n`: cycles through `end:L`/`end:R` play the part of infinite cycles.
/// The ground set is the edge set of `gp.window_contract(n)`.
pub fn mc_window(gp: &PeriodicGraph, n: usize) -> Result<Matroid> {
    if n == 0 {
        return Err(precondition("window size must be at least 1"));
    }
    let w = gp.window_contract(n);
    let graph = w.clone();
    Ok(Matroid::new(w.edge_ids(), format!("c-window:{n}"), move |s| graph.is_acyclic(s))
        .expect("edge ids are distinct"))
}

/// `|∂X| - c(X) - c(Y) + c(E)`, the rank identity written in graph terms.
/// Holds on every finite graph; the gated formula below is the special case
/// `c(E) = 1`.
pub fn kappa_by_components(g: &MultiGraph, x: ElementSet) -> usize {
    let x = x & g.all_edges();
    let y = g.all_edges() - x;
    g.boundary_size(x) + g.component_count(g.all_edges()) - g.component_count(x) - g.component_count(y)
}

fn gate(two_connected: bool, loops: bool) -> Result<()> {
    if !two_connected {
        return Err(precondition("graph is not 2-connected"));
    }
    if loops {
        return Err(precondition("graph has a loop"));
    }
    Ok(())
}

/// `κ(X) = |V[X] ∩ V[Y]| - c(X) - c(Y) + 1` on a 2-connected loopless graph.
pub fn kappa_formula(g: &MultiGraph, x: ElementSet) -> Result<usize> {
    gate(g.is_two_connected(), g.has_loops())?;
    if !x.is_subset(g.all_edges()) {
        return Err(crate::error::input("edge set is not a subset of the graph's edges"));
    }
    let y = g.all_edges() - x;
    Ok(g.boundary_size(x) + 1 - g.component_count(x) - g.component_count(y))
}

/// The same formula on a periodic graph; infinite exactly when the
/// boundary is infinite.
pub fn kappa_formula_periodic(gp: &PeriodicGraph, x: &PeriodicEdgeSet) -> Result<Cardinality> {
    kappa_formula_periodic_at(gp, x, 0)
}

/// [`kappa_formula_periodic`] with every window at least `min_window`.
pub fn kappa_formula_periodic_at(gp: &PeriodicGraph, x: &PeriodicEdgeSet, min_window: usize) -> Result<Cardinality> {
    gate(gp.is_two_connected(), gp.has_loops())?;
    let boundary = gp.boundary_at(x, min_window);
    if boundary.is_infinite() {
        return Ok(Cardinality::Infinite);
    }
    let y = x.complement(gp);
    let cx = gp.component_count(x, min_window)?;
    let cy = gp.component_count(&y, min_window)?;
    match (boundary, cx, cy) {
        (Cardinality::Finite(b), Cardinality::Finite(cx), Cardinality::Finite(cy)) => Ok((b + 1 - cx - cy).into()),
        _ => Err(Error::Internal(format!(
            "finite boundary but infinitely many components for {}",
            x.describe()
        ))),
    }
}

/// A spanning tree of the contracted window that contains no cycle through
/// the end vertices, as edge ids of `gp.window_contract(n)`.
pub fn topological_spanning_tree(gp: &PeriodicGraph, n: usize) -> Result<Vec<String>> {
    let w = gp.window_contract(n);
    if !w.is_connected() {
        return Err(precondition("window is disconnected"));
    }
    let m = mc_window(gp, n)?;
    let basis = m.max_independent(m.full(), ElementSet::EMPTY, None)?;
    Ok(w.edge_names(basis.elements))
}

/// True iff `ids` span the contracted window without closing a cycle,
/// finite or through the ends.
pub fn is_topological_spanning_tree<S: AsRef<str>>(gp: &PeriodicGraph, n: usize, ids: &[S]) -> Result<bool> {
    let w = gp.window_contract(n);
    let t = w.edge_set(ids)?;
    Ok(t.len() == ids.len()
        && w.is_acyclic(t)
        && w.vertex_components(t).1 == 1)
}
