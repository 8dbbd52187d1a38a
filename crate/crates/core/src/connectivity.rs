//! Tutte-separations and their correspondence with matroid separations of
//! the finite-cycle matroid.
//!
//! An ℓ-Tutte-separation is a partition `(X, Y)` of the edges with
//! `|X|, |Y| ≥ ℓ` and `|V[X] ∩ V[Y]| ≤ ℓ`; a graph is k-Tutte-connected
//! when it has none with `ℓ < k`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cardinality::Cardinality;
use crate::error::{check_capacity, input, precondition, Error, Result};
use crate::exec::Options;
use crate::graph::MultiGraph;
use crate::graphic::{kappa_by_components, kappa_formula_periodic, mc_window, mfc};
use crate::matroid::{matroid_connectivity, matroid_connectivity_by_rank, subsets_by_size, Candidates, HEURISTIC_CANDIDATES};
use crate::periodic::{Ends, PeriodicEdgeSet, PeriodicGraph};
use crate::report::{CertificatePath, Connectivity, SeparationKind, SeparationReport, SeparationSearch, Side};
use crate::set::ElementSet;

/// Smallest ℓ for which `(x, y)` is an ℓ-Tutte-separation, if any.
fn tutte_order(boundary: usize, small_side: usize) -> Option<usize> {
    let ell = boundary.max(1);
    (ell <= small_side).then_some(ell)
}

fn finite_report(g: &MultiGraph, x: ElementSet, ell: usize, path: CertificatePath, exhaustive: bool) -> SeparationReport {
    SeparationReport {
        kind: SeparationKind::Tutte,
        ell,
        x: Side::Ids(g.edge_names(x)),
        y: Side::Ids(g.edge_names(g.all_edges() - x)),
        boundary: Some(g.boundary_size(x).into()),
        kappa: Some(kappa_by_components(g, x).into()),
        witness_f: None,
        path,
        exhaustive,
    }
}

fn edge_order(g: &MultiGraph) -> Vec<usize> {
    (0..g.edge_count()).collect()
}

/// Finds an ℓ-Tutte-separation of a finite graph.
pub fn find_tutte_separation(g: &MultiGraph, ell: usize, opts: &Options) -> Result<SeparationSearch> {
    if ell == 0 {
        return Err(precondition("separations start at ℓ = 1"));
    }
    let m = g.edge_count();
    let cands = Candidates::new(&edge_order(g), ell..=ell, opts)?;
    let exhaustive = cands.exhaustive();
    let found = cands.find_first(opts.exec, |x| {
        (x.len() >= ell && m - x.len() >= ell && g.boundary_size(x) <= ell).then_some(x)
    });
    Ok(SeparationSearch {
        ell,
        found: found.map(|x| finite_report(g, x, ell, CertificatePath::Search, exhaustive)),
        exhaustive,
    })
}

/// Largest `k ≤ cap` such that `g` has no ℓ-Tutte-separation with `ℓ < k`.
pub fn tutte_connectivity(g: &MultiGraph, cap: usize, opts: &Options) -> Result<Connectivity> {
    let m = g.edge_count();
    let cands = Candidates::new(&edge_order(g), 1..=cap.saturating_sub(1).max(1), opts)?;
    let exhaustive = cands.exhaustive();
    let best = cands.min_by(opts.exec, |x| {
        tutte_order(g.boundary_size(x), x.len().min(m - x.len())).map(|ell| (ell, x))
    });
    Ok(match best {
        Some((ell, x)) if ell < cap => Connectivity {
            value: ell,
            cap,
            exhaustive,
            witness: Some(finite_report(g, x, ell, CertificatePath::Search, exhaustive)),
        },
        _ => Connectivity {
            value: cap,
            cap,
            exhaustive,
            witness: None,
        },
    })
}

/// Finite edge sets inside `window(3)`, scored on the spanning window so
/// that every vertex they touch has all of its edges present.
struct WindowFamily {
    span: MultiGraph,
    /// Span indices of the window's own edges.
    inner: Vec<usize>,
    incidence: Vec<ElementSet>,
    /// Endpoints of each span edge as a vertex bitset.
    ends: Vec<ElementSet>,
}

const WINDOW_FAMILY_RADIUS: usize = 3;
const WINDOW_FAMILY_FULL: usize = 20;

impl WindowFamily {
    fn new(gp: &PeriodicGraph) -> Result<Self> {
        let span = gp.window_span(WINDOW_FAMILY_RADIUS);
        check_capacity("window family vertex set", span.vertex_count(), crate::set::MAX_ELEMENTS)?;
        let window = gp.window(WINDOW_FAMILY_RADIUS);
        let inner = window
            .edges()
            .iter()
            .map(|e| span.edge_index(&e.id).expect("window edges lie in the span"))
            .collect();
        let mut incidence = vec![ElementSet::EMPTY; span.vertex_count()];
        for (i, e) in span.edges().iter().enumerate() {
            incidence[e.u].insert(i);
            incidence[e.v].insert(i);
        }
        let ends = span.edges().iter().map(|e| ElementSet::from_indices([e.u, e.v])).collect();
        Ok(WindowFamily {
            span,
            inner,
            incidence,
            ends,
        })
    }

    fn boundary(&self, x: ElementSet) -> usize {
        let touched = x.iter().fold(ElementSet::EMPTY, |acc, e| acc | self.ends[e]);
        touched.iter().filter(|&v| !(self.incidence[v] - x).is_empty()).count()
    }

    fn members(&self, sizes: std::ops::RangeInclusive<usize>) -> Result<Vec<ElementSet>> {
        if self.inner.len() <= WINDOW_FAMILY_FULL {
            let all = ElementSet::from_indices(self.inner.iter().copied());
            return Ok((1..1u64 << self.inner.len()).map(|mask| all.select(mask)).collect());
        }
        subsets_by_size(&self.inner, sizes, HEURISTIC_CANDIDATES)
    }

    fn report(&self, x: ElementSet, ell: usize) -> SeparationReport {
        let ids = self.span.edge_names(x);
        SeparationReport {
            kind: SeparationKind::Tutte,
            ell,
            y: Side::Described(format!("complement({})", ids.join(","))),
            x: Side::Ids(ids),
            boundary: Some(self.boundary(x).into()),
            kappa: None,
            witness_f: None,
            path: CertificatePath::Search,
            exhaustive: false,
        }
    }
}

/// Two-ended period cuts: everything left of copy 0, optionally with some
/// motif edges of copy 0. Both sides are infinite.
fn period_cuts(gp: &PeriodicGraph) -> Result<Vec<PeriodicEdgeSet>> {
    if gp.ends() != Ends::Two {
        return Ok(vec![]);
    }
    let motif = gp.motif_edges();
    check_capacity("period-cut motif", motif.len(), 12)?;
    (0..1u64 << motif.len())
        .map(|mask| {
            let extra: Vec<&String> = motif.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, m)| m).collect();
            PeriodicEdgeSet::left_half_plus(gp, 0, &extra)
        })
        .filter(|s| s.as_ref().map_or(true, |s| !s.is_cofinite()))
        .collect()
}

fn cut_report(gp: &PeriodicGraph, x: &PeriodicEdgeSet, ell: usize, boundary: usize) -> SeparationReport {
    SeparationReport {
        kind: SeparationKind::Tutte,
        ell,
        x: Side::Described(x.describe().to_string()),
        y: Side::Described(x.complement(gp).describe().to_string()),
        boundary: Some(boundary.into()),
        kappa: None,
        witness_f: None,
        path: CertificatePath::Search,
        exhaustive: false,
    }
}

/// Searches a periodic graph for an ℓ-Tutte-separation among finite sides
/// inside a three-period window and among period cuts. Never exhaustive.
pub fn find_tutte_separation_periodic(gp: &PeriodicGraph, ell: usize, opts: &Options) -> Result<SeparationSearch> {
    if gp.ends() == Ends::Zero {
        return find_tutte_separation(gp.core(), ell, opts);
    }
    if ell == 0 {
        return Err(precondition("separations start at ℓ = 1"));
    }
    for cut in period_cuts(gp)? {
        if let Cardinality::Finite(b) = gp.boundary(&cut) {
            if b <= ell {
                return Ok(SeparationSearch {
                    ell,
                    found: Some(cut_report(gp, &cut, ell, b)),
                    exhaustive: false,
                });
            }
        }
    }
    let fam = WindowFamily::new(gp)?;
    let members = fam.members(ell..=ell + 2)?;
    let found = opts.exec.find_first(0..members.len() as u64, |i| {
        let x = members[i as usize];
        (x.len() >= ell && fam.boundary(x) <= ell).then_some(x)
    });
    Ok(SeparationSearch {
        ell,
        found: found.map(|x| fam.report(x, ell)),
        exhaustive: false,
    })
}

/// Upper bound on the Tutte-connectivity of a periodic graph from the same
/// families, with the certifying separation.
pub fn tutte_connectivity_periodic(gp: &PeriodicGraph, cap: usize, opts: &Options) -> Result<Connectivity> {
    if gp.ends() == Ends::Zero {
        return tutte_connectivity(gp.core(), cap, opts);
    }
    let mut best: Option<(usize, SeparationReport)> = None;
    for cut in period_cuts(gp)? {
        if let Cardinality::Finite(b) = gp.boundary(&cut) {
            let ell = b.max(1);
            if best.as_ref().is_none_or(|(e, _)| ell < *e) {
                best = Some((ell, cut_report(gp, &cut, ell, b)));
            }
        }
    }
    let fam = WindowFamily::new(gp)?;
    let members = fam.members(1..=cap)?;
    let window_best = opts
        .exec
        .min_by_key(0..members.len() as u64, |i| {
            let x = members[i as usize];
            tutte_order(fam.boundary(x), x.len()).map(|ell| (ell, x))
        })
        .map(|(ell, _, x)| (ell, fam.report(x, ell)));
    if let Some((ell, rep)) = window_best {
        if best.as_ref().is_none_or(|(e, _)| ell < *e) {
            best = Some((ell, rep));
        }
    }
    Ok(match best {
        Some((ell, rep)) if ell < cap => Connectivity {
            value: ell,
            cap,
            exhaustive: false,
            witness: Some(rep),
        },
        _ => Connectivity {
            value: cap,
            cap,
            exhaustive: false,
            witness: None,
        },
    })
}

fn require_connected(g: &MultiGraph) -> Result<()> {
    if g.vertex_components(g.all_edges()).1 > 1 {
        return Err(precondition("graph is not connected"));
    }
    Ok(())
}

/// Certifies that an ℓ-Tutte-separation is also a matroid ℓ-separation of
/// the finite-cycle matroid: `κ ≤ |∂| - 1 ≤ ℓ - 1` because both sides have a
/// component.
pub fn tutte_sep_to_matroid_sep(g: &MultiGraph, x: ElementSet, ell: usize) -> Result<SeparationReport> {
    require_connected(g)?;
    if !x.is_subset(g.all_edges()) {
        return Err(input("edge set is not a subset of the graph's edges"));
    }
    let y = g.all_edges() - x;
    let boundary = g.boundary_size(x);
    if ell == 0 || x.len() < ell || y.len() < ell || boundary > ell {
        return Err(precondition(format!("not a {ell}-Tutte-separation")));
    }
    let kappa = kappa_by_components(g, x);
    let by_bases = mfc(g).kappa(x).value;
    if kappa != by_bases || kappa + 1 > ell {
        return Err(Error::Internal(format!(
            "Tutte-separation with κ {kappa} (bases: {by_bases}) is not a matroid {ell}-separation"
        )));
    }
    Ok(SeparationReport {
        kind: SeparationKind::Matroid,
        ell,
        x: Side::Ids(g.edge_names(x)),
        y: Side::Ids(g.edge_names(y)),
        boundary: Some(boundary.into()),
        kappa: Some(kappa.into()),
        witness_f: None,
        path: CertificatePath::Constructive,
        exhaustive: true,
    })
}

/// One component-moving step: a component of `Y` joins `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    pub moved: Vec<String>,
    pub kappa_before: usize,
    pub kappa_after: usize,
    pub components_before: (usize, usize),
    pub components_after: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conversion {
    pub separation: SeparationReport,
    pub steps: Vec<MergeStep>,
}

/// Turns a matroid ℓ-separation of the finite-cycle matroid into a
/// k-Tutte-separation with `k ≤ ℓ`.
///
/// Components of the larger side are moved across while that side keeps at
/// least ℓ edges, which never raises `κ`. Then a component `M` of the other
/// side with `|E(M)| ≥ |V[M] ∩ V[Y]|` gives the separation `(E(M), rest)`.
/// On finite graphs no such `M` need exist; a search then supplies the
/// certificate, labelled as a fallback.
pub fn matroid_sep_to_tutte_sep(g: &MultiGraph, x: ElementSet, ell: usize, opts: &Options) -> Result<Conversion> {
    require_connected(g)?;
    if !x.is_subset(g.all_edges()) {
        return Err(input("edge set is not a subset of the graph's edges"));
    }
    let all = g.all_edges();
    let k0 = mfc(g).kappa(x).value;
    if ell == 0 || x.len() < ell || (all - x).len() < ell || k0 + 1 > ell {
        return Err(precondition(format!("not a matroid {ell}-separation")));
    }
    let (mut x, mut y) = if (all - x).len() >= x.len() { (x, all - x) } else { (all - x, x) };

    let mut steps = Vec::new();
    loop {
        let comps = g.components(y);
        if comps.len() < 2 {
            break;
        }
        // smallest component first keeps Y as large as possible
        let Some(k) = comps
            .iter()
            .copied()
            .filter(|k| y.len() - k.len() >= ell)
            .min_by_key(|k| (k.len(), k.first()))
        else {
            break;
        };
        let before = kappa_by_components(g, x);
        let cb = (g.component_count(x), g.component_count(y));
        x = x | k;
        y = y - k;
        let after = kappa_by_components(g, x);
        let ca = (g.component_count(x), g.component_count(y));
        if after > before {
            return Err(Error::Internal(format!("moving a component raised κ from {before} to {after}")));
        }
        steps.push(MergeStep {
            moved: g.edge_names(k),
            kappa_before: before,
            kappa_after: after,
            components_before: cb,
            components_after: ca,
        });
    }

    let y_vertices = g.incident_vertex_set(y);
    let good = g.components(x).into_iter().find_map(|m| {
        let touch = g.incident_vertex_set(m).intersection(&y_vertices).count();
        (m.len() >= touch && touch <= ell && touch >= 1).then_some((m, touch))
    });
    if let Some((m, k)) = good {
        debug_assert_eq!(g.boundary_size(m), k);
        return Ok(Conversion {
            separation: finite_report(g, m, k, CertificatePath::Constructive, true),
            steps,
        });
    }

    for k in 1..=ell {
        let s = find_tutte_separation(g, k, opts)?;
        if let Some(mut rep) = s.found {
            rep.path = CertificatePath::Fallback;
            return Ok(Conversion { separation: rep, steps });
        }
        if !s.exhaustive {
            break;
        }
    }
    Err(Error::Internal(format!("no Tutte-separation of order at most {ell} found")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub cap: usize,
    pub tutte: usize,
    pub matroid: usize,
    /// Connectivity of the cycle matroid from the rank function.
    pub rank: usize,
    pub agree: bool,
    /// Smallest `k ≤ cap` at which the k-connectivity verdicts differ.
    pub first_discrepancy: Option<usize>,
}

/// Compares k-Tutte-connectivity with k-connectivity of the finite-cycle
/// matroid (bases route) and of the cycle matroid (rank route), k ≤ cap.
pub fn verify_equivalence(g: &MultiGraph, cap: usize, opts: &Options) -> Result<EquivalenceReport> {
    check_capacity("equivalence check edge set", g.edge_count(), opts.limits.equivalence)?;
    let strict = Options { heuristic: false, ..*opts };
    let tutte = tutte_connectivity(g, cap, &strict)?.value;
    let m = mfc(g);
    let matroid = matroid_connectivity(&m, cap, &strict)?.value;
    let rank = matroid_connectivity_by_rank(&m, cap, &strict)?.value;
    let first_discrepancy = (1..=cap).find(|&k| {
        let verdicts = [tutte >= k, matroid >= k, rank >= k];
        verdicts.iter().any(|&v| v != verdicts[0])
    });
    Ok(EquivalenceReport {
        cap,
        tutte,
        matroid,
        rank,
        agree: first_discrepancy.is_none(),
        first_discrepancy,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowSample {
    pub x: Vec<String>,
    pub formula: Cardinality,
    pub window_n: usize,
    pub window_n1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowStability {
    pub n: usize,
    pub checked: usize,
    pub mismatches: Vec<WindowSample>,
}

/// For finite `X` inside `window(n-1)`: the closed formula on the infinite
/// graph against `κ` of the windowed cycle matroid at sizes `n` and `n+1`.
/// Samples are every single edge, every pair, and `random` seeded subsets.
pub fn verify_window_stability(gp: &PeriodicGraph, n: usize, random: usize, seed: u64) -> Result<WindowStability> {
    if n == 0 {
        return Err(precondition("window size must be at least 1"));
    }
    let inner = gp.window(n - 1).edge_ids();
    let mut samples: Vec<Vec<String>> = Vec::new();
    for (i, a) in inner.iter().enumerate() {
        samples.push(vec![a.clone()]);
        for b in &inner[i + 1..] {
            samples.push(vec![a.clone(), b.clone()]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        samples.push(inner.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect());
    }
    let (mn, mn1) = (mc_window(gp, n)?, mc_window(gp, n + 1)?);
    let mut mismatches = Vec::new();
    for ids in &samples {
        let formula = kappa_formula_periodic(gp, &PeriodicEdgeSet::finite(gp, ids)?)?;
        let window_n = mn.kappa(mn.set_of(ids)?).value;
        let window_n1 = mn1.kappa(mn1.set_of(ids)?).value;
        if formula != Cardinality::Finite(window_n) || window_n != window_n1 {
            mismatches.push(WindowSample {
                x: ids.clone(),
                formula,
                window_n,
                window_n1,
            });
        }
    }
    Ok(WindowStability {
        n,
        checked: samples.len(),
        mismatches,
    })
}
