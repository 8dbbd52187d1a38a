//! Finitely presented infinite graphs.
//!
//! A [`PeriodicGraph`] is a finite core followed by copies of a finite
//! motif, repeated towards one end (copies `0, 1, 2, ..`) or two ends
//! (copies indexed by all integers). The motif's left-boundary vertices in
//! copy `i` are identified with its right-boundary vertices in copy `i-1`;
//! in the one-ended case, copy 0's left boundary is glued to the core's
//! attachment list instead. A copy owns the motif vertices that are not on
//! the left boundary, so every edge of copy `i` lies within copies `i-1`
//! and `i`.
//!
//! Identifiers: core vertices and edges keep their names; motif vertex `v`
//! and edge `e` of copy `i` are `v@i` and `e@i`.
//!
//! All infinite-graph questions are answered on finite windows:
//! [`PeriodicGraph::window`] keeps the copies in range,
//! [`PeriodicGraph::window_span`] adds the edges leaving that range with
//! their true far endpoints, and [`PeriodicGraph::window_contract`]
//! reattaches those edges to one new vertex per end, so that a cycle
//! through an end vertex stands for an infinite cycle.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::cardinality::Cardinality;
use crate::error::{input, Error, Result};
use crate::graph::MultiGraph;
use crate::set::ElementSet;

pub const LEFT_END: &str = "end:L";
pub const RIGHT_END: &str = "end:R";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Ends {
    /// Degenerate presentation: the core alone.
    Zero,
    One,
    Two,
}

impl TryFrom<u8> for Ends {
    type Error = String;
    fn try_from(n: u8) -> std::result::Result<Self, String> {
        match n {
            0 => Ok(Ends::Zero),
            1 => Ok(Ends::One),
            2 => Ok(Ends::Two),
            _ => Err(format!("ends must be 0, 1 or 2, got {n}")),
        }
    }
}

impl From<Ends> for u8 {
    fn from(e: Ends) -> u8 {
        match e {
            Ends::Zero => 0,
            Ends::One => 1,
            Ends::Two => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Motif {
    graph: MultiGraph,
    left: Vec<String>,
    right: Vec<String>,
    /// Named groups of motif edges ("rungs", "rails", ..) for side specs.
    classes: BTreeMap<String, Vec<String>>,
}

impl Motif {
    pub fn new(
        graph: MultiGraph,
        left: Vec<String>,
        right: Vec<String>,
        classes: BTreeMap<String, Vec<String>>,
    ) -> Result<Self> {
        if left.len() != right.len() {
            return Err(input("motif boundary lists differ in length"));
        }
        let mut seen = HashSet::new();
        for v in left.iter().chain(&right) {
            if graph.vertex_index(v).is_none() {
                return Err(input(format!("motif boundary vertex {v} is not a motif vertex")));
            }
            if !seen.insert(v.as_str()) {
                return Err(input(format!("motif boundary vertex {v} listed twice")));
            }
        }
        for id in graph.vertices().iter().chain(graph.edges().iter().map(|e| &e.id)) {
            if id.contains('@') {
                return Err(input(format!("motif identifier {id} may not contain '@'")));
            }
        }
        for (name, members) in &classes {
            if let Some(m) = members.iter().find(|m| graph.edge_index(m).is_none()) {
                return Err(input(format!("class {name} names unknown motif edge {m}")));
            }
        }
        Ok(Motif {
            graph,
            left,
            right,
            classes,
        })
    }

    pub fn empty() -> Self {
        Motif {
            graph: MultiGraph::from_edges(Vec::<(String, String, String)>::new()).unwrap(),
            left: vec![],
            right: vec![],
            classes: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn classes(&self) -> &BTreeMap<String, Vec<String>> {
        &self.classes
    }

    fn owned_vertices(&self) -> impl Iterator<Item = &String> {
        self.graph.vertices().iter().filter(|v| !self.left.contains(v))
    }
}

/// Which kind of finite window to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WindowKind {
    Plain,
    Span,
    Contract,
}

#[derive(Clone, Debug)]
pub struct PeriodicGraph {
    core: MultiGraph,
    attach: Vec<String>,
    motif: Motif,
    ends: Ends,
}

/// Splits `name@i` into its motif name and copy index.
pub fn split_copy_id(id: &str) -> Option<(&str, i64)> {
    let (name, idx) = id.rsplit_once('@')?;
    Some((name, idx.parse().ok()?))
}

impl PeriodicGraph {
    pub fn new(core: MultiGraph, attach: Vec<String>, motif: Motif, ends: Ends) -> Result<Self> {
        for id in core.vertices().iter().chain(core.edges().iter().map(|e| &e.id)) {
            if id.contains('@') || id.starts_with("end:") {
                return Err(input(format!("core identifier {id} is reserved")));
            }
        }
        match ends {
            Ends::Zero => {
                if motif.graph.vertex_count() > 0 || !attach.is_empty() {
                    return Err(input("a periodic graph with no ends has no motif"));
                }
            }
            Ends::One => {
                if attach.len() != motif.left.len() {
                    return Err(input("core attachment list must match the motif boundary"));
                }
                if let Some(v) = attach.iter().find(|v| core.vertex_index(v).is_none()) {
                    return Err(input(format!("attachment vertex {v} is not a core vertex")));
                }
            }
            Ends::Two => {
                if core.vertex_count() > 0 || !attach.is_empty() {
                    return Err(input("two-ended presentations take an empty core"));
                }
            }
        }
        if ends != Ends::Zero && motif.graph.edge_count() == 0 {
            return Err(input("motif has no edges"));
        }
        Ok(PeriodicGraph {
            core,
            attach,
            motif,
            ends,
        })
    }

    /// A finite graph viewed as a periodic graph without ends.
    pub fn from_finite(core: MultiGraph) -> Self {
        PeriodicGraph {
            core,
            attach: vec![],
            motif: Motif::empty(),
            ends: Ends::Zero,
        }
    }

    pub fn ends(&self) -> Ends {
        self.ends
    }

    pub fn core(&self) -> &MultiGraph {
        &self.core
    }

    pub fn attach(&self) -> &[String] {
        &self.attach
    }

    pub fn motif(&self) -> &Motif {
        &self.motif
    }

    /// Copy indices kept by the window of size `n`.
    pub fn copies(&self, n: usize) -> RangeInclusive<i64> {
        let n = n as i64;
        match self.ends {
            #[allow(clippy::reversed_empty_ranges)]
            Ends::Zero => 1..=0,
            Ends::One => 0..=n - 1,
            Ends::Two => -n..=n,
        }
    }

    fn copy_exists(&self, i: i64) -> bool {
        match self.ends {
            Ends::Zero => false,
            Ends::One => i >= 0,
            Ends::Two => true,
        }
    }

    /// Resolves motif vertex `v` of copy `i` to a global vertex id.
    fn resolve(&self, v: &str, i: i64) -> String {
        match self.motif.left.iter().position(|l| l == v) {
            Some(k) if self.ends == Ends::One && i == 0 => self.attach[k].clone(),
            Some(k) => format!("{}@{}", self.motif.right[k], i - 1),
            None => format!("{v}@{i}"),
        }
    }

    pub fn has_edge(&self, id: &str) -> bool {
        if self.core.edge_index(id).is_some() {
            return true;
        }
        match split_copy_id(id) {
            Some((name, i)) => self.copy_exists(i) && self.motif.graph.edge_index(name).is_some(),
            None => false,
        }
    }

    /// Motif edge names, sorted.
    pub fn motif_edges(&self) -> Vec<String> {
        self.motif.graph.edge_ids()
    }

    fn build(&self, n: usize, kind: WindowKind) -> MultiGraph {
        let mut vertices: BTreeSet<String> = BTreeSet::new();
        if self.ends != Ends::Two {
            vertices.extend(self.core.vertices().iter().cloned());
        }
        let range = self.copies(n);
        for i in range.clone() {
            vertices.extend(self.motif.owned_vertices().map(|v| format!("{v}@{i}")));
        }
        let mut edges: Vec<(String, String, String)> = self
            .core
            .edges()
            .iter()
            .map(|e| {
                (
                    e.id.clone(),
                    self.core.vertex_id(e.u).to_string(),
                    self.core.vertex_id(e.v).to_string(),
                )
            })
            .collect();
        let mut extra: BTreeSet<String> = BTreeSet::new();
        if self.ends != Ends::Zero {
            let (lo, hi) = (*range.start(), *range.end());
            let first = if self.ends == Ends::One { 0 } else { lo };
            for i in first..=hi + 1 {
                for e in self.motif.graph.edges() {
                    let a = self.resolve(self.motif.graph.vertex_id(e.u), i);
                    let b = self.resolve(self.motif.graph.vertex_id(e.v), i);
                    let (ina, inb) = (vertices.contains(&a), vertices.contains(&b));
                    let id = format!("{}@{}", e.id, i);
                    if ina && inb {
                        edges.push((id, a, b));
                    } else if ina || inb {
                        let (inside, outside) = if ina { (a, b) } else { (b, a) };
                        let outside = match kind {
                            WindowKind::Plain => continue,
                            WindowKind::Span => outside,
                            WindowKind::Contract => {
                                let j = split_copy_id(&outside).map(|(_, j)| j).unwrap_or(0);
                                if j < lo { LEFT_END } else { RIGHT_END }.to_string()
                            }
                        };
                        extra.insert(outside.clone());
                        edges.push((id, inside, outside));
                    }
                }
            }
        }
        if kind == WindowKind::Contract {
            match self.ends {
                Ends::Zero => {}
                Ends::One => {
                    extra.insert(RIGHT_END.to_string());
                }
                Ends::Two => {
                    extra.insert(LEFT_END.to_string());
                    extra.insert(RIGHT_END.to_string());
                }
            }
        }
        vertices.extend(extra);
        MultiGraph::new(vertices, edges).expect("window of a valid periodic graph")
    }

    /// Core plus motif copies `-n..=n` (two ends) or `0..n` (one end),
    /// keeping only edges with both endpoints inside.
    pub fn window(&self, n: usize) -> MultiGraph {
        self.build(n, WindowKind::Plain)
    }

    /// `window(n)` plus every edge with exactly one endpoint inside, attached
    /// to its true outside endpoint. Its edge set is the ground set of the
    /// windowed matroids.
    pub fn window_span(&self, n: usize) -> MultiGraph {
        self.build(n, WindowKind::Span)
    }

    /// `window(n)` plus one vertex per end (`end:L`, `end:R`); edges leaving
    /// the window towards an end are attached to that end's vertex.
    pub fn window_contract(&self, n: usize) -> MultiGraph {
        self.build(n, WindowKind::Contract)
    }

    /// 2-connectivity, decided on contracted windows of size 3 and 4.
    pub fn is_two_connected(&self) -> bool {
        match self.ends {
            Ends::Zero => self.core.is_two_connected(),
            _ => self.window_contract(3).is_two_connected() && self.window_contract(4).is_two_connected(),
        }
    }

    pub fn has_loops(&self) -> bool {
        self.core.has_loops() || self.motif.graph.has_loops()
    }

    /// Members of `x` among the edges of a window graph built from `self`.
    pub fn restrict(&self, x: &PeriodicEdgeSet, window: &MultiGraph) -> ElementSet {
        window
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| x.contains(&e.id))
            .map(|(i, _)| i)
            .collect()
    }

    fn default_window(&self, x: &PeriodicEdgeSet) -> usize {
        (x.extent() + 2 + self.motif.graph.vertex_count() as i64) as usize
    }

    /// `|V[x] ∩ V[y]|` where `y` is the complement of `x`.
    ///
    /// The boundary is infinite exactly when a vertex of a copy beyond the
    /// explicit region is a boundary vertex: such a copy sees only the tail
    /// pattern, so the same happens in every further copy.
    pub fn boundary(&self, x: &PeriodicEdgeSet) -> Cardinality {
        self.boundary_at(x, 0)
    }

    /// [`Self::boundary`] evaluated on a window of size at least `min_window`.
    pub fn boundary_at(&self, x: &PeriodicEdgeSet, min_window: usize) -> Cardinality {
        if self.ends == Ends::Zero {
            let xs = self.restrict(x, &self.core);
            return self.core.boundary_size(xs).into();
        }
        let n = ((x.extent() + 3) as usize).max(min_window);
        let span = self.window_span(n);
        let inner = self.copies(n);
        let xs = self.restrict(x, &span);
        let mut count = 0;
        for v in span.boundary(xs) {
            let id = span.vertex_id(v);
            match split_copy_id(id) {
                None => count += 1,
                Some((_, j)) if inner.contains(&j) => {
                    let tail = j > x.hi || (self.ends == Ends::Two && j < x.lo - 1);
                    if tail {
                        return Cardinality::Infinite;
                    }
                    count += 1;
                }
                // pendant endpoints of span edges lie outside the window
                Some(_) => {}
            }
        }
        Cardinality::Finite(count)
    }

    /// `c(x)`: components of `(V[x], x)`, counted on windows `n`, `n+1`,
    /// `n+2` with `n` at least `min_window` and large enough to cover the
    /// explicit region plus a motif's worth of copies on each side. Equal
    /// counts give the value; a constant positive growth means infinitely
    /// many components.
    pub fn component_count(&self, x: &PeriodicEdgeSet, min_window: usize) -> Result<Cardinality> {
        if self.ends == Ends::Zero {
            let xs = self.restrict(x, &self.core);
            return Ok(self.core.component_count(xs).into());
        }
        let n = self.default_window(x).max(min_window);
        let counts: Vec<usize> = (n..n + 3)
            .map(|m| {
                let w = self.window(m);
                w.component_count(self.restrict(x, &w))
            })
            .collect();
        if counts[0] == counts[1] && counts[1] == counts[2] {
            Ok(Cardinality::Finite(counts[0]))
        } else if counts[1] > counts[0] && counts[2] - counts[1] == counts[1] - counts[0] && !x.is_cofinite() {
            Ok(Cardinality::Infinite)
        } else {
            Err(Error::Internal(format!(
                "component count of {} did not stabilize: {:?} on windows {}..{}",
                x.describe(),
                counts,
                n,
                n + 2
            )))
        }
    }

    /// All edge ids of the core and of copies `lo..=hi`.
    fn region_edges(&self, lo: i64, hi: i64) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = if self.ends == Ends::Two {
            BTreeSet::new()
        } else {
            self.core.edge_ids().into_iter().collect()
        };
        for i in lo..=hi {
            if self.copy_exists(i) {
                out.extend(self.motif_edges().iter().map(|e| format!("{e}@{i}")));
            }
        }
        out
    }
}

/// A possibly infinite edge set of a periodic graph, given by explicit
/// membership on the core and copies `lo..=hi`, and by the set of motif
/// edges it contains in every copy beyond that region, per end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicEdgeSet {
    lo: i64,
    hi: i64,
    explicit: BTreeSet<String>,
    left_tail: BTreeSet<String>,
    right_tail: BTreeSet<String>,
    label: String,
    motif_size: usize,
    two_ended: bool,
}

impl PeriodicEdgeSet {
    /// A finite edge set given by ids.
    pub fn finite<S: AsRef<str>>(gp: &PeriodicGraph, ids: &[S]) -> Result<Self> {
        let mut explicit = BTreeSet::new();
        let (mut lo, mut hi) = (i64::MAX, i64::MIN);
        for id in ids {
            let id = id.as_ref();
            if !gp.has_edge(id) {
                return Err(input(format!("unknown edge id {id}")));
            }
            if let Some((_, i)) = split_copy_id(id) {
                lo = lo.min(i);
                hi = hi.max(i);
            }
            explicit.insert(id.to_string());
        }
        if lo > hi {
            (lo, hi) = (0, -1);
        }
        // a one-ended graph has no left tail, so the region must reach copy 0
        if gp.ends == Ends::One {
            lo = 0;
        }
        let label = explicit.iter().cloned().collect::<Vec<_>>().join(",");
        Ok(PeriodicEdgeSet {
            lo,
            hi,
            explicit,
            left_tail: BTreeSet::new(),
            right_tail: BTreeSet::new(),
            label,
            motif_size: gp.motif.graph.edge_count(),
            two_ended: gp.ends == Ends::Two,
        })
    }

    /// Every copy of the listed motif edges.
    pub fn all_copies<S: AsRef<str>>(gp: &PeriodicGraph, motif_edges: &[S]) -> Result<Self> {
        let mut tail = BTreeSet::new();
        for m in motif_edges {
            let m = m.as_ref();
            if gp.motif.graph.edge_index(m).is_none() {
                return Err(input(format!("unknown motif edge {m}")));
            }
            tail.insert(m.to_string());
        }
        let left_tail = if gp.ends == Ends::Two { tail.clone() } else { BTreeSet::new() };
        let label = format!("all:{}", tail.iter().cloned().collect::<Vec<_>>().join(","));
        Ok(PeriodicEdgeSet {
            lo: 0,
            hi: -1,
            explicit: BTreeSet::new(),
            left_tail,
            right_tail: tail,
            label,
            motif_size: gp.motif.graph.edge_count(),
            two_ended: gp.ends == Ends::Two,
        })
    }

    /// The core and every edge of copies `< n`.
    pub fn left_half(gp: &PeriodicGraph, n: i64) -> Result<Self> {
        let label = format!("left-half:{n}");
        match gp.ends {
            Ends::Zero => Err(input("left-half needs a periodic graph with ends")),
            Ends::One => {
                if n < 0 {
                    return Err(input("left-half index must be non-negative on a one-ended graph"));
                }
                Ok(PeriodicEdgeSet {
                    lo: 0,
                    hi: n - 1,
                    explicit: gp.region_edges(0, n - 1),
                    left_tail: BTreeSet::new(),
                    right_tail: BTreeSet::new(),
                    label,
                    motif_size: gp.motif.graph.edge_count(),
                    two_ended: false,
                })
            }
            Ends::Two => Ok(PeriodicEdgeSet {
                lo: n,
                hi: n - 1,
                explicit: BTreeSet::new(),
                left_tail: gp.motif_edges().into_iter().collect(),
                right_tail: BTreeSet::new(),
                label,
                motif_size: gp.motif.graph.edge_count(),
                two_ended: true,
            }),
        }
    }

    /// `left_half(n)` plus the listed motif edges of copy `n`.
    pub fn left_half_plus<S: AsRef<str>>(gp: &PeriodicGraph, n: i64, extra: &[S]) -> Result<Self> {
        let mut s = PeriodicEdgeSet::left_half(gp, n)?;
        if extra.is_empty() {
            return Ok(s);
        }
        if !gp.copy_exists(n) {
            return Err(input(format!("copy {n} does not exist")));
        }
        let mut names = Vec::new();
        for m in extra {
            let m = m.as_ref();
            if gp.motif.graph.edge_index(m).is_none() {
                return Err(input(format!("unknown motif edge {m}")));
            }
            s.explicit.insert(format!("{m}@{n}"));
            names.push(m.to_string());
        }
        s.lo = s.lo.min(n);
        s.hi = n;
        s.label = format!("left-half:{n}+{}@{n}", names.join(","));
        Ok(s)
    }

    /// Every edge of copies `>= n`.
    pub fn right_half(gp: &PeriodicGraph, n: i64) -> Result<Self> {
        let mut s = PeriodicEdgeSet::left_half(gp, n)?.complement(gp);
        s.label = format!("right-half:{n}");
        Ok(s)
    }

    /// Parses a side specification: a comma-separated id list, a motif class
    /// name (`rungs`), `all:<motif edges>`, `left-half:N` or `right-half:N`.
    pub fn parse(gp: &PeriodicGraph, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(n) = spec.strip_prefix("left-half:") {
            let n = n.parse().map_err(|_| input(format!("bad index in {spec}")))?;
            return PeriodicEdgeSet::left_half(gp, n);
        }
        if let Some(n) = spec.strip_prefix("right-half:") {
            let n = n.parse().map_err(|_| input(format!("bad index in {spec}")))?;
            return PeriodicEdgeSet::right_half(gp, n);
        }
        if let Some(list) = spec.strip_prefix("all:") {
            let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            return PeriodicEdgeSet::all_copies(gp, &names);
        }
        if let Some(members) = gp.motif.classes.get(spec) {
            let mut s = PeriodicEdgeSet::all_copies(gp, members)?;
            s.label = spec.to_string();
            return Ok(s);
        }
        let ids: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        PeriodicEdgeSet::finite(gp, &ids)
    }

    pub fn contains(&self, id: &str) -> bool {
        match split_copy_id(id) {
            Some((name, i)) if i < self.lo => self.left_tail.contains(name),
            Some((name, i)) if i > self.hi => self.right_tail.contains(name),
            _ => self.explicit.contains(id),
        }
    }

    pub fn complement(&self, gp: &PeriodicGraph) -> Self {
        let region = gp.region_edges(self.lo, self.hi);
        let motif: BTreeSet<String> = gp.motif_edges().into_iter().collect();
        let left_tail = if gp.ends == Ends::Two {
            &motif - &self.left_tail
        } else {
            BTreeSet::new()
        };
        PeriodicEdgeSet {
            lo: self.lo,
            hi: self.hi,
            explicit: &region - &self.explicit,
            left_tail,
            right_tail: &motif - &self.right_tail,
            label: format!("complement({})", self.label),
            motif_size: self.motif_size,
            two_ended: self.two_ended,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.left_tail.is_empty() && self.right_tail.is_empty()
    }

    /// Contains every motif edge in every copy beyond the region.
    pub fn is_cofinite(&self) -> bool {
        self.motif_size > 0
            && self.right_tail.len() == self.motif_size
            && (!self.two_ended || self.left_tail.len() == self.motif_size)
    }

    /// The finite members, if the set is finite.
    pub fn finite_members(&self) -> Option<&BTreeSet<String>> {
        self.is_finite().then_some(&self.explicit)
    }

    /// Copy-index reach of the explicit region.
    pub fn extent(&self) -> i64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn describe(&self) -> &str {
        &self.label
    }
}

/// A bipartition of a periodic graph's edges with its boundary size and
/// component counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPartition {
    pub x: PeriodicEdgeSet,
    pub y: PeriodicEdgeSet,
    pub boundary: Cardinality,
    pub cx: Cardinality,
    pub cy: Cardinality,
}

impl PeriodicPartition {
    pub fn new(gp: &PeriodicGraph, x: PeriodicEdgeSet, min_window: usize) -> Result<Self> {
        let y = x.complement(gp);
        Ok(PeriodicPartition {
            boundary: gp.boundary(&x),
            cx: gp.component_count(&x, min_window)?,
            cy: gp.component_count(&y, min_window)?,
            x,
            y,
        })
    }
}
