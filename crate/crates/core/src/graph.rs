//! Finite multigraphs with stable edge identifiers.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::cardinality::Cardinality;
use crate::error::{check_capacity, input, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

/// An undirected multigraph. Parallel edges and loops are allowed.
///
/// Vertices and edges are kept sorted by identifier, so index order is
/// lexicographic id order. Edge sets are [`ElementSet`]s over edge indices,
/// which caps a graph at [`MAX_ELEMENTS`] edges.
#[derive(Clone, Debug)]
pub struct MultiGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl MultiGraph {
    pub fn new<V, S, E, I, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (I, A, B)>,
        I: Into<String>,
        A: Into<String>,
        B: Into<String>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        if names.len() != before {
            return Err(input("duplicate vertex id"));
        }
        let vertex_index: HashMap<String, usize> =
            names.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

        let mut raw: Vec<(String, String, String)> = edges
            .into_iter()
            .map(|(i, a, b)| (i.into(), a.into(), b.into()))
            .collect();
        raw.sort();
        check_capacity("graph edge set", raw.len(), MAX_ELEMENTS)?;
        let mut edges = Vec::with_capacity(raw.len());
        for (id, a, b) in raw {
            if edges.last().is_some_and(|e: &Edge| e.id == id) {
                return Err(input(format!("duplicate edge id {id}")));
            }
            let lookup = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| input(format!("edge {id} uses unknown vertex {v}")))
            };
            let (u, v) = (lookup(&a)?, lookup(&b)?);
            edges.push(Edge { id, u, v });
        }
        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        Ok(MultiGraph {
            vertices: names,
            edges,
            vertex_index,
            edge_index,
        })
    }

    /// Builds a graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<E, I, A, B>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (I, A, B)>,
        I: Into<String>,
        A: Into<String>,
        B: Into<String>,
    {
        let raw: Vec<(String, String, String)> = edges
            .into_iter()
            .map(|(i, a, b)| (i.into(), a.into(), b.into()))
            .collect();
        let vertices: BTreeSet<String> = raw
            .iter()
            .flat_map(|(_, a, b)| [a.clone(), b.clone()])
            .collect();
        MultiGraph::new(vertices, raw)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn all_edges(&self) -> ElementSet {
        ElementSet::full(self.edges.len())
    }

    pub fn edge_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<ElementSet> {
        ids.iter()
            .map(|id| {
                let id = id.as_ref();
                self.edge_index(id)
                    .ok_or_else(|| input(format!("unknown edge id {id}")))
            })
            .collect()
    }

    pub fn edge_names(&self, x: ElementSet) -> Vec<String> {
        x.iter().map(|e| self.edges[e].id.clone()).collect()
    }

    pub fn vertex_names<I: IntoIterator<Item = usize>>(&self, vs: I) -> Vec<String> {
        vs.into_iter().map(|v| self.vertices[v].clone()).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// `V[x]`: the vertices incident with an edge of `x`.
    pub fn incident_vertex_set(&self, x: ElementSet) -> BTreeSet<usize> {
        x.iter()
            .flat_map(|e| [self.edges[e].u, self.edges[e].v])
            .collect()
    }

    fn incidence_mask(&self, x: ElementSet) -> Vec<bool> {
        let mut mark = vec![false; self.vertices.len()];
        for e in x {
            mark[self.edges[e].u] = true;
            mark[self.edges[e].v] = true;
        }
        mark
    }

    /// `V[x] ∩ V[E∖x]`.
    pub fn boundary(&self, x: ElementSet) -> BTreeSet<usize> {
        let y = self.all_edges() - x;
        let (mx, my) = (self.incidence_mask(x), self.incidence_mask(y));
        (0..self.vertices.len()).filter(|&v| mx[v] && my[v]).collect()
    }

    pub fn boundary_size(&self, x: ElementSet) -> usize {
        let y = self.all_edges() - x;
        let (mx, my) = (self.incidence_mask(x), self.incidence_mask(y));
        mx.iter().zip(&my).filter(|(a, b)| **a && **b).count()
    }

    /// `c(x)`: the number of components of `(V[x], x)`.
    pub fn component_count(&self, x: ElementSet) -> usize {
        let mut ds = DisjointSets::new(self.vertices.len());
        let mut merges = 0;
        for e in x {
            if ds.union(self.edges[e].u, self.edges[e].v) {
                merges += 1;
            }
        }
        self.incidence_mask(x).iter().filter(|m| **m).count() - merges
    }

    /// Edge sets of the components of `(V[x], x)`, ordered by smallest edge.
    pub fn components(&self, x: ElementSet) -> Vec<ElementSet> {
        let mut ds = DisjointSets::new(self.vertices.len());
        for e in x {
            ds.union(self.edges[e].u, self.edges[e].v);
        }
        let mut by_root: Vec<(usize, ElementSet)> = Vec::new();
        for e in x {
            let r = ds.find(self.edges[e].u);
            match by_root.iter_mut().find(|(root, _)| *root == r) {
                Some((_, s)) => s.insert(e),
                None => by_root.push((r, ElementSet::singleton(e))),
            }
        }
        by_root.into_iter().map(|(_, s)| s).collect()
    }

    /// Component label for every vertex of the spanning subgraph `(V, x)`,
    /// with the number of components (isolated vertices included).
    pub fn vertex_components(&self, x: ElementSet) -> (Vec<usize>, usize) {
        let mut ds = DisjointSets::new(self.vertices.len());
        for e in x {
            ds.union(self.edges[e].u, self.edges[e].v);
        }
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        for v in 0..self.vertices.len() {
            let r = ds.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[v] = label[r];
        }
        (label, next)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_components(self.all_edges()).1 <= 1
    }

    /// True iff `x` contains no cycle (a loop counts as a cycle).
    pub fn is_acyclic(&self, x: ElementSet) -> bool {
        let mut ds = DisjointSets::new(self.vertices.len());
        x.iter().all(|e| ds.union(self.edges[e].u, self.edges[e].v))
    }

    pub fn degree_in(&self, z: ElementSet, v: usize) -> usize {
        z.iter()
            .map(|e| {
                let edge = &self.edges[e];
                usize::from(edge.u == v) + usize::from(edge.v == v)
            })
            .sum()
    }

    /// Vertex 2-connectivity: at least three vertices, connected, and no
    /// cutvertex. Loops play no role.
    pub fn is_two_connected(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || !self.is_connected() {
            return false;
        }
        (0..n).all(|cut| {
            let mut ds = DisjointSets::new(n);
            for e in &self.edges {
                if e.u != cut && e.v != cut {
                    ds.union(e.u, e.v);
                }
            }
            let root = ds.find(if cut == 0 { 1 } else { 0 });
            (0..n).filter(|&v| v != cut).all(|v| ds.find(v) == root)
        })
    }

    /// Every vertex has even degree in `z`.
    ///
    /// On a finite graph the cuts are generated by vertex stars, so this is
    /// the same as `z` meeting every cut in an even number of edges.
    pub fn cut_parity_check(&self, z: ElementSet) -> bool {
        let mut deg = vec![0usize; self.vertices.len()];
        for e in z {
            deg[self.edges[e].u] += 1;
            deg[self.edges[e].v] += 1;
        }
        deg.iter().all(|d| d % 2 == 0)
    }

    /// `z` is the edge set of a single cycle: nonempty, connected, every
    /// vertex of `V[z]` of degree two (a lone loop qualifies).
    pub fn is_cycle_edge_set(&self, z: ElementSet) -> bool {
        if z.is_empty() || self.component_count(z) != 1 {
            return false;
        }
        self.incident_vertex_set(z)
            .into_iter()
            .all(|v| self.degree_in(z, v) == 2)
    }

    /// `f` is a bond: a minimal nonempty cut.
    pub fn is_bond(&self, f: ElementSet) -> bool {
        if f.is_empty() {
            return false;
        }
        let (_, whole) = self.vertex_components(self.all_edges());
        let (label, split) = self.vertex_components(self.all_edges() - f);
        split == whole + 1
            && f.iter()
                .all(|e| label[self.edges[e].u] != label[self.edges[e].v])
    }

    /// Subgraph on the same vertex set keeping only the edges in `x`.
    pub fn edge_subgraph(&self, x: ElementSet) -> MultiGraph {
        let edges: Vec<Edge> = x.iter().map(|e| self.edges[e].clone()).collect();
        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        MultiGraph {
            vertices: self.vertices.clone(),
            edges,
            vertex_index: self.vertex_index.clone(),
            edge_index,
        }
    }
}

/// A bipartition `(x, y)` of a finite graph's edge set with its boundary
/// and component counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub x: ElementSet,
    pub y: ElementSet,
    pub boundary: BTreeSet<usize>,
    pub cx: Cardinality,
    pub cy: Cardinality,
}

impl EdgePartition {
    pub fn new(g: &MultiGraph, x: ElementSet) -> Result<Self> {
        if !x.is_subset(g.all_edges()) {
            return Err(input("partition side is not a subset of the edge set"));
        }
        let y = g.all_edges() - x;
        Ok(EdgePartition {
            x,
            y,
            boundary: g.boundary(x),
            cx: g.component_count(x).into(),
            cy: g.component_count(y).into(),
        })
    }

    pub fn swapped(&self) -> Self {
        EdgePartition {
            x: self.y,
            y: self.x,
            boundary: self.boundary.clone(),
            cx: self.cy,
            cy: self.cx,
        }
    }

    pub fn boundary_size(&self) -> usize {
        self.boundary.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn names(g: &MultiGraph, vs: BTreeSet<usize>) -> Vec<String> {
        g.vertex_names(vs)
    }

    #[test]
    fn incident_vertex_set_examples() {
        let c4 = corpus::cycle(4);
        let x = c4.edge_set(&["e12"]).unwrap();
        assert_eq!(names(&c4, c4.incident_vertex_set(x)), ["v1", "v2"]);
        assert_eq!(c4.incident_vertex_set(c4.all_edges()).len(), 4);
        assert!(c4.incident_vertex_set(ElementSet::EMPTY).is_empty());

        let k4 = corpus::k4();
        let tri = k4.edge_set(&["e12", "e13", "e23"]).unwrap();
        assert_eq!(names(&k4, k4.incident_vertex_set(tri)), ["v1", "v2", "v3"]);
    }

    #[test]
    fn unknown_edge_is_an_input_error() {
        let c4 = corpus::cycle(4);
        assert!(matches!(c4.edge_set(&["e99"]), Err(crate::Error::Input(_))));
    }

    #[test]
    fn component_count_examples() {
        let c4 = corpus::cycle(4);
        assert_eq!(c4.component_count(c4.edge_set(&["e12", "e34"]).unwrap()), 2);
        let k4 = corpus::k4();
        assert_eq!(k4.component_count(k4.edge_set(&["e12", "e13", "e23"]).unwrap()), 1);
        assert_eq!(k4.component_count(ElementSet::EMPTY), 0);
    }

    #[test]
    fn boundary_examples() {
        let c4 = corpus::cycle(4);
        let x = c4.edge_set(&["e12", "e23"]).unwrap();
        assert_eq!(c4.boundary_size(x), 2);
        assert_eq!(names(&c4, c4.boundary(x)), ["v1", "v3"]);
        assert_eq!(c4.boundary_size(ElementSet::EMPTY), 0);
        let p = EdgePartition::new(&c4, x).unwrap();
        assert_eq!(p.swapped().boundary_size(), 2);
        assert_eq!((p.cx, p.cy), (1.into(), 1.into()));
    }

    #[test]
    fn two_connectivity() {
        assert!(corpus::k4().is_two_connected());
        assert!(!corpus::bowtie().is_two_connected());
        assert!(!corpus::bond(3).is_two_connected());
        assert!(corpus::cycle(3).is_two_connected());
    }

    #[test]
    fn cut_parity_examples() {
        let c4 = corpus::cycle(4);
        assert!(c4.cut_parity_check(c4.all_edges()));
        let k4 = corpus::k4();
        assert!(!k4.cut_parity_check(k4.edge_set(&["e12", "e13", "e14"]).unwrap()));
        assert!(k4.cut_parity_check(k4.edge_set(&["e12", "e13", "e23"]).unwrap()));
    }

    #[test]
    fn loops_and_cycles() {
        let g = MultiGraph::from_edges([("a", "x", "y"), ("l", "y", "y")]).unwrap();
        let l = g.edge_set(&["l"]).unwrap();
        assert!(!g.is_acyclic(l));
        assert!(g.is_cycle_edge_set(l));
        assert!(g.cut_parity_check(l));
        assert_eq!(g.degree_in(l, g.vertex_index("y").unwrap()), 2);
    }

    #[test]
    fn bonds_of_a_triangle_are_pairs() {
        let c3 = corpus::cycle(3);
        for bits in 1u128..8 {
            let f = ElementSet::from_bits(bits);
            assert_eq!(c3.is_bond(f), f.len() == 2, "{f:?}");
        }
    }

    #[test]
    fn construction_errors() {
        assert!(MultiGraph::new(["a"], [("e", "a", "b")]).is_err());
        assert!(MultiGraph::new(["a", "b"], [("e", "a", "b"), ("e", "b", "a")]).is_err());
        assert!(MultiGraph::new(["a", "a"], Vec::<(String, String, String)>::new()).is_err());
    }
}
