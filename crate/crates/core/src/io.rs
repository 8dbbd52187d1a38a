//! JSON file formats and `builtin:<name>` inputs.
//!
//! Graph file:
//!
//! ```json
//! {"vertices": ["v1", "v2"], "edges": [{"id": "e12", "u": "v1", "v": "v2"}],
//!  "faces": [["e12", "e12"]]}
//! ```
//!
//! A periodic graph replaces the top-level vertices and edges by a
//! `periodic` section with `ends` (0, 1 or 2), a `core` graph, the core
//! vertices `attach`ed to the first copy (one end only), and a `motif`
//! graph with `left`/`right` boundary lists and optional edge `classes`.
//! Matroid file: `{"ground": [..], "circuits": [[..], ..]}`.
//! Dual-pair file: `{"g": <graph>, "g_star": <graph>}`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::duality::{planar_dual, DualPair};
use crate::error::{input, Result};
use crate::graph::MultiGraph;
use crate::matroid::Matroid;
use crate::periodic::{Ends, Motif, PeriodicGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: String,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlainGraphJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotifJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub left: Vec<String>,
    pub right: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub classes: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicJson {
    pub ends: u8,
    #[serde(default)]
    pub core: PlainGraphJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub attach: Vec<String>,
    pub motif: Option<MotifJson>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub periodic: Option<PeriodicJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub circuits: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub g: GraphJson,
    pub g_star: GraphJson,
}

/// A loaded graph input.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)] // built once per command
pub enum GraphInput {
    Finite {
        graph: MultiGraph,
        faces: Option<Vec<Vec<String>>>,
    },
    Periodic(PeriodicGraph),
}

impl GraphInput {
    pub fn finite(&self) -> Result<&MultiGraph> {
        match self {
            GraphInput::Finite { graph, .. } => Ok(graph),
            GraphInput::Periodic(_) => Err(input("this operation needs a finite graph")),
        }
    }

    /// Finite graphs become periodic graphs without ends.
    pub fn periodic(&self) -> PeriodicGraph {
        match self {
            GraphInput::Finite { graph, .. } => PeriodicGraph::from_finite(graph.clone()),
            GraphInput::Periodic(gp) => gp.clone(),
        }
    }
}

fn build_plain(vertices: &[String], edges: &[EdgeJson]) -> Result<MultiGraph> {
    let mut all: Vec<String> = vertices.to_vec();
    for e in edges {
        for v in [&e.u, &e.v] {
            if !all.contains(v) {
                if !vertices.is_empty() {
                    return Err(input(format!("edge {} uses undeclared vertex {v}", e.id)));
                }
                all.push(v.clone());
            }
        }
    }
    MultiGraph::new(all, edges.iter().map(|e| (e.id.clone(), e.u.clone(), e.v.clone())))
}

fn plain_json(g: &MultiGraph) -> PlainGraphJson {
    PlainGraphJson {
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                id: e.id.clone(),
                u: g.vertex_id(e.u).to_string(),
                v: g.vertex_id(e.v).to_string(),
            })
            .collect(),
    }
}

impl GraphJson {
    /// Vertices may be omitted, in which case they are read off the edges.
    pub fn into_input(self) -> Result<GraphInput> {
        let Some(p) = self.periodic else {
            return Ok(GraphInput::Finite {
                graph: build_plain(&self.vertices, &self.edges)?,
                faces: self.faces,
            });
        };
        if !self.vertices.is_empty() || !self.edges.is_empty() || self.faces.is_some() {
            return Err(input("a periodic graph keeps its edges in the periodic section"));
        }
        let ends = Ends::try_from(p.ends).map_err(input)?;
        let core = build_plain(&p.core.vertices, &p.core.edges)?;
        let motif = match p.motif {
            Some(m) => Motif::new(build_plain(&m.vertices, &m.edges)?, m.left, m.right, m.classes)?,
            None => Motif::empty(),
        };
        Ok(GraphInput::Periodic(PeriodicGraph::new(core, p.attach, motif, ends)?))
    }

    pub fn from_graph(g: &MultiGraph, faces: Option<Vec<Vec<String>>>) -> Self {
        let plain = plain_json(g);
        GraphJson {
            vertices: plain.vertices,
            edges: plain.edges,
            faces,
            periodic: None,
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| input(format!("cannot parse {what}: {e}")))
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| input(format!("cannot read {path}: {e}")))
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    parse::<GraphJson>(text, "graph file")?.into_input()
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let m: MatroidJson = parse(text, "matroid file")?;
    Matroid::from_circuits(m.ground, &m.circuits)
}

pub fn parse_pair(text: &str) -> Result<DualPair> {
    let p: PairJson = parse(text, "dual-pair file")?;
    let g = p.g.into_input()?.finite()?.clone();
    let g_star = p.g_star.into_input()?.finite()?.clone();
    DualPair::new(g, g_star)
}

fn builtin(spec: &str) -> Option<&str> {
    spec.strip_prefix("builtin:")
}

/// A graph from a file path or `builtin:<name>`.
pub fn load_graph(spec: &str) -> Result<GraphInput> {
    if let Some(name) = builtin(spec) {
        if let Some(gp) = corpus::periodic_by_name(name) {
            return Ok(GraphInput::Periodic(gp));
        }
        return corpus::finite_by_name(name)
            .map(|graph| GraphInput::Finite {
                graph,
                faces: corpus::faces_by_name(name),
            })
            .ok_or_else(|| input(format!("unknown built-in graph {name}")));
    }
    parse_graph(&read(spec)?)
}

/// A matroid from a file or `builtin:u<r>,<n>` (uniform).
pub fn load_matroid(spec: &str) -> Result<Matroid> {
    if let Some(name) = builtin(spec) {
        let (r, n) = name
            .strip_prefix('u')
            .and_then(|rest| rest.split_once(','))
            .and_then(|(r, n)| Some((r.parse().ok()?, n.parse().ok()?)))
            .ok_or_else(|| input(format!("unknown built-in matroid {name}")))?;
        if n > crate::set::MAX_ELEMENTS {
            return Err(input("uniform matroid is too large"));
        }
        return Ok(Matroid::uniform(r, n));
    }
    parse_matroid(&read(spec)?)
}

/// A dual pair from a file, or `builtin:<name>` paired with its planar dual.
pub fn load_pair(spec: &str) -> Result<DualPair> {
    if let Some(name) = builtin(spec) {
        let g = corpus::finite_by_name(name).ok_or_else(|| input(format!("unknown built-in graph {name}")))?;
        let faces = corpus::faces_by_name(name).ok_or_else(|| input(format!("built-in graph {name} has no embedding")))?;
        let d = planar_dual(&g, &faces)?;
        return DualPair::new(g, d);
    }
    parse_pair(&read(spec)?)
}
