//! The k-colored directed multigraph underlying a k-graph.
//!
//! An edge of color `i` is a path of degree `e_i`. A path runs from its source
//! toward its range, and `μν` is defined when `s(μ) = r(ν)`. No sources means
//! every vertex is the range of at least one edge of every color.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CountMatrix;
use crate::validation::{ValidationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub(crate) u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An edge as it appears in a graph document. Colors are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    pub color: i64,
    pub range: String,
    pub source: String,
}

impl EdgeSpec {
    pub fn new(id: &str, color: i64, range: &str, source: &str) -> Self {
        EdgeSpec {
            id: id.to_string(),
            color,
            range: range.to_string(),
            source: source.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    /// 0-based color, i.e. the coordinate of ℕ^k this edge advances.
    pub color: usize,
    pub range: VertexId,
    pub source: VertexId,
}

/// A validated skeleton. Vertices and edges are stored sorted by id, so index
/// order agrees with the lexicographic order of ids.
#[derive(Debug, Clone)]
pub struct Skeleton {
    k: usize,
    vertices: Vec<String>,
    vertex_lookup: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<String, EdgeId>,
    // indexed by vertex * k + color
    by_range: Vec<Vec<EdgeId>>,
    by_source: Vec<Vec<EdgeId>>,
}

/// Lists every structural problem: duplicate ids, colors outside `1..=k`,
/// dangling endpoints, and vertices that receive no edge of some color.
pub fn validate(k: usize, vertices: &[String], edges: &[EdgeSpec]) -> ValidationReport {
    let mut report = ValidationReport::default();
    if k == 0 {
        report.push(Violation::ZeroRank);
    }
    let mut seen = HashMap::new();
    for v in vertices {
        if seen.insert(v.as_str(), ()).is_some() {
            report.push(Violation::DuplicateVertex { vertex: v.clone() });
        }
    }
    let mut seen_edges = HashMap::new();
    let mut has_color: HashMap<(&str, usize), ()> = HashMap::new();
    for e in edges {
        if seen_edges.insert(e.id.as_str(), ()).is_some() {
            report.push(Violation::DuplicateEdge { edge: e.id.clone() });
        }
        let color_ok = e.color >= 1 && (e.color as u64) <= k as u64;
        if !color_ok {
            report.push(Violation::BadColor {
                edge: e.id.clone(),
                color: e.color,
            });
        }
        for (endpoint, v) in [("range", &e.range), ("source", &e.source)] {
            if !seen.contains_key(v.as_str()) {
                report.push(Violation::DanglingEndpoint {
                    edge: e.id.clone(),
                    endpoint,
                    vertex: v.clone(),
                });
            }
        }
        if color_ok {
            has_color.insert((e.range.as_str(), e.color as usize), ());
        }
    }
    let mut sorted: Vec<&String> = vertices.iter().collect();
    sorted.sort();
    sorted.dedup();
    for v in sorted {
        for color in 1..=k {
            if !has_color.contains_key(&(v.as_str(), color)) {
                report.push(Violation::MissingColor {
                    vertex: v.clone(),
                    color,
                });
            }
        }
    }
    report
}

impl Skeleton {
    /// Validates and indexes a skeleton; any violation is returned as
    /// [`Error::InvalidGraph`].
    pub fn new(k: usize, vertices: &[String], edges: &[EdgeSpec]) -> Result<Self> {
        let report = validate(k, vertices, edges);
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report));
        }
        let mut names = vertices.to_vec();
        names.sort();
        let vertex_lookup: HashMap<String, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId(i as u32)))
            .collect();
        let mut specs: Vec<&EdgeSpec> = edges.iter().collect();
        specs.sort_by(|a, b| a.id.cmp(&b.id));
        let edges: Vec<Edge> = specs
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                color: (e.color - 1) as usize,
                range: vertex_lookup[&e.range],
                source: vertex_lookup[&e.source],
            })
            .collect();
        let edge_lookup = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), EdgeId(i as u32)))
            .collect();
        let mut by_range = vec![Vec::new(); names.len() * k];
        let mut by_source = vec![Vec::new(); names.len() * k];
        for (i, e) in edges.iter().enumerate() {
            by_range[e.range.index() * k + e.color].push(EdgeId(i as u32));
            by_source[e.source.index() * k + e.color].push(EdgeId(i as u32));
        }
        Ok(Skeleton {
            k,
            vertices: names,
            vertex_lookup,
            edges,
            edge_lookup,
            by_range,
            by_source,
        })
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId> {
        self.edge_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.edges[e.index()].color
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].range
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].source
    }

    /// `vΛ^{e_color}`: edges of the given color whose range is `v`.
    pub fn edges_into(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_range[v.index() * self.k + color]
    }

    /// `Λ^{e_color}v`: edges of the given color whose source is `v`.
    pub fn edges_out_of(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_source[v.index() * self.k + color]
    }

    /// `M_i` with `(M_i)_{v,w} = |vΛ^{e_i}w|`, one matrix per color, indexed by
    /// vertex position in id order.
    pub fn vertex_matrices(&self) -> Vec<CountMatrix> {
        let n = self.vertex_count();
        let mut out = vec![CountMatrix::zeros(n); self.k];
        for e in &self.edges {
            out[e.color].increment(e.range.index(), e.source.index());
        }
        out
    }

    /// Back to document form, vertices and edges in id order.
    pub fn to_specs(&self) -> (Vec<String>, Vec<EdgeSpec>) {
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeSpec {
                id: e.id.clone(),
                color: e.color as i64 + 1,
                range: self.vertex_name(e.range).to_string(),
                source: self.vertex_name(e.source).to_string(),
            })
            .collect();
        (self.vertices.clone(), edges)
    }
}
