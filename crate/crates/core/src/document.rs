//! The JSON interchange format for graphs.

use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{resolve_squares, validate_cubes, KGraph, SquareSpec};
use crate::skeleton::{self, EdgeSpec, Skeleton};
use crate::validation::ValidationReport;

/// `{ "k": 2, "vertices": [...], "edges": [...], "squares": [...] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    #[serde(default)]
    pub squares: Vec<SquareSpec>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &FsPath) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Every violation, in the order skeleton, squares, cubes. Later stages
    /// only run once the earlier ones pass.
    pub fn validate(&self) -> ValidationReport {
        let report = skeleton::validate(self.k, &self.vertices, &self.edges);
        if !report.is_valid() {
            return report;
        }
        let sk = Skeleton::new(self.k, &self.vertices, &self.edges).expect("validated");
        let (table, report) = resolve_squares(&sk, &self.squares);
        if !report.is_valid() {
            return report;
        }
        validate_cubes(&sk, &table)
    }

    pub fn build(&self) -> Result<KGraph> {
        KGraph::new(
            Skeleton::new(self.k, &self.vertices, &self.edges)?,
            &self.squares,
        )
    }

    /// The document of an existing graph, with vertices, edges and squares in
    /// id order.
    pub fn from_graph(g: &KGraph, name: Option<&str>) -> Self {
        let (vertices, edges) = g.skeleton().to_specs();
        GraphDocument {
            name: name.map(str::to_string),
            k: g.rank(),
            vertices,
            edges,
            squares: g.square_specs(),
        }
    }
}

impl std::str::FromStr for GraphDocument {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::validation::Violation;

    #[test]
    fn json_roundtrip() {
        for name in fixtures::NAMES {
            let doc = fixtures::document(name).unwrap();
            let back: GraphDocument = doc.to_json().parse().unwrap();
            assert_eq!(back, doc);
            let g = back.build().unwrap();
            assert_eq!(GraphDocument::from_graph(&g, Some(name)), doc);
        }
    }

    #[test]
    fn squares_default_to_empty() {
        let doc = GraphDocument::from_json(
            r#"{"k": 1, "vertices": ["v"], "edges": [{"id": "e", "color": 1, "range": "v", "source": "v"}]}"#,
        )
        .unwrap();
        assert!(doc.validate().is_valid());
        assert_eq!(doc.build().unwrap().vertex_count(), 1);
    }

    #[test]
    fn staged_validation() {
        let mut doc = fixtures::document("T2").unwrap();
        doc.squares.clear();
        assert!(matches!(
            doc.validate().violations[..],
            [Violation::MissingSquare { .. }, Violation::UncoveredImage { .. }]
        ));
        doc.edges.pop();
        assert!(matches!(
            doc.validate().violations[..],
            [Violation::MissingColor { .. }]
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = GraphDocument::from_json("{\"k\": 2,\n \"vertices\": 3}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
