//! Structured validation failures shared by the skeleton, square and cube checks.

use std::fmt;

use serde::Serialize;

/// One reason a graph document fails to present a row-finite k-graph with no sources.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ZeroRank,
    DuplicateVertex { vertex: String },
    DuplicateEdge { edge: String },
    BadColor { edge: String, color: i64 },
    DanglingEndpoint { edge: String, endpoint: &'static str, vertex: String },
    /// `vertex` is the range of no edge of `color`, so `vΛ^{e_color}` is empty.
    MissingColor { vertex: String, color: usize },
    UnknownSquareEdge { edge: String },
    SquareColors { pair: [String; 2], image: [String; 2] },
    PairNotComposable { pair: [String; 2] },
    ImageNotComposable { image: [String; 2] },
    EndpointMismatch { pair: [String; 2], image: [String; 2] },
    DuplicateSquare { pair: [String; 2] },
    MissingSquare { pair: [String; 2] },
    NotInjective { image: [String; 2], pairs: Vec<[String; 2]> },
    UncoveredImage { image: [String; 2] },
    CubeViolation {
        path: [String; 3],
        left: [String; 3],
        right: [String; 3],
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroRank => write!(f, "rank k must be at least 1"),
            Violation::DuplicateVertex { vertex } => write!(f, "duplicate vertex `{vertex}`"),
            Violation::DuplicateEdge { edge } => write!(f, "duplicate edge `{edge}`"),
            Violation::BadColor { edge, color } => {
                write!(f, "edge `{edge}` has color {color} outside 1..=k")
            }
            Violation::DanglingEndpoint {
                edge,
                endpoint,
                vertex,
            } => write!(f, "edge `{edge}` has unknown {endpoint} `{vertex}`"),
            Violation::MissingColor { vertex, color } => {
                write!(f, "vertex `{vertex}` receives no edge of color {color}")
            }
            Violation::UnknownSquareEdge { edge } => {
                write!(f, "square refers to unknown edge `{edge}`")
            }
            Violation::SquareColors { pair, image } => write!(
                f,
                "square {pair:?} -> {image:?} does not map an (i, j) pair to a (j, i) pair with i < j"
            ),
            Violation::PairNotComposable { pair } => {
                write!(f, "square pair {pair:?} is not composable")
            }
            Violation::ImageNotComposable { image } => {
                write!(f, "square image {image:?} is not composable")
            }
            Violation::EndpointMismatch { pair, image } => {
                write!(f, "square {pair:?} -> {image:?} changes range or source")
            }
            Violation::DuplicateSquare { pair } => {
                write!(f, "square pair {pair:?} listed more than once")
            }
            Violation::MissingSquare { pair } => {
                write!(f, "no square listed for composable pair {pair:?}")
            }
            Violation::NotInjective { image, pairs } => {
                write!(f, "square image {image:?} is hit by several pairs {pairs:?}")
            }
            Violation::UncoveredImage { image } => {
                write!(f, "composable pair {image:?} is the image of no square")
            }
            Violation::CubeViolation { path, left, right } => write!(
                f,
                "cube condition fails on {path:?}: the two swap orders give {left:?} and {right:?}"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub(crate) fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "- {v}")?;
        }
        Ok(())
    }
}
