//! Small hand-built graphs used throughout the tests and examples.
//!
//! | name | vertices | edges | squares |
//! |------|----------|-------|---------|
//! | `T2` | `v` | `b` (1), `r` (2) | `br = rb` |
//! | `F`  | `v` | `b0`, `b1` (1), `r` (2) | `b0 r = r b1`, `b1 r = r b0` |
//! | `D`  | `u`, `w` | loops `bu`, `ru`, `bw`, `rw` | one per vertex |
//! | `D2` | `u`, `w` | `D` plus `e` (1) and `f` (2) from `u` into `w` | `bw f = rw e`, `e ru = f bu` |
//! | `P2` | `v` | `b0`, `b1` (1), `r0`, `r1` (2) | `bi rj = rj bi` |

use crate::document::GraphDocument;
use crate::factorization::{KGraph, SquareSpec};
use crate::skeleton::EdgeSpec;

pub const NAMES: [&str; 5] = ["T2", "F", "D", "D2", "P2"];

fn doc(name: &str, vertices: &[&str], edges: &[(&str, i64, &str, &str)], squares: &[([&str; 2], [&str; 2])]) -> GraphDocument {
    GraphDocument {
        name: Some(name.to_string()),
        k: 2,
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        edges: edges
            .iter()
            .map(|&(id, c, r, s)| EdgeSpec::new(id, c, r, s))
            .collect(),
        squares: squares
            .iter()
            .map(|&(pair, image)| SquareSpec::new(pair, image))
            .collect(),
    }
}

/// The stored document for a fixture name, with vertices, edges and squares
/// listed in id order.
pub fn document(name: &str) -> Option<GraphDocument> {
    let d = match name {
        "T2" => doc(
            "T2",
            &["v"],
            &[("b", 1, "v", "v"), ("r", 2, "v", "v")],
            &[(["b", "r"], ["r", "b"])],
        ),
        "F" => doc(
            "F",
            &["v"],
            &[("b0", 1, "v", "v"), ("b1", 1, "v", "v"), ("r", 2, "v", "v")],
            &[(["b0", "r"], ["r", "b1"]), (["b1", "r"], ["r", "b0"])],
        ),
        "D" => doc(
            "D",
            &["u", "w"],
            &[
                ("bu", 1, "u", "u"),
                ("bw", 1, "w", "w"),
                ("ru", 2, "u", "u"),
                ("rw", 2, "w", "w"),
            ],
            &[(["bu", "ru"], ["ru", "bu"]), (["bw", "rw"], ["rw", "bw"])],
        ),
        "D2" => doc(
            "D2",
            &["u", "w"],
            &[
                ("bu", 1, "u", "u"),
                ("bw", 1, "w", "w"),
                ("e", 1, "w", "u"),
                ("f", 2, "w", "u"),
                ("ru", 2, "u", "u"),
                ("rw", 2, "w", "w"),
            ],
            &[
                (["bu", "ru"], ["ru", "bu"]),
                (["bw", "f"], ["rw", "e"]),
                (["bw", "rw"], ["rw", "bw"]),
                (["e", "ru"], ["f", "bu"]),
            ],
        ),
        "P2" => doc(
            "P2",
            &["v"],
            &[
                ("b0", 1, "v", "v"),
                ("b1", 1, "v", "v"),
                ("r0", 2, "v", "v"),
                ("r1", 2, "v", "v"),
            ],
            &[
                (["b0", "r0"], ["r0", "b0"]),
                (["b0", "r1"], ["r1", "b0"]),
                (["b1", "r0"], ["r0", "b1"]),
                (["b1", "r1"], ["r1", "b1"]),
            ],
        ),
        _ => return None,
    };
    Some(d)
}

pub fn graph(name: &str) -> Option<KGraph> {
    document(name).map(|d| d.build().expect("fixtures are valid"))
}

pub fn torus() -> KGraph {
    graph("T2").unwrap()
}

pub fn flip() -> KGraph {
    graph("F").unwrap()
}

pub fn disconnected() -> KGraph {
    graph("D").unwrap()
}

pub fn bridged() -> KGraph {
    graph("D2").unwrap()
}

pub fn product() -> KGraph {
    graph("P2").unwrap()
}
