//! Random small k-graphs for property tests and examples.
//!
//! Skeletons are drawn first and kept only if their vertex matrices commute;
//! squares are then random bijections between the two sets of two-colored
//! paths with the same range and source. For `k = 3` the cube condition is
//! checked and the squares redrawn on failure.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::document::GraphDocument;
use crate::factorization::{resolve_squares, validate_cubes, KGraph, SquareSpec};
use crate::skeleton::{EdgeId, EdgeSpec, Skeleton};

#[derive(Debug, Clone, Copy)]
pub struct RandomGraphConfig {
    pub max_rank: usize,
    pub max_vertices: usize,
    pub max_edges_per_color: usize,
    /// Square redraws per skeleton before a new skeleton is drawn.
    pub square_attempts: usize,
}

impl Default for RandomGraphConfig {
    fn default() -> Self {
        RandomGraphConfig {
            max_rank: 3,
            max_vertices: 3,
            max_edges_per_color: 3,
            square_attempts: 50,
        }
    }
}

const COLOR_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn random_skeleton<R: Rng>(rng: &mut R, cfg: &RandomGraphConfig) -> (usize, Vec<String>, Vec<EdgeSpec>) {
    let k = rng.gen_range(1..=cfg.max_rank);
    let nv = rng.gen_range(1..=cfg.max_vertices.min(cfg.max_edges_per_color));
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for (color, letter) in COLOR_NAMES.iter().enumerate().take(k) {
        let count = rng.gen_range(nv..=cfg.max_edges_per_color);
        for i in 0..count {
            // every vertex receives each color at least once
            let range = if i < nv { i } else { rng.gen_range(0..nv) };
            let source = rng.gen_range(0..nv);
            edges.push(EdgeSpec::new(
                &format!("{letter}{i}"),
                color as i64 + 1,
                &vertices[range],
                &vertices[source],
            ));
        }
    }
    (k, vertices, edges)
}

fn matrices_commute(sk: &Skeleton) -> bool {
    let ms = sk.vertex_matrices();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if ms[i].mul(&ms[j]).ok() != ms[j].mul(&ms[i]).ok() {
                return false;
            }
        }
    }
    true
}

fn random_squares<R: Rng>(rng: &mut R, sk: &Skeleton) -> Vec<SquareSpec> {
    let name = |e: EdgeId| sk.edge(e).id.clone();
    let mut out = Vec::new();
    for i in 0..sk.rank() {
        for j in i + 1..sk.rank() {
            // (range, source) -> pairs in each color order
            let mut blocks: BTreeMap<(usize, usize), (Vec<[EdgeId; 2]>, Vec<[EdgeId; 2]>)> = BTreeMap::new();
            for (first, second, slot) in [(i, j, 0), (j, i, 1)] {
                for f in sk.edge_ids().filter(|&f| sk.color(f) == first) {
                    for &g in sk.edges_into(sk.source(f), second) {
                        let key = (sk.range(f).index(), sk.source(g).index());
                        let entry = blocks.entry(key).or_default();
                        if slot == 0 {
                            entry.0.push([f, g]);
                        } else {
                            entry.1.push([f, g]);
                        }
                    }
                }
            }
            for (pairs, mut images) in blocks.into_values() {
                debug_assert_eq!(pairs.len(), images.len());
                images.shuffle(rng);
                for (p, im) in pairs.into_iter().zip(images) {
                    out.push(SquareSpec {
                        pair: p.map(name),
                        image: im.map(name),
                    });
                }
            }
        }
    }
    out
}

/// A random valid graph document within the configured size.
pub fn random_document<R: Rng>(rng: &mut R, cfg: &RandomGraphConfig) -> GraphDocument {
    loop {
        let (k, vertices, edges) = random_skeleton(rng, cfg);
        let sk = Skeleton::new(k, &vertices, &edges).expect("generated skeletons are valid");
        if !matrices_commute(&sk) {
            continue;
        }
        for _ in 0..cfg.square_attempts.max(1) {
            let squares = random_squares(rng, &sk);
            let (table, report) = resolve_squares(&sk, &squares);
            debug_assert!(report.is_valid(), "{report}");
            if validate_cubes(&sk, &table).is_valid() {
                return GraphDocument {
                    name: None,
                    k,
                    vertices,
                    edges,
                    squares,
                };
            }
        }
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, cfg: &RandomGraphConfig) -> KGraph {
    random_document(rng, cfg)
        .build()
        .expect("generated documents are valid")
}
