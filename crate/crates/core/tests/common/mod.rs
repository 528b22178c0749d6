//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use kgraph::random::{random_graph, RandomGraphConfig};
use kgraph::{fixtures, Degree, KGraph, Path, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x6b67_7261_7068;
pub const CORPUS_RANDOM: usize = 50;

/// The four named fixtures followed by the seeded random graphs.
pub fn corpus() -> Vec<(String, KGraph)> {
    let mut out: Vec<(String, KGraph)> = ["T2", "F", "D", "D2"]
        .iter()
        .map(|n| (n.to_string(), fixtures::graph(n).unwrap()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let cfg = RandomGraphConfig::default();
    for i in 0..CORPUS_RANDOM {
        out.push((format!("random-{i}"), random_graph(&mut rng, &cfg)));
    }
    out
}

/// Every degree `d <= top`.
pub fn degrees_below(top: &Degree) -> Vec<Degree> {
    top.below().collect()
}

/// All pairs `(m, n)`, `m != n`, with entries at most `max`.
pub fn shift_pairs(k: usize, max: u32) -> Vec<(Degree, Degree)> {
    let all = degrees_below(&Degree::uniform(k, max));
    let mut out = Vec::new();
    for m in &all {
        for n in &all {
            if m != n {
                out.push((m.clone(), n.clone()));
            }
        }
    }
    out
}

/// `λ(m, m + l)` and `λ(n, n + l)` differ, `l = d(λ) - m∨n`.
pub fn separates(g: &KGraph, lambda: &Path, m: &Degree, n: &Degree) -> bool {
    let j = m.join(n).unwrap();
    let l = lambda.degree().subtract(&j).unwrap();
    g.segment(lambda, m, &m.add(&l).unwrap()).unwrap()
        != g.segment(lambda, n, &n.add(&l).unwrap()).unwrap()
}

/// `|vΛ^d|` from the vertex matrices.
pub fn count_from(g: &KGraph, v: VertexId, d: &Degree) -> u64 {
    g.count_matrix(d).unwrap().row_sum(v.index())
}

/// Literal search over every `λ ∈ vΛ^{m∨n + depth·1}`. A separating path of
/// smaller extra degree extends to one of this degree, so one level suffices.
pub fn literal_witness(g: &KGraph, v: VertexId, m: &Degree, n: &Degree, depth: u32) -> Option<Path> {
    let j = m.join(n).unwrap();
    let top = j.add(&Degree::uniform(g.rank(), depth)).unwrap();
    g.paths_from(v, &top)
        .into_iter()
        .find(|lambda| separates(g, lambda, m, n))
}

/// The same search, organised by unit steps. Every `λ` of degree
/// `m∨n + q` is `μκ` with `d(μ) = m∨n`, and the two compared segments are
/// `(Lκ)(0, q)` and `(Rκ)(0, q)` with `L = μ(m, m∨n)`, `R = μ(n, m∨n)`. Walking
/// `κ` one edge at a time along a fixed chain from `0` to `q` compares those
/// segments one unit piece at a time; identical tail pairs are merged.
pub fn layered_witness(g: &KGraph, v: VertexId, m: &Degree, n: &Degree, depth: u32) -> Option<Path> {
    let k = g.rank();
    let j = m.join(n).unwrap();
    // (L, R) -> path realising it from v
    let mut layer: HashMap<(Path, Path), Path> = HashMap::new();
    for mu in g.paths_from(v, &j) {
        let l = g.segment(&mu, m, &j).unwrap();
        let r = g.segment(&mu, n, &j).unwrap();
        if l.range() != r.range() {
            return Some(mu);
        }
        layer.entry((l, r)).or_insert(mu);
    }
    let sk = g.skeleton();
    let schedule: Vec<usize> = (0..depth).flat_map(|_| 0..k).collect();
    for color in schedule {
        let unit = Degree::unit(k, color);
        let mut next: HashMap<(Path, Path), Path> = HashMap::new();
        let mut keys: Vec<_> = layer.into_iter().collect();
        keys.sort();
        for ((l, r), lambda) in keys {
            for &e in sk.edges_into(l.source(), color) {
                let lambda2 = g.extend_by_edge(&lambda, e).unwrap();
                let le = g.extend_by_edge(&l, e).unwrap();
                let re = g.extend_by_edge(&r, e).unwrap();
                let (lp, lr) = g.factor(&le, &unit).unwrap();
                let (rp, rr) = g.factor(&re, &unit).unwrap();
                if lp != rp {
                    return Some(lambda2);
                }
                next.entry((lr, rr)).or_insert(lambda2);
            }
        }
        layer = next;
    }
    None
}
