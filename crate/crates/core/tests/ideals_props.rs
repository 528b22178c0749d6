mod common;

use kgraph::ideals::{
    enumerate_sat_her, is_cofinal, is_hereditary, is_saturated, quotient, quotient_document, sat_her_closure,
    Cofinality, VertexSet,
};
use kgraph::random::{random_graph, RandomGraphConfig};
use kgraph::{fixtures, Degree, KGraph, VertexId};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_from_seed(seed: u64) -> KGraph {
    let cfg = RandomGraphConfig {
        max_vertices: 3,
        ..RandomGraphConfig::default()
    };
    random_graph(&mut ChaCha8Rng::seed_from_u64(seed), &cfg)
}

fn all_subsets(g: &KGraph) -> Vec<VertexSet> {
    let vs: Vec<VertexId> = g.vertices().collect();
    (0u32..1 << vs.len())
        .map(|mask| VertexSet::from_vertices(g, vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v)))
        .collect()
}

/// Hereditary over all paths of degree at most `(2,…,2)`.
fn hereditary_by_paths(g: &KGraph, h: &VertexSet) -> bool {
    g.vertices().filter(|&v| h.contains(v)).all(|v| {
        Degree::uniform(g.rank(), 2)
            .below()
            .all(|n| g.paths_from(v, &n).iter().all(|p| h.contains(p.source())))
    })
}

/// The `∃n` form of saturation with `n` up to `(2,…,2)`.
fn saturated_directly(g: &KGraph, h: &VertexSet) -> bool {
    g.vertices().filter(|&v| !h.contains(v)).all(|v| {
        Degree::uniform(g.rank(), 2)
            .below()
            .all(|n| !g.paths_from(v, &n).iter().all(|p| h.contains(p.source())))
    })
}

fn check_graph(g: &KGraph) -> Result<(), TestCaseError> {
    let subsets = all_subsets(g);
    let mut fixpoints = Vec::new();
    for s in &subsets {
        let c = sat_her_closure(g, s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(sat_her_closure(g, &c), c.clone());
        prop_assert!(is_hereditary(g, &c) && is_saturated(g, &c));
        prop_assert_eq!(is_hereditary(g, s), hereditary_by_paths(g, s));
        if is_hereditary(g, s) {
            prop_assert_eq!(is_saturated(g, s), saturated_directly(g, s));
        }
        for t in &subsets {
            if s.is_subset(t) {
                prop_assert!(c.is_subset(&sat_her_closure(g, t)));
            }
        }
        if c == *s {
            fixpoints.push(s.clone());
        }
        prop_assert_eq!(c == *s, is_hereditary(g, s) && is_saturated(g, s));
    }
    let mut listed = enumerate_sat_her(g).unwrap();
    listed.sort();
    fixpoints.sort();
    prop_assert_eq!(&listed, &fixpoints);
    for h in listed.iter().filter(|h| !h.is_full()) {
        let doc = quotient_document(g, h).unwrap();
        prop_assert!(doc.validate().is_valid());
        prop_assert_eq!(quotient(g, h).unwrap().vertex_count(), g.vertex_count() - h.len());
    }
    let proper = listed.iter().any(|h| !h.is_empty() && !h.is_full());
    prop_assert_eq!(is_cofinal(g) == Cofinality::Cofinal, !proper);
    Ok(())
}

#[test]
fn fixture_lattices() {
    for name in fixtures::NAMES {
        check_graph(&fixtures::graph(name).unwrap()).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_laws(seed: u64) {
        check_graph(&graph_from_seed(seed))?;
    }
}

#[test]
fn quotient_rejects_bad_sets() {
    let d2 = fixtures::bridged();
    let w = VertexSet::from_names(&d2, &["w"]).unwrap();
    assert!(quotient(&d2, &w).is_err());
    assert!(quotient(&d2, &VertexSet::full(&d2)).is_err());
    let u = VertexSet::from_names(&d2, &["u"]).unwrap();
    let q = quotient(&d2, &u).unwrap();
    let t2 = fixtures::torus();
    assert_eq!(q.rank(), t2.rank());
    assert_eq!(q.vertex_count(), 1);
    assert_eq!(q.skeleton().edge_count(), t2.skeleton().edge_count());
}
