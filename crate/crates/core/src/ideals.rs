//! Saturated hereditary vertex sets, cofinality, and quotient graphs.
//!
//! `H` is hereditary when every edge with range in `H` has its source in `H`;
//! paths factor into edges, so this is the same as the condition for paths.
//! `H` is saturated when no vertex outside `H` has all of its color-`i` edges
//! sourced in `H`, for any `i`. Iterating that rule gives the closure under
//! "all of `vΛ^n` is sourced in `H`" for every `n`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analysis::infinite::EventuallyPeriodicPath;
use crate::degree::Degree;
use crate::document::GraphDocument;
use crate::error::{Error, Result};
use crate::factorization::{KGraph, Path, SquareSpec};
use crate::skeleton::VertexId;

pub const DEFAULT_MAX_VERTICES: usize = 20;
pub const MAX_VERTICES_VAR: &str = "KGRAPH_MAX_VERTICES";

/// The enumeration limit: `KGRAPH_MAX_VERTICES` if set and valid, else 20.
pub fn enumeration_limit() -> usize {
    std::env::var(MAX_VERTICES_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(g: &KGraph) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(g.vertex_count()),
        }
    }

    pub fn full(g: &KGraph) -> Self {
        let mut s = Self::empty(g);
        s.bits.insert_range(..);
        s
    }

    pub fn from_vertices(g: &KGraph, vs: impl IntoIterator<Item = VertexId>) -> Self {
        let mut s = Self::empty(g);
        for v in vs {
            s.bits.insert(v.index());
        }
        s
    }

    pub fn from_names(g: &KGraph, names: &[&str]) -> Result<Self> {
        let vs = names
            .iter()
            .map(|n| g.vertex(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vertices(g, vs))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.bits.contains(v.index())
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        !self.bits.put(v.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.bits.ones().map(|i| VertexId(i as u32))
    }

    /// Sorted vertex ids, the serialized form.
    pub fn names(&self, g: &KGraph) -> Vec<String> {
        self.vertices().map(|v| g.vertex_name(v).to_string()).collect()
    }
}

/// Lexicographic on the ascending list of members.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.ones().cmp(other.bits.ones())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

pub fn is_hereditary(g: &KGraph, h: &VertexSet) -> bool {
    let sk = g.skeleton();
    sk.edges()
        .iter()
        .all(|e| !h.contains(e.range) || h.contains(e.source))
}

/// Some color `i` with every edge of `vΛ^{e_i}` sourced in `h`.
fn saturates(g: &KGraph, h: &VertexSet, v: VertexId) -> bool {
    let sk = g.skeleton();
    (0..g.rank()).any(|i| sk.edges_into(v, i).iter().all(|&e| h.contains(sk.source(e))))
}

pub fn is_saturated(g: &KGraph, h: &VertexSet) -> bool {
    g.vertices().all(|v| h.contains(v) || !saturates(g, h, v))
}

/// The least saturated hereditary superset of `s`.
pub fn sat_her_closure(g: &KGraph, s: &VertexSet) -> VertexSet {
    let sk = g.skeleton();
    let mut h = s.clone();
    loop {
        let mut changed = false;
        let mut stack: Vec<VertexId> = h.vertices().collect();
        while let Some(v) = stack.pop() {
            for i in 0..g.rank() {
                for &e in sk.edges_into(v, i) {
                    let w = sk.source(e);
                    if h.insert(w) {
                        stack.push(w);
                        changed = true;
                    }
                }
            }
        }
        for v in g.vertices() {
            if !h.contains(v) && saturates(g, &h, v) {
                h.insert(v);
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}

/// Every saturated hereditary set, ordered by size and then lexicographically.
pub fn enumerate_sat_her(g: &KGraph) -> Result<Vec<VertexSet>> {
    enumerate_sat_her_with_limit(g, enumeration_limit())
}

pub fn enumerate_sat_her_with_limit(g: &KGraph, limit: usize) -> Result<Vec<VertexSet>> {
    if g.vertex_count() > limit {
        return Err(Error::TooManyVertices {
            count: g.vertex_count(),
            limit,
        });
    }
    let singletons: BTreeSet<VertexSet> = g
        .vertices()
        .map(|v| sat_her_closure(g, &VertexSet::from_vertices(g, [v])))
        .collect();
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    found.insert(VertexSet::empty(g));
    let mut frontier: Vec<VertexSet> = vec![VertexSet::empty(g)];
    while let Some(h) = frontier.pop() {
        for s in &singletons {
            let joined = sat_her_closure(g, &h.union(s));
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<VertexSet> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cofinality {
    Cofinal,
    /// A saturated hereditary set other than `∅` and `Λ^0`.
    NotCofinal(VertexSet),
}

/// Cofinal exactly when every single vertex closes up to `Λ^0`. Otherwise
/// the certificate is the least proper closure (by size, then members).
pub fn is_cofinal(g: &KGraph) -> Cofinality {
    let full = VertexSet::full(g);
    g.vertices()
        .map(|v| sat_her_closure(g, &VertexSet::from_vertices(g, [v])))
        .filter(|h| *h != full)
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .map_or(Cofinality::Cofinal, Cofinality::NotCofinal)
}

/// Sampling check: every sampled `x` (prefix and cycle degrees at most
/// `depth·1`) and every vertex `v` admit `n <= depth·1` with `vΛx(n)` nonempty.
pub fn cofinality_oracle(g: &KGraph, depth: u32) -> Result<bool> {
    let sk = g.skeleton();
    // reach[v] = { w : vΛw nonempty }
    let reach: Vec<VertexSet> = g
        .vertices()
        .map(|v| {
            let mut seen = VertexSet::from_vertices(g, [v]);
            let mut stack = vec![v];
            while let Some(a) = stack.pop() {
                for i in 0..g.rank() {
                    for &e in sk.edges_into(a, i) {
                        if seen.insert(sk.source(e)) {
                            stack.push(sk.source(e));
                        }
                    }
                }
            }
            seen
        })
        .collect();
    // x(n) for n <= depth·1 only depends on the window x(0, depth·1), and for
    // x = ρ γ^∞ that window is ρ followed by (γ^∞)(0, depth·1 - d(ρ))
    let top = Degree::uniform(g.rank(), depth);
    let zero = Degree::zero(g.rank());
    let cycle_degrees: Vec<Degree> = top
        .below()
        .filter(|d| d.coords().iter().all(|&c| c >= 1))
        .collect();
    let mut tails: HashMap<(VertexId, Degree), BTreeSet<Path>> = HashMap::new();
    for w in g.vertices() {
        for d in &cycle_degrees {
            for c in g.paths_from(w, d).into_iter().filter(|c| c.source() == w) {
                let z = EventuallyPeriodicPath::periodic(g, c)?;
                for q in top.below() {
                    tails.entry((w, q.clone())).or_default().insert(z.segment(g, &zero, &q)?);
                }
            }
        }
    }
    let mut windows: BTreeSet<Path> = BTreeSet::new();
    for v in g.vertices() {
        for pd in top.below() {
            let rest = top.subtract(&pd)?;
            for rho in g.paths_from(v, &pd) {
                if let Some(ts) = tails.get(&(rho.source(), rest.clone())) {
                    for t in ts {
                        windows.insert(g.compose(&rho, t)?);
                    }
                }
            }
        }
    }
    for u in &windows {
        let visited: Vec<VertexId> = top
            .below()
            .map(|n| g.factor(u, &n).map(|(head, _)| head.source()))
            .collect::<Result<_>>()?;
        for r in &reach {
            if !visited.iter().any(|&w| r.contains(w)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The graph on `Λ^0 \ H` with the edges sourced outside `H`.
pub fn quotient(g: &KGraph, h: &VertexSet) -> Result<KGraph> {
    quotient_document(g, h)?.build()
}

pub fn quotient_document(g: &KGraph, h: &VertexSet) -> Result<GraphDocument> {
    if !(is_hereditary(g, h) && is_saturated(g, h)) {
        return Err(Error::NotSaturatedHereditary);
    }
    if h.is_full() {
        return Err(Error::WholeVertexSet);
    }
    let full = GraphDocument::from_graph(g, None);
    let keep_vertex = |name: &str| !h.contains(g.vertex(name).expect("own vertex"));
    let edges: Vec<_> = full
        .edges
        .into_iter()
        .filter(|e| keep_vertex(&e.source))
        .collect();
    let kept: BTreeSet<&str> = edges.iter().map(|e| e.id.as_str()).collect();
    let squares: Vec<SquareSpec> = full
        .squares
        .into_iter()
        .filter(|s| s.pair.iter().chain(&s.image).all(|e| kept.contains(e.as_str())))
        .collect();
    Ok(GraphDocument {
        name: None,
        k: full.k,
        vertices: full.vertices.into_iter().filter(|v| keep_vertex(v)).collect(),
        edges,
        squares,
    })
}

/// `|Λ^n v|` for every vertex, from vertex-matrix products.
pub fn core_dimensions(g: &KGraph, n: &Degree) -> Result<Vec<(VertexId, u64)>> {
    let counts = g.count_matrix(n)?;
    Ok(g.vertices().map(|v| (v, counts.column_sum(v.index()))).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDimension {
    pub vertex: String,
    pub count: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;
    use crate::fixtures;

    fn set(g: &KGraph, names: &[&str]) -> VertexSet {
        VertexSet::from_names(g, names).unwrap()
    }

    #[test]
    fn hereditary_examples() {
        let d = fixtures::disconnected();
        assert!(is_hereditary(&d, &set(&d, &["u"])));
        let t = fixtures::torus();
        assert!(is_hereditary(&t, &set(&t, &[])));
        let d2 = fixtures::bridged();
        assert!(!is_hereditary(&d2, &set(&d2, &["w"])));
        assert!(is_hereditary(&d2, &set(&d2, &["u"])));
        assert!(is_saturated(&d2, &set(&d2, &["u"])));
    }

    #[test]
    fn closure_examples() {
        let t = fixtures::torus();
        assert!(sat_her_closure(&t, &set(&t, &["v"])).is_full());
        let d = fixtures::disconnected();
        assert_eq!(sat_her_closure(&d, &set(&d, &["u"])), set(&d, &["u"]));
        for g in [t, d, fixtures::bridged()] {
            assert!(sat_her_closure(&g, &VertexSet::empty(&g)).is_empty());
        }
        let d2 = fixtures::bridged();
        assert!(sat_her_closure(&d2, &set(&d2, &["w"])).is_full());
    }

    #[test]
    fn enumeration_examples() {
        let t = fixtures::torus();
        assert_eq!(
            enumerate_sat_her(&t).unwrap(),
            vec![set(&t, &[]), set(&t, &["v"])]
        );
        let d = fixtures::disconnected();
        assert_eq!(
            enumerate_sat_her(&d).unwrap(),
            vec![set(&d, &[]), set(&d, &["u"]), set(&d, &["w"]), set(&d, &["u", "w"])]
        );
        let f = fixtures::flip();
        assert_eq!(enumerate_sat_her(&f).unwrap().len(), 2);
        let d2 = fixtures::bridged();
        assert_eq!(
            enumerate_sat_her(&d2).unwrap(),
            vec![set(&d2, &[]), set(&d2, &["u"]), set(&d2, &["u", "w"])]
        );
        assert!(matches!(
            enumerate_sat_her_with_limit(&d, 1),
            Err(Error::TooManyVertices { count: 2, limit: 1 })
        ));
    }

    #[test]
    fn cofinality_examples() {
        assert_eq!(is_cofinal(&fixtures::torus()), Cofinality::Cofinal);
        assert_eq!(is_cofinal(&fixtures::flip()), Cofinality::Cofinal);
        let d = fixtures::disconnected();
        assert_eq!(is_cofinal(&d), Cofinality::NotCofinal(set(&d, &["u"])));
        let d2 = fixtures::bridged();
        assert_eq!(is_cofinal(&d2), Cofinality::NotCofinal(set(&d2, &["u"])));

        assert!(cofinality_oracle(&fixtures::torus(), 2).unwrap());
        assert!(cofinality_oracle(&fixtures::flip(), 2).unwrap());
        assert!(!cofinality_oracle(&d, 2).unwrap());
        assert!(!cofinality_oracle(&d2, 2).unwrap());
    }

    fn oracle_per_sample(g: &KGraph, depth: u32) -> bool {
        let all: Vec<VertexId> = g.vertices().collect();
        let top = Degree::uniform(g.rank(), depth);
        let zero = Degree::zero(g.rank());
        let ok = crate::analysis::infinite::samples(g, &all, depth).all(|x| {
            g.vertices().all(|v| {
                top.below().any(|n| {
                    let w = x.segment(g, &zero, &n).unwrap().source();
                    (0..=g.vertex_count() as u32)
                        .flat_map(|c| Degree::uniform(g.rank(), c).below().collect::<Vec<_>>())
                        .any(|d| g.paths_from(v, &d).iter().any(|p| p.source() == w))
                })
            })
        });
        ok
    }

    #[test]
    fn window_oracle_matches_per_sample() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut graphs: Vec<KGraph> = fixtures::NAMES.iter().map(|n| fixtures::graph(n).unwrap()).collect();
        let cfg = crate::random::RandomGraphConfig {
            max_rank: 2,
            ..Default::default()
        };
        graphs.extend((0..12).map(|_| crate::random::random_graph(&mut rng, &cfg)));
        for g in &graphs {
            assert_eq!(cofinality_oracle(g, 2).unwrap(), oracle_per_sample(g, 2));
        }
    }

    #[test]
    fn quotient_examples() {
        let d = fixtures::disconnected();
        let q = quotient(&d, &set(&d, &["u"])).unwrap();
        let doc = GraphDocument::from_graph(&q, None);
        let mut t2 = fixtures::document("T2").unwrap();
        t2.name = None;
        // T2 with v renamed to w and loops renamed bw, rw
        assert_eq!(doc.vertices, vec!["w"]);
        assert_eq!(doc.edges.len(), t2.edges.len());
        assert_eq!(doc.squares.len(), 1);

        let d2 = fixtures::bridged();
        let q2 = quotient(&d2, &set(&d2, &["u"])).unwrap();
        assert_eq!(GraphDocument::from_graph(&q2, None), doc);

        let same = quotient(&d, &VertexSet::empty(&d)).unwrap();
        assert_eq!(
            GraphDocument::from_graph(&same, Some("D")),
            fixtures::document("D").unwrap()
        );
        let t = fixtures::torus();
        assert!(matches!(
            quotient(&t, &set(&t, &["v"])),
            Err(Error::WholeVertexSet)
        ));
        assert!(matches!(
            quotient(&d2, &set(&d2, &["w"])),
            Err(Error::NotSaturatedHereditary)
        ));
    }

    #[test]
    fn core_dimension_examples() {
        let t = fixtures::torus();
        assert_eq!(core_dimensions(&t, &deg![2, 3]).unwrap()[0].1, 1);
        let f = fixtures::flip();
        assert_eq!(core_dimensions(&f, &deg![2, 0]).unwrap()[0].1, 4);
        assert_eq!(core_dimensions(&f, &deg![1, 1]).unwrap()[0].1, 2);
        let d2 = fixtures::bridged();
        for n in deg![2, 2].below() {
            for (v, c) in core_dimensions(&d2, &n).unwrap() {
                assert_eq!(c as usize, d2.paths_into(v, &n).len());
            }
        }
    }

    #[test]
    fn set_order_is_lexicographic() {
        let d = fixtures::disconnected();
        let mut sets = vec![set(&d, &["w"]), set(&d, &["u", "w"]), set(&d, &[]), set(&d, &["u"])];
        sets.sort();
        assert_eq!(
            sets,
            vec![set(&d, &[]), set(&d, &["u"]), set(&d, &["u", "w"]), set(&d, &["w"])]
        );
    }
}
