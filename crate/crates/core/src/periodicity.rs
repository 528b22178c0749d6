//! Local periodicity: whether `σ^m(x) = σ^n(x)` for every infinite path `x`
//! with range `v`.
//!
//! The decision runs on pairs of finite tails. For `λ ∈ vΛ^{m∨n}` the two
//! shifted paths `σ^m(λy)` and `σ^n(λy)` are `L y` and `R y` with
//! `L = λ(m, m∨n)` and `R = λ(n, m∨n)`. They agree for every `y` exactly when
//! `L` and `R` have the same range and, for every extension `κ` of degree `s`,
//! `(Lκ)(0, s) = (Rκ)(0, s)` and the residual pair agrees again. The step `s`
//! is positive in every coordinate, so the prefixes compared along any infinite
//! run exhaust both paths. Pairs have fixed degrees, so the reachable pairs
//! form a finite set; when none of them refutes, the shifts agree.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::infinite::{sample_family, EventuallyPeriodicPath};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::factorization::{KGraph, Path, PathDoc};
use crate::skeleton::VertexId;

pub const DEFAULT_MAX_STATES: usize = 1_000_000;

/// A finite path `λ` with `d(λ) >= m∨n` whose two shifted segments
/// `λ(m, m + l)` and `λ(n, n + l)`, `l = d(λ) - m∨n`, differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperiodicityWitness {
    pub vertex: VertexId,
    pub m: Degree,
    pub n: Degree,
    pub lambda: Path,
    pub segment_m: Path,
    pub segment_n: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub vertex: String,
    pub m: Degree,
    pub n: Degree,
    pub lambda: PathDoc,
    pub segment_m: PathDoc,
    pub segment_n: PathDoc,
}

impl AperiodicityWitness {
    /// Builds and re-checks a witness from `λ`.
    pub fn from_path(g: &KGraph, m: &Degree, n: &Degree, lambda: Path) -> Result<Option<Self>> {
        let j = m.join(n)?;
        let l = lambda.degree().subtract(&j)?;
        let segment_m = g.segment(&lambda, m, &m.add(&l)?)?;
        let segment_n = g.segment(&lambda, n, &n.add(&l)?)?;
        if segment_m == segment_n {
            return Ok(None);
        }
        Ok(Some(AperiodicityWitness {
            vertex: lambda.range(),
            m: m.clone(),
            n: n.clone(),
            lambda,
            segment_m,
            segment_n,
        }))
    }

    /// Recomputes both segments from `λ` and confirms they differ.
    pub fn check(&self, g: &KGraph) -> bool {
        self.lambda.range() == self.vertex
            && matches!(
                Self::from_path(g, &self.m, &self.n, self.lambda.clone()),
                Ok(Some(w)) if w == *self
            )
    }

    pub fn to_doc(&self, g: &KGraph) -> WitnessDoc {
        WitnessDoc {
            vertex: g.vertex_name(self.vertex).to_string(),
            m: self.m.clone(),
            n: self.n.clone(),
            lambda: g.path_doc(&self.lambda),
            segment_m: g.path_doc(&self.segment_m),
            segment_n: g.path_doc(&self.segment_n),
        }
    }
}

/// `μ ∈ vΛ^m`, `α ∈ s(μ)Λ^{m∨n - m}` and `ν = (μα)(0, n)`, so that
/// `μαy = ναy` for every infinite `y` at `s(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityTuple {
    pub vertex: VertexId,
    pub m: Degree,
    pub n: Degree,
    pub mu: Path,
    pub alpha: Path,
    pub nu: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleDoc {
    pub vertex: String,
    pub m: Degree,
    pub n: Degree,
    pub mu: PathDoc,
    pub alpha: PathDoc,
    pub nu: PathDoc,
}

impl PeriodicityTuple {
    /// Shape checks: degrees, endpoints, `ν = (μα)(0, n)` and `d(μα) != d(να)`.
    /// Does not re-decide periodicity.
    pub fn check(&self, g: &KGraph) -> bool {
        let shape = || -> Result<bool> {
            let j = self.m.join(&self.n)?;
            let mu_alpha = g.compose(&self.mu, &self.alpha)?;
            let nu_alpha = g.compose(&self.nu, &self.alpha)?;
            Ok(self.mu.range() == self.vertex
                && self.mu.degree() == &self.m
                && self.alpha.degree() == &j.subtract(&self.m)?
                && g.segment(&mu_alpha, &Degree::zero(j.rank()), &self.n)? == self.nu
                && mu_alpha.degree() != nu_alpha.degree())
        };
        shape().unwrap_or(false)
    }

    pub fn mu_alpha(&self, g: &KGraph) -> Result<Path> {
        g.compose(&self.mu, &self.alpha)
    }

    pub fn nu_alpha(&self, g: &KGraph) -> Result<Path> {
        g.compose(&self.nu, &self.alpha)
    }

    /// Checks `μαy = ναy` on the given infinite paths; paths whose range is
    /// not `s(α)` are skipped.
    pub fn holds_on(&self, g: &KGraph, samples: &[EventuallyPeriodicPath]) -> Result<bool> {
        let (ma, na) = (self.mu_alpha(g)?, self.nu_alpha(g)?);
        for y in samples.iter().filter(|y| y.range() == self.alpha.source()) {
            if !y.prepend(g, &ma)?.same_path(g, &y.prepend(g, &na)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_doc(&self, g: &KGraph) -> TupleDoc {
        TupleDoc {
            vertex: g.vertex_name(self.vertex).to_string(),
            m: self.m.clone(),
            n: self.n.clone(),
            mu: g.path_doc(&self.mu),
            alpha: g.path_doc(&self.alpha),
            nu: g.path_doc(&self.nu),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalPeriodicity {
    Periodic,
    Aperiodic(AperiodicityWitness),
}

impl LocalPeriodicity {
    pub fn is_periodic(&self) -> bool {
        matches!(self, LocalPeriodicity::Periodic)
    }
}

enum Origin {
    Root(Path),
    Step(usize, Path),
}

/// Exact decision of `σ^m = σ^n` on `vΛ^∞`, exploring at most
/// [`DEFAULT_MAX_STATES`] tail pairs.
pub fn local_periodicity_at(g: &KGraph, v: VertexId, m: &Degree, n: &Degree) -> Result<LocalPeriodicity> {
    local_periodicity_with_limit(g, v, m, n, DEFAULT_MAX_STATES)
}

pub fn local_periodicity_with_limit(
    g: &KGraph,
    v: VertexId,
    m: &Degree,
    n: &Degree,
    max_states: usize,
) -> Result<LocalPeriodicity> {
    if m.rank() != g.rank() || n.rank() != g.rank() {
        return Err(Error::RankMismatch {
            left: m.rank().max(n.rank()),
            right: g.rank(),
        });
    }
    if m == n {
        return Err(Error::EqualShifts);
    }
    if v.index() >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{}", v.index())));
    }
    let k = g.rank();
    let j = m.join(n)?;
    let step = j
        .subtract(m)?
        .join(&j.subtract(n)?)?
        .join(&Degree::uniform(k, 1))?;
    let zero = Degree::zero(k);

    let inconclusive = |states: usize| Error::Inconclusive {
        vertex: g.vertex_name(v).to_string(),
        m: m.coords().to_vec(),
        n: n.coords().to_vec(),
        states,
    };
    let mut ids: HashMap<(Path, Path), usize> = HashMap::new();
    let mut states: Vec<(Path, Path)> = Vec::new();
    let mut origin: Vec<Origin> = Vec::new();
    let mut queue = VecDeque::new();

    let witness = |origin: &[Origin], mut at: usize, last: Option<Path>| -> Result<LocalPeriodicity> {
        let mut steps: Vec<Path> = last.into_iter().collect();
        let root = loop {
            match &origin[at] {
                Origin::Root(lambda) => break lambda.clone(),
                Origin::Step(parent, kappa) => {
                    steps.push(kappa.clone());
                    at = *parent;
                }
            }
        };
        let lambda = g.compose_all(&root, steps.iter().rev())?;
        let w = AperiodicityWitness::from_path(g, m, n, lambda)?
            .expect("a refuting run yields differing segments");
        Ok(LocalPeriodicity::Aperiodic(w))
    };

    for lambda in g.paths_from(v, &j) {
        let left = g.segment(&lambda, m, &j)?;
        let right = g.segment(&lambda, n, &j)?;
        if left.range() != right.range() {
            origin.push(Origin::Root(lambda));
            return witness(&origin, origin.len() - 1, None);
        }
        let key = (left, right);
        if !ids.contains_key(&key) {
            if states.len() >= max_states {
                return Err(inconclusive(states.len()));
            }
            ids.insert(key.clone(), states.len());
            queue.push_back(states.len());
            states.push(key);
            origin.push(Origin::Root(lambda));
        }
    }

    while let Some(id) = queue.pop_front() {
        let (left, right) = states[id].clone();
        for kappa in g.paths_from(left.source(), &step) {
            let lk = g.compose(&left, &kappa)?;
            let rk = g.compose(&right, &kappa)?;
            let (lp, lr) = g.factor(&lk, &step)?;
            let (rp, rr) = g.factor(&rk, &step)?;
            if lp != rp {
                return witness(&origin, id, Some(kappa));
            }
            debug_assert_eq!(g.segment(&lk, &zero, &step)?, lp);
            let key = (lr, rr);
            if !ids.contains_key(&key) {
                if states.len() >= max_states {
                    return Err(inconclusive(states.len()));
                }
                ids.insert(key.clone(), states.len());
                queue.push_back(states.len());
                states.push(key);
                origin.push(Origin::Step(id, kappa));
            }
        }
    }
    Ok(LocalPeriodicity::Periodic)
}

/// The least `μ ∈ vΛ^m`, least `α ∈ s(μ)Λ^{m∨n - m}` and `ν = (μα)(0, n)`,
/// provided the triple is periodic.
pub fn periodicity_tuple(g: &KGraph, v: VertexId, m: &Degree, n: &Degree) -> Result<PeriodicityTuple> {
    match local_periodicity_at(g, v, m, n)? {
        LocalPeriodicity::Periodic => tuple_unchecked(g, v, m, n),
        LocalPeriodicity::Aperiodic(_) => Err(Error::NotPeriodic {
            vertex: g.vertex_name(v).to_string(),
            m: m.coords().to_vec(),
            n: n.coords().to_vec(),
        }),
    }
}

fn tuple_unchecked(g: &KGraph, v: VertexId, m: &Degree, n: &Degree) -> Result<PeriodicityTuple> {
    let j = m.join(n)?;
    let mu = g
        .paths_from(v, m)
        .into_iter()
        .next()
        .expect("no sources");
    let alpha = g
        .paths_from(mu.source(), &j.subtract(m)?)
        .into_iter()
        .next()
        .expect("no sources");
    let nu = g.segment(&g.compose(&mu, &alpha)?, &Degree::zero(j.rank()), n)?;
    Ok(PeriodicityTuple {
        vertex: v,
        m: m.clone(),
        n: n.clone(),
        mu,
        alpha,
        nu,
    })
}

/// `|Λ^0| + max_i |Λ^{e_i}|`.
pub fn default_bound(g: &KGraph) -> u32 {
    let sk = g.skeleton();
    let widest = (0..g.rank())
        .map(|i| sk.edge_ids().filter(|&e| sk.color(e) == i).count())
        .max()
        .unwrap_or(0);
    (g.vertex_count() + widest) as u32
}

/// Nonzero `p` with `|p_i| <= bound` whose first nonzero entry is positive,
/// in lexicographic order. `p` and `-p` describe the same question.
pub fn period_vectors(k: usize, bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    let mut out = Vec::new();
    let mut p = vec![-b; k];
    loop {
        if p.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0) {
            out.push(p.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if p[i] < b {
                p[i] += 1;
                for c in p.iter_mut().skip(i + 1) {
                    *c = -b;
                }
                break;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub bound: u32,
    /// Worker threads; `None` or `Some(1)` scans sequentially.
    pub jobs: Option<usize>,
    pub max_states: usize,
}

impl ScanOptions {
    pub fn new(bound: u32) -> Self {
        ScanOptions {
            bound,
            jobs: None,
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    /// The first periodic `(vertex, p)` in scan order.
    Periodic {
        p: Vec<i64>,
        tuple: PeriodicityTuple,
    },
    /// Every scanned `(vertex, p)` refuted, one witness each.
    Aperiodic { witnesses: Vec<AperiodicityWitness> },
    /// No periodic hit, but the first of these checks ran out of states.
    Inconclusive {
        vertex: VertexId,
        p: Vec<i64>,
        states: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub bound: u32,
    pub outcome: ScanOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ScanDoc {
    Periodic {
        bound: u32,
        p: Vec<i64>,
        tuple: TupleDoc,
    },
    AperiodicUpToBound {
        bound: u32,
        witnesses: Vec<WitnessDoc>,
    },
    Inconclusive {
        bound: u32,
        vertex: String,
        p: Vec<i64>,
        states: usize,
    },
}

impl ScanReport {
    pub fn is_periodic(&self) -> bool {
        matches!(self.outcome, ScanOutcome::Periodic { .. })
    }

    pub fn is_aperiodic(&self) -> bool {
        matches!(self.outcome, ScanOutcome::Aperiodic { .. })
    }

    pub fn to_doc(&self, g: &KGraph) -> ScanDoc {
        let bound = self.bound;
        match &self.outcome {
            ScanOutcome::Periodic { p, tuple } => ScanDoc::Periodic {
                bound,
                p: p.clone(),
                tuple: tuple.to_doc(g),
            },
            ScanOutcome::Aperiodic { witnesses } => ScanDoc::AperiodicUpToBound {
                bound,
                witnesses: witnesses.iter().map(|w| w.to_doc(g)).collect(),
            },
            ScanOutcome::Inconclusive { vertex, p, states } => ScanDoc::Inconclusive {
                bound,
                vertex: g.vertex_name(*vertex).to_string(),
                p: p.clone(),
                states: *states,
            },
        }
    }
}

enum Check {
    Periodic,
    Refuted(AperiodicityWitness),
    Inconclusive(usize),
}

fn check_one(g: &KGraph, v: VertexId, p: &[i64], max_states: usize) -> Result<Check> {
    let (m, n) = Degree::positive_part(p)?;
    match local_periodicity_with_limit(g, v, &m, &n, max_states) {
        Ok(LocalPeriodicity::Periodic) => Ok(Check::Periodic),
        Ok(LocalPeriodicity::Aperiodic(w)) => Ok(Check::Refuted(w)),
        Err(Error::Inconclusive { states, .. }) => Ok(Check::Inconclusive(states)),
        Err(e) => Err(e),
    }
}

/// Tests every vertex against every period vector with entries in
/// `[-bound, bound]`, through the pair `(p⁻, p⁺)`. Vertices form the outer
/// loop. The answer never depends on `jobs`.
pub fn scan_aperiodicity(g: &KGraph, options: ScanOptions) -> Result<ScanReport> {
    if options.bound == 0 {
        return Err(Error::ZeroBound);
    }
    let vectors = period_vectors(g.rank(), options.bound);
    let cases: Vec<(VertexId, &Vec<i64>)> = g
        .vertices()
        .flat_map(|v| vectors.iter().map(move |p| (v, p)))
        .collect();

    let results: Vec<Check> = match options.jobs {
        Some(jobs) if jobs > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(|| {
                cases
                    .par_iter()
                    .map(|&(v, p)| check_one(g, v, p, options.max_states))
                    .collect::<Result<Vec<_>>>()
            })?
        }
        _ => {
            let mut out = Vec::with_capacity(cases.len());
            for &(v, p) in &cases {
                let c = check_one(g, v, p, options.max_states)?;
                let stop = matches!(c, Check::Periodic);
                out.push(c);
                if stop {
                    break;
                }
            }
            out
        }
    };

    let mut witnesses = Vec::new();
    let mut inconclusive = None;
    for (&(v, p), check) in cases.iter().zip(results) {
        match check {
            Check::Periodic => {
                let (m, n) = Degree::positive_part(p)?;
                return Ok(ScanReport {
                    bound: options.bound,
                    outcome: ScanOutcome::Periodic {
                        p: p.clone(),
                        tuple: tuple_unchecked(g, v, &m, &n)?,
                    },
                });
            }
            Check::Refuted(w) => witnesses.push(w),
            Check::Inconclusive(states) => {
                inconclusive.get_or_insert((v, p.clone(), states));
            }
        }
    }
    let outcome = match inconclusive {
        Some((vertex, p, states)) => ScanOutcome::Inconclusive { vertex, p, states },
        None => ScanOutcome::Aperiodic { witnesses },
    };
    Ok(ScanReport {
        bound: options.bound,
        outcome,
    })
}

/// Chains witnesses: `λ_1` refutes the first pair at `v`, `λ_2` the second at
/// `s(λ_1)`, and so on. Returns `λ_1 λ_2 … λ_j`.
pub fn aperiodic_prefix(
    g: &KGraph,
    v: VertexId,
    pairs: &[(Degree, Degree)],
    max_states: usize,
) -> Result<Path> {
    let mut eta = g.vertex_path(v);
    for (m, n) in pairs {
        let at = eta.source();
        match local_periodicity_with_limit(g, at, m, n, max_states)? {
            LocalPeriodicity::Aperiodic(w) => eta = g.compose(&eta, &w.lambda)?,
            LocalPeriodicity::Periodic => {
                return Err(Error::PeriodicPair {
                    vertex: g.vertex_name(at).to_string(),
                    m: m.coords().to_vec(),
                    n: n.coords().to_vec(),
                })
            }
        }
    }
    Ok(eta)
}

/// Sampling check: does some eventually periodic `x ∈ vΛ^∞` with prefix and
/// cycle degrees at most `depth·1` satisfy `μx != νx` for all distinct
/// `μ, ν ∈ Λv` with `|d(μ)|, |d(ν)| <= depth`?
pub fn condition_b_oracle(g: &KGraph, v: VertexId, depth: u32) -> Result<bool> {
    let k = g.rank();
    let mut into_v = Vec::new();
    for d in Degree::uniform(k, depth).below() {
        if d.total() <= depth as usize {
            into_v.extend(g.paths_into(v, &d));
        }
    }
    'samples: for x in sample_family(g, &[v], depth) {
        let images = into_v
            .iter()
            .map(|mu| x.prepend(g, mu))
            .collect::<Result<Vec<_>>>()?;
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if images[a].same_path(g, &images[b])? {
                    continue 'samples;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;
    use crate::fixtures;

    fn decide(g: &KGraph, v: &str, m: Degree, n: Degree) -> LocalPeriodicity {
        local_periodicity_at(g, g.vertex(v).unwrap(), &m, &n).unwrap()
    }

    #[test]
    fn torus_is_periodic() {
        let g = fixtures::torus();
        assert!(decide(&g, "v", deg![1, 0], deg![0, 1]).is_periodic());
        assert!(decide(&g, "v", deg![0, 0], deg![2, 1]).is_periodic());
    }

    #[test]
    fn flip_refuted_by_degree_two_witness() {
        let g = fixtures::flip();
        let LocalPeriodicity::Aperiodic(w) = decide(&g, "v", deg![1, 0], deg![0, 1]) else {
            panic!("expected a witness");
        };
        assert!(w.check(&g));
        assert!(w.lambda.degree().leq(&deg![2, 2]).unwrap());
        let LocalPeriodicity::Aperiodic(w) = decide(&g, "v", deg![1, 0], deg![2, 0]) else {
            panic!("expected a witness");
        };
        assert!(w.check(&g));
    }

    #[test]
    fn flip_has_period_two_in_red() {
        // Two red steps flip the blue labels twice.
        let g = fixtures::flip();
        assert!(decide(&g, "v", deg![0, 0], deg![0, 2]).is_periodic());
        assert!(!decide(&g, "v", deg![0, 0], deg![0, 1]).is_periodic());
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = fixtures::torus();
        let v = g.vertex("v").unwrap();
        assert!(matches!(
            local_periodicity_at(&g, v, &deg![1, 0], &deg![1, 0]),
            Err(Error::EqualShifts)
        ));
        assert!(local_periodicity_at(&g, v, &deg![1], &deg![0]).is_err());
        assert!(matches!(
            scan_aperiodicity(&g, ScanOptions::new(0)),
            Err(Error::ZeroBound)
        ));
    }

    #[test]
    fn state_limit_gives_inconclusive() {
        let g = fixtures::torus();
        let v = g.vertex("v").unwrap();
        assert!(matches!(
            local_periodicity_with_limit(&g, v, &deg![1, 0], &deg![0, 1], 0),
            Err(Error::Inconclusive { states: 0, .. })
        ));
        assert!(local_periodicity_with_limit(&g, v, &deg![1, 0], &deg![0, 1], 1)
            .unwrap()
            .is_periodic());
        let report = scan_aperiodicity(
            &g,
            ScanOptions {
                max_states: 0,
                ..ScanOptions::new(1)
            },
        )
        .unwrap();
        assert!(matches!(report.outcome, ScanOutcome::Inconclusive { .. }));
    }

    #[test]
    fn period_vector_order() {
        assert_eq!(period_vectors(1, 2), vec![vec![1], vec![2]]);
        let two = period_vectors(2, 1);
        assert_eq!(
            two,
            vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(period_vectors(3, 2).len(), (125 - 1) / 2);
    }

    #[test]
    fn scan_examples() {
        let t = fixtures::torus();
        let report = scan_aperiodicity(&t, ScanOptions::new(1)).unwrap();
        let ScanOutcome::Periodic { p, tuple } = &report.outcome else {
            panic!("torus is periodic");
        };
        assert_eq!(p, &vec![0, 1]);
        assert!(tuple.check(&t));
        assert!(local_periodicity_at(&t, tuple.vertex, &deg![1, 0], &deg![0, 1])
            .unwrap()
            .is_periodic());

        let d = fixtures::disconnected();
        let report = scan_aperiodicity(&d, ScanOptions::new(1)).unwrap();
        assert!(report.is_periodic());

        let f = fixtures::flip();
        assert!(scan_aperiodicity(&f, ScanOptions::new(1)).unwrap().is_aperiodic());
        let report = scan_aperiodicity(&f, ScanOptions::new(2)).unwrap();
        let ScanOutcome::Periodic { p, .. } = &report.outcome else {
            panic!("flip has a red period of two");
        };
        assert_eq!(p, &vec![0, 2]);

        let p2 = fixtures::product();
        let report = scan_aperiodicity(&p2, ScanOptions::new(2)).unwrap();
        let ScanOutcome::Aperiodic { witnesses } = &report.outcome else {
            panic!("product graph is aperiodic");
        };
        assert_eq!(witnesses.len(), period_vectors(2, 2).len());
        assert!(witnesses.iter().all(|w| w.check(&p2)));
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        for g in [fixtures::torus(), fixtures::flip(), fixtures::product(), fixtures::bridged()] {
            let seq = scan_aperiodicity(&g, ScanOptions::new(2)).unwrap();
            let par = scan_aperiodicity(
                &g,
                ScanOptions {
                    jobs: Some(4),
                    ..ScanOptions::new(2)
                },
            )
            .unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn tuple_examples() {
        let t = fixtures::torus();
        let v = t.vertex("v").unwrap();
        let tup = periodicity_tuple(&t, v, &deg![1, 0], &deg![0, 1]).unwrap();
        assert_eq!(
            (tup.mu.clone(), tup.alpha.clone(), tup.nu.clone()),
            (t.path(&["b"]).unwrap(), t.path(&["r"]).unwrap(), t.path(&["r"]).unwrap())
        );
        let tup = periodicity_tuple(&t, v, &deg![2, 0], &deg![0, 1]).unwrap();
        assert_eq!(tup.mu, t.path(&["b", "b"]).unwrap());
        assert_eq!(tup.alpha, t.path(&["r"]).unwrap());
        assert_eq!(tup.nu, t.path(&["r"]).unwrap());

        let d = fixtures::disconnected();
        let u = d.vertex("u").unwrap();
        let tup = periodicity_tuple(&d, u, &deg![1, 0], &deg![0, 1]).unwrap();
        assert_eq!(tup.mu, d.path(&["bu"]).unwrap());
        assert_eq!(tup.alpha, d.path(&["ru"]).unwrap());
        assert_eq!(tup.nu, d.path(&["ru"]).unwrap());

        let f = fixtures::flip();
        assert!(matches!(
            periodicity_tuple(&f, f.vertex("v").unwrap(), &deg![1, 0], &deg![0, 1]),
            Err(Error::NotPeriodic { .. })
        ));
    }

    #[test]
    fn chained_prefix() {
        let g = fixtures::flip();
        let v = g.vertex("v").unwrap();
        let one = vec![(deg![1, 0], deg![0, 1])];
        let eta = aperiodic_prefix(&g, v, &one, DEFAULT_MAX_STATES).unwrap();
        let LocalPeriodicity::Aperiodic(w) = decide(&g, "v", deg![1, 0], deg![0, 1]) else {
            panic!()
        };
        assert_eq!(eta, w.lambda);

        let two = vec![(deg![1, 0], deg![0, 1]), (deg![2, 0], deg![0, 2])];
        let eta2 = aperiodic_prefix(&g, v, &two, DEFAULT_MAX_STATES).unwrap();
        let LocalPeriodicity::Aperiodic(w2) = local_periodicity_at(&g, eta.source(), &deg![2, 0], &deg![0, 2]).unwrap() else {
            panic!()
        };
        assert_eq!(eta2.degree(), &w.lambda.degree().add(w2.lambda.degree()).unwrap());

        assert!(aperiodic_prefix(&g, v, &[], DEFAULT_MAX_STATES).unwrap().is_vertex());
        assert!(matches!(
            aperiodic_prefix(&g, v, &[(deg![0, 0], deg![0, 2])], DEFAULT_MAX_STATES),
            Err(Error::PeriodicPair { .. })
        ));
    }

    #[test]
    fn condition_b_examples() {
        let t = fixtures::torus();
        assert!(!condition_b_oracle(&t, t.vertex("v").unwrap(), 2).unwrap());
        let d = fixtures::disconnected();
        assert!(!condition_b_oracle(&d, d.vertex("u").unwrap(), 2).unwrap());
        let p = fixtures::product();
        assert!(condition_b_oracle(&p, p.vertex("v").unwrap(), 2).unwrap());
        // rr·x = x for every x in the flip graph.
        let f = fixtures::flip();
        assert!(!condition_b_oracle(&f, f.vertex("v").unwrap(), 2).unwrap());
    }
}
