//! Eventually periodic infinite paths `x = ρ γ γ γ …`.
//!
//! The loop `γ` is a cycle at `s(ρ)` whose degree is at least 1 in every
//! coordinate, so every segment `x(m, n)` is a segment of a finite unrolling.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::factorization::{KGraph, Path, PathDoc};
use crate::skeleton::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicPath {
    prefix: Path,
    cycle: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventuallyPeriodicDoc {
    pub prefix: PathDoc,
    pub cycle: PathDoc,
}

impl EventuallyPeriodicPath {
    /// Checks the shape and strips trailing copies of `cycle` from `prefix`.
    pub fn new(g: &KGraph, prefix: Path, cycle: Path) -> Result<Self> {
        if cycle.range() != cycle.source() {
            return Err(Error::InvalidInfinitePath("cycle must start and end at one vertex"));
        }
        if prefix.source() != cycle.range() {
            return Err(Error::InvalidInfinitePath("cycle must sit at the source of the prefix"));
        }
        if cycle.degree().coords().contains(&0) {
            return Err(Error::InvalidInfinitePath("cycle degree must be positive in every coordinate"));
        }
        let mut x = EventuallyPeriodicPath { prefix, cycle };
        x.strip(g);
        Ok(x)
    }

    /// `γ^∞` at `s(γ)`.
    pub fn periodic(g: &KGraph, cycle: Path) -> Result<Self> {
        let v = g.vertex_path(cycle.source());
        Self::new(g, v, cycle)
    }

    fn strip(&mut self, g: &KGraph) {
        let d = self.cycle.degree().clone();
        while d.leq(self.prefix.degree()).expect("same rank") {
            let head = self.prefix.degree().subtract(&d).expect("checked");
            let (rest, tail) = g.factor(&self.prefix, &head).expect("checked");
            if tail != self.cycle {
                break;
            }
            self.prefix = rest;
        }
    }

    pub fn prefix(&self) -> &Path {
        &self.prefix
    }

    pub fn cycle(&self) -> &Path {
        &self.cycle
    }

    pub fn range(&self) -> VertexId {
        self.prefix.range()
    }

    /// `ρ γ^t` for the least `t` with `d(ρ γ^t) >= n`.
    pub fn unroll(&self, g: &KGraph, n: &Degree) -> Result<Path> {
        let mut t = 0u32;
        for i in 0..n.rank() {
            let have = self.prefix.degree().get(i);
            let need = n.get(i).saturating_sub(have);
            t = t.max(need.div_ceil(self.cycle.degree().get(i)));
        }
        let mut p = self.prefix.clone();
        for _ in 0..t {
            p = g.compose(&p, &self.cycle)?;
        }
        Ok(p)
    }

    /// `x(m, n)`.
    pub fn segment(&self, g: &KGraph, m: &Degree, n: &Degree) -> Result<Path> {
        if !m.leq(n)? {
            return Err(Error::BoundViolation);
        }
        let p = self.unroll(g, n)?;
        g.segment(&p, m, n)
    }

    /// `σ^p(x)`, normalized.
    pub fn shift(&self, g: &KGraph, p: &Degree) -> Result<Self> {
        let unrolled = self.unroll(g, p)?;
        let (_, tail) = g.factor(&unrolled, p)?;
        Self::new(g, tail, self.cycle.clone())
    }

    /// `μx`, for `s(μ) = r(x)`.
    pub fn prepend(&self, g: &KGraph, mu: &Path) -> Result<Self> {
        Self::new(g, g.compose(mu, &self.prefix)?, self.cycle.clone())
    }

    /// Exact equality of the infinite paths, independent of representation.
    pub fn same_path(&self, g: &KGraph, other: &Self) -> Result<bool> {
        if self.range() != other.range() {
            return Ok(false);
        }
        if self.cycle == other.cycle {
            return same_cycle_equal(g, &self.prefix, &other.prefix, &self.cycle);
        }
        // Past W both paths are rotations of their cycles: σ^W(x_i) = β_i^∞.
        let w = self.prefix.degree().join(other.prefix.degree())?;
        if self.segment(g, &Degree::zero(w.rank()), &w)?
            != other.segment(g, &Degree::zero(w.rank()), &w)?
        {
            return Ok(false);
        }
        let b1 = self.shift(g, &w)?.rotation(g)?;
        let b2 = other.shift(g, &w)?.rotation(g)?;
        // β1^∞ = β2^∞ iff β1^∞ is fixed by σ^{d(β2)} and starts with β2.
        let y = Self::periodic(g, b1)?;
        let d2 = b2.degree().clone();
        if y.segment(g, &Degree::zero(d2.rank()), &d2)? != b2 {
            return Ok(false);
        }
        let shifted = y.shift(g, &d2)?;
        same_cycle_equal(g, &shifted.prefix, &y.prefix, &y.cycle)
    }

    /// `x(0, d(γ))`. This is the `β` with `x = β^∞` whenever `x` is a
    /// rotation of `γ^∞`.
    fn rotation(&self, g: &KGraph) -> Result<Path> {
        let d = self.cycle.degree().clone();
        self.segment(g, &Degree::zero(d.rank()), &d)
    }

    pub fn to_doc(&self, g: &KGraph) -> EventuallyPeriodicDoc {
        EventuallyPeriodicDoc {
            prefix: g.path_doc(&self.prefix),
            cycle: g.path_doc(&self.cycle),
        }
    }

    pub fn from_doc(g: &KGraph, doc: &EventuallyPeriodicDoc) -> Result<Self> {
        Self::new(g, g.path_from_doc(&doc.prefix)?, g.path_from_doc(&doc.cycle)?)
    }
}

/// Decides `p1 γ^∞ = p2 γ^∞` by stepping both through `σ^{d(γ)}`: the
/// sequence of prefix pairs is deterministic over a finite set, so it cycles.
fn same_cycle_equal(g: &KGraph, p1: &Path, p2: &Path, cycle: &Path) -> Result<bool> {
    let d = cycle.degree().clone();
    let zero = Degree::zero(d.rank());
    let mut seen = HashSet::new();
    let (mut a, mut b) = (p1.clone(), p2.clone());
    loop {
        if a == b {
            return Ok(true);
        }
        if !seen.insert((a.clone(), b.clone())) {
            return Ok(true);
        }
        let ag = g.compose(&a, cycle)?;
        let bg = g.compose(&b, cycle)?;
        if g.segment(&ag, &zero, &d)? != g.segment(&bg, &zero, &d)? {
            return Ok(false);
        }
        let da = ag.degree().clone();
        let db = bg.degree().clone();
        a = g.segment(&ag, &d, &da)?;
        b = g.segment(&bg, &d, &db)?;
    }
}

/// Every `ρ γ^∞` with `r(ρ)` in `ranges`, `d(ρ) <= depth·1` and
/// `1 <= d(γ) <= depth·1`, in order of prefix then cycle.
pub fn sample_family(g: &KGraph, ranges: &[VertexId], depth: u32) -> Vec<EventuallyPeriodicPath> {
    samples(g, ranges, depth).collect()
}

/// [`sample_family`] without materialising it.
pub fn samples<'a>(
    g: &'a KGraph,
    ranges: &'a [VertexId],
    depth: u32,
) -> impl Iterator<Item = EventuallyPeriodicPath> + 'a {
    let top = Degree::uniform(g.rank(), depth);
    let cycle_degrees: Vec<Degree> = top
        .below()
        .filter(|d| d.coords().iter().all(|&c| c >= 1))
        .collect();
    let cycles_at: Vec<Vec<Path>> = g
        .vertices()
        .map(|w| {
            cycle_degrees
                .iter()
                .flat_map(|d| g.paths_from(w, d))
                .filter(|c| c.source() == w)
                .collect()
        })
        .collect();
    let prefix_degrees: Vec<Degree> = top.below().collect();
    ranges
        .iter()
        .flat_map(move |&v| {
            prefix_degrees
                .clone()
                .into_iter()
                .flat_map(move |pd| g.paths_from(v, &pd))
        })
        .flat_map(move |rho| {
            let cycles = cycles_at[rho.source().index()].clone();
            cycles.into_iter().map(move |c| {
                EventuallyPeriodicPath::new(g, rho.clone(), c).expect("cycle sits at the prefix source")
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;
    use crate::fixtures;

    #[test]
    fn torus_unique_path() {
        let g = fixtures::torus();
        let v = g.vertex("v").unwrap();
        let x = EventuallyPeriodicPath::periodic(&g, g.path(&["b", "r"]).unwrap()).unwrap();
        assert_eq!(x.range(), v);
        assert_eq!(
            x.segment(&g, &deg![1, 0], &deg![1, 1]).unwrap(),
            g.path(&["r"]).unwrap()
        );
        assert_eq!(x.shift(&g, &deg![0, 0]).unwrap(), x);
        let shifted = x.shift(&g, &deg![3, 1]).unwrap();
        assert_eq!(shifted.prefix(), &g.path(&["r", "r"]).unwrap());
        assert!(shifted.same_path(&g, &x).unwrap());
    }

    #[test]
    fn shift_past_prefix_leaves_cycle() {
        let g = fixtures::flip();
        let rho = g.path(&["b0", "b1", "r"]).unwrap();
        let cycle = g.path(&["b0", "r"]).unwrap();
        let x = EventuallyPeriodicPath::new(&g, rho.clone(), cycle.clone()).unwrap();
        let tail = x.shift(&g, rho.degree()).unwrap();
        assert!(tail.prefix().is_vertex());
        assert_eq!(tail.cycle(), &cycle);
    }

    #[test]
    fn strips_trailing_cycles() {
        let g = fixtures::flip();
        let cycle = g.path(&["b0", "r"]).unwrap();
        let rho = g.compose(&g.path(&["b1"]).unwrap(), &cycle).unwrap();
        let rho = g.compose(&rho, &cycle).unwrap();
        let x = EventuallyPeriodicPath::new(&g, rho, cycle).unwrap();
        assert_eq!(x.prefix(), &g.path(&["b1"]).unwrap());
    }

    #[test]
    fn rejects_bad_cycles() {
        let g = fixtures::flip();
        let v = g.vertex_path(g.vertex("v").unwrap());
        assert!(EventuallyPeriodicPath::new(&g, v.clone(), g.path(&["b0"]).unwrap()).is_err());
        let d = fixtures::disconnected();
        let bu = d.path(&["bu", "ru"]).unwrap();
        let w = d.vertex_path(d.vertex("w").unwrap());
        assert!(EventuallyPeriodicPath::new(&d, w, bu).is_err());
    }

    #[test]
    fn equality_across_representations() {
        let g = fixtures::flip();
        // (b0 r)^∞ written with the doubled cycle.
        let c = g.path(&["b0", "r"]).unwrap();
        let cc = g.compose(&c, &c).unwrap();
        let v = g.vertex_path(g.vertex("v").unwrap());
        let x = EventuallyPeriodicPath::new(&g, v.clone(), c.clone()).unwrap();
        let y = EventuallyPeriodicPath::new(&g, v.clone(), cc).unwrap();
        assert!(x.same_path(&g, &y).unwrap());
        assert!(y.same_path(&g, &x).unwrap());
        let z = EventuallyPeriodicPath::new(&g, v, g.path(&["b1", "r"]).unwrap()).unwrap();
        assert!(!x.same_path(&g, &z).unwrap());
        // rr·x = x in the flip graph.
        let rr = g.path(&["r", "r"]).unwrap();
        assert!(x.prepend(&g, &rr).unwrap().same_path(&g, &x).unwrap());
        let r = g.path(&["r"]).unwrap();
        assert!(!x.prepend(&g, &r).unwrap().same_path(&g, &x).unwrap());
    }

    #[test]
    fn sample_family_counts() {
        let g = fixtures::torus();
        let v = g.vertex("v").unwrap();
        // prefixes: 3x3 degrees; cycles: 2x2 degrees; one path each
        assert_eq!(sample_family(&g, &[v], 2).len(), 9 * 4);
        let d = fixtures::disconnected();
        let u = d.vertex("u").unwrap();
        assert!(sample_family(&d, &[u], 1)
            .iter()
            .all(|x| x.range() == u));
    }
}
