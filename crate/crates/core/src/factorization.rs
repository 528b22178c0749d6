//! Commuting squares, the k-graph they present, and unique factorization of paths.
//!
//! A square for colors `i < j` identifies the composable pair `fg` (color `i`
//! then color `j`) with a composable pair `g'f'` (color `j` then color `i`)
//! having the same range and source. Every path has a unique representative
//! whose edges appear in ascending color blocks; that representative is the
//! [`Path`] value, so path equality is sequence equality.
//!
//! Normalization bubbles edges into place with square swaps. For `k >= 3` the
//! cube condition makes the result independent of the swap order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::matrix::CountMatrix;
use crate::skeleton::{EdgeId, Skeleton, VertexId};
use crate::validation::{ValidationReport, Violation};

/// One commuting square as written in a graph document: `pair = (f, g)` with
/// `f` of color `i`, `g` of color `j`, `i < j`, and `image = (g', f')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSpec {
    pub pair: [String; 2],
    pub image: [String; 2],
}

impl SquareSpec {
    pub fn new(pair: [&str; 2], image: [&str; 2]) -> Self {
        SquareSpec {
            pair: pair.map(str::to_string),
            image: image.map(str::to_string),
        }
    }
}

/// The resolved square bijections, stored as a swap table holding both
/// directions: `(f, g) ↦ (g', f')` and `(g', f') ↦ (f, g)`.
#[derive(Debug, Clone, Default)]
pub struct SquareTable {
    swaps: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    forward: Vec<((EdgeId, EdgeId), (EdgeId, EdgeId))>,
}

impl SquareTable {
    /// `(pair, image)` entries with the lower color first in `pair`, sorted.
    pub fn entries(&self) -> &[((EdgeId, EdgeId), (EdgeId, EdgeId))] {
        &self.forward
    }
}

fn pair_names(sk: &Skeleton, a: EdgeId, b: EdgeId) -> [String; 2] {
    [sk.edge(a).id.clone(), sk.edge(b).id.clone()]
}

fn composable(sk: &Skeleton, a: EdgeId, b: EdgeId) -> bool {
    sk.source(a) == sk.range(b)
}

/// Composable edge pairs `(f, g)` with `color(f) = i` and `color(g) = j`.
fn composable_pairs(sk: &Skeleton, i: usize, j: usize) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for f in sk.edge_ids().filter(|&f| sk.color(f) == i) {
        for &g in sk.edges_into(sk.source(f), j) {
            out.push((f, g));
        }
    }
    out
}

/// Resolves square specs against a skeleton and checks that each `θ_{ij}` is
/// a bijection with matching endpoints.
pub fn resolve_squares(sk: &Skeleton, specs: &[SquareSpec]) -> (SquareTable, ValidationReport) {
    let mut report = ValidationReport::default();
    let mut table = SquareTable::default();
    let mut images: HashMap<(EdgeId, EdgeId), Vec<(EdgeId, EdgeId)>> = HashMap::new();

    for spec in specs {
        let lookup = |name: &String, report: &mut ValidationReport| match sk.edge_id(name) {
            Ok(e) => Some(e),
            Err(_) => {
                report.push(Violation::UnknownSquareEdge { edge: name.clone() });
                None
            }
        };
        let ids: Vec<Option<EdgeId>> = spec
            .pair
            .iter()
            .chain(spec.image.iter())
            .map(|n| lookup(n, &mut report))
            .collect();
        let [Some(f), Some(g), Some(g2), Some(f2)] = ids[..] else {
            continue;
        };
        let (ci, cj) = (sk.color(f), sk.color(g));
        if !(ci < cj && sk.color(g2) == cj && sk.color(f2) == ci) {
            report.push(Violation::SquareColors {
                pair: spec.pair.clone(),
                image: spec.image.clone(),
            });
            continue;
        }
        if !composable(sk, f, g) {
            report.push(Violation::PairNotComposable {
                pair: spec.pair.clone(),
            });
            continue;
        }
        if !composable(sk, g2, f2) {
            report.push(Violation::ImageNotComposable {
                image: spec.image.clone(),
            });
            continue;
        }
        if sk.range(g2) != sk.range(f) || sk.source(f2) != sk.source(g) {
            report.push(Violation::EndpointMismatch {
                pair: spec.pair.clone(),
                image: spec.image.clone(),
            });
            continue;
        }
        if table.swaps.contains_key(&(f, g)) {
            report.push(Violation::DuplicateSquare {
                pair: spec.pair.clone(),
            });
            continue;
        }
        table.swaps.insert((f, g), (g2, f2));
        table.forward.push(((f, g), (g2, f2)));
        images.entry((g2, f2)).or_default().push((f, g));
    }

    let k = sk.rank();
    for i in 0..k {
        for j in i + 1..k {
            for (f, g) in composable_pairs(sk, i, j) {
                if !table.swaps.contains_key(&(f, g)) {
                    report.push(Violation::MissingSquare {
                        pair: pair_names(sk, f, g),
                    });
                }
            }
            for (g2, f2) in composable_pairs(sk, j, i) {
                match images.get(&(g2, f2)) {
                    None => report.push(Violation::UncoveredImage {
                        image: pair_names(sk, g2, f2),
                    }),
                    Some(pre) if pre.len() > 1 => {
                        let mut pairs: Vec<_> =
                            pre.iter().map(|&(a, b)| pair_names(sk, a, b)).collect();
                        pairs.sort();
                        report.push(Violation::NotInjective {
                            image: pair_names(sk, g2, f2),
                            pairs,
                        })
                    }
                    Some(pre) => {
                        table.swaps.insert((g2, f2), pre[0]);
                    }
                }
            }
        }
    }
    table.forward.sort();
    (table, report)
}

/// Square validation on its own, for callers that only want the report.
pub fn validate_squares(sk: &Skeleton, specs: &[SquareSpec]) -> ValidationReport {
    resolve_squares(sk, specs).1
}

/// Checks the cube condition: for every composable triple of edges with
/// colors `i < j < l`, reversing the color order by the two possible sequences
/// of three swaps gives the same triple. Assumes the squares are valid.
pub fn validate_cubes(sk: &Skeleton, table: &SquareTable) -> ValidationReport {
    let mut report = ValidationReport::default();
    let swap = |a: EdgeId, b: EdgeId| table.swaps[&(a, b)];
    let k = sk.rank();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for (f, g) in composable_pairs(sk, i, j) {
                    for &h in sk.edges_into(sk.source(g), l) {
                        // (g h), (f h'), (f' g')
                        let (h1, g1) = swap(g, h);
                        let (h2, f1) = swap(f, h1);
                        let (g2, f2) = swap(f1, g1);
                        let left = [h2, g2, f2];
                        // (f g), (f' h), (g' h')
                        let (g1, f1) = swap(f, g);
                        let (h1, f2) = swap(f1, h);
                        let (h2, g2) = swap(g1, h1);
                        let right = [h2, g2, f2];
                        if left != right {
                            let names = |t: [EdgeId; 3]| t.map(|e| sk.edge(e).id.clone());
                            report.push(Violation::CubeViolation {
                                path: names([f, g, h]),
                                left: names(left),
                                right: names(right),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// A finite path in canonical form: edges in ascending color blocks.
///
/// The derived order compares canonical edge sequences lexicographically by
/// edge id, which is the tie-break used for every certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    edges: Vec<EdgeId>,
    range: VertexId,
    source: VertexId,
    degree: Degree,
}

impl Path {
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Document form of a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDoc {
    pub range: String,
    pub edges: Vec<String>,
}

/// Swap schedules used to bring an edge sequence into canonical order. All
/// schedules agree on a valid k-graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapSchedule {
    /// Left-to-right bubble passes repeated until nothing moves.
    Bubble,
    /// Insertion: fill positions left to right, pulling the nearest edge of the
    /// wanted color leftward.
    Insertion,
}

/// A row-finite k-graph with no sources, presented by a validated skeleton and
/// square table that passes the bijectivity and cube checks.
#[derive(Debug, Clone)]
pub struct KGraph {
    skeleton: Skeleton,
    squares: SquareTable,
}

impl KGraph {
    pub fn new(skeleton: Skeleton, specs: &[SquareSpec]) -> Result<Self> {
        let (squares, mut report) = resolve_squares(&skeleton, specs);
        if report.is_valid() {
            report.extend(validate_cubes(&skeleton, &squares));
        }
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report));
        }
        Ok(KGraph { skeleton, squares })
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn squares(&self) -> &SquareTable {
        &self.squares
    }

    pub fn rank(&self) -> usize {
        self.skeleton.rank()
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.skeleton.vertices()
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.skeleton.vertex(name)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.skeleton.vertex_name(v)
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.skeleton.edge(e).id
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.skeleton.color(e)
    }

    pub fn square_specs(&self) -> Vec<SquareSpec> {
        let sk = &self.skeleton;
        self.squares
            .entries()
            .iter()
            .map(|&((f, g), (g2, f2))| SquareSpec {
                pair: pair_names(sk, f, g),
                image: pair_names(sk, g2, f2),
            })
            .collect()
    }

    /// `(y', x')` with `xy = y'x'`, for composable `x, y` of different colors.
    fn swap(&self, x: EdgeId, y: EdgeId) -> (EdgeId, EdgeId) {
        self.squares.swaps[&(x, y)]
    }

    /// Rewrites `edges` (a composable sequence) into the factorization whose
    /// colors read `pattern`. `pattern` must be a rearrangement of the colors
    /// of `edges`.
    fn reorder(&self, edges: &mut [EdgeId], pattern: &[usize]) {
        debug_assert_eq!(edges.len(), pattern.len());
        for pos in 0..edges.len() {
            let want = pattern[pos];
            let q = (pos..edges.len())
                .find(|&q| self.color(edges[q]) == want)
                .expect("pattern must rearrange the edge colors");
            for t in (pos..q).rev() {
                let (a, b) = self.swap(edges[t], edges[t + 1]);
                edges[t] = a;
                edges[t + 1] = b;
            }
        }
    }

    fn bubble(&self, edges: &mut [EdgeId]) {
        loop {
            let mut moved = false;
            for t in 0..edges.len().saturating_sub(1) {
                if self.color(edges[t]) > self.color(edges[t + 1]) {
                    let (a, b) = self.swap(edges[t], edges[t + 1]);
                    edges[t] = a;
                    edges[t + 1] = b;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
    }

    fn degree_of(&self, edges: &[EdgeId]) -> Degree {
        let mut coords = vec![0u32; self.rank()];
        for &e in edges {
            coords[self.color(e)] += 1;
        }
        Degree::new(coords).expect("rank is at least one")
    }

    fn check_composable(&self, edges: &[EdgeId]) -> Result<()> {
        for w in edges.windows(2) {
            if self.skeleton.source(w[0]) != self.skeleton.range(w[1]) {
                return Err(Error::NotComposable {
                    source_vertex: self.vertex_name(self.skeleton.source(w[0])).to_string(),
                    range_vertex: self.vertex_name(self.skeleton.range(w[1])).to_string(),
                });
            }
        }
        Ok(())
    }

    /// Wraps an edge sequence that is already canonical and composable.
    fn canonical_unchecked(&self, edges: Vec<EdgeId>, range: VertexId) -> Path {
        let source = edges.last().map_or(range, |&e| self.skeleton.source(e));
        let degree = self.degree_of(&edges);
        Path {
            edges,
            range,
            source,
            degree,
        }
    }

    /// The degree-0 path at `v`.
    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path {
            edges: Vec::new(),
            range: v,
            source: v,
            degree: Degree::zero(self.rank()),
        }
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        self.canonical_unchecked(vec![e], self.skeleton.range(e))
    }

    /// The path represented by any composable edge sequence, normalized with
    /// the given schedule.
    pub fn path_with_schedule(&self, edges: &[EdgeId], schedule: SwapSchedule) -> Result<Path> {
        assert!(!edges.is_empty(), "use vertex_path for degree-0 paths");
        self.check_composable(edges)?;
        let range = self.skeleton.range(edges[0]);
        let mut work = edges.to_vec();
        match schedule {
            SwapSchedule::Bubble => self.bubble(&mut work),
            SwapSchedule::Insertion => {
                let pattern = self.degree_of(&work).color_pattern();
                self.reorder(&mut work, &pattern);
            }
        }
        Ok(self.canonical_unchecked(work, range))
    }

    pub fn path_from_edges(&self, edges: &[EdgeId]) -> Result<Path> {
        self.path_with_schedule(edges, SwapSchedule::Bubble)
    }

    /// Convenience lookup by edge ids, e.g. `g.path(&["r", "b"])`.
    pub fn path(&self, ids: &[&str]) -> Result<Path> {
        let edges = ids
            .iter()
            .map(|id| self.skeleton.edge_id(id))
            .collect::<Result<Vec<_>>>()?;
        self.path_from_edges(&edges)
    }

    /// `μν`, defined when `s(μ) = r(ν)`.
    pub fn compose(&self, mu: &Path, nu: &Path) -> Result<Path> {
        if mu.source != nu.range {
            return Err(Error::NotComposable {
                source_vertex: self.vertex_name(mu.source).to_string(),
                range_vertex: self.vertex_name(nu.range).to_string(),
            });
        }
        if mu.is_vertex() {
            return Ok(nu.clone());
        }
        if nu.is_vertex() {
            return Ok(mu.clone());
        }
        let mut work = Vec::with_capacity(mu.len() + nu.len());
        work.extend_from_slice(&mu.edges);
        work.extend_from_slice(&nu.edges);
        let degree = mu.degree.add(&nu.degree)?;
        self.reorder(&mut work, &degree.color_pattern());
        Ok(Path {
            edges: work,
            range: mu.range,
            source: nu.source,
            degree,
        })
    }

    pub fn compose_all<'a>(&self, first: &Path, rest: impl IntoIterator<Item = &'a Path>) -> Result<Path> {
        let mut acc = first.clone();
        for p in rest {
            acc = self.compose(&acc, p)?;
        }
        Ok(acc)
    }

    pub fn extend_by_edge(&self, lambda: &Path, e: EdgeId) -> Result<Path> {
        self.compose(lambda, &self.edge_path(e))
    }

    /// Splits `lambda` at the consecutive degree blocks `parts`, which must sum
    /// to `d(lambda)`.
    fn split(&self, lambda: &Path, parts: &[&Degree]) -> Vec<Path> {
        let mut pattern = Vec::with_capacity(lambda.len());
        for p in parts {
            pattern.extend(p.color_pattern());
        }
        let mut work = lambda.edges.clone();
        self.reorder(&mut work, &pattern);
        let mut out = Vec::with_capacity(parts.len());
        let mut at = lambda.range;
        let mut offset = 0;
        for p in parts {
            let len = p.total();
            let piece = work[offset..offset + len].to_vec();
            let path = if piece.is_empty() {
                self.vertex_path(at)
            } else {
                self.canonical_unchecked(piece, at)
            };
            at = path.source;
            offset += len;
            out.push(path);
        }
        out
    }

    /// The unique `(μ, ν)` with `d(μ) = m` and `λ = μν`.
    pub fn factor(&self, lambda: &Path, m: &Degree) -> Result<(Path, Path)> {
        let rest = lambda.degree.subtract(m)?;
        let mut parts = self.split(lambda, &[m, &rest]).into_iter();
        let mu = parts.next().expect("two parts");
        let nu = parts.next().expect("two parts");
        Ok((mu, nu))
    }

    /// `λ(m, n)`, for `0 <= m <= n <= d(λ)`.
    pub fn segment(&self, lambda: &Path, m: &Degree, n: &Degree) -> Result<Path> {
        if m.rank() != self.rank() || n.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: m.rank(),
                right: self.rank(),
            });
        }
        if !m.leq(n)? || !n.leq(&lambda.degree)? {
            return Err(Error::BoundViolation);
        }
        let middle = n.subtract(m)?;
        let tail = lambda.degree.subtract(n)?;
        Ok(self.split(lambda, &[m, &middle, &tail]).swap_remove(1))
    }

    /// `vΛ^n`, in lexicographic order of canonical edge sequences.
    pub fn paths_from(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let pattern = n.color_pattern();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(pattern.len());
        self.extend_forward(v, &pattern, &mut stack, &mut |edges| {
            out.push(edges.to_vec());
        });
        out.into_iter()
            .map(|edges| {
                if edges.is_empty() {
                    self.vertex_path(v)
                } else {
                    Path {
                        source: self.skeleton.source(*edges.last().unwrap()),
                        edges,
                        range: v,
                        degree: n.clone(),
                    }
                }
            })
            .collect()
    }

    fn extend_forward(
        &self,
        at: VertexId,
        pattern: &[usize],
        stack: &mut Vec<EdgeId>,
        emit: &mut dyn FnMut(&[EdgeId]),
    ) {
        let Some((&color, rest)) = pattern.split_first() else {
            emit(stack);
            return;
        };
        for &e in self.skeleton.edges_into(at, color) {
            stack.push(e);
            self.extend_forward(self.skeleton.source(e), rest, stack, emit);
            stack.pop();
        }
    }

    /// `Λ^n v`, in lexicographic order of canonical edge sequences.
    pub fn paths_into(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let mut pattern = n.color_pattern();
        pattern.reverse();
        let mut found: Vec<Vec<EdgeId>> = Vec::new();
        let mut stack = Vec::with_capacity(pattern.len());
        self.extend_backward(v, &pattern, &mut stack, &mut found);
        let mut out: Vec<Path> = found
            .into_iter()
            .map(|mut edges| {
                edges.reverse();
                if edges.is_empty() {
                    self.vertex_path(v)
                } else {
                    Path {
                        range: self.skeleton.range(edges[0]),
                        edges,
                        source: v,
                        degree: n.clone(),
                    }
                }
            })
            .collect();
        out.sort();
        out
    }

    fn extend_backward(
        &self,
        at: VertexId,
        pattern: &[usize],
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let Some((&color, rest)) = pattern.split_first() else {
            out.push(stack.clone());
            return;
        };
        for &e in self.skeleton.edges_out_of(at, color) {
            stack.push(e);
            self.extend_backward(self.skeleton.range(e), rest, stack, out);
            stack.pop();
        }
    }

    /// Matrix whose `(v, w)` entry is `|vΛ^n w|`.
    pub fn count_matrix(&self, n: &Degree) -> Result<CountMatrix> {
        let ms = self.skeleton.vertex_matrices();
        let mut acc = CountMatrix::identity(self.vertex_count());
        for (i, m) in ms.iter().enumerate() {
            acc = acc.mul(&m.pow(n.get(i))?)?;
        }
        Ok(acc)
    }

    pub fn path_doc(&self, p: &Path) -> PathDoc {
        PathDoc {
            range: self.vertex_name(p.range).to_string(),
            edges: p.edges.iter().map(|&e| self.edge_name(e).to_string()).collect(),
        }
    }

    /// Reads a path document. The listed edges may be in any composable order;
    /// the result is canonical.
    pub fn path_from_doc(&self, doc: &PathDoc) -> Result<Path> {
        let range = self.vertex(&doc.range)?;
        if doc.edges.is_empty() {
            return Ok(self.vertex_path(range));
        }
        let ids: Vec<&str> = doc.edges.iter().map(String::as_str).collect();
        let p = self.path(&ids)?;
        if p.range != range {
            return Err(Error::NotComposable {
                source_vertex: doc.range.clone(),
                range_vertex: self.vertex_name(p.range).to_string(),
            });
        }
        Ok(p)
    }

    /// Human-readable form: edge ids joined, or the vertex id for degree 0.
    pub fn show(&self, p: &Path) -> String {
        if p.is_vertex() {
            self.vertex_name(p.range).to_string()
        } else {
            p.edges
                .iter()
                .map(|&e| self.edge_name(e))
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}
