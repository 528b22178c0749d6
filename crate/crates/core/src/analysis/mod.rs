//! Simplicity, gauge invariance of all ideals, and the combined report.
//!
//! The algebra is simple exactly when the graph is cofinal and has no local
//! periodicity. Every ideal is gauge-invariant exactly when no quotient by a
//! saturated hereditary set is locally periodic. Periodicity is only scanned
//! up to a bound, and every verdict that relies on the scan says so.

pub mod infinite;
pub mod representation;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::factorization::KGraph;
use crate::ideals::{self, is_cofinal, Cofinality, VertexSet};
use crate::periodicity::{
    local_periodicity_at, scan_aperiodicity, PeriodicityTuple, ScanDoc, ScanOptions, ScanOutcome,
    ScanReport, TupleDoc,
};

pub use infinite::EventuallyPeriodicPath;
pub use representation::{rep_apply, rep_apply_adjoint, verify_annihilation, BasisImage, RepElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotSimpleReason {
    NotCofinal(VertexSet),
    LocallyPeriodic { p: Vec<i64>, tuple: PeriodicityTuple },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    /// Cofinal, and aperiodic for every period vector within the bound.
    SimpleUpToBound,
    NotSimple(NotSimpleReason),
    /// Cofinal, no period found, but some check ran out of states.
    InconclusiveAtBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub bound: u32,
    pub verdict: Simplicity,
    /// The scan, when it ran.
    pub scan: Option<ScanReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CofinalityDoc {
    Cofinal,
    NotCofinal { set: Vec<String> },
}

pub fn cofinality_doc(g: &KGraph, c: &Cofinality) -> CofinalityDoc {
    match c {
        Cofinality::Cofinal => CofinalityDoc::Cofinal,
        Cofinality::NotCofinal(h) => CofinalityDoc::NotCofinal { set: h.names(g) },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SimplicityDoc {
    SimpleUpToBound {
        bound: u32,
    },
    NotSimple {
        bound: u32,
        #[serde(flatten)]
        reason: ReasonDoc,
    },
    InconclusiveAtBound {
        bound: u32,
        scan: ScanDoc,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ReasonDoc {
    NotCofinal { set: Vec<String> },
    LocallyPeriodic { p: Vec<i64>, tuple: TupleDoc },
}

impl SimplicityReport {
    pub fn to_doc(&self, g: &KGraph) -> SimplicityDoc {
        let bound = self.bound;
        match &self.verdict {
            Simplicity::SimpleUpToBound => SimplicityDoc::SimpleUpToBound { bound },
            Simplicity::NotSimple(NotSimpleReason::NotCofinal(h)) => SimplicityDoc::NotSimple {
                bound,
                reason: ReasonDoc::NotCofinal { set: h.names(g) },
            },
            Simplicity::NotSimple(NotSimpleReason::LocallyPeriodic { p, tuple }) => {
                SimplicityDoc::NotSimple {
                    bound,
                    reason: ReasonDoc::LocallyPeriodic {
                        p: p.clone(),
                        tuple: tuple.to_doc(g),
                    },
                }
            }
            Simplicity::InconclusiveAtBound => SimplicityDoc::InconclusiveAtBound {
                bound,
                scan: self.scan.as_ref().expect("scan ran").to_doc(g),
            },
        }
    }

    /// Re-checks the certificate behind a negative verdict without reusing the
    /// procedure's intermediate state.
    pub fn certificate_holds(&self, g: &KGraph) -> bool {
        match &self.verdict {
            Simplicity::NotSimple(NotSimpleReason::NotCofinal(h)) => {
                !h.is_empty()
                    && !h.is_full()
                    && ideals::is_hereditary(g, h)
                    && ideals::is_saturated(g, h)
            }
            Simplicity::NotSimple(NotSimpleReason::LocallyPeriodic { tuple, .. }) => {
                tuple.check(g)
                    && matches!(
                        local_periodicity_at(g, tuple.vertex, &tuple.m, &tuple.n),
                        Ok(l) if l.is_periodic()
                    )
            }
            Simplicity::SimpleUpToBound => {
                is_cofinal(g) == Cofinality::Cofinal
                    && self.scan.as_ref().is_some_and(|s| match &s.outcome {
                        ScanOutcome::Aperiodic { witnesses } => witnesses.iter().all(|w| w.check(g)),
                        _ => false,
                    })
            }
            Simplicity::InconclusiveAtBound => true,
        }
    }
}

/// Cofinality first, then the periodicity scan.
pub fn is_simple(g: &KGraph, options: ScanOptions) -> Result<SimplicityReport> {
    let bound = options.bound;
    if let Cofinality::NotCofinal(h) = is_cofinal(g) {
        return Ok(SimplicityReport {
            bound,
            verdict: Simplicity::NotSimple(NotSimpleReason::NotCofinal(h)),
            scan: None,
        });
    }
    let scan = scan_aperiodicity(g, options)?;
    let verdict = match &scan.outcome {
        ScanOutcome::Periodic { p, tuple } => Simplicity::NotSimple(NotSimpleReason::LocallyPeriodic {
            p: p.clone(),
            tuple: tuple.clone(),
        }),
        ScanOutcome::Aperiodic { .. } => Simplicity::SimpleUpToBound,
        ScanOutcome::Inconclusive { .. } => Simplicity::InconclusiveAtBound,
    };
    Ok(SimplicityReport {
        bound,
        verdict,
        scan: Some(scan),
    })
}

/// One proper saturated hereditary set and the scan of its quotient.
#[derive(Debug, Clone)]
pub struct QuotientRow {
    pub set: VertexSet,
    pub quotient: KGraph,
    pub scan: ScanReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeVerdict {
    AllGaugeInvariantUpToBound,
    NotAllGaugeInvariant,
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct GaugeReport {
    pub bound: u32,
    /// In lexicographic order of the sets.
    pub rows: Vec<QuotientRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffenderDoc {
    pub set: Vec<String>,
    pub p: Vec<i64>,
    pub tuple: TupleDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRowDoc {
    pub set: Vec<String>,
    pub scan: ScanDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaugeDoc {
    pub verdict: &'static str,
    pub bound: u32,
    pub offenders: Vec<OffenderDoc>,
    pub quotients: Vec<QuotientRowDoc>,
}

impl GaugeVerdict {
    pub fn label(self) -> &'static str {
        match self {
            GaugeVerdict::AllGaugeInvariantUpToBound => "all_gauge_invariant_up_to_bound",
            GaugeVerdict::NotAllGaugeInvariant => "not_all_gauge_invariant",
            GaugeVerdict::Inconclusive => "inconclusive_at_bound",
        }
    }
}

impl GaugeReport {
    pub fn verdict(&self) -> GaugeVerdict {
        if self.rows.iter().any(|r| r.scan.is_periodic()) {
            GaugeVerdict::NotAllGaugeInvariant
        } else if self.rows.iter().all(|r| r.scan.is_aperiodic()) {
            GaugeVerdict::AllGaugeInvariantUpToBound
        } else {
            GaugeVerdict::Inconclusive
        }
    }

    /// Rows whose quotient is periodic within the bound.
    pub fn offenders(&self) -> impl Iterator<Item = &QuotientRow> {
        self.rows.iter().filter(|r| r.scan.is_periodic())
    }

    pub fn to_doc(&self, g: &KGraph) -> GaugeDoc {
        GaugeDoc {
            verdict: self.verdict().label(),
            bound: self.bound,
            offenders: self
                .offenders()
                .map(|r| {
                    let ScanOutcome::Periodic { p, tuple } = &r.scan.outcome else {
                        unreachable!()
                    };
                    OffenderDoc {
                        set: r.set.names(g),
                        p: p.clone(),
                        tuple: tuple.to_doc(&r.quotient),
                    }
                })
                .collect(),
            quotients: self
                .rows
                .iter()
                .map(|r| QuotientRowDoc {
                    set: r.set.names(g),
                    scan: r.scan.to_doc(&r.quotient),
                })
                .collect(),
        }
    }
}

/// Scans the quotient by every saturated hereditary set other than `Λ^0`.
pub fn all_ideals_gauge_invariant(g: &KGraph, options: ScanOptions) -> Result<GaugeReport> {
    let mut sets: Vec<VertexSet> = ideals::enumerate_sat_her(g)?
        .into_iter()
        .filter(|h| !h.is_full())
        .collect();
    sets.sort();
    let row = |h: VertexSet| -> Result<QuotientRow> {
        let quotient = ideals::quotient(g, &h)?;
        let scan = scan_aperiodicity(&quotient, options)?;
        Ok(QuotientRow {
            set: h,
            quotient,
            scan,
        })
    };
    let rows = match options.jobs {
        Some(jobs) if jobs > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(|| sets.into_par_iter().map(row).collect::<Result<Vec<_>>>())?
        }
        _ => sets.into_iter().map(row).collect::<Result<Vec<_>>>()?,
    };
    Ok(GaugeReport {
        bound: options.bound,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub cofinality_ms: u128,
    pub simplicity_ms: u128,
    pub quotients_ms: u128,
}

/// Everything at once, as one JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph: Option<String>,
    pub bound: u32,
    pub cofinality: CofinalityDoc,
    pub aperiodicity: Option<ScanDoc>,
    pub simplicity: SimplicityDoc,
    pub quotients: GaugeDoc,
    pub timing: Timing,
}

pub fn analyze(g: &KGraph, name: Option<&str>, options: ScanOptions) -> Result<AnalysisReport> {
    let t0 = Instant::now();
    let cofinality = cofinality_doc(g, &is_cofinal(g));
    let t1 = Instant::now();
    let simple = is_simple(g, options)?;
    // the aperiodicity scan is reported even when cofinality already failed
    let scan = match &simple.scan {
        Some(s) => s.clone(),
        None => scan_aperiodicity(g, options)?,
    };
    let t2 = Instant::now();
    let gauge = all_ideals_gauge_invariant(g, options)?;
    let t3 = Instant::now();
    Ok(AnalysisReport {
        graph: name.map(str::to_string),
        bound: options.bound,
        cofinality,
        aperiodicity: Some(scan.to_doc(g)),
        simplicity: simple.to_doc(g),
        quotients: gauge.to_doc(g),
        timing: Timing {
            cofinality_ms: (t1 - t0).as_millis(),
            simplicity_ms: (t2 - t1).as_millis(),
            quotients_ms: (t3 - t2).as_millis(),
        },
    })
}

fn show_path(p: &crate::PathDoc) -> String {
    if p.edges.is_empty() {
        p.range.clone()
    } else {
        p.edges.join("·")
    }
}

fn show_set(s: &[String]) -> String {
    format!("{{{}}}", s.join(", "))
}

pub fn render_tuple(t: &TupleDoc) -> String {
    format!(
        "at {} for m = {}, n = {}: mu = {}, alpha = {}, nu = {}",
        t.vertex,
        t.m,
        t.n,
        show_path(&t.mu),
        show_path(&t.alpha),
        show_path(&t.nu)
    )
}

pub fn render_cofinality(c: &CofinalityDoc) -> String {
    match c {
        CofinalityDoc::Cofinal => "cofinality: cofinal".to_string(),
        CofinalityDoc::NotCofinal { set } => {
            format!("cofinality: not cofinal, saturated hereditary set {}", show_set(set))
        }
    }
}

pub fn render_scan(s: &ScanDoc) -> String {
    match s {
        ScanDoc::Periodic { bound, p, tuple } => format!(
            "aperiodicity: locally periodic (bound {bound}), p = {p:?}, {}",
            render_tuple(tuple)
        ),
        ScanDoc::AperiodicUpToBound { bound, witnesses } => format!(
            "aperiodicity: aperiodic up to bound {bound} ({} witnesses)",
            witnesses.len()
        ),
        ScanDoc::Inconclusive {
            bound,
            vertex,
            p,
            states,
        } => format!(
            "aperiodicity: inconclusive at bound {bound}, {vertex} p = {p:?} after {states} states"
        ),
    }
}

pub fn render_simplicity(s: &SimplicityDoc) -> String {
    match s {
        SimplicityDoc::SimpleUpToBound { bound } => format!("simplicity: Simple (up to bound {bound})"),
        SimplicityDoc::NotSimple { bound, reason } => match reason {
            ReasonDoc::NotCofinal { set } => format!(
                "simplicity: not simple (bound {bound}), not cofinal: {}",
                show_set(set)
            ),
            ReasonDoc::LocallyPeriodic { p, tuple } => format!(
                "simplicity: not simple (bound {bound}), locally periodic p = {p:?} {}",
                render_tuple(tuple)
            ),
        },
        SimplicityDoc::InconclusiveAtBound { bound, .. } => {
            format!("simplicity: inconclusive at bound {bound}")
        }
    }
}

pub fn render_gauge(gd: &GaugeDoc) -> String {
    let mut out = String::new();
    let _ = write!(out, "gauge invariance: {} (bound {})", gd.verdict, gd.bound);
    for o in &gd.offenders {
        let _ = write!(
            out,
            "\n  offender {}: p = {:?} {}",
            show_set(&o.set),
            o.p,
            render_tuple(&o.tuple)
        );
    }
    for q in &gd.quotients {
        let _ = write!(out, "\n  quotient by {}: {}", show_set(&q.set), render_scan(&q.scan));
    }
    out
}

/// Plain-text mirror of the JSON report, one line per field.
pub fn render_report(r: &AnalysisReport) -> String {
    let mut lines = vec![
        format!("graph: {}", r.graph.as_deref().unwrap_or("-")),
        format!("bound: {}", r.bound),
        render_cofinality(&r.cofinality),
    ];
    if let Some(s) = &r.aperiodicity {
        lines.push(render_scan(s));
    }
    lines.push(render_simplicity(&r.simplicity));
    lines.push(render_gauge(&r.quotients));
    lines.push(format!(
        "timing: cofinality {} ms, simplicity {} ms, quotients {} ms",
        r.timing.cofinality_ms, r.timing.simplicity_ms, r.timing.quotients_ms
    ));
    lines.join("\n")
}
