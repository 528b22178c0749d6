//! Test the quotient by every proper saturated hereditary set for periodicity.

use kgraph::analysis::{all_ideals_gauge_invariant, render_gauge};
use kgraph::fixtures;
use kgraph::ideals::{quotient_document, VertexSet};
use kgraph::periodicity::ScanOptions;

fn main() -> kgraph::Result<()> {
    let g = fixtures::bridged();
    let report = all_ideals_gauge_invariant(&g, ScanOptions::new(2))?;
    println!("{}", render_gauge(&report.to_doc(&g)));

    let u = VertexSet::from_names(&g, &["u"])?;
    println!("quotient by {{u}}:\n{}", quotient_document(&g, &u)?.to_json());
    Ok(())
}
