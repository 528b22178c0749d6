//! Simplicity verdicts with their certificates.

use kgraph::analysis::{is_simple, render_simplicity};
use kgraph::fixtures;
use kgraph::periodicity::ScanOptions;

fn main() -> kgraph::Result<()> {
    for name in fixtures::NAMES {
        let g = fixtures::graph(name).unwrap();
        let report = is_simple(&g, ScanOptions::new(2))?;
        println!("{name}: {}", render_simplicity(&report.to_doc(&g)));
        assert!(report.certificate_holds(&g));
    }
    Ok(())
}
