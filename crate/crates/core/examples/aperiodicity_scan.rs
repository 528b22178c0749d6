//! Scan every vertex and period vector up to a bound, sequentially and on a
//! thread pool.

use kgraph::analysis::render_scan;
use kgraph::fixtures;
use kgraph::periodicity::{default_bound, scan_aperiodicity, ScanOptions};

fn main() -> kgraph::Result<()> {
    for name in fixtures::NAMES {
        let g = fixtures::graph(name).unwrap();
        let report = scan_aperiodicity(&g, ScanOptions::new(2))?;
        println!("{name}: {}", render_scan(&report.to_doc(&g)));
    }

    let g = fixtures::product();
    let opts = ScanOptions {
        jobs: Some(4),
        ..ScanOptions::new(default_bound(&g))
    };
    let parallel = scan_aperiodicity(&g, opts)?;
    println!("P2 at default bound {}: aperiodic = {}", opts.bound, parallel.is_aperiodic());
    Ok(())
}
