//! Generate small random k-graphs and summarise them.

use kgraph::analysis::{is_simple, render_simplicity};
use kgraph::ideals::enumerate_sat_her;
use kgraph::periodicity::ScanOptions;
use kgraph::random::{random_document, RandomGraphConfig};
use rand::SeedableRng;

fn main() -> kgraph::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let cfg = RandomGraphConfig::default();
    for i in 0..5 {
        let doc = random_document(&mut rng, &cfg);
        let g = doc.build()?;
        let simple = is_simple(&g, ScanOptions::new(1))?;
        println!(
            "#{i}: k={} |V|={} |E|={} ideals={} {}",
            doc.k,
            doc.vertices.len(),
            doc.edges.len(),
            enumerate_sat_her(&g)?.len(),
            render_simplicity(&simple.to_doc(&g))
        );
    }
    Ok(())
}
