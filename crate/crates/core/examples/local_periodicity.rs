//! Decide local periodicity at one vertex for a pair of shifts, and print the
//! certificate either way.

use kgraph::analysis::render_tuple;
use kgraph::periodicity::{local_periodicity_at, periodicity_tuple, LocalPeriodicity};
use kgraph::{deg, fixtures, Degree};

fn decide(name: &str, m: Degree, n: Degree) -> kgraph::Result<()> {
    let g = fixtures::graph(name).expect("fixture");
    let v = g.vertices().next().unwrap();
    match local_periodicity_at(&g, v, &m, &n)? {
        LocalPeriodicity::Periodic => {
            let t = periodicity_tuple(&g, v, &m, &n)?;
            println!("{name} m={m} n={n}: periodic\n  {}", render_tuple(&t.to_doc(&g)));
        }
        LocalPeriodicity::Aperiodic(w) => {
            println!(
                "{name} m={m} n={n}: aperiodic, lambda = {} ({} vs {})",
                g.show(&w.lambda),
                g.show(&w.segment_m),
                g.show(&w.segment_n)
            );
            assert!(w.check(&g));
        }
    }
    Ok(())
}

fn main() -> kgraph::Result<()> {
    decide("T2", deg![1, 0], deg![0, 1])?;
    decide("F", deg![1, 0], deg![0, 1])?;
    decide("F", deg![0, 0], deg![0, 2])?;
    decide("P2", deg![1, 0], deg![0, 1])?;
    Ok(())
}
