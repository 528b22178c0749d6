//! Cofinality through saturated hereditary closures.

use kgraph::fixtures;
use kgraph::ideals::{enumerate_sat_her, is_cofinal, sat_her_closure, Cofinality, VertexSet};

fn main() -> kgraph::Result<()> {
    for name in ["T2", "D", "D2"] {
        let g = fixtures::graph(name).unwrap();
        let sets: Vec<_> = enumerate_sat_her(&g)?.iter().map(|h| h.names(&g)).collect();
        let verdict = match is_cofinal(&g) {
            Cofinality::Cofinal => "cofinal".to_string(),
            Cofinality::NotCofinal(h) => format!("not cofinal, {:?} is proper", h.names(&g)),
        };
        println!("{name}: {verdict}; saturated hereditary sets {sets:?}");
    }

    let d2 = fixtures::bridged();
    let w = VertexSet::from_names(&d2, &["w"])?;
    println!("closure of {{w}} in D2: {:?}", sat_her_closure(&d2, &w).names(&d2));
    Ok(())
}
