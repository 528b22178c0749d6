//! Unique factorization: compose, factor and segment paths in a 2-graph.

use kgraph::{deg, fixtures};

fn main() -> kgraph::Result<()> {
    let g = fixtures::flip();
    let lambda = g.path(&["b0", "r", "b0"])?;
    println!("lambda = {} of degree {}", g.show(&lambda), lambda.degree());

    let (head, tail) = g.factor(&lambda, &deg![0, 1])?;
    println!("factor at (0,1): {} then {}", g.show(&head), g.show(&tail));
    assert_eq!(g.compose(&head, &tail)?, lambda);

    let middle = g.segment(&lambda, &deg![1, 0], &deg![2, 1])?;
    println!("segment (1,0)..(2,1): {}", g.show(&middle));

    let v = g.vertex("v")?;
    for p in g.paths_from(v, &deg![1, 1]) {
        println!("  {}", g.show(&p));
    }
    println!("|vΛ^(2,1)| = {}", g.count_matrix(&deg![2, 1])?.row_sum(v.index()));
    Ok(())
}
