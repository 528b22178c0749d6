//! Degree arithmetic behind an aperiodicity witness: the join of the two
//! shifts plus the extra length `l` gives the degree of the witness path.

use kgraph::{deg, Degree};

fn main() -> kgraph::Result<()> {
    let (m, n, l) = (deg![10, 2], deg![5, 6], deg![2, 3]);
    let j = m.join(&n)?;
    let frame = j.add(&l)?;
    println!("m ∨ n = {j}, witness degree = {frame}");
    println!("compared windows: {m}..{} and {n}..{}", m.add(&l)?, n.add(&l)?);

    let (minus, plus) = Degree::positive_part(&[3, -2])?;
    println!("p = (3,-2): p- = {minus}, p+ = {plus}");
    Ok(())
}
