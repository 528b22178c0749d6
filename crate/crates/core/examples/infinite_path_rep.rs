//! Eventually periodic infinite paths and the action of path generators on
//! the basis vectors they index.

use kgraph::analysis::infinite::sample_family;
use kgraph::analysis::{rep_apply, rep_apply_adjoint, verify_annihilation, BasisImage, EventuallyPeriodicPath, RepElement};
use kgraph::periodicity::periodicity_tuple;
use kgraph::{deg, fixtures};

fn main() -> kgraph::Result<()> {
    let g = fixtures::flip();
    let x = EventuallyPeriodicPath::periodic(&g, g.path(&["b0", "r"])?)?;
    println!("x(0,(2,1)) = {}", g.show(&x.segment(&g, &deg![0, 0], &deg![2, 1])?));

    let rx = x.prepend(&g, &g.path(&["r", "r"])?)?;
    println!("rr x equals x: {}", rx.same_path(&g, &x)?);

    let b1 = g.path(&["b1"])?;
    if let BasisImage::Basis(y) = rep_apply(&g, &b1, &x)? {
        println!("S_b1 x has prefix {}", g.show(y.prefix()));
        println!("S_b1^* S_b1 x = x: {}", rep_apply_adjoint(&g, &b1, &y)? == BasisImage::Basis(x.clone()));
    }

    let v = g.vertex("v")?;
    let t = periodicity_tuple(&g, v, &deg![0, 0], &deg![0, 2])?;
    let a = RepElement::from_tuple(&g, &t)?;
    let samples = sample_family(&g, &[v], 2);
    println!(
        "({}, {}) kills all {} samples: {}",
        g.show(a.mu_alpha()),
        g.show(a.nu_alpha()),
        samples.len(),
        verify_annihilation(&g, &a, &samples)?
    );
    Ok(())
}
