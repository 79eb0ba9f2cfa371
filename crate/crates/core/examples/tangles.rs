//! Tangles as explicit separation sets.
//!
//! Run with `cargo run --example tangles`.

use clustercol::containment::has_minor;
use clustercol::generators::{complete, path, triangular_grid};
use clustercol::structure::{controls_minor, tangle_axioms_check, tangle_from_y1, tangle_minus_z};

fn main() -> clustercol::Result<()> {
    // Y1 = V(G) on the 3x3 triangular grid gives a tangle of order 2.
    let g = triangular_grid(3);
    let y1 = g.vertex_set();
    let t = tangle_from_y1(&g, 2, &y1)?;
    let verdict = tangle_axioms_check(&g, &t.separations, t.order)?;
    println!("triangular_grid(3), theta = 2: {} separations, tangle: {}", t.len(), verdict.is_tangle());
    let model = has_minor(&g, &complete(2))?.unwrap();
    println!("it controls the K2 minor {:?}: {}", model.branch_sets, controls_minor(&t, &model));
    let (rest, t2) = tangle_minus_z(&g, &t, &[4].into())?;
    println!("after deleting the center: {} vertices left, {} separations of order {}", rest.graph.n(), t2.len(), t2.order);

    // With too few precolored vertices the same rule keeps (V(G), {}) and fails.
    let k5 = complete(5);
    let t = tangle_from_y1(&k5, 2, &k5.vertex_set())?;
    println!("K5, theta = 2: rejected by {:?}", tangle_axioms_check(&k5, &t.separations, 2)?.first_failure());

    // Paths have treewidth 1, so order-3 candidates must fail an axiom.
    let p = path(5);
    let t = tangle_from_y1(&p, 3, &p.vertex_set())?;
    let verdict = tangle_axioms_check(&p, &t.separations, 3)?;
    println!("path(5), theta = 3: rejected by {:?}", verdict.first_failure());

    Ok(())
}
