//! Minor, odd-minor and K_{s,t} subgraph searches with witnesses.
//!
//! Run with `cargo run --example containment`.

use clustercol::containment::{has_kst_subgraph, has_minor, has_odd_minor, validate_minor_model, validate_odd_certificate};
use clustercol::generators::{complete, complete_bipartite, cycle, triangular_grid};

fn main() -> clustercol::Result<()> {
    let grid = triangular_grid(3);
    let k4 = complete(4);
    let model = has_minor(&grid, &k4)?.expect("the 3x3 triangular grid has a K4 minor");
    println!("K4 minor of triangular_grid(3): branch sets {:?}", model.branch_sets);
    assert!(validate_minor_model(&grid, &k4, &model));
    println!("K5 minor of triangular_grid(3): {}", has_minor(&grid, &complete(5))?.is_some());

    // Bipartite graphs have no odd K3 minor; odd cycles are one.
    let k3 = complete(3);
    for n in 2..=4 {
        println!("odd K3 minor in K{n},{n}: {}", has_odd_minor(&complete_bipartite(n, n), &k3)?.is_some());
    }
    let c5 = cycle(5);
    let (m, cert) = has_odd_minor(&c5, &k3)?.expect("C5 is an odd K3 minor of itself");
    assert!(validate_odd_certificate(&c5, &k3, &m, &cert));
    println!("C5: branch sets {:?}, parity {:?}", m.branch_sets, cert.two_coloring);

    println!("K2,3 inside K3,3: {:?}", has_kst_subgraph(&complete_bipartite(3, 3), 2, 3));
    println!("K1,7 inside triangular_grid(3): {:?}", has_kst_subgraph(&grid, 1, 7));
    Ok(())
}
