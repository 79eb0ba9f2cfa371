//! The lower-bound graph families and the graph text format.
//!
//! Run with `cargo run --example graph_families`.

use clustercol::generators::{k_star, standard_minor_example, standard_treewidth_example, triangular_grid, Family, FamilySpec};
use clustercol::io::{parse_graph, write_graph};
use clustercol::solver::brute_force_min_clustering;

fn main() -> clustercol::Result<()> {
    for eta in 1..=4 {
        let g = triangular_grid(eta);
        println!("triangular_grid({eta}): {} vertices, {} edges, max degree {}", g.n(), g.m(), g.max_degree());
    }

    // Every (s+1)-coloring of the apex family has a big monochromatic component.
    for (s, eta) in [(1, 3), (2, 2)] {
        let g = standard_minor_example(s, eta)?;
        let (best, witness) = brute_force_min_clustering(&g, s + 1)?;
        println!(
            "standard_minor_example({s}, {eta}): n = {}, best {}-coloring has clustering {best}: {:?}",
            g.n(),
            s + 1,
            witness.as_slice()
        );
    }
    let g = standard_treewidth_example(2, 3)?;
    println!("standard_treewidth_example(2, 3): n = {}, min 2-clustering {}", g.n(), brute_force_min_clustering(&g, 2)?.0);

    let star = k_star(2, 2);
    println!("K*_(2,2): {} vertices, {} edges", star.n(), star.m());

    // Families by name, as the `gen` subcommand uses them.
    let spec = FamilySpec::new("gnp_random".parse::<Family>()?, vec![8, 40], Some(7))?;
    let g = spec.build()?;
    let text = write_graph(&g);
    print!("gnp_random 8 40% seed 7:\n{text}");
    assert_eq!(parse_graph(&text)?, g);
    Ok(())
}
