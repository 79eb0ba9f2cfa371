//! Exact clustered coloring: tree-decomposition dynamic programming against
//! exhaustive search, and the bipartite block coloring.
//!
//! Run with `cargo run --example clustered_solver`.

use clustercol::generators::{complete, gnp_random, standard_treewidth_example, triangular_grid};
use clustercol::io::write_answer;
use clustercol::solver::{
    bipartite_block_coloring, brute_force_k_coloring, check_block_claims, dp_clustered_k_coloring, random_block_instance,
};
use clustercol::structure::treewidth_heuristic;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> clustercol::Result<()> {
    for (name, g) in [
        ("K5", complete(5)),
        ("triangular_grid(4)", triangular_grid(4)),
        ("standard_treewidth_example(2, 4)", standard_treewidth_example(2, 4)?),
    ] {
        let td = treewidth_heuristic(&g);
        for eta in 1..=4 {
            let dp = dp_clustered_k_coloring(&g, Some(&td), 2, eta)?;
            println!("{name}, 2 colors, clustering {eta}: {}", if dp.is_some() { "yes" } else { "no" });
        }
    }

    let g = gnp_random(10, 0.35, 4)?;
    let dp = dp_clustered_k_coloring(&g, None, 2, 2)?;
    let brute = brute_force_k_coloring(&g, 2, 2)?;
    assert_eq!(dp.is_some(), brute.is_some());
    print!("gnp_random(10, 0.35): {}", write_answer(dp.as_ref()));

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (g, l, y1p, ell) = random_block_instance(6, 2, 2, 0.5, &mut rng)?;
    let c = bipartite_block_coloring(&g, &l, &y1p, ell, 2, 1)?;
    println!("block coloring with l = {ell}, Y1' = {y1p:?}: {:?}", c.as_slice());
    assert!(check_block_claims(&g, &y1p, &c, ell, 2, 1)?.is_empty());
    Ok(())
}
