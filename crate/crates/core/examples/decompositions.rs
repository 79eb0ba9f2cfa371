//! Tree decompositions, exact treewidth, layerings and layered treewidth.
//!
//! Run with `cargo run --example decompositions`.

use clustercol::generators::{complete, path, standard_treewidth_example, triangular_grid};
use clustercol::io::{write_layering, write_td};
use clustercol::structure::{
    layered_treewidth_exact, layered_treewidth_upper, treewidth_exact, treewidth_heuristic, v_width,
    validate_tree_decomposition, Layering,
};

fn main() -> clustercol::Result<()> {
    for (name, g) in [
        ("path(6)", path(6)),
        ("K5", complete(5)),
        ("triangular_grid(3)", triangular_grid(3)),
        ("standard_treewidth_example(2, 3)", standard_treewidth_example(2, 3)?),
    ] {
        let (tw, td) = treewidth_exact(&g)?;
        let heur = treewidth_heuristic(&g);
        assert!(validate_tree_decomposition(&g, &td) && validate_tree_decomposition(&g, &heur));
        println!("{name}: treewidth {tw}, min-fill width {}", heur.width());
    }

    let g = triangular_grid(3);
    let (_, td) = treewidth_exact(&g)?;
    print!("optimal decomposition of triangular_grid(3):\n{}", write_td(&td));

    // Rows of the grid form a layering; its width against the decomposition.
    let rows = Layering::from_labels(&(0..9).map(|v| Some(v / 3)).collect::<Vec<_>>());
    print!("row layering:\n{}", write_layering(&rows));
    println!("V-width of the optimal decomposition against the rows: {}", v_width(&g, &td, &rows)?);
    let (upper, _, _) = layered_treewidth_upper(&g);
    let (exact, _, best) = layered_treewidth_exact(&path(7))?;
    println!("layered treewidth of triangular_grid(3) is at most {upper}");
    println!("layered treewidth of path(7) is {exact} with {} layers", best.layers.len());
    Ok(())
}
