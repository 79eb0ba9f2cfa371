//! Restricting a list assignment to both sides of a separation and gluing
//! the side colorings back together.
//!
//! Run with `cargo run --example side_restriction`.

use clustercol::generators::path;
use clustercol::lists::{check_side_claims, side_restrict, ListAssignment};
use clustercol::separation::{Separation, Side};
use clustercol::solver::{brute_force_list_coloring, merge_side_colorings};
use clustercol::ColorSet;

fn main() -> clustercol::Result<()> {
    // P6 split at vertices 2 and 3; vertex 0 is precolored.
    let g = path(6);
    let sep = Separation::from_vertex_sides(&g, [0, 1, 2, 3].into(), [2, 3, 4, 5].into())?;
    let (s, r) = (2, 1);
    let l = ListAssignment::new(vec![
        [1].into(),
        [2, 3].into(),
        [1, 2, 3].into(),
        [1, 2, 3].into(),
        [1, 2, 3].into(),
        [1, 2, 3].into(),
    ]);
    let f = ColorSet::from([3]);
    let mut colorings = Vec::new();
    for side in [Side::A, Side::B] {
        let res = side_restrict(&g, &l, s, r, &sep, side, &f, 1)?;
        assert!(check_side_claims(&l, s, r, &res, &f).is_empty());
        println!("{side:?}: Y = {:?}, Z = {:?}, lists {:?}", res.y_side, res.z_side, res.lists.lists);
        let c = brute_force_list_coloring(&res.sub.graph, &res.lists, 2, &f)?.expect("side colorable");
        colorings.push(c);
    }
    let glued = merge_side_colorings(&g, &sep, &colorings[0], &colorings[1])?;
    println!("glued coloring {:?}, an L-coloring: {}", glued.as_slice(), l.admits(&glued));
    Ok(())
}
