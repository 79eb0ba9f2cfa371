//! List-assignment axioms, progress, growth and the precolored enlargement.
//!
//! Run with `cargo run --example list_assignments`.

use clustercol::generators::{cycle, path};
use clustercol::io::write_lists;
use clustercol::lists::{
    check_eta_g_bounded, check_growth_statements, check_progress_statements, enlarge_precolored, growth, progress,
    validate_l, validate_r, BoundedColoringPolicy, ListAssignment,
};
use clustercol::solver::brute_force_list_coloring;
use clustercol::{ColorSet, VertexSet};

fn main() -> clustercol::Result<()> {
    // s = 2, r = 1: vertex 0 precolored, its neighbor keeps s + r - 1 colors.
    let g = path(4);
    let (s, r) = (2, 1);
    let l = ListAssignment::new(vec![[1].into(), [2, 3].into(), [1, 2, 3].into(), [1, 2, 3].into()]);
    println!("Y1 = {:?}", validate_l(&g, &l, s, r).expect("valid lists"));

    let w = VertexSet::from([1]);
    let f = ColorSet::from([3]);
    let lp = progress(&g, &l, s, r, &w, &f, 0)?;
    print!("(W, F)-progress with W = {{1}}, F = {{3}}:\n{}", write_lists(&lp));
    assert!(check_progress_statements(&g, &l, &lp, s, r, &w, &f).is_empty());

    let out = enlarge_precolored(&g, &l, s, 2, &ColorSet::new(), 1, 0);
    println!("enlargement with r = 2 on lists built for r = 1: {:?}", out.err().map(|e| e.to_string()));

    // A growth from full lists on a 6-cycle.
    let c6 = cycle(6);
    let full = ListAssignment::full(6, 4);
    validate_r(&c6, &full, 1, 1, 1).expect("full lists satisfy R1-R5");
    let z = VertexSet::from([0]);
    let grown = growth(&c6, &full, 1, 1, 1, &z, 3)?;
    println!("(Z, l)-growth rounds {:?}, Y1' = {:?}", grown.rounds, grown.y1);
    assert!(check_growth_statements(&c6, &full, &grown, 1, 1, 1, &z).is_empty());

    // Bounded colorings: components at most eta^2 g(eta), F-classes stable.
    let c = brute_force_list_coloring(&c6, &grown.lists, 2, &ColorSet::new())?.expect("colorable");
    let policy = BoundedColoringPolicy::constant(2, 1, ColorSet::new());
    let verdict = check_eta_g_bounded(&c6, &grown.lists, &c, &policy)?;
    println!("coloring {:?} is (2, 1)-bounded: {}", c.as_slice(), verdict.is_bounded());
    Ok(())
}
