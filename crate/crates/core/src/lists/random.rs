//! Random valid list-assignments for property tests and campaigns.

use rand::seq::SliceRandom;
use rand::Rng;

use std::collections::BTreeMap;

use crate::graph::{Color, ColorSet, Graph, VertexSet};
use crate::separation::{Separation, Side};

use super::assignment::ListAssignment;
use super::progress::growth;

/// A random `(s, r, Y₁)`-list-assignment over the palette `[1, s+r+2]`
/// (`r ≥ 1`). Roughly a third of the vertices are precolored.
pub fn random_l_assignment<R: Rng>(g: &Graph, s: usize, r: usize, rng: &mut R) -> ListAssignment {
    let top = (s + r + 2) as Color;
    let palette: Vec<Color> = (1..=top).collect();
    let y1: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.3)).collect();
    let mut lists = vec![ColorSet::new(); g.n()];
    for &y in &y1 {
        lists[y] = ColorSet::from([rng.gen_range(1..=top)]);
    }
    for v in g.vertices().filter(|v| !y1.contains(v)) {
        let k = g.degree_into(v, &y1);
        let (pool, size): (Vec<Color>, usize) = if k == 0 {
            (palette.clone(), s + r)
        } else if k < s {
            let used: ColorSet = g.neighbors(v).iter().filter(|u| y1.contains(u)).map(|&u| *lists[u].first().unwrap()).collect();
            (palette.iter().copied().filter(|x| !used.contains(x)).collect(), s + r - k)
        } else {
            (palette.clone(), rng.gen_range(r + 1..=s + r))
        };
        lists[v] = pool.choose_multiple(rng, size).copied().collect();
    }
    ListAssignment::new(lists)
}

/// A random `(s, Y₁, ℓ, r)`-list-assignment and its `ℓ`: full lists
/// `[1, s+2+r]` (valid for every `ℓ`) pushed through a random growth.
pub fn random_r_assignment<R: Rng>(g: &Graph, s: usize, r: usize, rng: &mut R) -> (ListAssignment, Color) {
    let ell = rng.gen_range(0..=(s + 2) as Color);
    let full = ListAssignment::full(g.n(), (s + 2 + r) as Color);
    if rng.gen_bool(0.2) {
        return (full, ell);
    }
    let z: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.2)).collect();
    let out = growth(g, &full, s, ell, r, &z, rng.gen()).expect("growth of full lists");
    (out.lists, ell)
}

/// A random graph on `n` vertices together with a separation of it. Each
/// vertex lands in `A − B`, `B − A` or `A ∩ B` uniformly; pairs not split
/// across the separation become edges with probability `p`, and edges inside
/// `A ∩ B` pick their side at random.
pub fn random_separated_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> (Graph, Separation) {
    let place: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    let in_a = |v: usize| place[v] != 1;
    let in_b = |v: usize| place[v] != 0;
    let mut g = Graph::empty(n);
    let mut edge_side = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            let side = match (in_a(u) && in_a(v), in_b(u) && in_b(v)) {
                (false, false) => continue,
                (true, false) => Side::A,
                (false, true) => Side::B,
                (true, true) if rng.gen_bool(0.5) => Side::A,
                (true, true) => Side::B,
            };
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
                edge_side.insert((u, v), side);
            }
        }
    }
    let sep = Separation {
        va: (0..n).filter(|&v| in_a(v)).collect(),
        vb: (0..n).filter(|&v| in_b(v)).collect(),
        edge_side,
    };
    (g, sep)
}
