//! Restricting an `(s, r, Y₁)`-list-assignment to one side of a separation.
//!
//! The boundary `V(A ∩ B)` joins the precolored set, each boundary vertex
//! outside `Y₁` pinned to a color outside `F`. Pins depend only on `L`, the
//! boundary, `F` and the seed, so both sides agree on them and any pair of
//! side colorings glues into an L-coloring of the whole graph.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, ColorSet, Graph, Subgraph, Vertex, VertexSet};
use crate::separation::{Separation, Side};

use super::assignment::{meeting_f, validate_l, validate_l_with, ListAssignment};
use super::progress::StatementFailure;

/// Pins for the boundary vertices outside `Y₁`: a seeded choice from
/// `L(v) − F`, visiting the boundary in increasing order.
pub fn boundary_pins(l: &ListAssignment, sep: &Separation, f: &ColorSet, seed: u64) -> Result<BTreeMap<Vertex, Color>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pins = BTreeMap::new();
    for v in sep.boundary() {
        if l.lists[v].len() == 1 {
            continue;
        }
        let avail: Vec<Color> = l.lists[v].difference(f).copied().collect();
        if avail.is_empty() {
            return Err(Error::Precondition(format!("boundary vertex {v} has no color outside F")));
        }
        pins.insert(v, avail[rng.gen_range(0..avail.len())]);
    }
    Ok(pins)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideRestriction {
    /// `G[V(A)]` (or `G[V(B)]`) with its local ids.
    pub sub: Subgraph,
    /// `L_A` in local ids.
    pub lists: ListAssignment,
    /// `Y_A = (Y₁ ∩ V(A)) ∪ V(A ∩ B)`, parent ids.
    pub y_side: VertexSet,
    /// `Z_A = N^{<s}_{G_A}(Y_A)`, parent ids.
    pub z_side: VertexSet,
}

/// Builds `L_A` on `G[V(A)]` (or `L_B` for `Side::B`).
#[allow(clippy::too_many_arguments)]
pub fn side_restrict(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    sep: &Separation,
    side: Side,
    f: &ColorSet,
    seed: u64,
) -> Result<SideRestriction> {
    l.check_len(g)?;
    sep.validate(g).map_err(Error::Input)?;
    if f.len() > r {
        return Err(Error::Precondition(format!("|F| = {} exceeds r = {r}", f.len())));
    }
    let y1 = validate_l(g, l, s, r)
        .map_err(|e| Error::Precondition(format!("not an (s, r, Y1)-list-assignment: {e}")))?;
    let pins = boundary_pins(l, sep, f, seed)?;
    let keep = sep.side_vertices(side);
    let sub = g.induced(keep);
    let y_side: VertexSet = y1.intersection(keep).copied().chain(sep.boundary()).collect();
    let y_local = sub.local_set(&y_side);
    let z_local = sub.graph.n_lt_s(&y_local, s)?;
    let mut lists = l.restrict(&sub);
    for (&v, &c) in &pins {
        lists.lists[sub.to_local(v).unwrap()] = ColorSet::from([c]);
    }
    for &z in &z_local {
        let pz = sub.to_parent(z);
        let pinned: Vec<Color> = sub
            .graph
            .neighbors(z)
            .iter()
            .filter_map(|&u| pins.get(&sub.to_parent(u)).copied())
            .collect();
        let blocked: ColorSet = pinned.iter().copied().collect();
        let target = (s + r).saturating_sub(sub.graph.degree_into(z, &y_local));
        let avail: Vec<Color> = l.lists[pz].difference(&blocked).copied().collect();
        if avail.len() < target {
            return Err(Error::Precondition(format!("too few colors left for vertex {pz}")));
        }
        let (mut pick, rest): (Vec<Color>, Vec<Color>) = avail.into_iter().partition(|x| f.contains(x));
        pick.extend(rest);
        pick.truncate(target);
        lists.lists[z] = pick.into_iter().collect();
    }
    Ok(SideRestriction {
        z_side: sub.parent_set(&z_local),
        sub,
        lists,
        y_side,
    })
}

/// Checks that `L_A` is an `(s, r, Y_A)`-list-assignment of `G[V(A)]`
/// (`"valid"`) with `L_A ⊆ L` (`"sublist"`), the same F-meeting precolored
/// vertices (`"meeting"`) and `L_A ∩ F = L ∩ F` outside `Y_A` (`"f"`).
pub fn check_side_claims(
    l: &ListAssignment,
    s: usize,
    r: usize,
    side: &SideRestriction,
    f: &ColorSet,
) -> Vec<StatementFailure> {
    let mut out = Vec::new();
    let fail = |statement, detail: String| StatementFailure { statement, detail };
    let sub = &side.sub;
    let la = &side.lists;
    if la.len() != sub.graph.n() {
        out.push(fail("valid", "side lists have the wrong length".into()));
        return out;
    }
    let y_local = sub.local_set(&side.y_side);
    if let Err(e) = validate_l_with(&sub.graph, la, s, r, Some(&y_local)) {
        out.push(fail("valid", format!("{e} (local ids)")));
    }
    if let Some(i) = sub.graph.vertices().find(|&i| !la.lists[i].is_subset(&l.lists[sub.to_parent(i)])) {
        out.push(fail("sublist", format!("L_A({}) is not inside L", sub.to_parent(i))));
    }
    let keep: VertexSet = sub.vertices.iter().copied().collect();
    let y1: VertexSet = l.singletons().intersection(&keep).copied().collect();
    let before = meeting_f(l, &y1, f);
    let after = sub.parent_set(&meeting_f(la, &y_local, f));
    if before != after {
        out.push(fail("meeting", format!("F-meeting sets differ: {before:?} became {after:?}")));
    }
    if let Some(i) = sub.graph.vertices().find(|i| {
        !y_local.contains(i) && la.lists[*i].intersection(f).ne(l.lists[sub.to_parent(*i)].intersection(f))
    }) {
        out.push(fail("f", format!("L_A({}) ∩ F differs from L ∩ F", sub.to_parent(i))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;

    fn lists(items: &[&[Color]]) -> ListAssignment {
        ListAssignment::new(items.iter().map(|l| l.iter().copied().collect()).collect())
    }

    #[test]
    fn boundary_inside_y1_is_plain_restriction() {
        let g = path(4);
        let l = lists(&[&[1, 2], &[3], &[1, 2], &[1, 2]]);
        let sep = Separation::from_vertex_sides(&g, [0, 1].into(), [1, 2, 3].into()).unwrap();
        assert!(validate_l(&g, &l, 1, 1).is_ok());
        let a = side_restrict(&g, &l, 1, 1, &sep, Side::A, &ColorSet::new(), 0).unwrap();
        assert_eq!(a.lists, l.restrict(&a.sub));
        let b = side_restrict(&g, &l, 1, 1, &sep, Side::B, &ColorSet::new(), 0).unwrap();
        assert_eq!(b.lists, l.restrict(&b.sub));
    }

    #[test]
    fn path_split_by_hand() {
        // P_4 with full lists {1, 2}, s = 1, r = 1, split with boundary {1, 2}
        // (the middle edge on side A). F = {2} forces both pins to color 1.
        // With s = 1 nothing is in N^{<s}, so the other lists stay {1, 2}.
        let g = path(4);
        let l = ListAssignment::full(4, 2);
        let sep = Separation::from_vertex_sides(&g, [0, 1, 2].into(), [1, 2, 3].into()).unwrap();
        let f = ColorSet::from([2]);
        let a = side_restrict(&g, &l, 1, 1, &sep, Side::A, &f, 9).unwrap();
        assert_eq!(a.lists, lists(&[&[1, 2], &[1], &[1]]));
        assert_eq!(a.y_side, VertexSet::from([1, 2]));
        assert!(check_side_claims(&l, 1, 1, &a, &f).is_empty());
        let b = side_restrict(&g, &l, 1, 1, &sep, Side::B, &f, 9).unwrap();
        assert_eq!(b.lists, lists(&[&[1], &[1], &[1, 2]]));
    }

    #[test]
    fn shrinks_near_boundary() {
        // P_3 split at vertex 1 with s = 2, r = 1: vertex 0 has one pinned
        // neighbor, so L_A(0) has size 2 avoiding the pin and keeping F.
        let g = path(3);
        let l = ListAssignment::full(3, 3);
        let sep = Separation::from_vertex_sides(&g, [0, 1].into(), [1, 2].into()).unwrap();
        let f = ColorSet::from([3]);
        let a = side_restrict(&g, &l, 2, 1, &sep, Side::A, &f, 1).unwrap();
        let pin = a.lists.single_color(1).unwrap();
        assert!(pin != 3);
        assert!(a.lists.lists[0].contains(&3) && !a.lists.lists[0].contains(&pin));
        assert_eq!(a.lists.lists[0].len(), 2);
        assert_eq!(a.z_side, VertexSet::from([0]));
        assert!(check_side_claims(&l, 2, 1, &a, &f).is_empty());
    }

    #[test]
    fn rejects_oversized_f() {
        let g = path(2);
        let l = lists(&[&[1, 2], &[1, 2]]);
        let sep = Separation::from_vertex_sides(&g, [0, 1].into(), [1].into()).unwrap();
        let err = side_restrict(&g, &l, 1, 1, &sep, Side::A, &ColorSet::from([1, 2]), 0);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
