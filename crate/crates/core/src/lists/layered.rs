//! List-assignments compatible with a `Z`-layering.

use crate::graph::{Color, Graph};
use crate::structure::Layering;

use super::assignment::{validate_l, ListAssignment};

/// The color a vertex of layer `j` (1-based) must avoid: the `i ∈ [s+2]`
/// with `i ≡ j (mod s+2)`.
pub fn forbidden_color(layer: usize, s: usize) -> Color {
    ((layer - 1) % (s + 2) + 1) as Color
}

/// `L(v) ⊆ [s+2]` everywhere and no vertex of `V_j` holds the color
/// congruent to `j` modulo `s+2`. Vertices of `Z` only need the first
/// condition. Returns false when the layering is not a `Z`-layering of `g`.
pub fn is_sv_compatible(g: &Graph, l: &ListAssignment, layering: &Layering, s: usize) -> bool {
    if l.len() != g.n() || !layering.validate(g) {
        return false;
    }
    let top = (s + 2) as Color;
    let idx = layering.index_of(g.n());
    g.vertices().all(|v| {
        let within = l.lists[v].iter().all(|&x| (1..=top).contains(&x));
        within && idx[v].is_none_or(|j| !l.lists[v].contains(&forbidden_color(j, s)))
    })
}

/// `L` is an `(s, 1, Y₁)`-list-assignment and `(s, 𝒱)`-compatible.
pub fn is_v_standard_pair(g: &Graph, l: &ListAssignment, layering: &Layering, s: usize) -> bool {
    is_sv_compatible(g, l, layering, s) && validate_l(g, l, s, 1).is_ok()
}

/// The largest compatible lists: `[s+2]` minus the forbidden color of each
/// vertex's layer, and all of `[s+2]` on `Z`.
pub fn compatible_lists(g: &Graph, layering: &Layering, s: usize) -> ListAssignment {
    let idx = layering.index_of(g.n());
    ListAssignment::new(
        g.vertices()
            .map(|v| {
                (1..=(s + 2) as Color)
                    .filter(|&x| idx[v].is_none_or(|j| x != forbidden_color(j, s)))
                    .collect()
            })
            .collect(),
    )
}
