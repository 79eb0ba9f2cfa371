//! List-assignments and the two axiom systems: `(s, r, Y₁)` (L1–L5) and
//! `(s, Y₁, ℓ, r)` (R1–R5).

use std::fmt;

use crate::error::{check_cap, input, Result};
use crate::graph::{Color, ColorSet, Coloring, Graph, Subgraph, Vertex, VertexSet};

/// Default cap on the number of L-colorings an enumeration may visit.
pub const DEFAULT_COLORING_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ListAssignment {
    pub lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        ListAssignment { lists }
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn full(n: usize, k: Color) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &ColorSet {
        &self.lists[v]
    }

    /// `{v : |L(v)| = 1}`.
    pub fn singletons(&self) -> VertexSet {
        (0..self.lists.len()).filter(|&v| self.lists[v].len() == 1).collect()
    }

    /// The unique color of a singleton list.
    pub fn single_color(&self, v: Vertex) -> Option<Color> {
        match self.lists[v].len() {
            1 => self.lists[v].first().copied(),
            _ => None,
        }
    }

    /// `L'(v) ⊆ L(v)` everywhere.
    pub fn is_sublist_of(&self, other: &ListAssignment) -> bool {
        self.lists.len() == other.lists.len() && self.lists.iter().zip(&other.lists).all(|(a, b)| a.is_subset(b))
    }

    /// Lists of an induced subgraph, in its local ids.
    pub fn restrict(&self, sub: &Subgraph) -> ListAssignment {
        ListAssignment {
            lists: sub.vertices.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.n() {
            return input(format!("{} lists for {} vertices", self.lists.len(), g.n()));
        }
        Ok(())
    }

    /// Whether `c(v) ∈ L(v)` for every vertex.
    pub fn admits(&self, c: &Coloring) -> bool {
        c.len() == self.lists.len() && c.as_slice().iter().zip(&self.lists).all(|(x, l)| l.contains(x))
    }

    /// Number of L-colorings.
    pub fn coloring_count(&self) -> u128 {
        self.lists.iter().fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LAxiom {
    L1,
    L2,
    L3,
    L4,
    L5,
}

/// First violated L-axiom with a witness vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LViolation {
    pub axiom: LAxiom,
    pub vertex: Vertex,
    pub detail: String,
}

impl fmt::Display for LViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at vertex {}: {}", self.axiom, self.vertex, self.detail)
    }
}

/// Checks L1–L5 and returns `Y₁` on success. Lists must match `g` in length.
pub fn validate_l(g: &Graph, l: &ListAssignment, s: usize, r: usize) -> std::result::Result<VertexSet, LViolation> {
    validate_l_with(g, l, s, r, None)
}

/// As [`validate_l`], additionally requiring `Y₁` to equal `expected` (L2).
pub fn validate_l_with(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    expected: Option<&VertexSet>,
) -> std::result::Result<VertexSet, LViolation> {
    let fail = |axiom, vertex, detail: String| Err(LViolation { axiom, vertex, detail });
    if l.len() != g.n() {
        return fail(LAxiom::L1, l.len().min(g.n()), format!("{} lists for {} vertices", l.len(), g.n()));
    }
    for v in g.vertices() {
        let k = l.lists[v].len();
        if k == 0 || k > s + r {
            return fail(LAxiom::L1, v, format!("|L(v)| = {k} not in [1, {}]", s + r));
        }
    }
    let y1 = l.singletons();
    if let Some(exp) = expected {
        if let Some(&v) = y1.symmetric_difference(exp).next() {
            return fail(LAxiom::L2, v, "singleton lists do not match the expected Y1".into());
        }
    }
    for v in g.vertices() {
        if y1.contains(&v) {
            continue;
        }
        let k = g.degree_into(v, &y1);
        let size = l.lists[v].len();
        if k >= 1 && k < s {
            if size != s + r - k {
                return fail(LAxiom::L3, v, format!("|L(v)| = {size}, expected {}", s + r - k));
            }
            if let Some(&u) = g.neighbors(v).iter().find(|u| y1.contains(u) && !l.lists[v].is_disjoint(&l.lists[**u])) {
                return fail(LAxiom::L3, v, format!("list meets the list of precolored neighbor {u}"));
            }
        }
    }
    for v in g.vertices() {
        if !y1.contains(&v) && g.degree_into(v, &y1) == 0 && l.lists[v].len() != s + r {
            return fail(LAxiom::L4, v, format!("|L(v)| = {}, expected {}", l.lists[v].len(), s + r));
        }
    }
    for v in g.vertices() {
        if !y1.contains(&v) && l.lists[v].len() < r + 1 {
            return fail(LAxiom::L5, v, format!("|L(v)| = {} below {}", l.lists[v].len(), r + 1));
        }
    }
    Ok(y1)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RAxiom {
    /// `ℓ` outside `[0, s+2]`.
    Parameters,
    R1,
    R2(LAxiom),
    R3,
    R4,
    R5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RViolation {
    pub axiom: RAxiom,
    pub vertex: Option<Vertex>,
    pub detail: String,
}

impl fmt::Display for RViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertex {
            Some(v) => write!(f, "{:?} fails at vertex {v}: {}", self.axiom, self.detail),
            None => write!(f, "{:?} fails: {}", self.axiom, self.detail),
        }
    }
}

/// `[s+3, s+2+r]`.
pub fn high_colors(s: usize, r: usize) -> ColorSet {
    (s as Color + 3..=(s + 2 + r) as Color).collect()
}

/// Checks R1–R5 for an `(s, Y₁, ℓ, r)`-list-assignment and returns `Y₁`.
pub fn validate_r(g: &Graph, l: &ListAssignment, s: usize, ell: Color, r: usize) -> std::result::Result<VertexSet, RViolation> {
    let fail = |axiom, vertex, detail: String| Err(RViolation { axiom, vertex, detail });
    if ell < 0 || ell > s as Color + 2 {
        return fail(RAxiom::Parameters, None, format!("l = {ell} outside [0, {}]", s + 2));
    }
    if l.len() != g.n() {
        return fail(RAxiom::R1, None, format!("{} lists for {} vertices", l.len(), g.n()));
    }
    let top = (s + 2 + r) as Color;
    for v in g.vertices() {
        if let Some(x) = l.lists[v].iter().find(|&&x| x < 1 || x > top) {
            return fail(RAxiom::R1, Some(v), format!("color {x} outside [1, {top}]"));
        }
    }
    let y1 = match validate_l(g, l, s, r + 2) {
        Ok(y1) => y1,
        Err(e) => return fail(RAxiom::R2(e.axiom), Some(e.vertex), e.detail),
    };
    let high = high_colors(s, r);
    for &y in &y1 {
        for &x in &l.lists[y] {
            if x != ell && !high.contains(&x) {
                continue;
            }
            if let Some(&v) = g.neighbors(y).iter().find(|v| !y1.contains(v) && l.lists[**v].contains(&x)) {
                return fail(RAxiom::R3, Some(v), format!("color {x} of precolored {y} appears on its neighbor"));
            }
        }
    }
    for &x in &high {
        let holders: VertexSet = y1.iter().copied().filter(|&y| l.lists[y].contains(&x)).collect();
        if let Some(&(u, v)) = g.edges().iter().find(|(u, v)| holders.contains(u) && holders.contains(v)) {
            return fail(RAxiom::R4, Some(u), format!("precolored {u} and {v} are adjacent and share color {x}"));
        }
    }
    for v in g.vertices() {
        if y1.contains(&v) {
            continue;
        }
        let forced = g
            .neighbors(v)
            .iter()
            .filter(|y| y1.contains(y) && l.lists[**y].is_subset(&high))
            .count();
        let own = l.lists[v].intersection(&high).count();
        if forced + own != r {
            return fail(
                RAxiom::R5,
                Some(v),
                format!("{forced} high-precolored neighbors plus {own} high colors in L(v) is not r = {r}"),
            );
        }
    }
    Ok(y1)
}

/// Visits every L-coloring in lexicographic order until `f` returns false.
/// Refuses when the number of colorings exceeds `budget`.
pub fn for_each_l_coloring(l: &ListAssignment, budget: u128, mut f: impl FnMut(&Coloring) -> bool) -> Result<()> {
    check_cap("L-coloring enumeration", l.coloring_count(), budget)?;
    if l.lists.iter().any(|x| x.is_empty()) {
        return Ok(());
    }
    let lists: Vec<Vec<Color>> = l.lists.iter().map(|x| x.iter().copied().collect()).collect();
    let mut idx = vec![0usize; lists.len()];
    let mut c = Coloring::new(lists.iter().map(|x| x[0]).collect());
    loop {
        if !f(&c) {
            return Ok(());
        }
        let mut i = 0;
        loop {
            if i == lists.len() {
                return Ok(());
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                c.0[i] = lists[i][idx[i]];
                break;
            }
            idx[i] = 0;
            c.0[i] = lists[i][0];
            i += 1;
        }
    }
}

/// `{v ∈ X : L(v) ∩ F ≠ ∅}`.
pub fn meeting_f(l: &ListAssignment, x: &VertexSet, f: &ColorSet) -> VertexSet {
    x.iter().copied().filter(|&v| !l.lists[v].is_disjoint(f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, star};

    fn lists(items: &[&[Color]]) -> ListAssignment {
        ListAssignment::new(items.iter().map(|l| l.iter().copied().collect()).collect())
    }

    #[test]
    fn full_lists_are_valid() {
        let g = path(4);
        for s in 1..4 {
            for r in 1..4 {
                let l = ListAssignment::full(4, (s + r) as Color);
                assert_eq!(validate_l(&g, &l, s, r), Ok(VertexSet::new()));
            }
        }
    }

    #[test]
    fn hand_built_single_singleton() {
        // Star with center 0 precolored 5, s = 2, r = 1: leaves lie in
        // N^{<2}({0}) and need lists of size 2 avoiding 5.
        let g = star(3);
        let l = lists(&[&[5], &[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(validate_l(&g, &l, 2, 1), Ok(VertexSet::from([0])));
        assert_eq!(validate_l_with(&g, &l, 2, 1, Some(&VertexSet::from([1]))).unwrap_err().axiom, LAxiom::L2);
    }

    #[test]
    fn mutations_hit_each_axiom() {
        let g = star(3);
        let base = lists(&[&[5], &[1, 2], &[1, 3], &[2, 3]]);
        let mut l3 = base.clone();
        l3.lists[1] = [1, 2, 3].into();
        assert_eq!(validate_l(&g, &l3, 2, 1).unwrap_err().axiom, LAxiom::L3);
        let mut clash = base.clone();
        clash.lists[2] = [1, 5].into();
        let e = validate_l(&g, &clash, 2, 1).unwrap_err();
        assert_eq!((e.axiom, e.vertex), (LAxiom::L3, 2));
        let mut l1 = base.clone();
        l1.lists[3] = ColorSet::new();
        assert_eq!(validate_l(&g, &l1, 2, 1).unwrap_err().axiom, LAxiom::L1);
        let g2 = path(3);
        let l4 = lists(&[&[1, 2, 3], &[1, 2, 3], &[1, 2]]);
        assert_eq!(validate_l(&g2, &l4, 2, 1).unwrap_err().axiom, LAxiom::L4);
        // s = 1: neighbors of Y₁ are in N^{≥1}, free in size but at least r+1.
        let l5 = lists(&[&[4], &[1], &[1, 2]]);
        assert_eq!(validate_l(&g2, &l5, 1, 2).unwrap_err().axiom, LAxiom::L5);
    }

    #[test]
    fn r_axioms() {
        let g = path(3);
        for s in 1..3 {
            for r in 0..3 {
                let l = ListAssignment::full(3, (s + 2 + r) as Color);
                for ell in 0..=(s as Color + 2) {
                    assert_eq!(validate_r(&g, &l, s, ell, r), Ok(VertexSet::new()));
                }
            }
        }
        // (s, Y₁, 0, 0) is an (s, 2, Y₁)-assignment.
        let l = ListAssignment::full(3, 3);
        assert!(validate_r(&g, &l, 1, 0, 0).is_ok());
        assert!(validate_l(&g, &l, 1, 2).is_ok());
        assert_eq!(validate_r(&g, &l, 1, 4, 0).unwrap_err().axiom, RAxiom::Parameters);
        let hole = lists(&[&[], &[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(validate_r(&g, &hole, 1, 0, 0).unwrap_err().axiom, RAxiom::R2(LAxiom::L1));
        assert_eq!(validate_r(&g, &ListAssignment::full(3, 4), 1, 0, 0).unwrap_err().axiom, RAxiom::R1);
    }

    #[test]
    fn r4_rejects_adjacent_high_precolored() {
        // s = 1, r = 1: high color 4. Two adjacent precolored vertices both {4}.
        let g = path(2);
        let l = lists(&[&[4], &[4]]);
        let e = validate_r(&g, &l, 1, 0, 1).unwrap_err();
        assert_eq!(e.axiom, RAxiom::R4);
    }

    #[test]
    fn enumeration_counts() {
        let l = lists(&[&[1, 2], &[3], &[1, 2, 3]]);
        let mut seen = Vec::new();
        for_each_l_coloring(&l, 100, |c| {
            seen.push(c.0.clone());
            true
        })
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert!(seen.iter().all(|c| l.admits(&Coloring::new(c.clone()))));
        assert!(for_each_l_coloring(&l, 5, |_| true).is_err());
    }
}
