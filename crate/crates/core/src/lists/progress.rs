//! `(W, F)`-progress and the two iterated constructions built on it:
//! `(Z, ℓ)`-growth and the precolored-set enlargement.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Error, Result};
use crate::graph::{Color, ColorSet, Graph, Vertex, VertexSet};

use super::assignment::{high_colors, meeting_f, validate_l, validate_l_with, validate_r, ListAssignment};

/// Signature shared by [`progress`] and drop-in replacements (the harness
/// swaps in broken variants to test itself).
pub type ProgressFn = fn(&Graph, &ListAssignment, usize, usize, &VertexSet, &ColorSet, u64) -> Result<ListAssignment>;

/// A `(W, F)`-progress of the `(s, r, Y₁)`-list-assignment `l`.
///
/// New singletons are drawn from `L(y) − F` by a ChaCha8 stream seeded with
/// `seed`, visiting `W − Y₁` in increasing order. Shrunk lists keep every
/// available color of `F` and fill up with the smallest remaining colors.
pub fn progress(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    w: &VertexSet,
    f: &ColorSet,
    seed: u64,
) -> Result<ListAssignment> {
    progress_with(g, l, s, r, w, f, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub(crate) fn progress_with<R: Rng>(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    w: &VertexSet,
    f: &ColorSet,
    rng: &mut R,
) -> Result<ListAssignment> {
    l.check_len(g)?;
    g.check_vertex_set(w)?;
    if s == 0 {
        return input("s must be at least 1");
    }
    if f.len() > r {
        return Err(Error::Precondition(format!("|F| = {} exceeds r = {r}", f.len())));
    }
    let y1 = validate_l(g, l, s, r)
        .map_err(|e| Error::Precondition(format!("not an (s, r, Y1)-list-assignment: {e}")))?;
    let fresh: VertexSet = w.difference(&y1).copied().collect();
    let mut out = l.clone();
    for &y in &fresh {
        let avail: Vec<Color> = l.lists[y].difference(f).copied().collect();
        if avail.is_empty() {
            return Err(Error::Precondition(format!("L({y}) is contained in F")));
        }
        out.lists[y] = ColorSet::from([avail[rng.gen_range(0..avail.len())]]);
    }
    let y1p: VertexSet = y1.union(w).copied().collect();
    for v in g.n_lt_s(&y1p, s)? {
        let pinned: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|u| fresh.contains(u)).collect();
        let blocked: ColorSet = pinned.iter().map(|&u| out.lists[u].first().copied().unwrap()).collect();
        let target = l.lists[v].len().saturating_sub(pinned.len());
        let avail: Vec<Color> = l.lists[v].difference(&blocked).copied().collect();
        if avail.len() < target {
            return Err(Error::Precondition(format!("too few colors left for vertex {v}")));
        }
        let (mut keep, rest): (Vec<Color>, Vec<Color>) = avail.into_iter().partition(|x| f.contains(x));
        keep.extend(rest);
        keep.truncate(target);
        out.lists[v] = keep.into_iter().collect();
    }
    Ok(out)
}

/// A failed statement with its label (`"1"`, `"claim 2"`, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementFailure {
    pub statement: &'static str,
    pub detail: String,
}

fn failure(statement: &'static str, detail: impl Into<String>) -> StatementFailure {
    StatementFailure {
        statement,
        detail: detail.into(),
    }
}

/// Vertices `y ∈ Y` and colors `x ∈ L(y) ∩ colors` with a neighbor outside `Y`
/// whose list also holds `x`; returns the first such `(y, neighbor, x)`.
fn shared_across(g: &Graph, l: &ListAssignment, y: &VertexSet, colors: &ColorSet) -> Option<(Vertex, Vertex, Color)> {
    for &u in y {
        for &x in l.lists[u].intersection(colors) {
            if let Some(&v) = g.neighbors(u).iter().find(|v| !y.contains(v) && l.lists[**v].contains(&x)) {
                return Some((u, v, x));
            }
        }
    }
    None
}

/// Checks the five statements about a `(W, F)`-progress `lp` of `l`.
/// Statement 4 is only checked when `N^{≥s}(Y₁) ⊆ W`.
pub fn check_progress_statements(
    g: &Graph,
    l: &ListAssignment,
    lp: &ListAssignment,
    s: usize,
    r: usize,
    w: &VertexSet,
    f: &ColorSet,
) -> Vec<StatementFailure> {
    let mut out = Vec::new();
    if lp.len() != g.n() {
        out.push(failure("1", "output has the wrong number of lists"));
        return out;
    }
    let y1 = l.singletons();
    let y1p: VertexSet = y1.union(w).copied().collect();
    if let Err(e) = validate_l_with(g, lp, s, r, Some(&y1p)) {
        out.push(failure("1", e.to_string()));
    }
    if let Some(v) = g.vertices().find(|&v| !lp.lists[v].is_subset(&l.lists[v])) {
        out.push(failure("2", format!("L'({v}) is not inside L({v})")));
    }
    let before = meeting_f(l, &y1, f);
    let after = meeting_f(lp, &y1p, f);
    if before != after {
        out.push(failure("3", format!("F-meeting sets differ: {before:?} became {after:?}")));
    }
    let premise = g.n_geq_s(&y1, s).map(|n| n.is_subset(w)).unwrap_or(false);
    if premise {
        if let Some((y, v, x)) = shared_across(g, lp, &y1p, f) {
            out.push(failure("4", format!("color {x} of {y} survives on its neighbor {v}")));
        }
    }
    if let Some(v) = g
        .vertices()
        .find(|v| !y1p.contains(v) && lp.lists[*v].intersection(f).ne(l.lists[*v].intersection(f)))
    {
        out.push(failure("5", format!("L'({v}) ∩ F differs from L({v}) ∩ F")));
    }
    out
}

/// A monochromatic component that some L-coloring can realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Escape {
    pub color: Color,
    pub component: VertexSet,
}

/// Looks for a color `x` (restricted to `colors` when given) and a component
/// of `G[{v : x ∈ L(v)}]` that meets `sources` and leaves `allowed`.
///
/// Such a component exists iff some L-coloring has a monochromatic component
/// meeting `sources` that is not inside `allowed`: color a path of the
/// component with `x` and everything else arbitrarily.
pub fn escaping_component(
    g: &Graph,
    l: &ListAssignment,
    sources: &VertexSet,
    allowed: &VertexSet,
    colors: Option<&ColorSet>,
) -> Option<Escape> {
    let palette: ColorSet = match colors {
        Some(c) => c.clone(),
        None => sources.iter().flat_map(|&v| l.lists[v].iter().copied()).collect(),
    };
    for x in palette {
        let mut seen = vec![false; g.n()];
        for &src in sources {
            if seen[src] || !l.lists[src].contains(&x) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([src]);
            seen[src] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in g.neighbors(u) {
                    if !seen[v] && l.lists[v].contains(&x) {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            if !comp.is_subset(allowed) {
                return Some(Escape { color: x, component: comp });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthOutcome {
    pub lists: ListAssignment,
    /// `Y₁' = Y₁^{(s+2)}`.
    pub y1: VertexSet,
    /// `U_0, ..., U_{s+2}`.
    pub rounds: Vec<VertexSet>,
}

/// A `(Z, ℓ)`-growth of the `(s, Y₁, ℓ, r)`-list-assignment `l`.
pub fn growth(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    ell: Color,
    r: usize,
    z: &VertexSet,
    seed: u64,
) -> Result<GrowthOutcome> {
    l.check_len(g)?;
    g.check_vertex_set(z)?;
    let mut y = validate_r(g, l, s, ell, r)
        .map_err(|e| Error::Precondition(format!("not an (s, Y1, l, r)-list-assignment: {e}")))?;
    let high = high_colors(s, r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = l.clone();
    let mut rounds = Vec::with_capacity(s + 3);
    for i in 0..=(s + 2) {
        let u = if i == 0 { z.clone() } else { g.n_geq_s(&y, s)? };
        let mut fi = high.clone();
        fi.insert(ell);
        fi.insert(i as Color);
        let next = progress_with(g, &cur, s, r + 2, &u, &fi, &mut rng)?;
        debug_assert!(g
            .vertices()
            .filter(|v| !y.contains(v) && !u.contains(v))
            .all(|v| next.lists[v].intersection(&high).eq(cur.lists[v].intersection(&high))));
        y.extend(u.iter().copied());
        rounds.push(u);
        cur = next;
    }
    Ok(GrowthOutcome { lists: cur, y1: y, rounds })
}

/// Checks growth statements 1, 2 and 4.
pub fn check_growth_statements(
    g: &Graph,
    l: &ListAssignment,
    out: &GrowthOutcome,
    s: usize,
    ell: Color,
    r: usize,
    z: &VertexSet,
) -> Vec<StatementFailure> {
    let mut res = Vec::new();
    let lp = &out.lists;
    if lp.len() != g.n() {
        res.push(failure("1", "output has the wrong number of lists"));
        return res;
    }
    match validate_r(g, lp, s, ell, r) {
        Ok(y) if y != out.y1 => res.push(failure("1", format!("singletons {y:?} differ from Y1' {:?}", out.y1))),
        Err(e) => res.push(failure("1", e.to_string())),
        Ok(_) => {}
    }
    if let Some(v) = g.vertices().find(|&v| !lp.lists[v].is_subset(&l.lists[v])) {
        res.push(failure("2", format!("L'({v}) is not inside L({v})")));
    }
    let y1 = l.singletons();
    let sources: VertexSet = y1.union(z).copied().collect();
    if let Some(e) = escaping_component(g, lp, &sources, &out.y1, None) {
        res.push(failure("4", format!("color {} component {:?} leaves Y1'", e.color, e.component)));
    }
    let mut special = high_colors(s, r);
    special.insert(ell);
    if let Some(e) = escaping_component(g, lp, &sources, &y1, Some(&special)) {
        res.push(failure("4", format!("color {} component {:?} leaves Y1", e.color, e.component)));
    }
    res
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnlargeOutcome {
    /// `L*`.
    pub lists: ListAssignment,
    /// `Y₁*`.
    pub y1: VertexSet,
    /// `U_0, ..., U_{|Y₁|+1}`.
    pub rounds: Vec<VertexSet>,
}

/// The iterated enlargement of a nonempty precolored set: with
/// `Y₁ = {y_1 < ... < y_k}`, `ℓ_i` the color of `y_i` and `ℓ_{k+1} = ℓ`,
/// `L_i` is an `(N^{≥s}(U_{i−1}), {ℓ_i} ∪ F)`-progress of `L_{i−1}`.
pub fn enlarge_precolored(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    f: &ColorSet,
    ell: Color,
    seed: u64,
) -> Result<EnlargeOutcome> {
    l.check_len(g)?;
    if f.len() + 1 > r {
        return Err(Error::Precondition(format!("|F| = {} exceeds r - 1 = {}", f.len(), r.saturating_sub(1))));
    }
    let y1 = validate_l(g, l, s, r)
        .map_err(|e| Error::Precondition(format!("not an (s, r, Y1)-list-assignment: {e}")))?;
    if y1.is_empty() {
        return Err(Error::Precondition("Y1 is empty".into()));
    }
    let mut labels: Vec<Color> = y1.iter().map(|&y| l.single_color(y).unwrap()).collect();
    labels.push(ell);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = l.clone();
    let mut rounds = vec![y1];
    for li in labels {
        let w = g.n_geq_s(rounds.last().unwrap(), s)?;
        let mut fi = f.clone();
        fi.insert(li);
        cur = progress_with(g, &cur, s, r, &w, &fi, &mut rng)?;
        rounds.push(cur.singletons());
    }
    Ok(EnlargeOutcome {
        lists: cur,
        y1: rounds.last().unwrap().clone(),
        rounds,
    })
}

/// Checks the enlargement: `L*` is an `(s, r, Y₁*)`-list-assignment inside
/// `L` (`"valid"`, `"sublist"`), Claim 2 (`"claim 2"`), preserved F-meeting
/// sets (`"c"`), no `F ∪ {ℓ}` color crossing out of `Y₁*` (`"d"`), and
/// `L* ∩ F = L ∩ F` outside `Y₁*` (`"e"`).
pub fn check_enlarge_claims(
    g: &Graph,
    l: &ListAssignment,
    out: &EnlargeOutcome,
    s: usize,
    r: usize,
    f: &ColorSet,
    ell: Color,
) -> Vec<StatementFailure> {
    let mut res = Vec::new();
    let lp = &out.lists;
    if lp.len() != g.n() {
        res.push(failure("valid", "output has the wrong number of lists"));
        return res;
    }
    if let Err(e) = validate_l_with(g, lp, s, r, Some(&out.y1)) {
        res.push(failure("valid", e.to_string()));
    }
    if let Some(v) = g.vertices().find(|&v| !lp.lists[v].is_subset(&l.lists[v])) {
        res.push(failure("sublist", format!("L*({v}) is not inside L({v})")));
    }
    let y1 = l.singletons();
    if let Some(e) = escaping_component(g, lp, &y1, &out.y1, None) {
        res.push(failure("claim 2", format!("color {} component {:?} leaves Y1*", e.color, e.component)));
    }
    if meeting_f(l, &y1, f) != meeting_f(lp, &out.y1, f) {
        res.push(failure("c", "F-meeting precolored sets differ"));
    }
    let mut fl = f.clone();
    fl.insert(ell);
    if let Some((y, v, x)) = shared_across(g, lp, &out.y1, &fl) {
        res.push(failure("d", format!("color {x} of {y} survives on its neighbor {v}")));
    }
    if let Some(v) = g
        .vertices()
        .find(|v| !out.y1.contains(v) && lp.lists[*v].intersection(f).ne(l.lists[*v].intersection(f)))
    {
        res.push(failure("e", format!("L*({v}) ∩ F differs from L({v}) ∩ F")));
    }
    res
}
