//! The bipartite block coloring: with `G − Y₁'` bipartite on sides `P` and
//! `Q`, `P` takes colors from `S = {ℓ} ∪ [s+3, s+2+r]`, `Q` takes colors
//! outside `S`, and `Y₁'` keeps its precolors.

use rand::Rng;

use crate::error::{input, Error, Result};
use crate::graph::{monochromatic_components, Color, ColorSet, Coloring, Graph, VertexSet};
use crate::lists::{growth, high_colors, ListAssignment, StatementFailure};

/// `{ℓ} ∪ [s+3, s+2+r]`.
pub fn special_colors(s: usize, ell: Color, r: usize) -> ColorSet {
    let mut x = high_colors(s, r);
    x.insert(ell);
    x
}

/// Colors `P` with the smallest color of `L(v) ∩ S` and `Q` with the smallest
/// color of `L(v) − S`, where `P` is the side of each component of
/// `G − Y₁'` holding its smallest vertex.
pub fn bipartite_block_coloring(
    g: &Graph,
    l: &ListAssignment,
    y1_prime: &VertexSet,
    ell: Color,
    s: usize,
    r: usize,
) -> Result<Coloring> {
    l.check_len(g)?;
    g.check_vertex_set(y1_prime)?;
    let special = special_colors(s, ell, r);
    let rest = g.remove_vertices(y1_prime);
    let Some(side) = rest.graph.bipartition() else {
        return input("the graph minus Y1' is not bipartite");
    };
    let mut colors = vec![0 as Color; g.n()];
    for &y in y1_prime {
        colors[y] = l
            .single_color(y)
            .ok_or_else(|| Error::Precondition(format!("vertex {y} of Y1' has no singleton list")))?;
    }
    for (i, &on_q) in side.iter().enumerate() {
        let v = rest.to_parent(i);
        let pick = if on_q {
            l.lists[v].iter().find(|x| !special.contains(x))
        } else {
            l.lists[v].iter().find(|x| special.contains(x))
        };
        colors[v] = *pick.ok_or_else(|| {
            Error::Precondition(format!("vertex {v} has no admissible color on side {}", if on_q { "Q" } else { "P" }))
        })?;
    }
    Ok(Coloring::new(colors))
}

/// Checks the structural content of the block coloring claim for `c`:
/// high classes are stable (`"high stable"`); components avoiding `Y₁'` are
/// single vertices (`"single"`); components of a color in `S` meeting `Y₁'`
/// lie inside it (`"special inside"`); for the other colors, the part of a
/// component outside `Y₁'` is stable and each of its vertices has at least
/// `s` neighbors in `Y₁'` (`"attached"`).
pub fn check_block_claims(
    g: &Graph,
    y1_prime: &VertexSet,
    c: &Coloring,
    ell: Color,
    s: usize,
    r: usize,
) -> Result<Vec<StatementFailure>> {
    let mut out = Vec::new();
    let fail = |statement, detail: String| StatementFailure { statement, detail };
    let high = high_colors(s, r);
    let special = special_colors(s, ell, r);
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| c.color(u) == c.color(v) && high.contains(&c.color(u))) {
        out.push(fail("high stable", format!("edge {u}-{v} inside class {}", c.color(u))));
    }
    for m in monochromatic_components(g, c)? {
        let x = c.color(*m.first().unwrap());
        if m.is_disjoint(y1_prime) {
            if m.len() > 1 {
                out.push(fail("single", format!("component {m:?} avoids Y1'")));
            }
            continue;
        }
        if special.contains(&x) {
            if !m.is_subset(y1_prime) {
                out.push(fail("special inside", format!("color {x} component {m:?} leaves Y1'")));
            }
            continue;
        }
        let outside: VertexSet = m.difference(y1_prime).copied().collect();
        if !g.is_stable(&outside) {
            out.push(fail("attached", format!("component {m:?} has an edge outside Y1'")));
        } else if let Some(v) = outside.iter().find(|&&v| g.degree_into(v, y1_prime) < s) {
            out.push(fail("attached", format!("vertex {v} of {m:?} has fewer than {s} neighbors in Y1'")));
        }
    }
    Ok(out)
}

/// A random block coloring instance: a random bipartite graph plus a few
/// extra vertices `Z` attached anywhere, full lists `[2s+1]`, `r = s − 1`,
/// a random `ℓ ∈ [1, s+2]`, and a `(Z, ℓ)`-growth to produce `Y₁'`.
/// Returns `(graph, lists after growth, Y₁', ℓ)`.
pub fn random_block_instance<R: Rng>(
    n_bipartite: usize,
    n_extra: usize,
    s: usize,
    p: f64,
    rng: &mut R,
) -> Result<(Graph, ListAssignment, VertexSet, Color)> {
    let n = n_bipartite + n_extra;
    let side: Vec<bool> = (0..n_bipartite).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let allowed = v >= n_bipartite || side[u] != side[v];
            if allowed && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    let r = s - 1;
    let ell = rng.gen_range(1..=(s + 2) as Color);
    let full = ListAssignment::full(n, (2 * s + 1) as Color);
    let z: VertexSet = (n_bipartite..n).collect();
    let out = growth(&g, &full, s, ell, r, &z, rng.gen())?;
    Ok((g, out.lists, out.y1, ell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_pinned_is_identity() {
        let g = path(3);
        let l = ListAssignment::new(vec![[2].into(), [5].into(), [2].into()]);
        let c = bipartite_block_coloring(&g, &l, &g.vertex_set(), 1, 1, 0).unwrap();
        assert_eq!(c, Coloring::new(vec![2, 5, 2]));
    }

    #[test]
    fn even_cycle_by_sides() {
        // s = 1, r = 0, l = 1: S = {1}; P gets 1, Q gets 2.
        let g = cycle(6);
        let l = ListAssignment::full(6, 3);
        let c = bipartite_block_coloring(&g, &l, &VertexSet::new(), 1, 1, 0).unwrap();
        assert_eq!(c, Coloring::new(vec![1, 2, 1, 2, 1, 2]));
        assert!(check_block_claims(&g, &VertexSet::new(), &c, 1, 1, 0).unwrap().is_empty());
    }

    #[test]
    fn errors() {
        let g = cycle(5);
        let l = ListAssignment::full(5, 3);
        assert!(matches!(bipartite_block_coloring(&g, &l, &VertexSet::new(), 1, 1, 0), Err(Error::Input(_))));
        let g = path(2);
        let l = ListAssignment::new(vec![[2, 3].into(), [1, 2].into()]);
        assert!(matches!(bipartite_block_coloring(&g, &l, &VertexSet::new(), 1, 1, 0), Err(Error::Precondition(_))));
        let l = ListAssignment::new(vec![[1, 2].into(), [1, 2].into()]);
        assert!(matches!(
            bipartite_block_coloring(&g, &l, &VertexSet::from([0]), 1, 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn random_instances_satisfy_the_claim() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let s = rng.gen_range(1..4);
            let (g, l, y1p, ell) = random_block_instance(rng.gen_range(1..9), rng.gen_range(0..3), s, 0.4, &mut rng).unwrap();
            let c = bipartite_block_coloring(&g, &l, &y1p, ell, s, s - 1).unwrap();
            assert!(l.admits(&c));
            assert_eq!(check_block_claims(&g, &y1p, &c, ell, s, s - 1).unwrap(), vec![]);
        }
    }
}
