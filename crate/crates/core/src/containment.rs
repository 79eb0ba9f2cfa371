//! Subgraph, minor and odd-minor containment for desk-scale graphs.
//!
//! Minor search grows one connected branch set per pattern vertex, with
//! adjacency pruning against already placed neighbors and root ordering inside
//! classes of twin pattern vertices. Odd minors are decided exactly on each
//! candidate model by enumerating the admissible 2-colorings of every branch set.

use std::collections::BTreeMap;

use crate::error::{check_cap, Result};
use crate::graph::{edge, for_each_subset, Edge, Graph, Vertex, VertexSet};

pub const DEFAULT_MINOR_HOST_CAP: usize = 12;
pub const DEFAULT_MINOR_PATTERN_CAP: usize = 6;

/// An `H`-minor: one branch set per pattern vertex and one host edge per pattern edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
    pub edge_images: BTreeMap<Edge, Edge>,
}

/// A 2-coloring of the union of the branch sets witnessing an odd minor.
///
/// Branch set `α(h)` is read as the spanning subgraph of `G[α(h)]` formed by
/// its bichromatic edges; the certificate is valid when that subgraph is
/// connected (so the coloring is proper on a connected branch set) and every
/// edge image is monochromatic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCertificate {
    pub two_coloring: BTreeMap<Vertex, bool>,
}

/// Finds `S`, `T` with `|S| = s`, `|T| = t` and all `S`–`T` edges present.
pub fn has_kst_subgraph(g: &Graph, s: usize, t: usize) -> Option<(VertexSet, VertexSet)> {
    if s + t > g.n() {
        return None;
    }
    // Enumerate the smaller side and look for a large common neighborhood.
    let (small, large, swapped) = if s <= t { (s, t, false) } else { (t, s, true) };
    let verts: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= large).collect();
    let mut found = None;
    if small == 0 {
        let t_side: VertexSet = g.vertices().take(large).collect();
        return Some(if swapped {
            (t_side, VertexSet::new())
        } else {
            (VertexSet::new(), t_side)
        });
    }
    for_each_subset(&verts, small, |side| {
        let mut common: Vec<Vertex> = g.neighbors(side[0]).to_vec();
        for &v in &side[1..] {
            common.retain(|w| g.has_edge(v, *w));
            if common.len() < large {
                return true;
            }
        }
        if common.len() >= large {
            let a: VertexSet = side.iter().copied().collect();
            let b: VertexSet = common.into_iter().take(large).collect();
            found = Some(if swapped { (b, a) } else { (a, b) });
            return false;
        }
        true
    });
    found
}

/// Checks every condition of an `H`-minor, with a diagnostic on failure.
pub fn check_minor_model(g: &Graph, h: &Graph, m: &MinorModel) -> std::result::Result<(), String> {
    if m.branch_sets.len() != h.n() {
        return Err(format!(
            "{} branch sets for a pattern on {} vertices",
            m.branch_sets.len(),
            h.n()
        ));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (p, b) in m.branch_sets.iter().enumerate() {
        if b.is_empty() {
            return Err(format!("branch set of pattern vertex {p} is empty"));
        }
        for &v in b {
            if v >= g.n() {
                return Err(format!("branch set {p} holds out-of-range vertex {v}"));
            }
            if owner[v] != usize::MAX {
                return Err(format!("branch sets {} and {p} overlap at {v}", owner[v]));
            }
            owner[v] = p;
        }
        if !g.is_connected_set(b) {
            return Err(format!("branch set of pattern vertex {p} is not connected"));
        }
    }
    if m.edge_images.len() != h.m() || !h.edges().iter().all(|e| m.edge_images.contains_key(e)) {
        return Err("edge images do not match the pattern edges".into());
    }
    let mut used = BTreeMap::new();
    for (&(p, q), &(u, v)) in &m.edge_images {
        if !g.has_edge(u, v) {
            return Err(format!("image {u}-{v} of pattern edge {p}-{q} is not a host edge"));
        }
        let ok = (owner[u] == p && owner[v] == q) || (owner[u] == q && owner[v] == p);
        if !ok {
            return Err(format!(
                "image {u}-{v} does not join the branch sets of {p} and {q}"
            ));
        }
        if let Some(prev) = used.insert(edge(u, v), (p, q)) {
            return Err(format!("pattern edges {prev:?} and {:?} share an image", (p, q)));
        }
    }
    Ok(())
}

pub fn validate_minor_model(g: &Graph, h: &Graph, m: &MinorModel) -> bool {
    check_minor_model(g, h, m).is_ok()
}

pub fn check_odd_certificate(
    g: &Graph,
    h: &Graph,
    m: &MinorModel,
    cert: &OddCertificate,
) -> std::result::Result<(), String> {
    check_minor_model(g, h, m)?;
    for (p, b) in m.branch_sets.iter().enumerate() {
        let mut colors = BTreeMap::new();
        for &v in b {
            let Some(&c) = cert.two_coloring.get(&v) else {
                return Err(format!("vertex {v} of branch set {p} is uncolored"));
            };
            colors.insert(v, c);
        }
        if !bichromatic_connected(g, b, |v| colors[&v]) {
            return Err(format!(
                "no connected subgraph of branch set {p} is properly colored"
            ));
        }
    }
    for (&(p, q), &(u, v)) in &m.edge_images {
        if cert.two_coloring.get(&u) != cert.two_coloring.get(&v) {
            return Err(format!("ends of the image of {p}-{q} receive different colors"));
        }
    }
    Ok(())
}

pub fn validate_odd_certificate(g: &Graph, h: &Graph, m: &MinorModel, cert: &OddCertificate) -> bool {
    check_odd_certificate(g, h, m, cert).is_ok()
}

fn bichromatic_connected(g: &Graph, b: &VertexSet, color: impl Fn(Vertex) -> bool) -> bool {
    let Some(&start) = b.iter().next() else {
        return false;
    };
    let mut seen = VertexSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if b.contains(&w) && color(w) != color(v) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == b.len()
}

fn check_caps(g: &Graph, h: &Graph, host_cap: usize, pattern_cap: usize) -> Result<()> {
    check_cap("minor host", g.n() as u128, host_cap as u128)?;
    check_cap("minor pattern", h.n() as u128, pattern_cap as u128)?;
    check_cap("minor host", g.n() as u128, 64)
}

/// An `h`-minor of `g`, if one exists.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    has_minor_capped(g, h, DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP)
}

pub fn has_minor_capped(
    g: &Graph,
    h: &Graph,
    host_cap: usize,
    pattern_cap: usize,
) -> Result<Option<MinorModel>> {
    has_minor_counted(g, h, host_cap, pattern_cap).map(|(m, _)| m)
}

/// [`has_minor_capped`] that also returns the number of partial models visited.
pub fn has_minor_counted(
    g: &Graph,
    h: &Graph,
    host_cap: usize,
    pattern_cap: usize,
) -> Result<(Option<MinorModel>, u64)> {
    check_caps(g, h, host_cap, pattern_cap)?;
    let mut found = None;
    let search = MinorSearch::new(g, h);
    search.run(&mut |sets| {
        found = Some(model_from_sets(g, h, sets, |_, _| true).expect("adjacent branch sets"));
        false
    });
    Ok((found, search.nodes.get()))
}

/// An odd `h`-minor of `g` with its certificate, if one exists.
pub fn has_odd_minor(g: &Graph, h: &Graph) -> Result<Option<(MinorModel, OddCertificate)>> {
    has_odd_minor_capped(g, h, DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP)
}

pub fn has_odd_minor_capped(
    g: &Graph,
    h: &Graph,
    host_cap: usize,
    pattern_cap: usize,
) -> Result<Option<(MinorModel, OddCertificate)>> {
    has_odd_minor_counted(g, h, host_cap, pattern_cap).map(|(m, _)| m)
}

/// [`has_odd_minor_capped`] that also returns the number of partial models visited.
pub fn has_odd_minor_counted(
    g: &Graph,
    h: &Graph,
    host_cap: usize,
    pattern_cap: usize,
) -> Result<(Option<(MinorModel, OddCertificate)>, u64)> {
    check_caps(g, h, host_cap, pattern_cap)?;
    let mut found = None;
    let search = MinorSearch::new(g, h);
    search.run(&mut |sets| {
        if let Some(res) = odd_witness(g, h, sets) {
            found = Some(res);
            return false;
        }
        true
    });
    Ok((found, search.nodes.get()))
}

fn mask_to_set(m: u64) -> VertexSet {
    (0..64).filter(|&v| m >> v & 1 == 1).collect()
}

fn model_from_sets(
    g: &Graph,
    h: &Graph,
    sets: &[u64],
    admissible: impl Fn(Vertex, Vertex) -> bool,
) -> Option<MinorModel> {
    let mut edge_images = BTreeMap::new();
    for &(p, q) in h.edges() {
        let image = g.edges().iter().copied().find(|&(u, v)| {
            let inside = |x: Vertex, s: u64| s >> x & 1 == 1;
            ((inside(u, sets[p]) && inside(v, sets[q])) || (inside(u, sets[q]) && inside(v, sets[p])))
                && admissible(u, v)
        })?;
        edge_images.insert((p, q), image);
    }
    Some(MinorModel {
        branch_sets: sets.iter().map(|&s| mask_to_set(s)).collect(),
        edge_images,
    })
}

/// All 2-colorings of `b` (smallest vertex fixed to `false`) under which the
/// bichromatic edges of `G[b]` connect `b`.
fn admissible_colorings(g: &Graph, b: u64) -> Vec<u64> {
    let verts: Vec<Vertex> = (0..64).filter(|&v| b >> v & 1 == 1).collect();
    let set: VertexSet = verts.iter().copied().collect();
    let k = verts.len();
    let mut out = Vec::new();
    for code in 0u64..1 << (k - 1) {
        let mut coloring = 0u64;
        for (i, &v) in verts.iter().enumerate().skip(1) {
            if code >> (i - 1) & 1 == 1 {
                coloring |= 1 << v;
            }
        }
        if bichromatic_connected(g, &set, |v| coloring >> v & 1 == 1) {
            out.push(coloring);
        }
    }
    out
}

fn odd_witness(g: &Graph, h: &Graph, sets: &[u64]) -> Option<(MinorModel, OddCertificate)> {
    let k = sets.len();
    let options: Vec<Vec<u64>> = sets.iter().map(|&b| admissible_colorings(g, b)).collect();
    // Pattern edges checked once both ends are assigned.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(p, q) in h.edges() {
        checks[p.max(q)].push(p.min(q));
    }
    let cross_edges = |p: usize, q: usize| -> Vec<Edge> {
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                (sets[p] >> u & 1 == 1 && sets[q] >> v & 1 == 1)
                    || (sets[q] >> u & 1 == 1 && sets[p] >> v & 1 == 1)
            })
            .collect()
    };
    let mut chosen = vec![0u64; k];
    fn rec(
        i: usize,
        options: &[Vec<u64>],
        sets: &[u64],
        checks: &[Vec<usize>],
        cross: &dyn Fn(usize, usize) -> Vec<Edge>,
        chosen: &mut Vec<u64>,
    ) -> bool {
        if i == options.len() {
            return true;
        }
        for &base in &options[i] {
            for flip in [false, true] {
                chosen[i] = if flip { base ^ sets[i] } else { base };
                let color = |v: Vertex| chosen.iter().fold(0u64, |a, &c| a | c) >> v & 1 == 1;
                let ok = checks[i].iter().all(|&q| {
                    cross(q, i).iter().any(|&(u, v)| color(u) == color(v))
                });
                if ok && rec(i + 1, options, sets, checks, cross, chosen) {
                    return true;
                }
            }
        }
        false
    }
    if !rec(0, &options, sets, &checks, &cross_edges, &mut chosen) {
        return None;
    }
    let all = chosen.iter().fold(0u64, |a, &c| a | c);
    let color = |v: Vertex| all >> v & 1 == 1;
    let model = model_from_sets(g, h, sets, |u, v| color(u) == color(v))?;
    let two_coloring = sets
        .iter()
        .flat_map(|&b| mask_to_set(b))
        .map(|v| (v, color(v)))
        .collect();
    Some((model, OddCertificate { two_coloring }))
}

struct MinorSearch<'a> {
    adj: Vec<u64>,
    h: &'a Graph,
    order: Vec<usize>,
    /// Previous pattern vertex (in search order) of the same twin class.
    twin_prev: Vec<Option<usize>>,
    all: u64,
    /// Partial models visited.
    nodes: std::cell::Cell<u64>,
}

impl<'a> MinorSearch<'a> {
    fn new(g: &Graph, h: &'a Graph) -> Self {
        let adj = g.adjacency_masks().expect("host within 64 vertices");
        let k = h.n();
        // Highest degree first, then keep the placed part connected when possible.
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let links = h.neighbors(p).iter().filter(|&&q| placed[q]).count();
                    (links, h.degree(p), std::cmp::Reverse(p))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let twins = |p: usize, q: usize| {
            let np: Vec<_> = h.neighbors(p).iter().filter(|&&x| x != q).collect();
            let nq: Vec<_> = h.neighbors(q).iter().filter(|&&x| x != p).collect();
            np == nq
        };
        let mut twin_prev = vec![None; k];
        for (i, &p) in order.iter().enumerate() {
            twin_prev[p] = order[..i].iter().rev().copied().find(|&q| twins(p, q));
        }
        MinorSearch {
            adj,
            h,
            order,
            twin_prev,
            all: if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 },
            nodes: std::cell::Cell::new(0),
        }
    }

    /// Calls `visit` with the branch-set masks of every model found, until it returns false.
    fn run(&self, visit: &mut dyn FnMut(&[u64]) -> bool) {
        let mut sets = vec![0u64; self.h.n()];
        if self.h.n() == 0 {
            visit(&sets);
            return;
        }
        self.place(0, 0, &mut sets, visit);
    }

    fn place(&self, depth: usize, used: u64, sets: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        self.nodes.set(self.nodes.get() + 1);
        if depth == self.order.len() {
            return visit(sets);
        }
        let p = self.order[depth];
        let remaining = (self.order.len() - depth) as u32;
        let avail = self.all & !used;
        if avail.count_ones() < remaining {
            return true;
        }
        let placed_nbrs: Vec<u64> = self
            .h
            .neighbors(p)
            .iter()
            .filter(|&&q| sets[q] != 0)
            .map(|&q| sets[q])
            .collect();
        let min_root = match self.twin_prev[p] {
            Some(q) => sets[q].trailing_zeros() as usize + 1,
            None => 0,
        };
        // Leave at least one vertex for each later pattern vertex.
        let max_size = avail.count_ones() - (remaining - 1);
        for root in min_root..64 {
            if avail >> root & 1 == 0 {
                continue;
            }
            let allowed = avail & !((1u64 << root) - 1);
            let root_bit = 1u64 << root;
            let ext = self.adj[root] & allowed & !root_bit;
            let mut keep_going = true;
            self.connected_sets(root_bit, ext, 0, allowed, max_size, &mut |b| {
                let touches_all = placed_nbrs
                    .iter()
                    .all(|&q| self.neighborhood(b) & q != 0);
                if touches_all {
                    sets[p] = b;
                    let cont = self.place(depth + 1, used | b, sets, visit);
                    sets[p] = 0;
                    if !cont {
                        keep_going = false;
                        return false;
                    }
                }
                true
            });
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn neighborhood(&self, b: u64) -> u64 {
        let mut out = 0;
        let mut rest = b;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & !b
    }

    /// Each connected set containing `sub` inside `allowed`, exactly once.
    fn connected_sets(
        &self,
        sub: u64,
        ext: u64,
        forbidden: u64,
        allowed: u64,
        max_size: u32,
        f: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if !f(sub) {
            return false;
        }
        if sub.count_ones() >= max_size {
            return true;
        }
        let mut ext = ext;
        let mut forbidden = forbidden;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            let bit = 1u64 << w;
            ext &= !bit;
            let grown = sub | bit;
            let new_ext = (ext | self.adj[w]) & allowed & !grown & !forbidden;
            if !self.connected_sets(grown, new_ext, forbidden, allowed, max_size, f) {
                return false;
            }
            forbidden |= bit;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, gnp_with, path, triangular_grid};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive labelling oracle: every map `V(g) → {unused} ∪ V(h)`.
    fn brute_force_minor(g: &Graph, h: &Graph, odd: bool) -> bool {
        let n = g.n();
        let k = h.n();
        let mut labels = vec![0usize; n];
        loop {
            let sets: Vec<VertexSet> = (1..=k)
                .map(|p| (0..n).filter(|&v| labels[v] == p).collect())
                .collect();
            let ok = sets.iter().all(|b| g.is_connected_set(b))
                && h.edges().iter().all(|&(p, q)| {
                    g.edges().iter().any(|&(u, v)| {
                        (sets[p].contains(&u) && sets[q].contains(&v))
                            || (sets[q].contains(&u) && sets[p].contains(&v))
                    })
                });
            if ok && (!odd || brute_force_parity(g, h, &sets)) {
                return true;
            }
            // next label vector
            let mut i = 0;
            loop {
                if i == n {
                    return k == 0;
                }
                labels[i] += 1;
                if labels[i] <= k {
                    break;
                }
                labels[i] = 0;
                i += 1;
            }
        }
    }

    fn brute_force_parity(g: &Graph, h: &Graph, sets: &[VertexSet]) -> bool {
        let union: Vec<Vertex> = sets.iter().flatten().copied().collect();
        (0u32..1 << union.len()).any(|code| {
            let color = |v: Vertex| {
                let i = union.iter().position(|&x| x == v).unwrap();
                code >> i & 1 == 1
            };
            sets.iter().all(|b| bichromatic_connected(g, b, color))
                && h.edges().iter().all(|&(p, q)| {
                    g.edges().iter().any(|&(u, v)| {
                        ((sets[p].contains(&u) && sets[q].contains(&v))
                            || (sets[q].contains(&u) && sets[p].contains(&v)))
                            && color(u) == color(v)
                    })
                })
        })
    }

    #[test]
    fn kst_examples() {
        assert!(has_kst_subgraph(&triangular_grid(4), 1, 7).is_none());
        let (s, t) = has_kst_subgraph(&complete_bipartite(2, 3), 2, 3).unwrap();
        assert_eq!((s.len(), t.len()), (2, 3));
        assert!(has_kst_subgraph(&complete(3), 2, 2).is_none());
        assert!(has_kst_subgraph(&complete(4), 2, 2).is_some());
        let (s, t) = has_kst_subgraph(&complete_bipartite(2, 3), 3, 2).unwrap();
        assert_eq!((s.len(), t.len()), (3, 2));
        for &a in &s {
            for &b in &t {
                assert!(complete_bipartite(2, 3).has_edge(a, b));
            }
        }
    }

    #[test]
    fn minor_examples() {
        assert!(has_minor(&triangular_grid(3), &complete(5)).unwrap().is_none());
        let k33 = complete_bipartite(3, 3);
        let m = has_minor(&k33, &complete(4)).unwrap().unwrap();
        assert!(validate_minor_model(&k33, &complete(4), &m));
        let m = has_minor(&path(3), &complete(1)).unwrap().unwrap();
        assert_eq!(m.branch_sets, vec![VertexSet::from([0])]);
        assert!(has_minor(&path(13), &complete(2)).is_err());
    }

    #[test]
    fn odd_minor_examples() {
        assert!(has_odd_minor(&complete_bipartite(4, 4), &complete(3)).unwrap().is_none());
        let k3 = complete(3);
        let (m, cert) = has_odd_minor(&k3, &k3).unwrap().unwrap();
        assert!(m.branch_sets.iter().all(|b| b.len() == 1));
        assert!(validate_odd_certificate(&k3, &k3, &m, &cert));
        assert!(has_odd_minor(&path(2), &complete(1)).unwrap().is_some());
        let c5 = cycle(5);
        let (m, cert) = has_odd_minor(&c5, &k3).unwrap().unwrap();
        assert!(validate_odd_certificate(&c5, &k3, &m, &cert));
    }

    #[test]
    fn validators_reject_mutations() {
        let k4 = complete(4);
        let k3 = complete(3);
        let (m, cert) = has_odd_minor(&k4, &k3).unwrap().unwrap();
        assert!(validate_odd_certificate(&k4, &k3, &m, &cert));
        let mut overlapping = m.clone();
        let v = *overlapping.branch_sets[0].iter().next().unwrap();
        overlapping.branch_sets[1].insert(v);
        assert!(!validate_minor_model(&k4, &k3, &overlapping));
        let (&(p, q), &(u, _)) = m.edge_images.iter().next().unwrap();
        let mut bad = cert.clone();
        let c = bad.two_coloring[&u];
        // flipping a singleton branch set breaks the parity of its edge image
        assert!(m.branch_sets[p].len() == 1 && m.branch_sets[q].len() == 1);
        bad.two_coloring.insert(u, !c);
        assert!(!validate_odd_certificate(&k4, &k3, &m, &bad));
        let mut missing = m.clone();
        missing.edge_images.remove(&(p, q));
        assert!(!validate_minor_model(&k4, &k3, &missing));
    }

    #[test]
    fn agrees_with_labelling_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let patterns = [complete(1), complete(2), path(3), complete(3), cycle(4), complete(4)];
        for trial in 0..60 {
            let n = 3 + trial % 5;
            let g = gnp_with(n, 0.45, &mut rng);
            for h in &patterns {
                let fast = has_minor(&g, h).unwrap();
                assert_eq!(fast.is_some(), brute_force_minor(&g, h, false), "{g:?} {h:?}");
                if let Some(m) = &fast {
                    assert!(validate_minor_model(&g, h, m));
                }
                if n <= 6 && h.n() <= 3 {
                    let odd = has_odd_minor(&g, h).unwrap();
                    assert_eq!(odd.is_some(), brute_force_minor(&g, h, true), "odd {g:?} {h:?}");
                    if let Some((m, c)) = odd {
                        assert!(validate_odd_certificate(&g, h, &m, &c));
                        assert!(fast.is_some());
                    }
                }
            }
        }
    }
}
