//! Exhaustive clustered (list) coloring by backtracking.
//!
//! Monochromatic components of the partial coloring are tracked in a
//! union-find with rollback, so branches die as soon as a component outgrows
//! `η` or an `F`-colored edge appears.

use crate::error::{check_cap, Result};
use crate::graph::{clustering_of, Color, ColorSet, Coloring, Graph, Vertex};
use crate::lists::ListAssignment;

/// Default cap on the size of the coloring space a brute-force search may face.
pub const DEFAULT_BRUTE_FORCE_BUDGET: u128 = 100_000_000;

/// Union-find by size without path compression, so unions can be undone.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Merges and returns the new root.
    fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        a
    }

    fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let (a, b) = self.history.pop().unwrap();
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

/// Search counters, reported by the harness.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    lists: Vec<Vec<Color>>,
    eta: usize,
    stable: &'a ColorSet,
    /// Restricts color `j` to vertices after the first use of color `j - 1`,
    /// valid when all lists are the same palette.
    canonical: bool,
    colors: Vec<Option<Color>>,
    dsu: Dsu,
    stats: SearchStats,
}

impl Search<'_> {
    fn run(&mut self, i: usize, used: usize) -> bool {
        self.stats.nodes += 1;
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let limit = if self.canonical { (used + 1).min(self.lists[v].len()) } else { self.lists[v].len() };
        for ci in 0..limit {
            let x = self.lists[v][ci];
            if self.stable.contains(&x) && self.g.neighbors(v).iter().any(|&u| self.colors[u] == Some(x)) {
                continue;
            }
            let mark = self.dsu.history.len();
            let mut root = v;
            for &u in self.g.neighbors(v) {
                if self.colors[u] == Some(x) {
                    root = self.dsu.union(root, u);
                }
            }
            if self.dsu.size[self.dsu.find(root)] <= self.eta {
                self.colors[v] = Some(x);
                if self.run(i + 1, used.max(ci + 1)) {
                    return true;
                }
                self.colors[v] = None;
            }
            self.dsu.rollback(mark);
        }
        false
    }
}

/// Vertices in BFS order, component by component, so each vertex tends to
/// meet already-colored neighbors.
fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn search(
    g: &Graph,
    lists: Vec<Vec<Color>>,
    eta: usize,
    stable: &ColorSet,
    canonical: bool,
    stats: &mut SearchStats,
) -> Option<Coloring> {
    let mut s = Search {
        g,
        order: bfs_order(g),
        lists,
        eta,
        stable,
        canonical,
        colors: vec![None; g.n()],
        dsu: Dsu::new(g.n()),
        stats: SearchStats::default(),
    };
    let found = s.run(0, 0);
    stats.nodes += s.stats.nodes;
    found.then(|| Coloring::new(s.colors.into_iter().map(Option::unwrap).collect()))
}

/// Minimum clustering over all colorings with colors `1..=k`, with a witness.
pub fn brute_force_min_clustering(g: &Graph, k: usize) -> Result<(usize, Coloring)> {
    brute_force_min_clustering_with(g, k, DEFAULT_BRUTE_FORCE_BUDGET, &mut SearchStats::default())
}

pub fn brute_force_min_clustering_with(
    g: &Graph,
    k: usize,
    budget: u128,
    stats: &mut SearchStats,
) -> Result<(usize, Coloring)> {
    check_cap("coloring space", (k as u128).saturating_pow(g.n() as u32), budget)?;
    if g.n() == 0 {
        return Ok((0, Coloring::new(vec![])));
    }
    if k == 0 {
        return crate::error::input("no colors for a nonempty graph");
    }
    let palette: Vec<Color> = (1..=k as Color).collect();
    for eta in 1..=g.n() {
        if let Some(c) = search(g, vec![palette.clone(); g.n()], eta, &ColorSet::new(), true, stats) {
            assert_eq!(clustering_of(g, &c)?, eta);
            return Ok((eta, c));
        }
    }
    unreachable!("a single color always achieves clustering n")
}

/// An L-coloring with clustering at most `eta` whose classes of colors in
/// `stable` are stable sets, or `None` when there is none.
pub fn brute_force_list_coloring(
    g: &Graph,
    l: &ListAssignment,
    eta: usize,
    stable: &ColorSet,
) -> Result<Option<Coloring>> {
    brute_force_list_coloring_with(g, l, eta, stable, DEFAULT_BRUTE_FORCE_BUDGET, &mut SearchStats::default())
}

pub fn brute_force_list_coloring_with(
    g: &Graph,
    l: &ListAssignment,
    eta: usize,
    stable: &ColorSet,
    budget: u128,
    stats: &mut SearchStats,
) -> Result<Option<Coloring>> {
    l.check_len(g)?;
    check_cap("coloring space", l.coloring_count(), budget)?;
    if g.n() == 0 {
        return Ok(Some(Coloring::new(vec![])));
    }
    if eta == 0 {
        return Ok(None);
    }
    let lists: Vec<Vec<Color>> = l.lists.iter().map(|x| x.iter().copied().collect()).collect();
    let found = search(g, lists, eta, stable, false, stats);
    if let Some(c) = &found {
        assert!(l.admits(c) && clustering_of(g, c)? <= eta);
    }
    Ok(found)
}

/// `k`-coloring with clustering at most `eta`.
pub fn brute_force_k_coloring(g: &Graph, k: usize, eta: usize) -> Result<Option<Coloring>> {
    brute_force_list_coloring(g, &ListAssignment::full(g.n(), k as Color), eta, &ColorSet::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, gnp_with, path, triangular_grid};
    use crate::lists::for_each_l_coloring;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain enumeration oracle.
    fn oracle(g: &Graph, l: &ListAssignment, eta: usize, stable: &ColorSet) -> bool {
        let mut found = false;
        for_each_l_coloring(l, u128::MAX, |c| {
            let ok = clustering_of(g, c).unwrap() <= eta
                && g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v) || !stable.contains(&c.color(u)));
            found |= ok;
            !ok
        })
        .unwrap();
        found
    }

    #[test]
    fn min_clustering_small_cases() {
        assert_eq!(brute_force_min_clustering(&path(6), 1).unwrap().0, 6);
        assert_eq!(brute_force_min_clustering(&complete_bipartite(3, 4), 2).unwrap().0, 1);
        assert_eq!(brute_force_min_clustering(&cycle(5), 2).unwrap().0, 2);
        assert_eq!(brute_force_min_clustering(&complete(5), 2).unwrap().0, 3);
        assert_eq!(brute_force_min_clustering(&Graph::empty(0), 2).unwrap().0, 0);
    }

    #[test]
    fn triangular_grid_forces_long_paths() {
        for eta in 1..=4 {
            let (value, _) = brute_force_min_clustering(&triangular_grid(eta), 2).unwrap();
            assert!(value >= eta, "eta {eta} gave {value}");
        }
    }

    #[test]
    fn list_cases() {
        let p3 = path(3);
        let two = ListAssignment::full(3, 2);
        assert!(brute_force_list_coloring(&p3, &two, 1, &ColorSet::new()).unwrap().is_some());
        let k3 = complete(3);
        assert!(brute_force_list_coloring(&k3, &two, 1, &ColorSet::new()).unwrap().is_none());
        let single = ListAssignment::new(vec![[1].into(), [1].into(), [2].into()]);
        assert_eq!(
            brute_force_list_coloring(&p3, &single, 2, &ColorSet::new()).unwrap(),
            Some(Coloring::new(vec![1, 1, 2]))
        );
        assert_eq!(brute_force_list_coloring(&p3, &single, 1, &ColorSet::new()).unwrap(), None);
        assert_eq!(brute_force_list_coloring(&p3, &single, 2, &[1].into()).unwrap(), None);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(brute_force_min_clustering(&path(30), 2).is_err());
        assert!(brute_force_list_coloring(&path(30), &ListAssignment::full(30, 2), 1, &ColorSet::new()).is_err());
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let n = rng.gen_range(0..8);
            let g = gnp_with(n, 0.45, &mut rng);
            let l = ListAssignment::new(
                (0..n)
                    .map(|_| {
                        let mut x: ColorSet = (1..=3).filter(|_| rng.gen_bool(0.5)).collect();
                        x.insert(rng.gen_range(1..=3));
                        x
                    })
                    .collect(),
            );
            let eta = rng.gen_range(1..4);
            let stable: ColorSet = if rng.gen_bool(0.3) { [1].into() } else { ColorSet::new() };
            let got = brute_force_list_coloring(&g, &l, eta, &stable).unwrap();
            assert_eq!(got.is_some(), oracle(&g, &l, eta, &stable));
        }
    }
}
