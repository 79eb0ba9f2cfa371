//! Tree decompositions: validation, exact treewidth by subset dynamic
//! programming over elimination orderings, and the min-fill heuristic.

use std::collections::BTreeSet;

use crate::error::{check_cap, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Default vertex cap for exact (exponential) decomposition searches.
pub const DEFAULT_EXACT_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Max bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// A path decomposition with the given bags in order.
    pub fn path(bags: Vec<VertexSet>) -> Self {
        let tree_edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition { bags, tree_edges }
    }

    pub fn is_path(&self) -> bool {
        let mut deg = vec![0usize; self.bags.len()];
        for &(a, b) in &self.tree_edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().all(|&d| d <= 2)
    }

    pub fn node_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Checks the tree shape, vertex-subtree connectivity and edge coverage.
pub fn check_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), String> {
    let k = td.bags.len();
    if k == 0 {
        return Err("decomposition has no nodes".into());
    }
    if td.tree_edges.len() != k - 1 {
        return Err(format!("{} tree edges on {k} nodes is not a tree", td.tree_edges.len()));
    }
    for &(a, b) in &td.tree_edges {
        if a >= k || b >= k || a == b {
            return Err(format!("bad tree edge {a}-{b}"));
        }
    }
    let adj = td.node_adjacency();
    if reachable(&adj, 0, |_| true).len() != k {
        return Err("decomposition tree is disconnected".into());
    }
    for (x, bag) in td.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
            return Err(format!("bag {x} holds out-of-range vertex {v}"));
        }
    }
    for v in g.vertices() {
        let nodes: Vec<usize> = (0..k).filter(|&x| td.bags[x].contains(&v)).collect();
        let Some(&first) = nodes.first() else {
            return Err(format!("vertex {v} is in no bag"));
        };
        if reachable(&adj, first, |x| td.bags[x].contains(&v)).len() != nodes.len() {
            return Err(format!("bags containing vertex {v} are not connected"));
        }
    }
    for &(u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return Err(format!("edge {u}-{v} is in no bag"));
        }
    }
    Ok(())
}

pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> bool {
    check_tree_decomposition(g, td).is_ok()
}

fn reachable(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if keep(y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Tree decomposition induced by eliminating vertices in `order`.
pub fn decomposition_from_ordering(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![VertexSet::new()],
            tree_edges: vec![],
        };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent_vertex = Vec::with_capacity(n);
    for &v in order {
        let higher: Vec<Vertex> = adj[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in higher.iter().enumerate() {
            for &b in &higher[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut bag: VertexSet = higher.iter().copied().collect();
        bag.insert(v);
        bags.push(bag);
        parent_vertex.push(higher.iter().copied().min_by_key(|&w| pos[w]));
    }
    let last = n - 1;
    let tree_edges = (0..n - 1)
        .map(|i| match parent_vertex[i] {
            Some(w) => (i, pos[w]),
            None => (i, last),
        })
        .collect();
    TreeDecomposition { bags, tree_edges }
}

/// Minimum over elimination orderings of the maximum bag cost, for any cost
/// that is monotone under taking subsets. Returns the optimum and an ordering.
pub(crate) fn optimal_ordering(g: &Graph, cost: impl Fn(u64) -> usize) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let adj = g.adjacency_masks().expect("exact search is capped well below 64 vertices");
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    let mut choice = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for set in 1..=full {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before = set & !(1 << v);
            let sub = best[before];
            if sub >= best[set] {
                continue;
            }
            let bag = (1u64 << v) | reach_through(&adj, v, before as u64);
            let value = sub.max(cost(bag));
            if value < best[set] {
                best[set] = value;
                choice[set] = v;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = choice[set];
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    (best[full], order)
}

/// Vertices outside `inner ∪ {v}` reachable from `v` through `inner`.
fn reach_through(adj: &[u64], v: usize, inner: u64) -> u64 {
    let mut visited = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut out = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= !visited;
        visited |= next;
        out |= next & !inner;
        frontier = next & inner;
    }
    out
}

/// Exact treewidth with an optimal decomposition.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    treewidth_exact_capped(g, DEFAULT_EXACT_CAP)
}

pub fn treewidth_exact_capped(g: &Graph, cap: usize) -> Result<(usize, TreeDecomposition)> {
    check_cap("graph for exact treewidth", g.n() as u128, cap.min(24) as u128)?;
    if g.n() == 0 {
        return Ok((0, decomposition_from_ordering(g, &[])));
    }
    let (bag, order) = optimal_ordering(g, |b| b.count_ones() as usize);
    let td = decomposition_from_ordering(g, &order);
    debug_assert_eq!(td.width() + 1, bag);
    Ok((bag - 1, td))
}

/// Greedy min-fill elimination ordering (ties: smaller degree, then smaller id).
pub fn min_fill_ordering(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let fill = |v: Vertex| {
            let ns: Vec<_> = adj[v].iter().copied().collect();
            let mut missing = 0usize;
            for (i, &a) in ns.iter().enumerate() {
                for &b in &ns[i + 1..] {
                    if !adj[a].contains(&b) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let v = *alive
            .iter()
            .min_by_key(|&&v| (fill(v), adj[v].len(), v))
            .unwrap();
        let ns: Vec<_> = adj[v].iter().copied().collect();
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &ns {
            adj[a].remove(&v);
        }
        alive.remove(&v);
        order.push(v);
    }
    order
}

/// Heuristic decomposition from the min-fill ordering.
pub fn treewidth_heuristic(g: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(g, &min_fill_ordering(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gnp_with, path, random_tree, standard_treewidth_example, triangular_grid};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Brute force over all elimination orderings.
    fn treewidth_by_permutations(g: &Graph) -> usize {
        fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
            if k == items.len() {
                f(items);
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                permute(items, k + 1, f);
                items.swap(k, i);
            }
        }
        let mut best = usize::MAX;
        let mut items: Vec<usize> = g.vertices().collect();
        permute(&mut items, 0, &mut |order| {
            best = best.min(decomposition_from_ordering(g, order).width());
        });
        best
    }

    #[test]
    fn path_decomposition_of_a_path() {
        let g = path(5);
        let td = TreeDecomposition::path((0..4).map(|i| VertexSet::from([i, i + 1])).collect());
        assert!(validate_tree_decomposition(&g, &td));
        assert_eq!(td.width(), 1);
        let single = TreeDecomposition::path(vec![g.vertex_set()]);
        assert!(validate_tree_decomposition(&g, &single));
        assert_eq!(single.width(), 4);
    }

    #[test]
    fn mutations_are_rejected() {
        let g = path(4);
        let mut td = TreeDecomposition::path((0..3).map(|i| VertexSet::from([i, i + 1])).collect());
        td.bags[1] = VertexSet::from([1]);
        let err = check_tree_decomposition(&g, &td).unwrap_err();
        assert!(err.contains("edge 1-2"), "{err}");
        let mut cyc = TreeDecomposition::path(vec![g.vertex_set(); 3]);
        cyc.tree_edges.push((0, 2));
        assert!(!validate_tree_decomposition(&g, &cyc));
        let split = TreeDecomposition {
            bags: vec![VertexSet::from([0, 1]), VertexSet::from([1, 2, 3]), VertexSet::from([0])],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        assert!(check_tree_decomposition(&g, &split).unwrap_err().contains("vertex 0"));
    }

    #[test]
    fn exact_treewidth_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(treewidth_exact(&random_tree(9, &mut rng)).unwrap().0, 1);
        for n in 1..7 {
            assert_eq!(treewidth_exact(&complete(n)).unwrap().0, n - 1);
        }
        assert_eq!(treewidth_exact(&cycle(6)).unwrap().0, 2);
        let g = standard_treewidth_example(2, 3).unwrap();
        let (w, td) = treewidth_exact(&g).unwrap();
        assert_eq!(w, 2);
        assert!(validate_tree_decomposition(&g, &td));
        assert_eq!(treewidth_exact(&triangular_grid(3)).unwrap().0, 3);
        assert!(treewidth_exact(&path(13)).is_err());
    }

    #[test]
    fn exact_matches_permutation_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..40 {
            let g = gnp_with(3 + trial % 5, 0.5, &mut rng);
            let (w, td) = treewidth_exact(&g).unwrap();
            assert!(validate_tree_decomposition(&g, &td));
            assert_eq!(td.width(), w);
            assert_eq!(w, treewidth_by_permutations(&g));
            let heuristic = treewidth_heuristic(&g);
            assert!(validate_tree_decomposition(&g, &heuristic));
            assert!(heuristic.width() >= w);
        }
    }
}
