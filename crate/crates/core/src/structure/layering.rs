//! Layerings, `Z`-layerings, their widths against tree decompositions, and
//! layered treewidth.

use crate::error::{check_cap, input, Result};
use crate::graph::{Graph, Vertex, VertexSet};

use super::decomposition::{decomposition_from_ordering, min_fill_ordering, optimal_ordering, TreeDecomposition};

/// Vertex cap for [`layered_treewidth_exact`].
pub const LAYERED_EXACT_CAP: usize = 8;
/// Largest graph on which [`layered_treewidth_upper`] uses the exact
/// decomposition search for each candidate layering.
const UPPER_EXACT_CAP: usize = 12;

/// Ordered partition `(V_1, V_2, ...)` of `V(G) - Z`. `layers[0]` is `V_1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Layering {
    pub layers: Vec<VertexSet>,
    pub excluded: VertexSet,
}

impl Layering {
    pub fn single(g: &Graph) -> Self {
        Layering {
            layers: vec![g.vertex_set()],
            excluded: VertexSet::new(),
        }
    }

    /// Layering with `V_{i+1} = {v : label[v] == i}`; `None` labels go to `Z`.
    pub fn from_labels(labels: &[Option<usize>]) -> Self {
        let depth = labels.iter().flatten().max().map_or(0, |&d| d + 1);
        let mut layers = vec![VertexSet::new(); depth];
        let mut excluded = VertexSet::new();
        for (v, l) in labels.iter().enumerate() {
            match l {
                Some(i) => {
                    layers[*i].insert(v);
                }
                None => {
                    excluded.insert(v);
                }
            }
        }
        Layering { layers, excluded }
    }

    /// 1-based layer index of every vertex (`None` for `Z` and unknown ids).
    pub fn index_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                if v < n {
                    idx[v] = Some(i + 1);
                }
            }
        }
        idx
    }

    /// Checks the partition of `V(G) - Z` and that every edge of `G - Z` lies
    /// within one layer or two consecutive ones.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = vec![false; g.n()];
        for v in self.excluded.iter().chain(self.layers.iter().flatten()) {
            if *v >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[*v], true) {
                return Err(format!("vertex {v} appears twice"));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(format!("vertex {v} is neither layered nor excluded"));
        }
        let idx = self.index_of(g.n());
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (idx[u], idx[v]) {
                if a.abs_diff(b) > 1 {
                    return Err(format!("edge {u}-{v} spans layers {a} and {b}"));
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

/// `max_i max_t |X_t ∩ V_i|`. The decomposition is of `G - Z` in ambient ids,
/// so a bag holding an excluded vertex is an input error.
pub fn v_width(g: &Graph, td: &TreeDecomposition, layering: &Layering) -> Result<usize> {
    if let Err(e) = layering.check(g) {
        return input(format!("invalid layering: {e}"));
    }
    let idx = layering.index_of(g.n());
    let mut best = 0;
    for (x, bag) in td.bags.iter().enumerate() {
        let mut counts = vec![0usize; layering.layers.len() + 1];
        for &v in bag {
            if v >= g.n() {
                return input(format!("bag {x} holds out-of-range vertex {v}"));
            }
            match idx[v] {
                Some(i) => counts[i] += 1,
                None => return input(format!("bag {x} holds excluded vertex {v}")),
            }
        }
        best = best.max(counts.into_iter().max().unwrap_or(0));
    }
    Ok(best)
}

fn layer_masks(g: &Graph, layering: &Layering) -> Vec<u64> {
    layering
        .layers
        .iter()
        .map(|l| l.iter().filter(|&&v| v < g.n()).fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

fn layered_cost(masks: &[u64]) -> impl Fn(u64) -> usize + '_ {
    move |bag| masks.iter().map(|m| (bag & m).count_ones() as usize).max().unwrap_or(0)
}

/// Best decomposition for a fixed layering of the whole graph.
fn best_for_layering(g: &Graph, layering: &Layering, exact: bool) -> (usize, TreeDecomposition) {
    let order = if exact {
        let masks = layer_masks(g, layering);
        optimal_ordering(g, layered_cost(&masks)).1
    } else {
        min_fill_ordering(g)
    };
    let td = decomposition_from_ordering(g, &order);
    let w = v_width(g, &td, layering).expect("layering built for this graph");
    (w, td)
}

/// BFS layering with one source per component; `root` picks the source of
/// its own component, other components start at their smallest vertex.
fn bfs_layering(g: &Graph, root: Vertex) -> Layering {
    let mut labels: Vec<Option<usize>> = vec![None; g.n()];
    let mut sources = vec![root];
    sources.extend(g.components().iter().filter(|c| !c.contains(&root)).map(|c| *c.first().unwrap()));
    for s in sources {
        let dist = g.bfs_distances(&[s]);
        for v in g.vertices() {
            if dist[v] != usize::MAX {
                labels[v] = Some(dist[v]);
            }
        }
    }
    Layering::from_labels(&labels)
}

/// Upper bound on layered treewidth: BFS layerings from every source and the
/// single-layer layering, each paired with the best decomposition found.
pub fn layered_treewidth_upper(g: &Graph) -> (usize, TreeDecomposition, Layering) {
    let exact = g.n() <= UPPER_EXACT_CAP;
    let single = Layering::single(g);
    let (w, td) = best_for_layering(g, &single, exact);
    let mut best = (w, td, single);
    for root in g.vertices() {
        let layering = bfs_layering(g, root);
        let (w, td) = best_for_layering(g, &layering, exact);
        if w < best.0 {
            best = (w, td, layering);
        }
    }
    best
}

/// Exact layered treewidth for graphs on at most eight vertices.
///
/// Each component is solved separately: its layerings are the labelings that
/// change by at most one along edges, enumerated over a BFS spanning tree up
/// to translation. Component layerings are then aligned at layer 1.
pub fn layered_treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition, Layering)> {
    check_cap("graph for exact layered treewidth", g.n() as u128, LAYERED_EXACT_CAP as u128)?;
    let mut labels: Vec<Option<usize>> = vec![None; g.n()];
    let mut width = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let (w, local) = component_exact(&sub.graph);
        width = width.max(w);
        for (i, l) in local.into_iter().enumerate() {
            labels[sub.to_parent(i)] = Some(l);
        }
    }
    let layering = Layering::from_labels(&labels);
    let (w, td) = best_for_layering(g, &layering, true);
    debug_assert_eq!(w, width);
    Ok((w, td, layering))
}

fn component_exact(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 1 {
        return (1, vec![0]);
    }
    // BFS tree order: every vertex after the root has its parent earlier.
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut label = vec![0i64; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut choice = vec![0usize; n];
    loop {
        for &v in &order[1..] {
            label[v] = label[parent[v]] + choice[v] as i64 - 1;
        }
        if g.edges().iter().all(|&(u, v)| label[u].abs_diff(label[v]) <= 1) {
            let lo = *label.iter().min().unwrap();
            let norm: Vec<usize> = label.iter().map(|&l| (l - lo) as usize).collect();
            let layering = Layering::from_labels(&norm.iter().map(|&l| Some(l)).collect::<Vec<_>>());
            let masks = layer_masks(g, &layering);
            let (w, _) = optimal_ordering(g, layered_cost(&masks));
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, norm));
            }
        }
        // Odometer over the non-root vertices.
        let mut i = 1;
        while i < n {
            let v = order[i];
            choice[v] += 1;
            if choice[v] < 3 {
                break;
            }
            choice[v] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    best.expect("the all-equal labeling is always a layering")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gnp_with, path, triangular_grid};
    use crate::structure::decomposition::{treewidth_exact, treewidth_heuristic, validate_tree_decomposition};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_layer_collapses_to_width_plus_one() {
        let g = cycle(6);
        let td = treewidth_heuristic(&g);
        assert_eq!(v_width(&g, &td, &Layering::single(&g)).unwrap(), td.width() + 1);
    }

    #[test]
    fn path_from_an_end() {
        for n in 2..8 {
            let g = path(n);
            let layering = Layering::from_labels(&(0..n).map(Some).collect::<Vec<_>>());
            assert!(layering.validate(&g));
            let td = TreeDecomposition::path((0..n - 1).map(|i| VertexSet::from([i, i + 1])).collect());
            assert_eq!(v_width(&g, &td, &layering).unwrap(), 1);
        }
    }

    #[test]
    fn invalid_layerings_and_z_mismatch() {
        let g = path(3);
        let skip = Layering::from_labels(&[Some(0), Some(1), Some(3)]);
        assert!(skip.check(&g).unwrap_err().contains("spans"));
        let missing = Layering {
            layers: vec![VertexSet::from([0, 1])],
            excluded: VertexSet::new(),
        };
        assert!(!missing.validate(&g));
        let z = Layering::from_labels(&[Some(0), None, Some(0)]);
        assert!(z.validate(&g));
        let td = TreeDecomposition::path(vec![VertexSet::from([0, 1, 2])]);
        assert!(v_width(&g, &td, &z).is_err());
        let td = TreeDecomposition::path(vec![VertexSet::from([0]), VertexSet::from([2])]);
        assert_eq!(v_width(&g, &td, &z).unwrap(), 1);
    }

    #[test]
    fn planar_grid_upper_bound() {
        let g = triangular_grid(3);
        let (w, td, layering) = layered_treewidth_upper(&g);
        assert!(w <= 3, "layered width {w}");
        assert!(validate_tree_decomposition(&g, &td));
        assert_eq!(v_width(&g, &td, &layering).unwrap(), w);
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(layered_treewidth_exact(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(layered_treewidth_exact(&path(6)).unwrap().0, 1);
        assert_eq!(layered_treewidth_exact(&Graph::empty(3)).unwrap().0, 1);
        // K_n must sit in at most two layers, so some layer holds half of it.
        assert_eq!(layered_treewidth_exact(&complete(5)).unwrap().0, 3);
        assert_eq!(layered_treewidth_exact(&complete(4)).unwrap().0, 2);
        // Fan bags {0, i, i+1} with vertex 0 alone in its layer.
        assert_eq!(layered_treewidth_exact(&cycle(8)).unwrap().0, 1);
        assert!(layered_treewidth_exact(&path(9)).is_err());
    }

    #[test]
    fn exact_is_sound_and_below_other_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..40 {
            let g = gnp_with(2 + trial % 7, 0.45, &mut rng);
            let (w, td, layering) = layered_treewidth_exact(&g).unwrap();
            assert!(validate_tree_decomposition(&g, &td));
            assert!(layering.validate(&g));
            assert_eq!(v_width(&g, &td, &layering).unwrap(), w);
            let (upper, _, _) = layered_treewidth_upper(&g);
            assert!(w <= upper);
            let (tw, _) = treewidth_exact(&g).unwrap();
            assert!(w <= tw + 1);
        }
    }
}
