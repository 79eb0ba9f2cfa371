//! Societies, ρ-vortices and vortical decompositions.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{check_cap, input, Result};
use crate::graph::{Edge, Graph, Subgraph, Vertex, VertexSet};

use super::decomposition::{check_tree_decomposition, TreeDecomposition};

/// Vertex cap for the exhaustive vortical decomposition search.
pub const VORTICAL_SEARCH_CAP: usize = 10;
/// Vertex cap for the disjoint-path vortex test.
pub const VORTEX_CAP: usize = 2_000;

/// A graph `S` with a cyclic order `Ω` on `Ω̄ ⊆ V(S)`. Vertex ids are those
/// of an ambient graph; `cyclic` lists `Ω̄` in order, up to rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Society {
    pub vertices: VertexSet,
    pub edges: BTreeSet<Edge>,
    pub cyclic: Vec<Vertex>,
}

impl Society {
    /// Society on all of `g`.
    pub fn on_graph(g: &Graph, cyclic: Vec<Vertex>) -> Result<Self> {
        let s = Society {
            vertices: g.vertex_set(),
            edges: g.edges().iter().copied().collect(),
            cyclic,
        };
        s.check().map_err(crate::Error::Input)?;
        Ok(s)
    }

    pub fn omega_bar(&self) -> VertexSet {
        self.cyclic.iter().copied().collect()
    }

    /// Checks that edges and `Ω̄` live inside `V(S)` and `Ω̄` has no repeats.
    pub fn check(&self) -> std::result::Result<(), String> {
        for &(u, v) in &self.edges {
            if u >= v || !self.vertices.contains(&u) || !self.vertices.contains(&v) {
                return Err(format!("edge {u}-{v} is not an edge on V(S)"));
            }
        }
        let mut seen = BTreeSet::new();
        for &v in &self.cyclic {
            if !self.vertices.contains(&v) {
                return Err(format!("cyclic vertex {v} is not in V(S)"));
            }
            if !seen.insert(v) {
                return Err(format!("cyclic vertex {v} repeats"));
            }
        }
        Ok(())
    }

    /// `S` as a standalone graph; local ids follow the sorted order of `V(S)`.
    pub fn local_graph(&self) -> Subgraph {
        let vertices: Vec<Vertex> = self.vertices.iter().copied().collect();
        let local = |v: Vertex| vertices.binary_search(&v).unwrap();
        let graph = Graph::from_edges(vertices.len(), self.edges.iter().map(|&(u, v)| (local(u), local(v))))
            .expect("checked society edges");
        Subgraph { graph, vertices }
    }
}

/// Maximum number of vertex-disjoint paths between `x` and `y` (Menger),
/// by unit-capacity max flow on the vertex-split graph.
pub fn max_disjoint_paths(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    // Node 2v is v_in, 2v+1 is v_out; 2n is the source, 2n+1 the sink.
    let n = g.n();
    let (src, sink) = (2 * n, 2 * n + 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 2];
    let mut to = Vec::new();
    let mut cap = Vec::new();
    let mut add = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(to.len());
        to.push(b);
        cap.push(1u8);
        adj[b].push(to.len());
        to.push(a);
        cap.push(0u8);
    };
    for v in 0..n {
        add(2 * v, 2 * v + 1, &mut adj);
    }
    for &(u, v) in g.edges() {
        add(2 * u + 1, 2 * v, &mut adj);
        add(2 * v + 1, 2 * u, &mut adj);
    }
    for &v in x {
        add(src, 2 * v, &mut adj);
    }
    for &v in y {
        add(2 * v + 1, sink, &mut adj);
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; 2 * n + 2];
        let mut queue = VecDeque::from([src]);
        prev[src] = usize::MAX - 1;
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &e in &adj[a] {
                if cap[e] > 0 && prev[to[e]] == usize::MAX {
                    prev[to[e]] = e;
                    queue.push_back(to[e]);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut node = sink;
        while node != src {
            let e = prev[node];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            node = to[e ^ 1];
        }
        flow += 1;
    }
}

/// The sets `I ∪ {u}` and `J ∪ {v}` for positions `a ≠ b` of the cyclic order.
fn cut_sides(cyclic: &[Vertex], a: usize, b: usize) -> (VertexSet, VertexSet) {
    let n = cyclic.len();
    let walk = |from: usize, until: usize| {
        let mut out = VertexSet::new();
        let mut i = (from + 1) % n;
        while i != until {
            out.insert(cyclic[i]);
            i = (i + 1) % n;
        }
        out
    };
    let mut left = walk(a, b);
    left.insert(cyclic[a]);
    let mut right = walk(b, a);
    right.insert(cyclic[b]);
    (left, right)
}

/// Largest number of disjoint `(I ∪ {u})`–`(J ∪ {v})` paths over all pairs
/// `u ≠ v` of `Ω̄`; the society is a ρ-vortex iff this is at most ρ.
pub fn vortex_linkage(society: &Society) -> Result<usize> {
    society.check().map_err(crate::Error::Input)?;
    check_cap("society for the vortex test", society.vertices.len() as u128, VORTEX_CAP as u128)?;
    let local = society.local_graph();
    let cyclic: Vec<Vertex> = society.cyclic.iter().map(|&v| local.to_local(v).unwrap()).collect();
    let mut best = 0;
    for a in 0..cyclic.len() {
        for b in 0..cyclic.len() {
            if a != b {
                let (left, right) = cut_sides(&cyclic, a, b);
                best = best.max(max_disjoint_paths(&local.graph, &left, &right));
            }
        }
    }
    Ok(best)
}

pub fn is_rho_vortex(society: &Society, rho: usize) -> Result<bool> {
    Ok(vortex_linkage(society)? <= rho)
}

fn check_node_count(society: &Society, bags: &[VertexSet]) -> Result<()> {
    if bags.len() != society.cyclic.len() {
        return input(format!(
            "vortical decomposition has {} bags but the society has {} cyclic vertices",
            bags.len(),
            society.cyclic.len()
        ));
    }
    Ok(())
}

/// `max |X_i ∩ X_j|` over `i ≠ j` (0 with a single bag).
pub fn vortical_adhesion(society: &Society, bags: &[VertexSet]) -> Result<usize> {
    check_node_count(society, bags)?;
    let mut best = 0;
    for i in 0..bags.len() {
        for j in i + 1..bags.len() {
            best = best.max(bags[i].intersection(&bags[j]).count());
        }
    }
    Ok(best)
}

/// Path decomposition of `S` along `Ω̄` whose `i`-th bag holds the `i`-th
/// cyclic vertex. Listing starts at `cyclic[0]`.
pub fn check_vortical(society: &Society, bags: &[VertexSet]) -> Result<std::result::Result<(), String>> {
    check_node_count(society, bags)?;
    if let Err(e) = society.check() {
        return Ok(Err(e));
    }
    for (i, (&v, bag)) in society.cyclic.iter().zip(bags).enumerate() {
        if !bag.contains(&v) {
            return Ok(Err(format!("bag {i} misses cyclic vertex {v}")));
        }
        if let Some(w) = bag.iter().find(|w| !society.vertices.contains(w)) {
            return Ok(Err(format!("bag {i} holds {w} outside V(S)")));
        }
    }
    let local = society.local_graph();
    let td = TreeDecomposition::path(bags.iter().map(|b| local.local_set(b)).collect());
    Ok(check_tree_decomposition(&local.graph, &td))
}

pub fn validate_vortical(society: &Society, bags: &[VertexSet]) -> Result<bool> {
    Ok(check_vortical(society, bags)?.is_ok())
}

/// Exhaustive search for a vortical decomposition of adhesion at most
/// `max_adhesion`. Each vertex of `S` gets an interval of bag indices; with
/// interval bags the adhesion is attained by consecutive bags.
pub fn find_vortical_decomposition(society: &Society, max_adhesion: usize) -> Result<Option<Vec<VertexSet>>> {
    society.check().map_err(crate::Error::Input)?;
    check_cap("society for vortical search", society.vertices.len() as u128, VORTICAL_SEARCH_CAP as u128)?;
    let n = society.cyclic.len();
    if n == 0 {
        return input("a vortical decomposition needs a nonempty cyclic order");
    }
    let local = society.local_graph();
    let g = &local.graph;
    let mut required = vec![None; g.n()];
    for (i, &v) in society.cyclic.iter().enumerate() {
        required[local.to_local(v).unwrap()] = Some(i);
    }
    // Highest-degree first keeps edge constraints tight early.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (required[v].is_none(), std::cmp::Reverse(g.degree(v)), v));
    let mut search = IntervalSearch {
        g,
        n,
        limit: max_adhesion,
        required,
        order,
        interval: vec![None; g.n()],
        overlap: vec![0; n.saturating_sub(1)],
    };
    if !search.run(0) {
        return Ok(None);
    }
    let mut bags = vec![VertexSet::new(); n];
    for v in g.vertices() {
        let (a, b) = search.interval[v].unwrap();
        for bag in &mut bags[a..=b] {
            bag.insert(local.to_parent(v));
        }
    }
    debug_assert!(validate_vortical(society, &bags).unwrap());
    Ok(Some(bags))
}

struct IntervalSearch<'a> {
    g: &'a Graph,
    n: usize,
    limit: usize,
    required: Vec<Option<usize>>,
    order: Vec<Vertex>,
    interval: Vec<Option<(usize, usize)>>,
    /// `overlap[i]` counts vertices whose interval covers bags `i` and `i+1`.
    overlap: Vec<usize>,
}

impl IntervalSearch<'_> {
    fn run(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for a in 0..self.n {
            for b in a..self.n {
                if let Some(i) = self.required[v] {
                    if i < a || i > b {
                        continue;
                    }
                }
                let meets_neighbors = self.g.neighbors(v).iter().all(|&w| match self.interval[w] {
                    Some((c, d)) => c <= b && a <= d,
                    None => true,
                });
                if !meets_neighbors || (a..b).any(|i| self.overlap[i] >= self.limit) {
                    continue;
                }
                for i in a..b {
                    self.overlap[i] += 1;
                }
                self.interval[v] = Some((a, b));
                if self.run(k + 1) {
                    return true;
                }
                self.interval[v] = None;
                for i in a..b {
                    self.overlap[i] -= 1;
                }
            }
        }
        false
    }
}
