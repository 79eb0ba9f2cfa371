//! Simple undirected graphs on vertices `0..n`, colorings and the
//! neighborhood operators used throughout the list-coloring machinery.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{input, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;
/// An edge stored with its smaller endpoint first.
pub type Edge = (Vertex, Vertex);
pub type Color = i64;
pub type ColorSet = BTreeSet<Color>;

/// Normalize an unordered pair.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple undirected graph. Adjacency lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Build a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return input(format!("edge {u}-{v} out of range for {n} vertices"));
        }
        if u == v {
            return input(format!("loop at vertex {u}"));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => input(format!("duplicate edge {u}-{v}")),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                let e = edge(u, v);
                let pos = self.edges.binary_search(&e).unwrap_err();
                self.edges.insert(pos, e);
                Ok(())
            }
        }
    }

    /// Add a fresh isolated vertex and return its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s: VertexSet = self.adj[v].iter().copied().collect();
        s.insert(v);
        s
    }

    /// `N(X)`: vertices outside `X` with a neighbor in `X`.
    pub fn neighborhood_of_set(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|w| !x.contains(w))
            .collect()
    }

    /// Number of neighbors of `v` inside `x`.
    pub fn degree_into(&self, v: Vertex, x: &VertexSet) -> usize {
        self.adj[v].iter().filter(|w| x.contains(w)).count()
    }

    pub(crate) fn check_vertex_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().next_back() {
            Some(&v) if v >= self.n() => input(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n()
            )),
            _ => Ok(()),
        }
    }

    /// Vertices outside `x` with at least `s` neighbors in `x`.
    pub fn n_geq_s(&self, x: &VertexSet, s: usize) -> Result<VertexSet> {
        self.check_vertex_set(x)?;
        Ok(self
            .vertices()
            .filter(|v| !x.contains(v) && self.degree_into(*v, x) >= s)
            .collect())
    }

    /// Vertices outside `x` with between `1` and `s - 1` neighbors in `x`.
    pub fn n_lt_s(&self, x: &VertexSet, s: usize) -> Result<VertexSet> {
        self.check_vertex_set(x)?;
        Ok(self
            .vertices()
            .filter(|v| {
                if x.contains(v) {
                    return false;
                }
                let d = self.degree_into(*v, x);
                d >= 1 && d < s
            })
            .collect())
    }

    /// Induced subgraph on `keep`; local vertex `i` is the `i`-th smallest kept vertex.
    pub fn induced(&self, keep: &VertexSet) -> Subgraph {
        let vertices: Vec<Vertex> = keep.iter().copied().filter(|&v| v < self.n()).collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                g.add_edge(local[u], local[v]).expect("induced edge");
            }
        }
        Subgraph { graph: g, vertices }
    }

    /// `G - Z`.
    pub fn remove_vertices(&self, z: &VertexSet) -> Subgraph {
        let keep: VertexSet = self.vertices().filter(|v| !z.contains(v)).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_by(|_, _| true)
    }

    /// Components of the spanning subgraph keeping only edges accepted by `keep_edge`.
    pub fn components_by(&self, keep_edge: impl Fn(Vertex, Vertex) -> bool) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] && keep_edge(v, w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether `x` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        let Some(&start) = x.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if x.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == x.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.is_connected_set(&self.vertex_set())
    }

    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|&v| self.adj[v].iter().all(|w| !x.contains(w)))
    }

    /// A proper 2-coloring (`false`/`true` sides) if the graph is bipartite.
    /// Each component's smallest vertex lands on side `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// BFS distances from the given sources (`usize::MAX` when unreachable).
    pub fn bfs_distances(&self, sources: &[Vertex]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Per-vertex neighbor bitmasks; `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.clone();
        for _ in 0..other.n() {
            g.add_vertex();
        }
        for &(u, v) in other.edges() {
            g.add_edge(u + off, v + off).expect("disjoint union edge");
        }
        g
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.disjoint_union(other);
        for u in 0..off {
            for v in 0..other.n() {
                g.add_edge(u, v + off).expect("join edge");
            }
        }
        g
    }
}

/// An induced subgraph together with its embedding into the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent id of local vertex `i` (increasing).
    pub vertices: Vec<Vertex>,
}

impl Subgraph {
    pub fn to_parent(&self, local: Vertex) -> Vertex {
        self.vertices[local]
    }

    pub fn to_local(&self, parent: Vertex) -> Option<Vertex> {
        self.vertices.binary_search(&parent).ok()
    }

    pub fn parent_set(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|&v| self.vertices[v]).collect()
    }

    pub fn local_set(&self, parent: &VertexSet) -> VertexSet {
        parent.iter().filter_map(|&v| self.to_local(v)).collect()
    }
}

/// A total map from vertices to colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn constant(n: usize, c: Color) -> Self {
        Coloring(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// The coloring of an induced subgraph, in its local ids.
    pub fn restrict(&self, sub: &Subgraph) -> Coloring {
        Coloring(sub.vertices.iter().map(|&v| self.0[v]).collect())
    }

    /// Vertices of color `x`.
    pub fn class(&self, x: Color) -> VertexSet {
        (0..self.0.len()).filter(|&v| self.0[v] == x).collect()
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.n() {
            return input(format!(
                "coloring covers {} vertices but the graph has {}",
                self.0.len(),
                g.n()
            ));
        }
        Ok(())
    }
}

/// Connected components of the color classes of `c`.
pub fn monochromatic_components(g: &Graph, c: &Coloring) -> Result<Vec<VertexSet>> {
    c.check_total(g)?;
    Ok(g.components_by(|u, v| c.0[u] == c.0[v]))
}

/// Largest monochromatic component; `0` on the empty graph.
pub fn clustering_of(g: &Graph, c: &Coloring) -> Result<usize> {
    Ok(monochromatic_components(g, c)?
        .iter()
        .map(BTreeSet::len)
        .max()
        .unwrap_or(0))
}

/// Whether `c` is a proper coloring.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    g.edges().iter().all(|&(u, v)| c.0[u] != c.0[v])
}

/// Iterate over all subsets of `items` of size `k`, in lexicographic order.
pub(crate) fn for_each_subset<F: FnMut(&[usize]) -> bool>(items: &[usize], k: usize, mut f: F) {
    fn rec<F: FnMut(&[usize]) -> bool>(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut F,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            if !rec(items, k, i + 1, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut f);
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
