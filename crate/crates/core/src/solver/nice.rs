//! Nice tree decompositions: leaf, introduce, forget and binary join nodes.

use crate::graph::{Vertex, VertexSet};
use crate::structure::TreeDecomposition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// A nice decomposition whose nodes are stored children-first; the last node
/// is the root and has an empty bag, as do all leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Converts a (valid) tree decomposition rooted at bag 0. A forest is
    /// joined at the root.
    pub fn from_tree_decomposition(td: &TreeDecomposition) -> Self {
        let mut nice = NiceDecomposition { nodes: Vec::new() };
        if td.bags.is_empty() {
            nice.push(NiceKind::Leaf, VertexSet::new(), vec![]);
            return nice;
        }
        let adj = td.node_adjacency();
        let mut seen = vec![false; td.bags.len()];
        let mut roots = Vec::new();
        for start in 0..td.bags.len() {
            if seen[start] {
                continue;
            }
            let top = nice.build(td, &adj, start, &mut seen);
            roots.push(nice.morph(top, &VertexSet::new()));
        }
        let root = nice.join_all(roots);
        debug_assert!(nice.nodes[root].bag.is_empty() && root == nice.root());
        nice
    }

    fn push(&mut self, kind: NiceKind, bag: VertexSet, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag: bag.into_iter().collect(),
            children,
        });
        self.nodes.len() - 1
    }

    fn bag_set(&self, i: usize) -> VertexSet {
        self.nodes[i].bag.iter().copied().collect()
    }

    /// Forget then introduce vertices until node `i`'s bag becomes `target`.
    fn morph(&mut self, mut i: usize, target: &VertexSet) -> usize {
        let mut bag = self.bag_set(i);
        let drop: Vec<Vertex> = bag.difference(target).copied().collect();
        for v in drop {
            bag.remove(&v);
            i = self.push(NiceKind::Forget(v), bag.clone(), vec![i]);
        }
        let add: Vec<Vertex> = target.difference(&bag).copied().collect();
        for v in add {
            bag.insert(v);
            i = self.push(NiceKind::Introduce(v), bag.clone(), vec![i]);
        }
        i
    }

    fn join_all(&mut self, mut parts: Vec<usize>) -> usize {
        while parts.len() > 1 {
            let b = parts.pop().unwrap();
            let a = parts.pop().unwrap();
            let bag = self.bag_set(a);
            parts.push(self.push(NiceKind::Join, bag, vec![a, b]));
        }
        parts[0]
    }

    /// Nice subtree for the decomposition subtree at `t`, ending in a node
    /// with bag `X_t`. Iterative post-order to survive deep paths.
    fn build(&mut self, td: &TreeDecomposition, adj: &[Vec<usize>], t: usize, seen: &mut [bool]) -> usize {
        let mut stack = vec![(t, usize::MAX, false)];
        let mut result: Vec<Option<usize>> = vec![None; td.bags.len()];
        while let Some((x, parent, done)) = stack.pop() {
            if !done {
                seen[x] = true;
                stack.push((x, parent, true));
                for &y in &adj[x] {
                    if y != parent {
                        stack.push((y, x, false));
                    }
                }
                continue;
            }
            let bag = &td.bags[x];
            let mut parts = Vec::new();
            for &y in &adj[x] {
                if y != parent {
                    let child = result[y].unwrap();
                    parts.push(self.morph(child, bag));
                }
            }
            if parts.is_empty() {
                let leaf = self.push(NiceKind::Leaf, VertexSet::new(), vec![]);
                parts.push(self.morph(leaf, bag));
            }
            result[x] = Some(self.join_all(parts));
        }
        result[t].unwrap()
    }
}
