//! Clustered list coloring by dynamic programming over a nice tree
//! decomposition.
//!
//! A state at a node records the colors of the bag, which bag vertices lie in
//! a common partial monochromatic component (through vertices already
//! forgotten), and the size of each such component so far. Sizes above `η`
//! kill the state, so at most `η` distinct sizes survive.

use std::collections::HashMap;

use crate::error::{check_cap, input, Result};
use crate::graph::{clustering_of, Color, Coloring, Graph, Vertex};
use crate::lists::ListAssignment;
use crate::structure::{check_tree_decomposition, treewidth_heuristic, TreeDecomposition};

use super::nice::{NiceDecomposition, NiceKind};

/// Default cap on the number of states in one table.
pub const DEFAULT_DP_STATE_CAP: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct State {
    colors: Vec<Color>,
    /// Block id per bag position, numbered by first occurrence.
    block: Vec<u8>,
    size: Vec<u32>,
}

impl State {
    /// Renumbers arbitrary block labels (with sizes keyed by old label).
    fn normalized(colors: Vec<Color>, labels: &[usize], size_of: impl Fn(usize) -> u32) -> State {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let mut block = Vec::with_capacity(labels.len());
        let mut size = Vec::new();
        for &lab in labels {
            let id = match map.iter().find(|(l, _)| *l == lab) {
                Some(&(_, id)) => id,
                None => {
                    let id = map.len() as u8;
                    map.push((lab, id));
                    size.push(size_of(lab));
                    id
                }
            };
            block.push(id);
        }
        State { colors, block, size }
    }
}

#[derive(Copy, Clone, Debug)]
enum Back {
    Leaf,
    One(usize),
    Two(usize, usize),
}

#[derive(Default)]
struct Table {
    states: Vec<State>,
    back: Vec<Back>,
    index: HashMap<State, usize>,
}

impl Table {
    fn insert(&mut self, s: State, b: Back, cap: u128) -> Result<()> {
        if !self.index.contains_key(&s) {
            check_cap("dynamic programming table", self.states.len() as u128 + 1, cap)?;
            self.index.insert(s.clone(), self.states.len());
            self.states.push(s);
            self.back.push(b);
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub states: u64,
    pub nice_nodes: usize,
}

fn introduce(
    g: &Graph,
    l: &ListAssignment,
    eta: usize,
    bag: &[Vertex],
    v: Vertex,
    child: &Table,
    cap: u128,
) -> Result<Table> {
    let p = bag.binary_search(&v).unwrap();
    let mut out = Table::default();
    for (ci, st) in child.states.iter().enumerate() {
        for &x in &l.lists[v] {
            let mut colors = st.colors.clone();
            colors.insert(p, x);
            let fresh = st.size.len();
            let mut labels: Vec<usize> = st.block.iter().map(|&b| b as usize).collect();
            labels.insert(p, fresh);
            let mut sizes: Vec<u32> = st.size.clone();
            sizes.push(1);
            for (q, &u) in bag.iter().enumerate() {
                if q != p && colors[q] == x && g.has_edge(u, v) && labels[q] != labels[p] {
                    let (keep, gone) = (labels[p], labels[q]);
                    sizes[keep] += sizes[gone];
                    for lab in labels.iter_mut() {
                        if *lab == gone {
                            *lab = keep;
                        }
                    }
                }
            }
            if sizes[labels[p]] as usize > eta {
                continue;
            }
            out.insert(State::normalized(colors, &labels, |b| sizes[b]), Back::One(ci), cap)?;
        }
    }
    Ok(out)
}

fn forget(bag_child: &[Vertex], v: Vertex, child: &Table, cap: u128) -> Result<Table> {
    let p = bag_child.binary_search(&v).unwrap();
    let mut out = Table::default();
    for (ci, st) in child.states.iter().enumerate() {
        let mut colors = st.colors.clone();
        colors.remove(p);
        let mut labels: Vec<usize> = st.block.iter().map(|&b| b as usize).collect();
        labels.remove(p);
        out.insert(State::normalized(colors, &labels, |b| st.size[b]), Back::One(ci), cap)?;
    }
    Ok(out)
}

fn join(eta: usize, a: &Table, b: &Table, cap: u128) -> Result<Table> {
    let mut by_colors: HashMap<&[Color], Vec<usize>> = HashMap::new();
    for (bi, st) in b.states.iter().enumerate() {
        by_colors.entry(&st.colors).or_default().push(bi);
    }
    let mut out = Table::default();
    for (ai, sa) in a.states.iter().enumerate() {
        let Some(partners) = by_colors.get(sa.colors.as_slice()) else {
            continue;
        };
        let na = sa.size.len();
        for &bi in partners {
            let sb = &b.states[bi];
            let mut parent: Vec<usize> = (0..na + sb.size.len()).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for i in 0..sa.block.len() {
                let (x, y) = (find(&mut parent, sa.block[i] as usize), find(&mut parent, na + sb.block[i] as usize));
                if x != y {
                    parent[y] = x;
                }
            }
            let mut total = vec![0i64; parent.len()];
            for blk in 0..parent.len() {
                let r = find(&mut parent, blk);
                total[r] += if blk < na { sa.size[blk] } else { sb.size[blk - na] } as i64;
            }
            let labels: Vec<usize> = (0..sa.block.len()).map(|i| find(&mut parent, sa.block[i] as usize)).collect();
            for &lab in &labels {
                total[lab] -= 1;
            }
            if labels.iter().any(|&lab| total[lab] as usize > eta) {
                continue;
            }
            let state = State::normalized(sa.colors.clone(), &labels, |lab| total[lab] as u32);
            out.insert(state, Back::Two(ai, bi), cap)?;
        }
    }
    Ok(out)
}

/// An L-coloring with clustering at most `eta`, or `None`. Uses `td` when
/// given (it must be a valid tree decomposition of `g`), otherwise a min-fill
/// decomposition.
pub fn dp_clustered_coloring(
    g: &Graph,
    td: Option<&TreeDecomposition>,
    l: &ListAssignment,
    eta: usize,
) -> Result<Option<Coloring>> {
    dp_clustered_coloring_with(g, td, l, eta, DEFAULT_DP_STATE_CAP, &mut DpStats::default())
}

/// [`dp_clustered_coloring`] with lists `{1, ..., k}`.
pub fn dp_clustered_k_coloring(g: &Graph, td: Option<&TreeDecomposition>, k: usize, eta: usize) -> Result<Option<Coloring>> {
    dp_clustered_coloring(g, td, &ListAssignment::full(g.n(), k as Color), eta)
}

pub fn dp_clustered_coloring_with(
    g: &Graph,
    td: Option<&TreeDecomposition>,
    l: &ListAssignment,
    eta: usize,
    cap: u128,
    stats: &mut DpStats,
) -> Result<Option<Coloring>> {
    l.check_len(g)?;
    if eta > u32::MAX as usize / 2 {
        return input("eta too large");
    }
    let owned;
    let td = match td {
        Some(td) => {
            check_tree_decomposition(g, td).map_err(crate::Error::Input)?;
            td
        }
        None => {
            owned = treewidth_heuristic(g);
            &owned
        }
    };
    if td.width() >= u8::MAX as usize {
        return input("decomposition too wide");
    }
    if g.n() == 0 {
        return Ok(Some(Coloring::new(vec![])));
    }
    if eta == 0 {
        return Ok(None);
    }
    let nice = NiceDecomposition::from_tree_decomposition(td);
    stats.nice_nodes = nice.nodes.len();
    let mut tables: Vec<Table> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let t = match node.kind {
            NiceKind::Leaf => {
                let mut t = Table::default();
                t.insert(State { colors: vec![], block: vec![], size: vec![] }, Back::Leaf, cap)?;
                t
            }
            NiceKind::Introduce(v) => introduce(g, l, eta, &node.bag, v, &tables[node.children[0]], cap)?,
            NiceKind::Forget(v) => {
                let c = node.children[0];
                forget(&nice.nodes[c].bag, v, &tables[c], cap)?
            }
            NiceKind::Join => join(eta, &tables[node.children[0]], &tables[node.children[1]], cap)?,
        };
        stats.states += t.states.len() as u64;
        tables.push(t);
    }
    let root = nice.root();
    if tables[root].states.is_empty() {
        return Ok(None);
    }
    let mut colors = vec![0 as Color; g.n()];
    let mut stack = vec![(root, 0usize)];
    while let Some((i, si)) = stack.pop() {
        let node = &nice.nodes[i];
        for (q, &v) in node.bag.iter().enumerate() {
            colors[v] = tables[i].states[si].colors[q];
        }
        match tables[i].back[si] {
            Back::Leaf => {}
            Back::One(c) => stack.push((node.children[0], c)),
            Back::Two(a, b) => {
                stack.push((node.children[0], a));
                stack.push((node.children[1], b));
            }
        }
    }
    let c = Coloring::new(colors);
    assert!(l.admits(&c) && clustering_of(g, &c)? <= eta);
    Ok(Some(c))
}
