//! Separations `(A, B)`: two edge-disjoint subgraphs whose union is the graph.
//!
//! A separation keeps an explicit side for every edge, since edges with both
//! ends in `V(A ∩ B)` may belong to either side.

use std::collections::BTreeMap;

use crate::error::{check_cap, input, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};

/// Default vertex cap for exhaustive separation enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separation {
    pub va: VertexSet,
    pub vb: VertexSet,
    pub edge_side: BTreeMap<Edge, Side>,
}

impl Separation {
    /// Separation with the given vertex sides; every edge goes to A when both
    /// ends lie in `va`, otherwise to B. Fails if some edge fits neither side.
    pub fn from_vertex_sides(g: &Graph, va: VertexSet, vb: VertexSet) -> Result<Self> {
        let mut edge_side = BTreeMap::new();
        for &(u, v) in g.edges() {
            let side = if va.contains(&u) && va.contains(&v) {
                Side::A
            } else if vb.contains(&u) && vb.contains(&v) {
                Side::B
            } else {
                return input(format!("edge {u}-{v} crosses the separation"));
            };
            edge_side.insert((u, v), side);
        }
        let sep = Separation { va, vb, edge_side };
        sep.validate(g).map_err(crate::Error::Input)?;
        Ok(sep)
    }

    /// `|V(A ∩ B)|`.
    pub fn order(&self) -> usize {
        self.va.intersection(&self.vb).count()
    }

    pub fn boundary(&self) -> VertexSet {
        self.va.intersection(&self.vb).copied().collect()
    }

    pub fn reversed(&self) -> Separation {
        Separation {
            va: self.vb.clone(),
            vb: self.va.clone(),
            edge_side: self.edge_side.iter().map(|(&e, &s)| (e, s.flip())).collect(),
        }
    }

    pub fn side_vertices(&self, side: Side) -> &VertexSet {
        match side {
            Side::A => &self.va,
            Side::B => &self.vb,
        }
    }

    pub fn side_edges(&self, side: Side) -> impl Iterator<Item = Edge> + '_ {
        self.edge_side
            .iter()
            .filter(move |(_, &s)| s == side)
            .map(|(&e, _)| e)
    }

    /// Checks the separation invariants against `g`, with a diagnostic on failure.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        for &v in self.va.iter().chain(self.vb.iter()) {
            if v >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
        }
        if self.va.len() + self.vb.len() - self.order() != g.n() {
            return Err("V(A) ∪ V(B) does not cover V(G)".into());
        }
        if self.edge_side.len() != g.m() {
            return Err(format!(
                "edge sides given for {} edges but the graph has {}",
                self.edge_side.len(),
                g.m()
            ));
        }
        for (&(u, v), &side) in &self.edge_side {
            if !g.has_edge(u, v) || u > v {
                return Err(format!("{u}-{v} is not an edge of the graph"));
            }
            let verts = self.side_vertices(side);
            if !verts.contains(&u) || !verts.contains(&v) {
                return Err(format!("edge {u}-{v} assigned to {side:?} but an end is missing"));
            }
        }
        Ok(())
    }

    /// Whether side `A` of `self` is a subgraph of side `B` of `other`.
    pub fn a_within_b_of(&self, other: &Separation) -> bool {
        self.va.is_subset(&other.vb)
            && self
                .side_edges(Side::A)
                .all(|e| other.edge_side.get(&e) == Some(&Side::B))
    }

    /// The side-A subgraph restricted to `G - Z` style vertex removal, as used
    /// by `T - Z`: drops `z` from both vertex sets and drops incident edges.
    pub fn minus(&self, z: &VertexSet) -> (VertexSet, VertexSet, BTreeMap<Edge, Side>) {
        let va = self.va.difference(z).copied().collect();
        let vb = self.vb.difference(z).copied().collect();
        let es = self
            .edge_side
            .iter()
            .filter(|((u, v), _)| !z.contains(u) && !z.contains(v))
            .map(|(&e, &s)| (e, s))
            .collect();
        (va, vb, es)
    }
}

/// Bit-packed separation used by the tangle checkers; needs `n ≤ 64`, `m ≤ 128`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SepBits {
    pub va: u64,
    pub vb: u64,
    pub ea: u128,
    pub eb: u128,
}

impl SepBits {
    pub fn from_separation(g: &Graph, s: &Separation) -> Self {
        let mask = |set: &VertexSet| set.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut ea = 0u128;
        let mut eb = 0u128;
        for (&(u, v), &side) in &s.edge_side {
            let i = g.edge_index(u, v).expect("edge of g");
            match side {
                Side::A => ea |= 1 << i,
                Side::B => eb |= 1 << i,
            }
        }
        SepBits {
            va: mask(&s.va),
            vb: mask(&s.vb),
            ea,
            eb,
        }
    }

    pub fn reversed(self) -> Self {
        SepBits {
            va: self.vb,
            vb: self.va,
            ea: self.eb,
            eb: self.ea,
        }
    }

    pub fn to_separation(self, g: &Graph) -> Separation {
        let set = |m: u64| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
        let edge_side = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, if self.ea >> i & 1 == 1 { Side::A } else { Side::B }))
            .collect();
        Separation {
            va: set(self.va),
            vb: set(self.vb),
            edge_side,
        }
    }
}

/// Lazily yields every separation of order `≤ max_order`, each exactly once,
/// both orientations included.
///
/// Separations are generated from their boundary `S`: every component of
/// `G - S` goes wholly to one side, and every edge inside `S` picks a side.
pub struct SeparationIter<'g> {
    g: &'g Graph,
    boundaries: Vec<Vec<Vertex>>,
    next_boundary: usize,
    current: Option<Frame>,
}

struct Frame {
    boundary: Vec<Vertex>,
    components: Vec<Vec<Vertex>>,
    inner_edges: Vec<Edge>,
    comp_mask: u64,
    edge_mask: u64,
}

impl<'g> SeparationIter<'g> {
    fn load(&mut self) -> bool {
        if self.next_boundary < self.boundaries.len() {
            let boundary = self.boundaries[self.next_boundary].clone();
            self.next_boundary += 1;
            let s: VertexSet = boundary.iter().copied().collect();
            let rest = self.g.remove_vertices(&s);
            let components = rest
                .graph
                .components()
                .into_iter()
                .map(|c| c.into_iter().map(|v| rest.to_parent(v)).collect())
                .collect();
            let inner_edges = self
                .g
                .edges()
                .iter()
                .copied()
                .filter(|(u, v)| s.contains(u) && s.contains(v))
                .collect();
            self.current = Some(Frame {
                boundary,
                components,
                inner_edges,
                comp_mask: 0,
                edge_mask: 0,
            });
            return true;
        }
        false
    }
}

impl Iterator for SeparationIter<'_> {
    type Item = Separation;

    fn next(&mut self) -> Option<Separation> {
        loop {
            if self.current.is_none() && !self.load() {
                return None;
            }
            let frame = self.current.as_mut().unwrap();
            let n_comp = frame.components.len();
            let n_edge = frame.inner_edges.len();
            if frame.comp_mask >> n_comp != 0 {
                self.current = None;
                continue;
            }
            let mut va: VertexSet = frame.boundary.iter().copied().collect();
            let mut vb = va.clone();
            for (i, comp) in frame.components.iter().enumerate() {
                let target = if frame.comp_mask >> i & 1 == 0 { &mut va } else { &mut vb };
                target.extend(comp.iter().copied());
            }
            let mut edge_side = BTreeMap::new();
            for &(u, v) in self.g.edges() {
                let side = if !vb.contains(&u) || !vb.contains(&v) {
                    Side::A
                } else if !va.contains(&u) || !va.contains(&v) {
                    Side::B
                } else {
                    let j = frame.inner_edges.binary_search(&edge(u, v)).unwrap();
                    if frame.edge_mask >> j & 1 == 0 {
                        Side::A
                    } else {
                        Side::B
                    }
                };
                edge_side.insert((u, v), side);
            }
            frame.edge_mask += 1;
            if frame.edge_mask >> n_edge != 0 {
                frame.edge_mask = 0;
                frame.comp_mask += 1;
            }
            return Some(Separation { va, vb, edge_side });
        }
    }
}

/// Every separation of `g` of order at most `max_order`.
pub fn enumerate_separations(g: &Graph, max_order: usize) -> Result<SeparationIter<'_>> {
    enumerate_separations_capped(g, max_order, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_separations_capped(
    g: &Graph,
    max_order: usize,
    cap: usize,
) -> Result<SeparationIter<'_>> {
    check_cap("graph for separation enumeration", g.n() as u128, cap as u128)?;
    if g.m() > 128 {
        return input("separation enumeration supports at most 128 edges");
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut boundaries = Vec::new();
    for k in 0..=max_order.min(g.n()) {
        crate::graph::for_each_subset(&verts, k, |s| {
            boundaries.push(s.to_vec());
            true
        });
    }
    Ok(SeparationIter {
        g,
        boundaries,
        next_boundary: 0,
        current: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    /// Independent brute-force count over all `(va, vb, edge_side)` triples.
    fn brute_force_count(g: &Graph, max_order: usize) -> usize {
        let n = g.n();
        let m = g.m();
        let mut count = 0;
        for a in 0u32..1 << n {
            for b in 0u32..1 << n {
                if (a | b) != (1 << n) - 1 || (a & b).count_ones() as usize > max_order {
                    continue;
                }
                for sides in 0u32..1 << m {
                    let ok = g.edges().iter().enumerate().all(|(i, &(u, v))| {
                        let m = if sides >> i & 1 == 0 { a } else { b };
                        m >> u & 1 == 1 && m >> v & 1 == 1
                    });
                    if ok {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn k2_order_zero_has_two_trivial_separations() {
        let g = complete(2);
        let seps: Vec<_> = enumerate_separations(&g, 0).unwrap().collect();
        assert_eq!(seps.len(), 2);
        assert!(seps.iter().any(|s| s.va.is_empty() && s.vb.len() == 2));
        assert!(seps.iter().any(|s| s.vb.is_empty() && s.va.len() == 2));
    }

    #[test]
    fn p3_has_middle_cut() {
        let g = path(3);
        let found = enumerate_separations(&g, 1).unwrap().any(|s| {
            s.boundary() == VertexSet::from([1])
                && s.va == VertexSet::from([0, 1])
                && s.vb == VertexSet::from([1, 2])
        });
        assert!(found);
    }

    #[test]
    fn count_matches_brute_force() {
        let graphs = [
            complete(3),
            path(4),
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
            Graph::empty(3),
        ];
        for g in &graphs {
            for k in 0..=g.n() {
                let seps: Vec<_> = enumerate_separations(g, k).unwrap().collect();
                assert_eq!(seps.len(), brute_force_count(g, k), "graph {g:?} order {k}");
                let distinct: std::collections::BTreeSet<_> = seps.iter().cloned().collect();
                assert_eq!(distinct.len(), seps.len());
                for s in &seps {
                    s.validate(g).unwrap();
                    assert!(s.order() <= k);
                }
            }
        }
    }

    #[test]
    fn enumeration_refuses_large_graphs() {
        let g = path(13);
        assert!(matches!(
            enumerate_separations(&g, 1),
            Err(crate::Error::Size { .. })
        ));
    }

    #[test]
    fn bits_round_trip() {
        let g = complete(4);
        for s in enumerate_separations(&g, 2).unwrap() {
            let bits = SepBits::from_separation(&g, &s);
            assert_eq!(bits.to_separation(&g), s);
            assert_eq!(bits.reversed().to_separation(&g), s.reversed());
        }
    }
}
