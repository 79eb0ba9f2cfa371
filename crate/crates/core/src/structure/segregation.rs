//! Segregations of a graph into societies, their type, centrality with
//! respect to a tangle, and locations.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{Edge, Graph, Subgraph, VertexSet};
use crate::separation::{Separation, Side};

use super::tangle::Tangle;
use super::vortex::{is_rho_vortex, Society};

/// Checks that every society is a subgraph of `g`, that together they cover
/// `g`, and that distinct societies meet only in common cyclic vertices and
/// share no edge.
pub fn check_segregation(g: &Graph, seg: &[Society]) -> std::result::Result<(), String> {
    for (i, s) in seg.iter().enumerate() {
        s.check().map_err(|e| format!("society {i}: {e}"))?;
        if let Some(v) = s.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(format!("society {i} holds out-of-range vertex {v}"));
        }
        if let Some(&(u, v)) = s.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(format!("society {i} uses non-edge {u}-{v}"));
        }
    }
    let covered_v: VertexSet = seg.iter().flat_map(|s| s.vertices.iter().copied()).collect();
    if let Some(v) = g.vertices().find(|v| !covered_v.contains(v)) {
        return Err(format!("vertex {v} is in no society"));
    }
    let covered_e: BTreeSet<Edge> = seg.iter().flat_map(|s| s.edges.iter().copied()).collect();
    if let Some(&(u, v)) = g.edges().iter().find(|e| !covered_e.contains(e)) {
        return Err(format!("edge {u}-{v} is in no society"));
    }
    for i in 0..seg.len() {
        for j in i + 1..seg.len() {
            let (a, b) = (&seg[i], &seg[j]);
            let (oa, ob) = (a.omega_bar(), b.omega_bar());
            if let Some(v) = a
                .vertices
                .intersection(&b.vertices)
                .find(|v| !oa.contains(v) || !ob.contains(v))
            {
                return Err(format!("societies {i} and {j} share {v} outside their cyclic sets"));
            }
            if let Some((u, v)) = a.edges.intersection(&b.edges).next() {
                return Err(format!("societies {i} and {j} share edge {u}-{v}"));
            }
        }
    }
    Ok(())
}

pub fn validate_segregation(g: &Graph, seg: &[Society]) -> bool {
    check_segregation(g, seg).is_ok()
}

/// Type `(κ, ρ)`: the members with more than three cyclic vertices must go to
/// `S₂`, so the type holds iff there are at most `κ` of them and each is a
/// ρ-vortex. Members with at most three cyclic vertices can always go to `S₁`.
pub fn segregation_type(seg: &[Society], kappa: usize, rho: usize) -> Result<bool> {
    let big: Vec<&Society> = seg.iter().filter(|s| s.cyclic.len() > 3).collect();
    if big.len() > kappa {
        return Ok(false);
    }
    for s in big {
        if !is_rho_vortex(s, rho)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No member `(A, B)` of the tangle has `B ⊆ S` for a society `S`.
pub fn is_tangle_central(tangle: &Tangle, seg: &[Society]) -> bool {
    !seg.iter().any(|s| {
        tangle.separations.iter().any(|sep| {
            sep.vb.is_subset(&s.vertices) && sep.side_edges(Side::B).all(|e| s.edges.contains(&e))
        })
    })
}

/// Every member is a separation of `g` and `A ⊆ B'` for each ordered pair of
/// distinct members.
pub fn check_location(g: &Graph, loc: &[Separation]) -> std::result::Result<(), String> {
    for (i, sep) in loc.iter().enumerate() {
        sep.validate(g).map_err(|e| format!("member {i}: {e}"))?;
    }
    for (i, a) in loc.iter().enumerate() {
        for (j, b) in loc.iter().enumerate() {
            if a != b && !a.a_within_b_of(b) {
                return Err(format!("side A of member {i} is not inside side B of member {j}"));
            }
        }
    }
    Ok(())
}

pub fn validate_location(g: &Graph, loc: &[Separation]) -> bool {
    check_location(g, loc).is_ok()
}

/// `G(L) = G[∩ V(B)]`; the empty location has interior `G`.
pub fn location_interior(g: &Graph, loc: &[Separation]) -> Subgraph {
    let mut keep = g.vertex_set();
    for sep in loc {
        keep.retain(|v| sep.vb.contains(v));
    }
    g.induced(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn society(vertices: &[usize], edges: &[(usize, usize)], cyclic: &[usize]) -> Society {
        Society {
            vertices: vertices.iter().copied().collect(),
            edges: edges.iter().copied().collect(),
            cyclic: cyclic.to_vec(),
        }
    }

    #[test]
    fn whole_graph_is_a_segregation() {
        let g = cycle(5);
        let seg = vec![Society::on_graph(&g, vec![]).unwrap()];
        assert!(validate_segregation(&g, &seg));
        assert!(segregation_type(&seg, 1, 1).unwrap());
    }

    #[test]
    fn path_split_in_two() {
        let g = path(4);
        let good = vec![society(&[0, 1, 2], &[(0, 1), (1, 2)], &[2]), society(&[2, 3], &[(2, 3)], &[2])];
        assert!(validate_segregation(&g, &good));
        let leaky = vec![society(&[0, 1, 2], &[(0, 1), (1, 2)], &[]), society(&[2, 3], &[(2, 3)], &[2])];
        assert!(check_segregation(&g, &leaky).unwrap_err().contains("share 2"));
        let missing = vec![society(&[0, 1, 2], &[(0, 1)], &[2]), society(&[2, 3], &[(2, 3)], &[2])];
        assert!(check_segregation(&g, &missing).unwrap_err().contains("edge 1-2"));
    }

    #[test]
    fn type_counts_large_members() {
        let g = complete(5);
        let big = Society::on_graph(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(!segregation_type(std::slice::from_ref(&big), 0, 10).unwrap());
        assert!(segregation_type(std::slice::from_ref(&big), 1, 10).unwrap());
        assert!(!segregation_type(&[big], 1, 1).unwrap());
    }

    #[test]
    fn locations_on_a_path() {
        let g = path(5);
        let left = Separation::from_vertex_sides(&g, [0, 1].into(), [1, 2, 3, 4].into()).unwrap();
        let right = Separation::from_vertex_sides(&g, [3, 4].into(), [0, 1, 2, 3].into()).unwrap();
        assert!(validate_location(&g, &[]));
        assert_eq!(location_interior(&g, &[]).graph, g);
        assert!(validate_location(&g, &[left.clone(), right.clone()]));
        let inner = location_interior(&g, &[left.clone(), right.clone()]);
        assert_eq!(inner.vertices, vec![1, 2, 3]);
        // Small sides on both ends may share the boundary vertex 2.
        let wide = Separation::from_vertex_sides(&g, [0, 1, 2].into(), [2, 3, 4].into()).unwrap();
        assert!(validate_location(&g, &[wide.clone(), wide.reversed()]));
        // A small side holding interior vertex 2 of the other small side fails.
        let middle = Separation::from_vertex_sides(&g, [1, 2, 3].into(), [0, 1, 3, 4].into()).unwrap();
        assert!(!validate_location(&g, &[wide, middle]));
    }

    #[test]
    fn centrality() {
        let g = path(3);
        let seg = vec![Society::on_graph(&g, vec![]).unwrap()];
        let sep = Separation::from_vertex_sides(&g, [0, 1].into(), [1, 2].into()).unwrap();
        let t = Tangle {
            order: 2,
            separations: BTreeSet::from([sep]),
        };
        assert!(!is_tangle_central(&t, &seg));
        assert!(is_tangle_central(&Tangle::default(), &seg));
    }
}
