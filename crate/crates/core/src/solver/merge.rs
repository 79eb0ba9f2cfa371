//! Gluing colorings of the two sides of a separation.

use crate::error::{input, Result};
use crate::graph::{Color, Coloring, Graph};
use crate::separation::Separation;

/// Glues `c_a` (a coloring of `G[V(A)]` in its local ids) and `c_b` (of
/// `G[V(B)]`). They must agree on `V(A ∩ B)`.
pub fn merge_side_colorings(g: &Graph, sep: &Separation, c_a: &Coloring, c_b: &Coloring) -> Result<Coloring> {
    sep.validate(g).map_err(crate::Error::Input)?;
    if c_a.len() != sep.va.len() || c_b.len() != sep.vb.len() {
        return input(format!(
            "side colorings cover {} and {} vertices, sides have {} and {}",
            c_a.len(),
            c_b.len(),
            sep.va.len(),
            sep.vb.len()
        ));
    }
    let mut colors: Vec<Option<Color>> = vec![None; g.n()];
    for (&v, &x) in sep.va.iter().zip(c_a.as_slice()) {
        colors[v] = Some(x);
    }
    for (&v, &x) in sep.vb.iter().zip(c_b.as_slice()) {
        match colors[v] {
            Some(y) if y != x => return input(format!("sides disagree at boundary vertex {v}: {y} vs {x}")),
            _ => colors[v] = Some(x),
        }
    }
    Ok(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}
