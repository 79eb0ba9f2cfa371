//! `(η, g)`-bounded L-colorings with stable color classes for `F`.

use std::collections::BTreeMap;

use crate::error::{input, Result};
use crate::graph::{monochromatic_components, Color, ColorSet, Coloring, Graph, Vertex, VertexSet};

use super::assignment::ListAssignment;

/// `η`, a nondecreasing `g` and the colors `F` whose classes must be stable.
///
/// `g(x)` is the table value at the largest key `≤ x`, or `g_default` when
/// no key is that small.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedColoringPolicy {
    pub eta: usize,
    pub g_table: BTreeMap<usize, usize>,
    pub g_default: usize,
    pub stable_colors: ColorSet,
}

impl BoundedColoringPolicy {
    /// Constant `g`.
    pub fn constant(eta: usize, g: usize, stable_colors: ColorSet) -> Self {
        BoundedColoringPolicy {
            eta,
            g_table: BTreeMap::new(),
            g_default: g,
            stable_colors,
        }
    }

    pub fn g(&self, x: usize) -> usize {
        self.g_table.range(..=x).next_back().map_or(self.g_default, |(_, &y)| y)
    }

    /// Checks `η ≥ 1` and that `g` is nondecreasing.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.eta == 0 {
            return Err("eta must be at least 1".into());
        }
        let mut prev = self.g_default;
        for (&x, &y) in &self.g_table {
            if y < prev {
                return Err(format!("g decreases at {x}: {y} < {prev}"));
            }
            prev = y;
        }
        Ok(())
    }

    /// `η² g(η)`.
    pub fn component_bound(&self) -> usize {
        self.eta.saturating_mul(self.eta).saturating_mul(self.g(self.eta))
    }

    /// `k² g(k)` for `k = |Y₁|`.
    pub fn precolored_bound(&self, k: usize) -> usize {
        k.saturating_mul(k).saturating_mul(self.g(k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedVerdict {
    /// Union of the monochromatic components meeting `Y₁`.
    pub y1_union: VertexSet,
    pub y1_bound: usize,
    /// A largest monochromatic component.
    pub largest: VertexSet,
    pub component_bound: usize,
    /// An edge inside the class of some `x ∈ F`.
    pub unstable: Option<(Vertex, Vertex, Color)>,
}

impl BoundedVerdict {
    pub fn y1_ok(&self) -> bool {
        self.y1_union.len() <= self.y1_bound
    }

    pub fn components_ok(&self) -> bool {
        self.largest.len() <= self.component_bound
    }

    pub fn stable_ok(&self) -> bool {
        self.unstable.is_none()
    }

    pub fn is_bounded(&self) -> bool {
        self.y1_ok() && self.components_ok() && self.stable_ok()
    }
}

/// Evaluates the two size bounds and F-stability of the L-coloring `c`.
pub fn check_eta_g_bounded(
    g: &Graph,
    l: &ListAssignment,
    c: &Coloring,
    policy: &BoundedColoringPolicy,
) -> Result<BoundedVerdict> {
    l.check_len(g)?;
    if let Err(e) = policy.check() {
        return input(e);
    }
    if !l.admits(c) {
        return input("not an L-coloring");
    }
    let y1 = l.singletons();
    let comps = monochromatic_components(g, c)?;
    let y1_union: VertexSet = comps
        .iter()
        .filter(|m| !m.is_disjoint(&y1))
        .flat_map(|m| m.iter().copied())
        .collect();
    let largest = comps.iter().max_by_key(|m| m.len()).cloned().unwrap_or_default();
    let unstable = g
        .edges()
        .iter()
        .find(|&&(u, v)| c.color(u) == c.color(v) && policy.stable_colors.contains(&c.color(u)))
        .map(|&(u, v)| (u, v, c.color(u)));
    Ok(BoundedVerdict {
        y1_union,
        y1_bound: policy.precolored_bound(y1.len()),
        largest,
        component_bound: policy.component_bound(),
        unstable,
    })
}
