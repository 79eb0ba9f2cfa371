//! Tangles as explicit separation sets: axiom checking with witnesses, the
//! tangle induced by a large precolored set, minor control, and `T - Z`.

use std::collections::{BTreeSet, HashSet};

use crate::containment::MinorModel;
use crate::error::{check_cap, input, Result};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::separation::{enumerate_separations, SepBits, Separation, DEFAULT_ENUMERATION_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tangle {
    pub order: usize,
    pub separations: BTreeSet<Separation>,
}

impl Tangle {
    pub fn len(&self) -> usize {
        self.separations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separations.is_empty()
    }

    pub fn contains(&self, sep: &Separation) -> bool {
        self.separations.contains(sep)
    }
}

/// Outcome of [`tangle_axioms_check`]. Every failed check carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TangleVerdict {
    /// A member that is not a separation of order `< θ`, with the reason.
    pub bad_member: Option<(Separation, String)>,
    /// A separation of order `< θ` with neither orientation in the set.
    pub t1: Option<Separation>,
    /// Three members (not necessarily distinct) whose small sides cover `G`.
    pub t2: Option<[Separation; 3]>,
    /// A member with `V(A) = V(G)`.
    pub t3: Option<Separation>,
}

impl TangleVerdict {
    pub fn is_tangle(&self) -> bool {
        self.bad_member.is_none() && self.t1.is_none() && self.t2.is_none() && self.t3.is_none()
    }

    /// Name of the first failed check, for reports.
    pub fn first_failure(&self) -> Option<&'static str> {
        if self.bad_member.is_some() {
            Some("member")
        } else if self.t1.is_some() {
            Some("T1")
        } else if self.t2.is_some() {
            Some("T2")
        } else if self.t3.is_some() {
            Some("T3")
        } else {
            None
        }
    }
}

/// Checks the three tangle axioms of order `theta` against `g`.
///
/// T1 is checked against every separation of order `< theta`, so the graph
/// must respect the enumeration cap. T2 only needs the members whose small
/// side is maximal, since enlarging a side keeps a cover a cover.
pub fn tangle_axioms_check(g: &Graph, separations: &BTreeSet<Separation>, theta: usize) -> Result<TangleVerdict> {
    check_cap("graph for tangle checking", g.n() as u128, DEFAULT_ENUMERATION_CAP as u128)?;
    if g.m() > 128 {
        return input("tangle checking supports at most 128 edges");
    }
    let mut verdict = TangleVerdict::default();
    for sep in separations {
        let reason = match sep.validate(g) {
            Err(e) => Some(e),
            Ok(()) if sep.order() >= theta => Some(format!("order {} is not below {theta}", sep.order())),
            Ok(()) => None,
        };
        if let Some(reason) = reason {
            verdict.bad_member = Some((sep.clone(), reason));
            return Ok(verdict);
        }
    }
    let bits: Vec<SepBits> = separations.iter().map(|s| SepBits::from_separation(g, s)).collect();
    let members: HashSet<SepBits> = bits.iter().copied().collect();

    if theta > 0 {
        for sep in enumerate_separations(g, theta - 1)? {
            let b = SepBits::from_separation(g, &sep);
            if !members.contains(&b) && !members.contains(&b.reversed()) {
                verdict.t1 = Some(sep);
                break;
            }
        }
    }

    let all_v: u64 = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let all_e: u128 = if g.m() == 128 { u128::MAX } else { (1u128 << g.m()) - 1 };
    verdict.t3 = bits
        .iter()
        .position(|b| b.va == all_v)
        .map(|i| bits[i].to_separation(g));

    let maximal: Vec<SepBits> = {
        let mut sides: Vec<SepBits> = bits.clone();
        sides.sort_by_key(|b| std::cmp::Reverse(b.va.count_ones() + b.ea.count_ones()));
        let mut kept: Vec<SepBits> = Vec::new();
        for b in sides {
            let dominated = kept
                .iter()
                .any(|k| b.va & !k.va == 0 && b.ea & !k.ea == 0);
            if !dominated {
                kept.push(b);
            }
        }
        kept
    };
    'outer: for (i, a) in maximal.iter().enumerate() {
        for (j, b) in maximal.iter().enumerate().skip(i) {
            let miss_v = all_v & !(a.va | b.va);
            let miss_e = all_e & !(a.ea | b.ea);
            if let Some(c) = maximal[j..]
                .iter()
                .find(|c| miss_v & !c.va == 0 && miss_e & !c.ea == 0)
            {
                verdict.t2 = Some([a.to_separation(g), b.to_separation(g), c.to_separation(g)]);
                break 'outer;
            }
        }
    }
    Ok(verdict)
}

/// `{(A, B) : |V(A ∩ B)| < θ, |V(A) ∩ Y₁| ≤ 3θ}`.
pub fn tangle_from_y1(g: &Graph, theta: usize, y1: &VertexSet) -> Result<Tangle> {
    g.check_vertex_set(y1)?;
    let mut separations = BTreeSet::new();
    if theta > 0 {
        for sep in enumerate_separations(g, theta - 1)? {
            if sep.va.intersection(y1).count() <= 3 * theta {
                separations.insert(sep);
            }
        }
    }
    Ok(Tangle { order: theta, separations })
}

/// True iff no member of order `< |V(H)|` has some branch set inside `V(A)`.
pub fn controls_minor(tangle: &Tangle, model: &MinorModel) -> bool {
    let h = model.branch_sets.len();
    !tangle.separations.iter().any(|sep| {
        sep.order() < h && model.branch_sets.iter().any(|b| b.is_subset(&sep.va))
    })
}

/// `T - Z` on `G - Z` (local ids follow the sorted order of `V(G) - Z`):
/// every member with `Z ⊆ V(A ∩ B)`, with `Z` deleted, of order `< θ - |Z|`.
pub fn tangle_minus_z(g: &Graph, tangle: &Tangle, z: &VertexSet) -> Result<(Subgraph, Tangle)> {
    g.check_vertex_set(z)?;
    if z.len() >= tangle.order {
        return input(format!("|Z| = {} must be below the tangle order {}", z.len(), tangle.order));
    }
    let rest = g.remove_vertices(z);
    let order = tangle.order - z.len();
    let mut separations = BTreeSet::new();
    for sep in &tangle.separations {
        if !z.is_subset(&sep.va) || !z.is_subset(&sep.vb) {
            continue;
        }
        let (va, vb, edge_side) = sep.minus(z);
        let local = Separation {
            va: rest.local_set(&va),
            vb: rest.local_set(&vb),
            edge_side: edge_side
                .into_iter()
                .map(|((u, v), side)| ((rest.to_local(u).unwrap(), rest.to_local(v).unwrap()), side))
                .collect(),
        };
        if local.order() < order {
            separations.insert(local);
        }
    }
    Ok((rest, Tangle { order, separations }))
}
