//! Named graph families: the triangular grid, the apex-recursion lower-bound
//! examples, `K*_{s,t}`, and the usual hosts.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_cap, input, Error, Result};
use crate::graph::Graph;

/// Largest graph any generator will build.
pub const GENERATOR_VERTEX_CAP: usize = 100_000;

/// `eta × eta` triangular grid: the square grid plus the NE–SW diagonal of
/// every cell. Vertex `(row, col)` has id `row * eta + col`.
pub fn triangular_grid(eta: usize) -> Graph {
    let id = |r: usize, c: usize| r * eta + c;
    let mut g = Graph::empty(eta * eta);
    for r in 0..eta {
        for c in 0..eta {
            if c + 1 < eta {
                g.add_edge(id(r, c), id(r, c + 1)).unwrap();
            }
            if r + 1 < eta {
                g.add_edge(id(r, c), id(r + 1, c)).unwrap();
            }
            if r + 1 < eta && c + 1 < eta {
                g.add_edge(id(r, c + 1), id(r + 1, c)).unwrap();
            }
        }
    }
    g
}

/// Apex over `copies` disjoint copies of `base`. The apex is vertex 0.
fn apex_over(base: &Graph, copies: usize) -> Graph {
    let mut g = Graph::empty(1);
    for _ in 0..copies {
        g = g.disjoint_union(base);
    }
    for v in 1..g.n() {
        g.add_edge(0, v).unwrap();
    }
    g
}

fn apex_recursion(base: Graph, s: usize, copies: usize) -> Result<Graph> {
    if s == 0 || copies == 0 {
        return input("apex recursion parameters must be at least 1");
    }
    let mut size = base.n() as u128;
    for _ in 1..s {
        size = 1 + copies as u128 * size;
        check_cap("generated graph", size, GENERATOR_VERTEX_CAP as u128)?;
    }
    let mut g = base;
    for _ in 1..s {
        g = apex_over(&g, copies);
    }
    Ok(g)
}

/// `G_1` is the triangular grid; `G_s` is an apex over `eta` copies of `G_{s-1}`.
pub fn standard_minor_example(s: usize, eta: usize) -> Result<Graph> {
    if eta == 0 {
        return input("eta must be at least 1");
    }
    check_cap("generated graph", (eta * eta) as u128, GENERATOR_VERTEX_CAP as u128)?;
    apex_recursion(triangular_grid(eta), s, eta)
}

/// Same recursion with the path `P_c` as base and `c` copies per level.
pub fn standard_treewidth_example(s: usize, c: usize) -> Result<Graph> {
    if c == 0 {
        return input("c must be at least 1");
    }
    check_cap("generated graph", c as u128, GENERATOR_VERTEX_CAP as u128)?;
    apex_recursion(path(c), s, c)
}

/// `K*_{s,t}`: a clique on `0..s` joined to an independent set on `s..s+t`.
pub fn k_star(s: usize, t: usize) -> Graph {
    complete(s).join(&Graph::empty(t))
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1).unwrap();
    }
    g
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
pub fn gnp_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability {p} outside [0, 1]"));
    }
    check_cap("generated graph", n as u128, GENERATOR_VERTEX_CAP as u128)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gnp_with(n, p, &mut rng))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniform random labelled tree via a random attachment order.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v).unwrap();
    }
    g
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    TriangularGrid,
    StandardMinorExample,
    StandardTreewidthExample,
    Complete,
    CompleteBipartite,
    KStar,
    Path,
    GnpRandom,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::TriangularGrid,
        Family::StandardMinorExample,
        Family::StandardTreewidthExample,
        Family::Complete,
        Family::CompleteBipartite,
        Family::KStar,
        Family::Path,
        Family::GnpRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TriangularGrid => "triangular_grid",
            Family::StandardMinorExample => "standard_minor_example",
            Family::StandardTreewidthExample => "standard_treewidth_example",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::KStar => "k_star",
            Family::Path => "path",
            Family::GnpRandom => "gnp_random",
        }
    }

    /// Number of integer size parameters.
    pub fn arity(self) -> usize {
        match self {
            Family::TriangularGrid | Family::Complete | Family::Path => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown family `{s}`")))
    }
}

/// A family plus its parameters. For `gnp_random` the parameters are
/// `n` and the edge probability in percent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>, seed: Option<u64>) -> Result<Self> {
        if params.len() != family.arity() {
            return input(format!(
                "{family} takes {} parameters, got {}",
                family.arity(),
                params.len()
            ));
        }
        let sizes = match family {
            Family::GnpRandom => &params[..1],
            _ => &params[..],
        };
        if sizes.contains(&0) {
            return input("size parameters must be at least 1");
        }
        if family == Family::GnpRandom && params[1] > 100 {
            return input("gnp_random probability is given in percent (0..=100)");
        }
        Ok(FamilySpec {
            family,
            params,
            seed,
        })
    }

    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let cap = |n: u128| check_cap("generated graph", n, GENERATOR_VERTEX_CAP as u128);
        match self.family {
            Family::TriangularGrid => {
                cap((p[0] * p[0]) as u128)?;
                Ok(triangular_grid(p[0]))
            }
            Family::StandardMinorExample => standard_minor_example(p[0], p[1]),
            Family::StandardTreewidthExample => standard_treewidth_example(p[0], p[1]),
            Family::Complete => {
                cap(p[0] as u128)?;
                Ok(complete(p[0]))
            }
            Family::CompleteBipartite => {
                cap((p[0] + p[1]) as u128)?;
                Ok(complete_bipartite(p[0], p[1]))
            }
            Family::KStar => {
                cap((p[0] + p[1]) as u128)?;
                Ok(k_star(p[0], p[1]))
            }
            Family::Path => {
                cap(p[0] as u128)?;
                Ok(path(p[0]))
            }
            Family::GnpRandom => gnp_random(p[0], p[1] as f64 / 100.0, self.seed.unwrap_or(0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_grid_small_cases() {
        assert_eq!(triangular_grid(1).n(), 1);
        assert_eq!(triangular_grid(1).m(), 0);
        let g = triangular_grid(2);
        assert_eq!((g.n(), g.m()), (4, 5));
        for eta in 1..8 {
            let g = triangular_grid(eta);
            assert!(g.max_degree() <= 6);
            assert!(g.is_connected());
            if eta >= 2 {
                assert!(g.m() <= 3 * g.n() - 6);
            }
        }
        assert_eq!(triangular_grid(4).max_degree(), 6);
    }

    #[test]
    fn apex_recursion_sizes() {
        assert_eq!(standard_minor_example(1, 3).unwrap(), triangular_grid(3));
        assert_eq!(standard_minor_example(2, 2).unwrap().n(), 9);
        assert_eq!(standard_treewidth_example(1, 4).unwrap(), path(4));
        let g = standard_treewidth_example(2, 3).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(0), 9);
        assert!(standard_minor_example(6, 40).is_err());
    }

    #[test]
    fn removing_apex_leaves_copies() {
        let g = standard_minor_example(3, 2).unwrap();
        let rest = g.remove_vertices(&[0].into());
        let comps = rest.graph.components();
        assert_eq!(comps.len(), 2);
        let lower = standard_minor_example(2, 2).unwrap();
        for c in comps {
            assert_eq!(c.len(), lower.n());
            assert_eq!(rest.graph.induced(&c).graph, lower);
        }
    }

    #[test]
    fn k_star_shapes() {
        assert_eq!(k_star(1, 3), star(3));
        let g = k_star(2, 2);
        assert_eq!((g.n(), g.m()), (4, 5));
        assert!(!g.has_edge(2, 3));
        for s in 1..5 {
            for t in 1..5 {
                assert_eq!(k_star(s, t).m(), s * (s - 1) / 2 + s * t);
            }
        }
    }

    #[test]
    fn plumbing_families() {
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        assert_eq!(path(1).n(), 1);
        assert_eq!(path(1).m(), 0);
        assert_eq!(
            gnp_random(8, 0.5, 42).unwrap(),
            gnp_random(8, 0.5, 42).unwrap()
        );
        assert!(gnp_random(3, 1.5, 0).is_err());
    }

    #[test]
    fn family_spec_checks_arity() {
        assert!(FamilySpec::new(Family::Path, vec![3, 4], None).is_err());
        assert!(FamilySpec::new(Family::Complete, vec![0], None).is_err());
        let spec = FamilySpec::new("k_star".parse().unwrap(), vec![2, 3], None).unwrap();
        assert_eq!(spec.build().unwrap(), k_star(2, 3));
    }
}
