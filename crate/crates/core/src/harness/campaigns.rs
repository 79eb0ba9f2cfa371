//! The verification campaigns other than the lemma suites.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::Rng;

use crate::containment::{
    has_kst_subgraph, has_minor_counted, has_odd_minor_counted, DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP,
};
use crate::error::{check_cap, Error, Result};
use crate::generators::{
    complete, complete_bipartite, k_star, standard_minor_example, standard_treewidth_example, triangular_grid, Family,
    FamilySpec,
};
use crate::graph::{binomial, monochromatic_components, Coloring, Graph, Vertex, VertexSet};
use crate::solver::{brute_force_min_clustering_with, SearchStats, DEFAULT_BRUTE_FORCE_BUDGET};
use crate::structure::{tangle_axioms_check, tangle_from_y1, treewidth_exact};

use super::report::{CampaignReport, CampaignRun, Verdict};
use super::{instance_rng, suites};

/// Largest number of 2-colorings the hex campaign enumerates per grid.
pub const HEX_COLORING_CAP: u128 = 1 << 16;
/// Subsets per size enumerated exhaustively before growth switches to sampling.
pub const GROWTH_EXHAUSTIVE_CAP: u128 = 20_000;
/// Sampled subsets per size above the exhaustive cap.
pub const GROWTH_SAMPLES: usize = 2_000;
/// Vertex cap for the bounded-treewidth tangle campaign.
pub const NO_TANGLE_VERTEX_CAP: usize = 8;

fn run(report: CampaignReport, start: Instant) -> CampaignRun {
    CampaignRun {
        report,
        elapsed: start.elapsed(),
        counterexamples: Vec::new(),
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Verdict for a result whose size errors mean "skipped".
fn or_skip<T>(r: Result<T>, f: impl FnOnce(T) -> (Verdict, u64)) -> (Verdict, u64) {
    match r {
        Ok(x) => f(x),
        Err(e @ Error::Size { .. }) => (Verdict::skip(e.to_string()), 0),
        Err(e) => (Verdict::fail(format!("error: {e}")), 0),
    }
}

// ---- hex ----

/// Longest path inside `allowed`, by exhaustive search.
fn longest_path_within(g: &Graph, allowed: &VertexSet) -> usize {
    fn extend(g: &Graph, v: Vertex, allowed: &VertexSet, on: &mut Vec<bool>) -> usize {
        let mut best = 1;
        for &w in g.neighbors(v) {
            if allowed.contains(&w) && !on[w] {
                on[w] = true;
                best = best.max(1 + extend(g, w, allowed, on));
                on[w] = false;
            }
        }
        best
    }
    let mut on = vec![false; g.n()];
    let mut best = 0;
    for &v in allowed {
        on[v] = true;
        best = best.max(extend(g, v, allowed, &mut on));
        on[v] = false;
    }
    best
}

/// Whether the 2-coloring `c` of the `eta × eta` grid has a monochromatic
/// path on at least `eta` vertices. A component meeting two opposite sides
/// holds one (a path changes row and column by at most one per step); other
/// cases fall back to exhaustive longest paths.
pub fn has_long_monochromatic_path(g: &Graph, eta: usize, c: &Coloring) -> Result<bool> {
    let comps = monochromatic_components(g, c)?;
    let crosses = |m: &VertexSet| {
        let rows: Vec<usize> = m.iter().map(|v| v / eta).collect();
        let cols: Vec<usize> = m.iter().map(|v| v % eta).collect();
        (rows.contains(&0) && rows.contains(&(eta - 1))) || (cols.contains(&0) && cols.contains(&(eta - 1)))
    };
    if comps.iter().any(crosses) {
        return Ok(true);
    }
    Ok(comps.iter().any(|m| m.len() >= eta && longest_path_within(g, m) >= eta))
}

/// Every 2-coloring of `triangular_grid(η)`, `η ≤ eta_max`, has a
/// monochromatic path on at least `η` vertices.
pub fn verify_hex(eta_max: usize) -> Result<CampaignRun> {
    let start = Instant::now();
    let mut report = CampaignReport::new("hex", params(&[("eta_max", eta_max.to_string())]), 0);
    for eta in 1..=eta_max {
        let g = triangular_grid(eta);
        let n = g.n();
        let total = 1u128 << n;
        check_cap("hex colorings", total, HEX_COLORING_CAP)?;
        let mut bad = None;
        for mask in 0..total as u64 {
            let c = Coloring::new((0..n).map(|v| 1 + (mask >> v & 1) as i64).collect());
            if !has_long_monochromatic_path(&g, eta, &c)? {
                bad = Some(mask);
                break;
            }
        }
        let verdict = match bad {
            None => Verdict::pass_with(format!("colorings={total}")),
            Some(mask) => Verdict::fail(format!("coloring mask {mask:#x} has no monochromatic path on {eta} vertices")),
        };
        report.push(format!("eta={eta} n={n}"), verdict, total as u64);
    }
    Ok(run(report, start))
}

// ---- lower-bound families ----

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (a, b) = p.split_once(':').ok_or_else(|| Error::Input(format!("expected a:b, got {p:?}")))?;
            Ok((parse_num(a)?, parse_num(b)?))
        })
        .collect()
}

fn write_pairs(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect::<Vec<_>>().join(",")
}

fn parse_num<T: FromStr>(s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Input(format!("expected a number, got {s:?}")))
}

fn push_minor_check(report: &mut CampaignReport, tag: &str, g: &Graph, h: &Graph, name: &str) {
    let (verdict, ops) = or_skip(
        has_minor_counted(g, h, DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP),
        |(m, ops)| (Verdict::check(m.is_none(), || format!("found a {name} minor: {:?}", m.unwrap().branch_sets)), ops),
    );
    report.push(format!("{tag} check=no_{name}_minor"), verdict, ops);
}

fn push_kst_check(report: &mut CampaignReport, tag: &str, g: &Graph, s: usize, t: usize) {
    let found = has_kst_subgraph(g, s, t);
    let verdict = Verdict::check(found.is_none(), || format!("found K{s},{t}: {found:?}"));
    report.push(format!("{tag} check=no_K{s},{t}_subgraph"), verdict, 0);
}

fn push_clustering_check(report: &mut CampaignReport, tag: &str, g: &Graph, k: usize, bound: usize, budget: u128) {
    let mut stats = SearchStats::default();
    let res = brute_force_min_clustering_with(g, k, budget, &mut stats);
    let (verdict, _) = or_skip(res, |(min, c)| {
        let v = if min >= bound {
            Verdict::pass_with(format!("min={min}"))
        } else {
            Verdict::fail(format!("a {k}-coloring has clustering {min} < {bound}: {:?}", c.as_slice()))
        };
        (v, 0)
    });
    report.push(format!("{tag} check=clustering k={k} bound={bound}"), verdict, stats.nodes);
}

/// The apex families: for each `(s, η)` in `minor_pairs`, no `K_{s+4}`
/// minor, no `K_{s,s+6}` subgraph and every `(s+1)`-coloring has clustering
/// at least `η`; for each `(s, c)` in `tw_pairs`, treewidth `s`, no
/// `K_{s,s+2}` subgraph and every `s`-coloring has clustering at least `c`.
/// Pairs with `s > s_max` are dropped; instances over a cap are skipped.
pub fn verify_standard_lower_bounds(
    s_max: usize,
    minor_pairs: &[(usize, usize)],
    tw_pairs: &[(usize, usize)],
    budget: u128,
) -> Result<CampaignRun> {
    let start = Instant::now();
    let p = params(&[
        ("s_max", s_max.to_string()),
        ("minor", write_pairs(minor_pairs)),
        ("tw", write_pairs(tw_pairs)),
        ("budget", budget.to_string()),
    ]);
    let mut report = CampaignReport::new("standard_lower_bounds", p, 0);
    for &(s, eta) in minor_pairs.iter().filter(|p| p.0 <= s_max) {
        let g = standard_minor_example(s, eta)?;
        let tag = format!("family=minor s={s} eta={eta} n={}", g.n());
        push_minor_check(&mut report, &tag, &g, &complete(s + 4), &format!("K{}", s + 4));
        push_kst_check(&mut report, &tag, &g, s, s + 6);
        push_clustering_check(&mut report, &tag, &g, s + 1, eta, budget);
    }
    for &(s, c) in tw_pairs.iter().filter(|p| p.0 <= s_max) {
        let g = standard_treewidth_example(s, c)?;
        let tag = format!("family=treewidth s={s} c={c} n={}", g.n());
        let (verdict, _) = or_skip(treewidth_exact(&g), |(tw, _)| {
            (Verdict::check(tw == s, || format!("treewidth {tw}")), 0)
        });
        report.push(format!("{tag} check=treewidth={s}"), verdict, 0);
        push_kst_check(&mut report, &tag, &g, s, s + 2);
        push_clustering_check(&mut report, &tag, &g, s, c, budget);
    }
    Ok(run(report, start))
}

// ---- growth ----

/// Calls `f` on every `m`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, m: usize, mut f: impl FnMut(&[usize])) {
    if m > n {
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        f(&idx);
        let Some(i) = (0..m).rev().find(|&i| idx[i] < n - m + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `max |N^{≥s}(X)|` over `m`-subsets `X`: exact when there are at most
/// [`GROWTH_EXHAUSTIVE_CAP`] of them, otherwise over [`GROWTH_SAMPLES`]
/// random ones. Returns `(max, subsets examined, exhaustive)`.
pub fn max_growth<R: Rng>(g: &Graph, s: usize, m: usize, rng: &mut R) -> Result<(usize, u64, bool)> {
    let n = g.n();
    let eval = |x: &[usize]| -> Result<usize> { Ok(g.n_geq_s(&x.iter().copied().collect(), s)?.len()) };
    if m > n {
        return Ok((0, 0, true));
    }
    let mut best = 0;
    if binomial(n, m) <= GROWTH_EXHAUSTIVE_CAP {
        let mut count = 0u64;
        let mut err = None;
        for_each_subset(n, m, |x| {
            count += 1;
            match eval(x) {
                Ok(k) => best = best.max(k),
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        return Ok((best, count, true));
    }
    for _ in 0..GROWTH_SAMPLES {
        let x = sample(rng, n, m).into_vec();
        best = best.max(eval(&x)?);
    }
    Ok((best, GROWTH_SAMPLES as u64, false))
}

/// Empirical `max_{|X| = m} |N^{≥s}(X)|` for `m ≤ m_max` on family members
/// whose first parameter ranges over `sizes` (`extra` supplies the rest).
/// Members containing `K_{s,t}` are skipped and recorded.
pub fn measure_growth(
    s: usize,
    t: usize,
    family: Family,
    sizes: &[usize],
    extra: &[usize],
    m_max: usize,
    seed: u64,
) -> Result<CampaignRun> {
    let start = Instant::now();
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let p = params(&[
        ("s", s.to_string()),
        ("t", t.to_string()),
        ("family", family.to_string()),
        ("sizes", join(sizes)),
        ("extra", join(extra)),
        ("m_max", m_max.to_string()),
    ]);
    let mut report = CampaignReport::new("growth", p, seed);
    for &size in sizes {
        let mut fp = vec![size];
        fp.extend_from_slice(extra);
        let g = FamilySpec::new(family, fp, Some(seed))?.build()?;
        let tag = format!("size={size} n={}", g.n());
        if let Some((a, b)) = has_kst_subgraph(&g, s, t) {
            report.push(tag, Verdict::skip(format!("contains K{s},{t}: {a:?} {b:?}")), 0);
            continue;
        }
        for m in 0..=m_max.min(g.n()) {
            let mut rng = instance_rng(seed, report.instances.len());
            let (verdict, ops) = or_skip(max_growth(&g, s, m, &mut rng), |(best, ops, exact)| {
                let how = if exact { "exhaustive" } else { "sampled" };
                (Verdict::pass_with(format!("max={best} {how}")), ops)
            });
            report.push(format!("{tag} m={m}"), verdict, ops);
        }
    }
    Ok(run(report, start))
}

// ---- tangles versus treewidth ----

/// A random graph of treewidth at most `w`: a random `w`-tree (a clique on
/// the first `w + 1` vertices, then each vertex joined to a random `w`-clique)
/// with each edge kept with probability `keep`.
pub fn random_partial_k_tree<R: Rng>(n: usize, w: usize, keep: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    let base = n.min(w + 1);
    for u in 0..base {
        for v in u + 1..base {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<Vertex>> = if base == w + 1 && w > 0 {
        (0..base).map(|skip| (0..base).filter(|&x| x != skip).collect()).collect()
    } else {
        vec![(0..base).collect()]
    };
    for v in base..n {
        let c = cliques[rng.gen_range(0..cliques.len())].clone();
        for &u in &c {
            edges.push((u, v));
        }
        for i in 0..c.len() {
            let mut next = c.clone();
            next[i] = v;
            cliques.push(next);
        }
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    Graph::from_edges(n, kept).expect("distinct edges")
}

/// Graphs of treewidth at most `w` have no tangle of order `w + 2`: on
/// sampled graphs with at most `n_max` vertices, every candidate
/// `tangle_from_y1(G, w + 2, Y₁)` over sampled `Y₁` must fail an axiom.
pub fn verify_no_tangle_bounded_tw(w: usize, n_max: usize, graphs: usize, y_samples: usize, seed: u64) -> Result<CampaignRun> {
    let start = Instant::now();
    check_cap("tangle campaign graphs", n_max as u128, NO_TANGLE_VERTEX_CAP as u128)?;
    let p = params(&[
        ("w", w.to_string()),
        ("n_max", n_max.to_string()),
        ("graphs", graphs.to_string()),
        ("y_samples", y_samples.to_string()),
    ]);
    let mut report = CampaignReport::new("no_tangle_bounded_tw", p, seed);
    let theta = w + 2;
    let mut hosts = vec![Graph::empty(1)];
    for i in 0..graphs {
        let mut rng = instance_rng(seed, usize::MAX - i);
        let n = rng.gen_range(1..=n_max.max(1));
        hosts.push(random_partial_k_tree(n, w, 0.8, &mut rng));
    }
    for (gi, g) in hosts.iter().enumerate() {
        let tag = format!("graph={gi} n={} m={}", g.n(), g.m());
        match treewidth_exact(g) {
            Ok((tw, _)) if tw <= w => {}
            Ok((tw, _)) => {
                report.push(tag, Verdict::fail(format!("generated treewidth {tw} > {w}")), 0);
                continue;
            }
            Err(e) => {
                report.push(tag, Verdict::skip(e.to_string()), 0);
                continue;
            }
        }
        for _ in 0..y_samples {
            let mut rng = instance_rng(seed, report.instances.len());
            let y1: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.5)).collect();
            let res = tangle_from_y1(g, theta, &y1).and_then(|t| {
                let ops = t.len() as u64;
                tangle_axioms_check(g, &t.separations, theta).map(|v| (v, ops))
            });
            let (verdict, ops) = or_skip(res, |(v, ops)| match v.first_failure() {
                Some(axiom) => (Verdict::pass_with(format!("rejected by {axiom}")), ops),
                None => (Verdict::fail(format!("accepted as a tangle of order {theta}")), ops),
            });
            report.push(format!("{tag} theta={theta} y1={y1:?}").replace(", ", ","), verdict, ops);
        }
    }
    Ok(run(report, start))
}

// ---- odd minors ----

/// `K_{n,n}` has no odd `K_3` minor for `n ≤ 5`; the coloring-count
/// arithmetic `d = 2(2s−1)+1 = 4s−1` and `d + 4s − 3 = 8s − 4` for
/// `s ≤ 10`; and vertex and edge counts of `K*_{2s,s+1}`.
pub fn verify_odd_minor_facts() -> CampaignRun {
    let start = Instant::now();
    let mut report = CampaignReport::new("odd_minor_facts", BTreeMap::new(), 0);
    let k3 = complete(3);
    for n in 2..=5 {
        let g = complete_bipartite(n, n);
        let (verdict, ops) = or_skip(
            has_odd_minor_counted(&g, &k3, DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP),
            |(m, ops)| (Verdict::check(m.is_none(), || format!("odd K3 minor {:?}", m.unwrap().0.branch_sets)), ops),
        );
        report.push(format!("check=no_odd_K3 host=K{n},{n}"), verdict, ops);
    }
    for s in 1..=10i64 {
        let d = 2 * (2 * s - 1) + 1;
        let ok = d == 4 * s - 1 && d + 4 * s - 3 == 8 * s - 4;
        report.push(
            format!("check=arithmetic s={s}"),
            Verdict::check(ok, || format!("d={d}, d+4s-3={}", d + 4 * s - 3)),
            1,
        );
    }
    for s in 1..=5 {
        let g = k_star(2 * s, s + 1);
        let (n, m) = (3 * s + 1, s * (2 * s - 1) + 2 * s * (s + 1));
        report.push(
            format!("check=kstar s={s}"),
            Verdict::check(g.n() == n && g.m() == m, || format!("got {} vertices and {} edges", g.n(), g.m())),
            g.m() as u64,
        );
    }
    run(report, start)
}

// ---- dispatch ----

/// Campaign names accepted by [`run_campaign`] (a `verify_` prefix is also
/// accepted, and `measure_growth` for `growth`).
pub const CAMPAIGNS: [&str; 6] = [
    "hex",
    "standard_lower_bounds",
    "lemma_suites",
    "growth",
    "no_tangle_bounded_tw",
    "odd_minor_facts",
];

struct Args<'a> {
    map: &'a BTreeMap<String, String>,
}

impl Args<'_> {
    fn allow(&self, keys: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::Input(format!("unknown parameter {k:?}; expected one of {keys:?}"))),
            None => Ok(()),
        }
    }

    fn get<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        self.map.get(key).map_or(Ok(default), |v| parse_num(v))
    }

    fn list(&self, key: &str, default: &[usize]) -> Result<Vec<usize>> {
        match self.map.get(key) {
            None => Ok(default.to_vec()),
            Some(v) => v.split(',').filter(|x| !x.is_empty()).map(parse_num).collect(),
        }
    }
}

/// Runs a campaign by name with `key=value` parameters (defaults in
/// parentheses):
///
/// * `hex`: `eta_max` (3)
/// * `standard_lower_bounds`: `s_max` (2), `minor` (`1:3,2:2`), `tw`
///   (`1:3,2:3`), `budget` (10^8)
/// * `lemma_suites`: `trials` (200)
/// * `growth`: `s` (2), `t` (7), `family` (`triangular_grid`), `sizes`
///   (`2,3,4`), `extra` (empty), `m_max` (4)
/// * `no_tangle_bounded_tw`: `w` (1), `n_max` (8), `graphs` (20), `y_samples` (5)
/// * `odd_minor_facts`: none
pub fn run_campaign(name: &str, params: &BTreeMap<String, String>, seed: u64) -> Result<CampaignRun> {
    let a = Args { map: params };
    let name = name.strip_prefix("verify_").unwrap_or(name);
    match name {
        "hex" => {
            a.allow(&["eta_max"])?;
            verify_hex(a.get("eta_max", 3)?)
        }
        "standard_lower_bounds" => {
            a.allow(&["s_max", "minor", "tw", "budget"])?;
            let minor = parse_pairs(a.map.get("minor").map_or("1:3,2:2", String::as_str))?;
            let tw = parse_pairs(a.map.get("tw").map_or("1:3,2:3", String::as_str))?;
            verify_standard_lower_bounds(a.get("s_max", 2)?, &minor, &tw, a.get("budget", DEFAULT_BRUTE_FORCE_BUDGET)?)
        }
        "lemma_suites" => {
            a.allow(&["trials"])?;
            Ok(suites::verify_lemma_suites(a.get("trials", 200)?, seed))
        }
        "growth" | "measure_growth" => {
            a.allow(&["s", "t", "family", "sizes", "extra", "m_max"])?;
            let family: Family = a.map.get("family").map_or("triangular_grid", String::as_str).parse()?;
            measure_growth(
                a.get("s", 2)?,
                a.get("t", 7)?,
                family,
                &a.list("sizes", &[2, 3, 4])?,
                &a.list("extra", &[])?,
                a.get("m_max", 4)?,
                seed,
            )
        }
        "no_tangle_bounded_tw" => {
            a.allow(&["w", "n_max", "graphs", "y_samples"])?;
            verify_no_tangle_bounded_tw(a.get("w", 1)?, a.get("n_max", 8)?, a.get("graphs", 20)?, a.get("y_samples", 5)?, seed)
        }
        "odd_minor_facts" => {
            a.allow(&[])?;
            Ok(verify_odd_minor_facts())
        }
        other => Err(Error::Input(format!("unknown campaign {other:?}; expected one of {CAMPAIGNS:?}"))),
    }
}
