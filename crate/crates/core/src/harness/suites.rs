//! Randomized lemma suites. Each suite draws a random instance, runs one
//! construction and checks its statements. Failing instances are shrunk by
//! deleting vertices and edges while they keep failing, then saved.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_cap, Error, Result};
use crate::generators::gnp_with;
use crate::graph::{Color, ColorSet, Coloring, Graph, VertexSet};
use crate::io::Instance;
use crate::lists::{
    check_enlarge_claims, check_growth_statements, check_progress_statements, check_side_claims, enlarge_precolored,
    for_each_l_coloring, growth, progress, random_l_assignment, random_r_assignment, random_separated_graph,
    side_restrict, validate_l, ListAssignment, ProgressFn, StatementFailure,
};
use crate::separation::Side;
use crate::solver::{
    bipartite_block_coloring, brute_force_list_coloring_with, check_block_claims, dp_clustered_coloring_with,
    merge_side_colorings, random_block_instance, DpStats, SearchStats, DEFAULT_BRUTE_FORCE_BUDGET,
    DEFAULT_DP_STATE_CAP,
};

use super::report::{CampaignReport, CampaignRun, Counterexample, Verdict};
use super::instance_rng;

/// Suite names, in campaign order. They double as [`Instance::check`] names.
pub const SUITES: [&str; 6] = ["progress", "growth", "enlarge", "side", "block", "solver"];

/// Cap on side-coloring pairs the merge oracle enumerates.
pub const MERGE_PAIR_BUDGET: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuiteOutcome {
    pub failures: Vec<StatementFailure>,
    pub ops: u64,
}

fn fail(statement: &'static str, detail: impl Into<String>) -> StatementFailure {
    StatementFailure {
        statement,
        detail: detail.into(),
    }
}

fn f_stable(g: &Graph, c: &Coloring, f: &ColorSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| c.color(u) != c.color(v) || !f.contains(&c.color(u)))
}

fn random_colors<R: Rng>(k: usize, top: Color, rng: &mut R) -> ColorSet {
    (0..k).map(|_| rng.gen_range(1..=top)).collect()
}

/// A random instance for `suite`.
pub fn random_instance(suite: &str, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let inst = match suite {
        "progress" => {
            let (n, s, r) = (rng.gen_range(0..=10), rng.gen_range(1..=3), rng.gen_range(1..=3));
            let g = gnp_with(n, rng.gen_range(0.2..0.6), rng);
            let l = random_l_assignment(&g, s, r, rng);
            let mut w: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.3)).collect();
            if rng.gen_bool(0.5) {
                w.extend(g.n_geq_s(&l.singletons(), s)?);
            }
            // One color past the palette, so F may miss every list.
            let f = random_colors(rng.gen_range(0..=r), (s + r + 3) as Color, rng);
            Instance::new(suite, g)
                .with_param("s", s as i64)
                .with_param("r", r as i64)
                .with_param("seed", rng.gen_range(0..1 << 32))
                .with_vset("W", w)
                .with_cset("F", f)
                .with_lists(l)
        }
        "growth" => {
            let (n, s, r) = (rng.gen_range(0..=8), rng.gen_range(1..=2), rng.gen_range(0..=1));
            let g = gnp_with(n, rng.gen_range(0.2..0.6), rng);
            let (l, ell) = random_r_assignment(&g, s, r, rng);
            let z: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.25)).collect();
            Instance::new(suite, g)
                .with_param("s", s as i64)
                .with_param("r", r as i64)
                .with_param("ell", ell)
                .with_param("seed", rng.gen_range(0..1 << 32))
                .with_vset("Z", z)
                .with_lists(l)
        }
        "enlarge" => {
            let (n, s, r) = (rng.gen_range(1..=8), rng.gen_range(1..=2), rng.gen_range(2..=3));
            let g = gnp_with(n, rng.gen_range(0.2..0.6), rng);
            let l = loop {
                let l = random_l_assignment(&g, s, r, rng);
                if !l.singletons().is_empty() {
                    break l;
                }
            };
            let top = (s + r + 2) as Color;
            let f = random_colors(rng.gen_range(0..r), top, rng);
            Instance::new(suite, g)
                .with_param("s", s as i64)
                .with_param("r", r as i64)
                .with_param("ell", rng.gen_range(1..=top))
                .with_param("seed", rng.gen_range(0..1 << 32))
                .with_cset("F", f)
                .with_lists(l)
        }
        "side" => {
            let (n, s, r) = (rng.gen_range(0..=8), rng.gen_range(1..=2), 1);
            let (g, sep) = random_separated_graph(n, rng.gen_range(0.2..0.6), rng);
            let l = random_l_assignment(&g, s, r, rng);
            let f = random_colors(rng.gen_range(0..=r), (s + r + 2) as Color, rng);
            Instance::new(suite, g)
                .with_param("s", s as i64)
                .with_param("r", r as i64)
                .with_param("seed", rng.gen_range(0..1 << 32))
                .with_cset("F", f)
                .with_lists(l)
                .with_separation(sep)
        }
        "block" => {
            let s = rng.gen_range(1..=3);
            let (n_bip, n_extra) = (rng.gen_range(1..=8), rng.gen_range(0..=2));
            let (g, l, y1p, ell) = random_block_instance(n_bip, n_extra, s, 0.4, rng)?;
            Instance::new(suite, g)
                .with_param("s", s as i64)
                .with_param("r", s as i64 - 1)
                .with_param("ell", ell)
                .with_vset("Y", y1p)
                .with_lists(l)
        }
        "solver" => {
            let (n, k) = (rng.gen_range(0..=10), rng.gen_range(1..=3));
            let g = gnp_with(n, rng.gen_range(0.1..0.7), rng);
            let lists = (0..n)
                .map(|_| {
                    let mut x: ColorSet = (1..=k).filter(|_| rng.gen_bool(0.6)).collect();
                    x.insert(rng.gen_range(1..=k));
                    x
                })
                .collect();
            Instance::new(suite, g)
                .with_param("eta", rng.gen_range(1..=3))
                .with_lists(ListAssignment::new(lists))
        }
        other => return Err(Error::Input(format!("unknown suite {other:?}"))),
    };
    Ok(inst)
}

/// Reruns the check named by `inst.check` with the library's own progress.
pub fn replay(inst: &Instance) -> Result<SuiteOutcome> {
    replay_with(inst, progress)
}

/// Reruns the check named by `inst.check`; the `progress` suite calls `pf`.
/// Invalid inputs are precondition errors, not failures.
pub fn replay_with(inst: &Instance, pf: ProgressFn) -> Result<SuiteOutcome> {
    let g = &inst.graph;
    let mut out = SuiteOutcome::default();
    match inst.check.as_str() {
        "progress" => {
            let (l, s, r) = (inst.lists()?, inst.uparam("s")?, inst.uparam("r")?);
            let (w, f) = (inst.vset("W"), inst.cset("F"));
            validate_l(g, l, s, r).map_err(|e| Error::Precondition(e.to_string()))?;
            if f.len() > r {
                return Err(Error::Precondition(format!("|F| = {} exceeds r = {r}", f.len())));
            }
            let lp = pf(g, l, s, r, &w, &f, inst.param("seed")? as u64)?;
            out.failures = check_progress_statements(g, l, &lp, s, r, &w, &f);
            out.ops = g.n() as u64;
        }
        "growth" => {
            let (l, s, r, ell) = (inst.lists()?, inst.uparam("s")?, inst.uparam("r")?, inst.param("ell")?);
            let z = inst.vset("Z");
            let res = growth(g, l, s, ell, r, &z, inst.param("seed")? as u64)?;
            out.failures = check_growth_statements(g, l, &res, s, ell, r, &z);
            out.ops = res.rounds.len() as u64;
        }
        "enlarge" => {
            let (l, s, r, ell) = (inst.lists()?, inst.uparam("s")?, inst.uparam("r")?, inst.param("ell")?);
            let f = inst.cset("F");
            let res = enlarge_precolored(g, l, s, r, &f, ell, inst.param("seed")? as u64)?;
            out.failures = check_enlarge_claims(g, l, &res, s, r, &f, ell);
            out.ops = res.rounds.len() as u64;
        }
        "side" => {
            let (l, s, r) = (inst.lists()?, inst.uparam("s")?, inst.uparam("r")?);
            let f = inst.cset("F");
            let sep = inst
                .separation
                .as_ref()
                .ok_or_else(|| Error::Input("side instance needs a separation".into()))?;
            let seed = inst.param("seed")? as u64;
            let mut sides = Vec::new();
            for side in [Side::A, Side::B] {
                let res = side_restrict(g, l, s, r, sep, side, &f, seed)?;
                out.failures.extend(check_side_claims(l, s, r, &res, &f));
                sides.push(res);
            }
            if out.failures.is_empty() {
                out.ops = merge_oracle(g, l, &f, sep, &sides[0], &sides[1], &mut out.failures)?;
            }
        }
        "block" => {
            let (l, s, r, ell) = (inst.lists()?, inst.uparam("s")?, inst.uparam("r")?, inst.param("ell")?);
            let y1p = inst.vset("Y");
            let c = bipartite_block_coloring(g, l, &y1p, ell, s, r)?;
            out.failures = check_block_claims(g, &y1p, &c, ell, s, r)?;
            if !l.admits(&c) {
                out.failures.push(fail("lists", "the block coloring leaves the lists"));
            }
            out.ops = g.n() as u64;
        }
        "solver" => {
            let (l, eta) = (inst.lists()?, inst.uparam("eta")?);
            let mut bs = SearchStats::default();
            let mut ds = DpStats::default();
            let want = brute_force_list_coloring_with(g, l, eta, &ColorSet::new(), DEFAULT_BRUTE_FORCE_BUDGET, &mut bs)?;
            let got = dp_clustered_coloring_with(g, None, l, eta, DEFAULT_DP_STATE_CAP, &mut ds)?;
            if want.is_some() != got.is_some() {
                out.failures.push(fail(
                    "decision",
                    format!("brute force says {}, dynamic programming says {}", want.is_some(), got.is_some()),
                ));
            }
            if let Some(c) = &got {
                if !l.admits(c) || crate::graph::clustering_of(g, c)? > eta {
                    out.failures.push(fail("witness", format!("invalid witness {:?}", c.as_slice())));
                }
            }
            out.ops = bs.nodes + ds.states;
        }
        other => return Err(Error::Input(format!("unknown check {other:?}"))),
    }
    Ok(out)
}

/// Every pair of side colorings glues to an L-coloring, and to an F-stable
/// one when both sides are F-stable. Returns the number of pairs.
fn merge_oracle(
    g: &Graph,
    l: &ListAssignment,
    f: &ColorSet,
    sep: &crate::separation::Separation,
    a: &crate::lists::SideRestriction,
    b: &crate::lists::SideRestriction,
    failures: &mut Vec<StatementFailure>,
) -> Result<u64> {
    check_cap("side coloring pairs", a.lists.coloring_count().saturating_mul(b.lists.coloring_count()), MERGE_PAIR_BUDGET)?;
    let collect = |side: &crate::lists::SideRestriction| -> Result<Vec<(Coloring, bool)>> {
        let mut all = Vec::new();
        for_each_l_coloring(&side.lists, MERGE_PAIR_BUDGET, |c| {
            all.push((c.clone(), f_stable(&side.sub.graph, c, f)));
            true
        })?;
        Ok(all)
    };
    let (ca, cb) = (collect(a)?, collect(b)?);
    let mut pairs = 0u64;
    for (x, x_stable) in &ca {
        for (y, y_stable) in &cb {
            pairs += 1;
            let c = match merge_side_colorings(g, sep, x, y) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(fail("merge", e.to_string()));
                    return Ok(pairs);
                }
            };
            if !l.admits(&c) {
                failures.push(fail("merge", format!("{:?} is not an L-coloring", c.as_slice())));
                return Ok(pairs);
            }
            if *x_stable && *y_stable && !f_stable(g, &c, f) {
                failures.push(fail("merge", format!("{:?} has an F-colored edge", c.as_slice())));
                return Ok(pairs);
            }
        }
    }
    Ok(pairs)
}

/// Greedily deletes vertices, then edges, while `fails` keeps holding.
pub fn minimize(inst: &Instance, fails: &dyn Fn(&Instance) -> bool) -> Instance {
    let mut cur = inst.clone();
    loop {
        let mut changed = false;
        let mut v = cur.graph.n();
        while v > 0 {
            v -= 1;
            if v < cur.graph.n() {
                let cand = cur.without_vertex(v);
                if fails(&cand) {
                    cur = cand;
                    changed = true;
                }
            }
        }
        for e in cur.graph.edges().to_vec().into_iter().rev() {
            let cand = cur.without_edge(e);
            if fails(&cand) {
                cur = cand;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

fn describe(inst: &Instance) -> String {
    let mut s = format!("suite={} n={} m={}", inst.check, inst.graph.n(), inst.graph.m());
    for (k, v) in &inst.params {
        if k != "seed" {
            s.push_str(&format!(" {k}={v}"));
        }
    }
    s
}

/// `trials` random instances of every suite, checked with the library's own
/// constructions.
pub fn verify_lemma_suites(trials: usize, seed: u64) -> CampaignRun {
    verify_lemma_suites_with(trials, seed, progress)
}

/// [`verify_lemma_suites`] with a replaceable progress implementation, so the
/// harness itself can be mutation tested.
pub fn verify_lemma_suites_with(trials: usize, seed: u64, pf: ProgressFn) -> CampaignRun {
    let start = std::time::Instant::now();
    let params = [("trials".to_string(), trials.to_string())].into();
    let mut report = CampaignReport::new("lemma_suites", params, seed);
    let mut counterexamples = Vec::new();
    for suite in SUITES {
        for _ in 0..trials {
            let mut rng = instance_rng(seed, report.instances.len());
            let inst = match random_instance(suite, &mut rng) {
                Ok(inst) => inst,
                Err(e) => {
                    report.push(format!("suite={suite}"), Verdict::fail(format!("generator: {e}")), 0);
                    continue;
                }
            };
            let (verdict, ops) = match replay_with(&inst, pf) {
                Ok(o) if o.failures.is_empty() => (Verdict::pass(), o.ops),
                Ok(o) => {
                    let first = &o.failures[0];
                    let detail = format!("{} failure(s), statement {}: {}", o.failures.len(), first.statement, first.detail);
                    (Verdict::fail(detail), o.ops)
                }
                Err(e @ Error::Size { .. }) => (Verdict::skip(e.to_string()), 0),
                Err(e) => (Verdict::fail(format!("error: {e}")), 0),
            };
            let failed = verdict.is_fail();
            let id = report.push(describe(&inst), verdict, ops);
            if failed {
                let shrunk = minimize(&inst, &|c| matches!(replay_with(c, pf), Ok(o) if !o.failures.is_empty()));
                counterexamples.push(Counterexample { id, instance: shrunk });
            }
        }
    }
    CampaignRun {
        report,
        elapsed: start.elapsed(),
        counterexamples,
    }
}

/// A deliberately broken progress for mutation tests: it drops the last
/// color of every list outside `W` that has more than one color.
pub fn shrinking_progress(
    g: &Graph,
    l: &ListAssignment,
    s: usize,
    r: usize,
    w: &VertexSet,
    f: &ColorSet,
    seed: u64,
) -> Result<ListAssignment> {
    let mut out = progress(g, l, s, r, w, f, seed)?;
    for v in g.vertices() {
        if !w.contains(&v) && out.lists[v].len() > 1 {
            out.lists[v].pop_last();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn suites_pass_on_a_small_run() {
        let run = verify_lemma_suites(15, 3);
        assert_eq!(run.report.instances.len(), 15 * SUITES.len());
        assert!(run.report.all_pass(), "{}", run.report.write());
        assert!(run.counterexamples.is_empty());
    }

    #[test]
    fn reports_are_reproducible() {
        let a = verify_lemma_suites(5, 11).report.write();
        let b = verify_lemma_suites(5, 11).report.write();
        assert_eq!(a, b);
        assert_ne!(a, verify_lemma_suites(5, 12).report.write());
    }

    #[test]
    fn empty_graphs_pass_every_suite() {
        for suite in ["progress", "growth", "side", "solver"] {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut inst = random_instance(suite, &mut rng).unwrap();
            while inst.graph.n() > 0 {
                inst = inst.without_vertex(0);
            }
            assert_eq!(replay(&inst).unwrap().failures, vec![], "{suite}");
        }
    }

    #[test]
    fn broken_progress_is_caught_and_shrunk() {
        let run = verify_lemma_suites_with(30, 5, shrinking_progress);
        assert!(!run.report.all_pass());
        assert!(!run.counterexamples.is_empty());
        for cex in &run.counterexamples {
            assert_eq!(cex.instance.check, "progress");
            assert!(!replay_with(&cex.instance, shrinking_progress).unwrap().failures.is_empty());
            // The saved file replays, and the real progress passes on it.
            let back = Instance::parse(&cex.instance.write()).unwrap();
            assert_eq!(replay(&back).unwrap().failures, vec![]);
            let original = run.report.instances[cex.id].params.clone();
            let n: usize = original.split(" n=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
            assert!(cex.instance.graph.n() <= n);
        }
    }
}
