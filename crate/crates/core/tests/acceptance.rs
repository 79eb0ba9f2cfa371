//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the wall
//! time against its limit. Exits nonzero if any criterion fails.
//!
//! Wherever a criterion asks for an exhaustive check, the check below runs
//! its own enumeration (colorings, components, paths, elimination orders)
//! rather than trusting the library routine under test.

use std::collections::{BTreeSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clustercol::containment::{has_kst_subgraph, has_minor, has_odd_minor, validate_odd_certificate};
use clustercol::generators::{
    complete, complete_bipartite, cycle, gnp_with, standard_minor_example, standard_treewidth_example, triangular_grid,
};
use clustercol::harness::{instance_rng, random_instance, verify_hex, verify_odd_minor_facts};
use clustercol::io::{parse_tangle, parse_td, write_tangle, write_td};
use clustercol::lists::{
    check_enlarge_claims, check_growth_statements, check_progress_statements, check_side_claims, enlarge_precolored,
    growth, high_colors, progress, random_l_assignment, random_r_assignment, random_separated_graph, side_restrict,
    validate_l, validate_l_with, ListAssignment,
};
use clustercol::separation::Side;
use clustercol::solver::{
    bipartite_block_coloring, brute_force_list_coloring, check_block_claims, dp_clustered_coloring, merge_side_colorings,
    random_block_instance,
};
use clustercol::structure::{
    find_vortical_decomposition, tangle_axioms_check, tangle_from_y1, treewidth_exact, treewidth_heuristic,
    validate_tree_decomposition, validate_vortical, vortex_linkage, vortical_adhesion, Society,
};
use clustercol::{Color, ColorSet, Coloring, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

// ---------------------------------------------------------------- oracles

/// Calls `f` on every choice of one color per list.
fn for_each_coloring(lists: &[Vec<Color>], mut f: impl FnMut(&[Color]) -> bool) {
    if lists.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; lists.len()];
    let mut cur: Vec<Color> = lists.iter().map(|l| l[0]).collect();
    loop {
        if !f(&cur) {
            return;
        }
        let mut i = 0;
        loop {
            if i == lists.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                cur[i] = lists[i][idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = lists[i][0];
            i += 1;
        }
    }
}

fn as_vecs(l: &ListAssignment) -> Vec<Vec<Color>> {
    l.lists.iter().map(|x| x.iter().copied().collect()).collect()
}

fn palette(n: usize, k: usize) -> Vec<Vec<Color>> {
    vec![(1..=k as Color).collect(); n]
}

/// Monochromatic components by breadth-first search.
fn components(g: &Graph, c: &[Color]) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for v in 0..g.n() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let mut comp = VertexSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] && c[w] == c[u] {
                    seen[w] = true;
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn clustering(g: &Graph, c: &[Color]) -> usize {
    components(g, c).iter().map(BTreeSet::len).max().unwrap_or(0)
}

/// Vertices on a longest monochromatic path through `v`, by depth-first search.
fn longest_mono_path_from(g: &Graph, c: &[Color], v: usize, used: &mut Vec<bool>) -> usize {
    used[v] = true;
    let mut best = 1;
    for &w in g.neighbors(v) {
        if !used[w] && c[w] == c[v] {
            best = best.max(1 + longest_mono_path_from(g, c, w, used));
        }
    }
    used[v] = false;
    best
}

fn longest_mono_path(g: &Graph, c: &[Color]) -> usize {
    let mut used = vec![false; g.n()];
    (0..g.n()).map(|v| longest_mono_path_from(g, c, v, &mut used)).max().unwrap_or(0)
}

/// Least clustering over all `k`-colorings, by full enumeration.
fn min_clustering_by_enumeration(g: &Graph, k: usize) -> (usize, u64) {
    let mut best = usize::MAX;
    let mut count = 0;
    for_each_coloring(&palette(g.n(), k), |c| {
        count += 1;
        best = best.min(clustering(g, c));
        true
    });
    (best, count)
}

/// Is there an `s`-set with `t` common neighbors outside it?
fn kst_by_enumeration(g: &Graph, s: usize, t: usize) -> bool {
    fn rec(g: &Graph, s: usize, t: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == s {
            let common = (0..g.n())
                .filter(|v| !chosen.contains(v) && chosen.iter().all(|&u| g.has_edge(u, *v)))
                .count();
            return common >= t;
        }
        (start..g.n()).any(|v| {
            chosen.push(v);
            let hit = rec(g, s, t, v + 1, chosen);
            chosen.pop();
            hit
        })
    }
    rec(g, s, t, 0, &mut Vec::new())
}

/// Treewidth by the subset recursion over elimination prefixes:
/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is the
/// set of vertices outside `S + v` reachable from `v` through `S`.
fn treewidth_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut reach = 0u32;
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            let mut nb = adj[u] & !seen;
            seen |= nb;
            reach |= nb & !s;
            nb &= s;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                stack.push(w);
            }
        }
        reach
    };
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            best = best.min(tw[prev as usize].max(q(prev, v).count_ones() as usize));
        }
        tw[s as usize] = best;
    }
    tw[full as usize]
}

/// Can the components be split into two groups with more than 3 vertices
/// of `y1` each? Those are exactly the order-0 separations violating T1.
fn balanced_order_zero_split(g: &Graph, y1: &VertexSet) -> bool {
    let counts: Vec<usize> = g.components().iter().map(|c| c.intersection(y1).count()).collect();
    let total: usize = counts.iter().sum();
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for c in counts {
        for x in (c..=total).rev() {
            reachable[x] |= reachable[x - c];
        }
    }
    (4..=total.saturating_sub(4)).any(|x| reachable[x])
}

// ------------------------------------------------------------- criteria

fn c1_hex() -> Outcome {
    let mut colorings = 0u64;
    let start = Instant::now();
    let mut small = Duration::ZERO;
    for eta in 1..=4 {
        if eta == 4 {
            small = start.elapsed();
            if small > Duration::from_secs(60) {
                return Err(format!("eta=1..3 took {small:?}, over 60 s"));
            }
        }
        let g = triangular_grid(eta);
        let mut bad = None;
        for_each_coloring(&palette(g.n(), 2), |c| {
            colorings += 1;
            if longest_mono_path(&g, c) < eta {
                bad = Some(c.to_vec());
            }
            bad.is_none()
        });
        if let Some(c) = bad {
            return Err(format!("eta={eta}: coloring {c:?} has no monochromatic path on {eta} vertices"));
        }
    }
    let run = verify_hex(4).map_err(|e| e.to_string())?;
    if !run.report.all_pass() {
        return Err("the hex campaign disagrees with the enumeration".into());
    }
    Ok(format!("eta=1..4, {colorings} colorings enumerated, eta<=3 in {:.2}s", small.as_secs_f64()))
}

fn c2_minor_family() -> Outcome {
    let mut notes = Vec::new();
    for (s, eta) in [(1, 3), (2, 2)] {
        let g = standard_minor_example(s, eta).map_err(|e| e.to_string())?;
        if has_minor(&g, &complete(s + 4)).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("(s,eta)=({s},{eta}) has a K{} minor", s + 4));
        }
        if kst_by_enumeration(&g, s, s + 6) || has_kst_subgraph(&g, s, s + 6).is_some() {
            return Err(format!("(s,eta)=({s},{eta}) has a K{s},{} subgraph", s + 6));
        }
        let (best, count) = min_clustering_by_enumeration(&g, s + 1);
        if best < eta {
            return Err(format!("(s,eta)=({s},{eta}) has an {}-coloring with clustering {best}", s + 1));
        }
        notes.push(format!("({s},{eta}): n={} min clustering {best} over {count}", g.n()));
    }
    Ok(notes.join(", "))
}

fn c3_treewidth_family() -> Outcome {
    let g = standard_treewidth_example(2, 3).map_err(|e| e.to_string())?;
    let (tw, td) = treewidth_exact(&g).map_err(|e| e.to_string())?;
    if tw != 2 || td.width() != 2 || !validate_tree_decomposition(&g, &td) {
        return Err(format!("treewidth_exact returned {tw} with a width-{} witness", td.width()));
    }
    let oracle = treewidth_by_subsets(&g);
    if oracle != 2 {
        return Err(format!("the subset recursion gives treewidth {oracle}"));
    }
    if kst_by_enumeration(&g, 2, 4) || has_kst_subgraph(&g, 2, 4).is_some() {
        return Err("K2,4 subgraph found".into());
    }
    let (best, count) = min_clustering_by_enumeration(&g, 2);
    if best < 3 {
        return Err(format!("a 2-coloring has clustering {best}"));
    }
    Ok(format!("n={} tw=2, min clustering {best} over {count} colorings", g.n()))
}

fn c4_progress() -> Outcome {
    let mut premise = 0;
    let mut nonempty_f = 0;
    for id in 0..1000 {
        let inst = random_instance("progress", &mut instance_rng(SEED, id)).map_err(|e| e.to_string())?;
        let g = &inst.graph;
        let (l, s, r) = (inst.lists().unwrap(), inst.uparam("s").unwrap(), inst.uparam("r").unwrap());
        let (w, f) = (inst.vset("W"), inst.cset("F"));
        assert!(g.n() <= 10 && s <= 3 && r <= 3 && f.len() <= r);
        validate_l(g, l, s, r).map_err(|e| format!("instance {id}: generator produced invalid lists: {e}"))?;
        let lp = progress(g, l, s, r, &w, &f, inst.param("seed").unwrap() as u64)
            .map_err(|e| format!("instance {id}: {e}"))?;
        if let Some(fail) = check_progress_statements(g, l, &lp, s, r, &w, &f).first() {
            return Err(format!("instance {id}: statement {} fails: {}", fail.statement, fail.detail));
        }
        if g.n_geq_s(&l.singletons(), s).unwrap().is_subset(&w) {
            premise += 1;
        }
        nonempty_f += usize::from(!f.is_empty());
    }
    if premise == 0 {
        return Err("statement 4 was never exercised".into());
    }
    Ok(format!("1000 instances, statement 4 premise on {premise}, F nonempty on {nonempty_f}"))
}

fn c5_growth_enlarge() -> Outcome {
    let mut colorings = 0u64;
    for id in 0..200 {
        let mut rng = instance_rng(SEED + 5, id);
        let n = rng.gen_range(1..=8);
        let (s, r) = (rng.gen_range(1..=2), rng.gen_range(0..=1));
        let g = gnp_with(n, rng.gen_range(0.2..0.6), &mut rng);
        let (l, ell) = random_r_assignment(&g, s, r, &mut rng);
        let z: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.25)).collect();
        let out = growth(&g, &l, s, ell, r, &z, rng.gen()).map_err(|e| format!("growth {id}: {e}"))?;
        if let Some(fail) = check_growth_statements(&g, &l, &out, s, ell, r, &z).first() {
            return Err(format!("growth {id}: statement {} fails: {}", fail.statement, fail.detail));
        }
        if (0..n).any(|v| !out.lists.lists[v].is_subset(&l.lists[v])) {
            return Err(format!("growth {id}: statement 2 fails"));
        }
        let y1 = l.singletons();
        let sources: VertexSet = y1.union(&z).copied().collect();
        let mut special = high_colors(s, r);
        special.insert(ell);
        let mut bad = None;
        for_each_coloring(&as_vecs(&out.lists), |c| {
            colorings += 1;
            for m in components(&g, c) {
                if m.is_disjoint(&sources) {
                    continue;
                }
                let x = c[*m.first().unwrap()];
                if !m.is_subset(&out.y1) || (special.contains(&x) && !m.is_subset(&y1)) {
                    bad = Some((c.to_vec(), m));
                    return false;
                }
            }
            true
        });
        if let Some((c, m)) = bad {
            return Err(format!("growth {id}: statement 4 fails for coloring {c:?}, component {m:?}"));
        }
    }
    for id in 0..200 {
        let mut rng = instance_rng(SEED + 55, id);
        let n = rng.gen_range(1..=8);
        let (s, r) = (rng.gen_range(1..=2), rng.gen_range(2..=3));
        let g = gnp_with(n, rng.gen_range(0.2..0.6), &mut rng);
        let l = loop {
            let l = random_l_assignment(&g, s, r, &mut rng);
            if !l.singletons().is_empty() {
                break l;
            }
        };
        let top = (s + r + 2) as Color;
        let f: ColorSet = (0..rng.gen_range(0..r)).map(|_| rng.gen_range(1..=top)).collect();
        let ell = rng.gen_range(1..=top);
        let out = enlarge_precolored(&g, &l, s, r, &f, ell, rng.gen()).map_err(|e| format!("enlarge {id}: {e}"))?;
        if let Some(fail) = check_enlarge_claims(&g, &l, &out, s, r, &f, ell).first() {
            return Err(format!("enlarge {id}: {} fails: {}", fail.statement, fail.detail));
        }
        let y1 = l.singletons();
        let mut bad = None;
        for_each_coloring(&as_vecs(&out.lists), |c| {
            colorings += 1;
            match components(&g, c).into_iter().find(|m| !m.is_disjoint(&y1) && !m.is_subset(&out.y1)) {
                Some(m) => {
                    bad = Some((c.to_vec(), m));
                    false
                }
                None => true,
            }
        });
        if let Some((c, m)) = bad {
            return Err(format!("enlarge {id}: Claim 2 fails for coloring {c:?}, component {m:?}"));
        }
    }
    Ok(format!("200 growth + 200 enlarge instances, {colorings} colorings enumerated"))
}

fn f_stable(g: &Graph, c: &[Color], f: &ColorSet) -> bool {
    g.edges().iter().all(|&(u, v)| c[u] != c[v] || !f.contains(&c[u]))
}

fn c6_side_merge() -> Outcome {
    let mut pairs = 0u64;
    for id in 0..200 {
        let mut rng = instance_rng(SEED + 6, id);
        let n = rng.gen_range(0..=8);
        let s = rng.gen_range(1..=2);
        let r = 1;
        let (g, sep) = random_separated_graph(n, rng.gen_range(0.2..0.6), &mut rng);
        let l = random_l_assignment(&g, s, r, &mut rng);
        let f: ColorSet = (0..rng.gen_range(0..=r)).map(|_| rng.gen_range(1..=(s + r + 2) as Color)).collect();
        let seed = rng.gen();
        let mut sides = Vec::new();
        for side in [Side::A, Side::B] {
            let res = side_restrict(&g, &l, s, r, &sep, side, &f, seed).map_err(|e| format!("instance {id}: {e}"))?;
            if let Some(fail) = check_side_claims(&l, s, r, &res, &f).first() {
                return Err(format!("instance {id} side {side:?}: {} fails: {}", fail.statement, fail.detail));
            }
            let mut all = Vec::new();
            for_each_coloring(&as_vecs(&res.lists), |c| {
                all.push((Coloring::new(c.to_vec()), f_stable(&res.sub.graph, c, &f)));
                true
            });
            sides.push(all);
        }
        for (ca, sa) in &sides[0] {
            for (cb, sb) in &sides[1] {
                pairs += 1;
                let c = merge_side_colorings(&g, &sep, ca, cb).map_err(|e| format!("instance {id}: merge: {e}"))?;
                let c = c.as_slice();
                if (0..n).any(|v| !l.lists[v].contains(&c[v])) {
                    return Err(format!("instance {id}: merged {c:?} is not an L-coloring"));
                }
                if *sa && *sb && !f_stable(&g, c, &f) {
                    return Err(format!("instance {id}: merged {c:?} has an F-colored edge"));
                }
            }
        }
    }
    Ok(format!("200 instances, {pairs} side-coloring pairs merged"))
}

fn c7_block() -> Outcome {
    let mut nontrivial = 0;
    for id in 0..200 {
        let mut rng = instance_rng(SEED + 7, id);
        let s = rng.gen_range(1..=3);
        let r = s - 1;
        let (n_bip, n_extra) = (rng.gen_range(1..=8), rng.gen_range(0..=2));
        let (g, l, y1p, ell) =
            random_block_instance(n_bip, n_extra, s, 0.4, &mut rng).map_err(|e| format!("instance {id}: {e}"))?;
        let c = bipartite_block_coloring(&g, &l, &y1p, ell, s, r).map_err(|e| format!("instance {id}: {e}"))?;
        let failures = check_block_claims(&g, &y1p, &c, ell, s, r).map_err(|e| e.to_string())?;
        if let Some(fail) = failures.first() {
            return Err(format!("instance {id}: {} fails: {}", fail.statement, fail.detail));
        }
        let c = c.as_slice();
        if (0..g.n()).any(|v| !l.lists[v].contains(&c[v])) {
            return Err(format!("instance {id}: the block coloring leaves the lists"));
        }
        let high = (s + 3) as Color..=(2 * s + 1) as Color;
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| c[u] == c[v] && high.contains(&c[u])) {
            return Err(format!("instance {id}: edge {u}-{v} inside high class {}", c[u]));
        }
        for m in components(&g, c) {
            if m.is_disjoint(&y1p) && m.len() > 1 {
                return Err(format!("instance {id}: component {m:?} avoids Y1' and has {} vertices", m.len()));
            }
        }
        nontrivial += usize::from(y1p.len() < g.n());
    }
    Ok(format!("200 instances, {nontrivial} with vertices outside Y1'"))
}

fn c8_solver() -> Outcome {
    let mut yes = 0;
    for id in 0..500 {
        let mut rng = instance_rng(SEED + 8, id);
        let (n, k, eta) = (rng.gen_range(0..=10), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let g = gnp_with(n, rng.gen_range(0.1..0.7), &mut rng);
        let lists: Vec<ColorSet> = (0..n)
            .map(|_| {
                let mut x: ColorSet = (1..=k).filter(|_| rng.gen_bool(0.6)).collect();
                x.insert(rng.gen_range(1..=k));
                x
            })
            .collect();
        let l = ListAssignment::new(lists);
        let td = treewidth_heuristic(&g);
        let dp = dp_clustered_coloring(&g, if id % 2 == 0 { Some(&td) } else { None }, &l, eta)
            .map_err(|e| format!("instance {id}: {e}"))?;
        let brute = brute_force_list_coloring(&g, &l, eta, &ColorSet::new()).map_err(|e| format!("instance {id}: {e}"))?;
        let mut oracle = false;
        for_each_coloring(&as_vecs(&l), |c| {
            oracle = clustering(&g, c) <= eta;
            !oracle
        });
        if dp.is_some() != oracle || brute.is_some() != oracle {
            return Err(format!(
                "instance {id}: enumeration {oracle}, dp {}, brute force {}",
                dp.is_some(),
                brute.is_some()
            ));
        }
        for c in dp.iter().chain(brute.iter()) {
            let c = c.as_slice();
            if c.len() != n || (0..n).any(|v| !l.lists[v].contains(&c[v])) || clustering(&g, c) > eta {
                return Err(format!("instance {id}: invalid witness {c:?}"));
            }
        }
        yes += usize::from(oracle);
    }
    Ok(format!("500 instances, {yes} colorable"))
}

fn c9_odd_minor() -> Outcome {
    let k3 = complete(3);
    for n in 2..=5 {
        if has_odd_minor(&complete_bipartite(n, n), &k3).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("K{n},{n} reported with an odd K3 minor"));
        }
    }
    // The search is not vacuous: odd cycles are odd K3 minors.
    let c7 = cycle(7);
    match has_odd_minor(&c7, &k3).map_err(|e| e.to_string())? {
        Some((m, cert)) if validate_odd_certificate(&c7, &k3, &m, &cert) => {}
        _ => return Err("no validated odd K3 minor in C7".into()),
    }
    for s in 1..=10i64 {
        if 2 * (2 * s - 1) + 1 + 4 * s - 3 != 8 * s - 4 {
            return Err(format!("identity fails at s={s}"));
        }
    }
    if !verify_odd_minor_facts().report.all_pass() {
        return Err("the odd-minor campaign fails".into());
    }
    Ok("K_{n,n} n=2..5 odd-K3-free, identity for s=1..10".into())
}

fn c10_validators() -> Outcome {
    let (mut tangles, mut splits, mut sides) = (0, 0, 0);
    for id in 0..100 {
        let mut rng = instance_rng(SEED + 10, id);

        let n = rng.gen_range(1..=8);
        let g = gnp_with(n, rng.gen_range(0.2..0.8), &mut rng);
        let (tw, td) = treewidth_exact(&g).map_err(|e| format!("instance {id}: {e}"))?;
        let back = parse_td(&write_td(&td)).map_err(|e| format!("instance {id}: {e}"))?;
        if !validate_tree_decomposition(&g, &back) || td.width() != tw || tw != treewidth_by_subsets(&g) {
            return Err(format!("instance {id}: treewidth witness rejected or not optimal (tw={tw})"));
        }

        // |Y1| >= 9 theta + 1 with theta = 1, on graphs within the enumeration
        // cap. T2 and T3 must always hold. T1 holds unless some separation of
        // order 0 leaves more than 3 vertices of Y1 on both sides, which is
        // the branch the lemma settles by induction instead.
        let n = rng.gen_range(10..=12);
        let g = gnp_with(n, rng.gen_range(0.1..0.5), &mut rng);
        let mut order: Vec<usize> = g.vertices().collect();
        order.shuffle(&mut rng);
        let y1: VertexSet = order[..rng.gen_range(10..=n)].iter().copied().collect();
        let t = tangle_from_y1(&g, 1, &y1).map_err(|e| format!("instance {id}: {e}"))?;
        let t = parse_tangle(&write_tangle(&t)).map_err(|e| format!("instance {id}: {e}"))?;
        let verdict = tangle_axioms_check(&g, &t.separations, 1).map_err(|e| e.to_string())?;
        if verdict.bad_member.is_some() || verdict.t2.is_some() || verdict.t3.is_some() {
            return Err(format!("instance {id}: tangle_from_y1 rejected: {:?}", verdict.first_failure()));
        }
        let balanced = balanced_order_zero_split(&g, &y1);
        match &verdict.t1 {
            None if balanced => return Err(format!("instance {id}: a balanced split exists but T1 passed")),
            None => tangles += 1,
            Some(sep) => {
                let a = sep.side_vertices(Side::A).intersection(&y1).count();
                let b = sep.side_vertices(Side::B).intersection(&y1).count();
                if !balanced || a <= 3 || b <= 3 {
                    return Err(format!("instance {id}: T1 witness with {a} and {b} vertices of Y1 is not balanced"));
                }
                splits += 1;
            }
        }

        let (s, r) = (rng.gen_range(1..=2), 1);
        let (g, sep) = random_separated_graph(rng.gen_range(0..=8), rng.gen_range(0.2..0.6), &mut rng);
        let l = random_l_assignment(&g, s, r, &mut rng);
        let f: ColorSet = (0..rng.gen_range(0..=r)).map(|_| rng.gen_range(1..=(s + r + 2) as Color)).collect();
        for side in [Side::A, Side::B] {
            let res = side_restrict(&g, &l, s, r, &sep, side, &f, id as u64).map_err(|e| format!("instance {id}: {e}"))?;
            let y_local = res.sub.local_set(&res.y_side);
            if let Err(e) = validate_l_with(&res.sub.graph, &res.lists, s, r, Some(&y_local)) {
                return Err(format!("instance {id} side {side:?}: {e}"));
            }
            sides += 1;
        }
    }
    Ok(format!("100 instances: treewidth witnesses, {tangles} tangles + {splits} balanced splits, {sides} side assignments"))
}

fn c11_vortices() -> Outcome {
    let mut by_rho = [0usize; 3];
    let mut tried = 0;
    let mut accepted = 0;
    while accepted < 50 {
        let mut rng = instance_rng(SEED + 11, tried);
        tried += 1;
        let n = rng.gen_range(2..=8);
        let g = gnp_with(n, rng.gen_range(0.2..0.6), &mut rng);
        let mut cyclic: Vec<usize> = g.vertices().collect();
        cyclic.shuffle(&mut rng);
        cyclic.truncate(rng.gen_range(1..=n.min(5)));
        let society = Society::on_graph(&g, cyclic).map_err(|e| e.to_string())?;
        let rho = vortex_linkage(&society).map_err(|e| e.to_string())?;
        if rho > 2 {
            continue;
        }
        accepted += 1;
        by_rho[rho] += 1;
        let Some(bags) = find_vortical_decomposition(&society, rho).map_err(|e| e.to_string())? else {
            return Err(format!("society {tried} ({rho}-vortex, cyclic {:?}): no decomposition of adhesion {rho}", society.cyclic));
        };
        if !validate_vortical(&society, &bags).map_err(|e| e.to_string())?
            || vortical_adhesion(&society, &bags).map_err(|e| e.to_string())? > rho
        {
            return Err(format!("society {tried}: invalid decomposition {bags:?}"));
        }
    }
    Ok(format!("50 vortices from {tried} societies, rho=0/1/2: {}/{}/{}", by_rho[0], by_rho[1], by_rho[2]))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 hex", Duration::from_secs(60 + 600), c1_hex),
        ("2 minor lower-bound family", Duration::from_secs(300), c2_minor_family),
        ("3 treewidth lower-bound family", Duration::from_secs(120), c3_treewidth_family),
        ("4 progress", Duration::from_secs(120), c4_progress),
        ("5 growth and enlargement", Duration::from_secs(600), c5_growth_enlarge),
        ("6 side restriction and merge", Duration::from_secs(300), c6_side_merge),
        ("7 block coloring", Duration::from_secs(120), c7_block),
        ("8 solver equivalence", Duration::from_secs(600), c8_solver),
        ("9 odd-minor facts", Duration::from_secs(60), c9_odd_minor),
        ("10 validator round trips", Duration::from_secs(120), c10_validators),
        ("11 vortical decompositions", Duration::from_secs(300), c11_vortices),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {name:<32} {} {:>8.2}s / {:>4}s  {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
