//! Plain-text file formats.
//!
//! Every format is line based and ASCII. Parsers skip blank lines and lines
//! starting with `c ` or `#`; writers never emit them, so `write` output is
//! canonical and `parse(write(x)) == x`.
//!
//! * graph: `p <n> <m>` then `e <u> <v>` with `u < v`, edges sorted.
//! * lists: `v <id> : c1 c2 ...`, one line per vertex.
//! * policy: `eta <k>`, `g *=<y>` (default), `g <x>=<y>` rows, `F c1 c2 ...`.
//! * decomposition: `td <N>`, `b <node> : v1 v2 ...`, `t <x> <y>`.
//! * layering: `layer <i> : ...` (1-based, in order) and `z : ...`.
//! * tangle: `theta <k>`, then blocks `sep` / `a ...` / `b ...` /
//!   `ea u-v ...` / `eb u-v ...` / `end`.
//! * society: `omega v1 v2 ...` on the whole graph, plus optional
//!   `bag <i> : ...` lines for a vortical decomposition.
//! * solver answer: `YES` then `v <id> <color>`, or `NO`.
//! * instance: a self-contained replay file (see [`Instance`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{edge, Color, ColorSet, Coloring, Edge, Graph, Vertex, VertexSet};
use crate::lists::{BoundedColoringPolicy, ListAssignment};
use crate::separation::{Separation, Side};
use crate::structure::{Layering, Society, Tangle, TreeDecomposition};

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Non-empty, non-comment lines with 1-based numbers, split on whitespace.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') || t == "c" || t.starts_with("c ") {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn num<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().or_else(|_| perr(line, format!("expected a number, got {tok:?}")))
}

/// Parses `<head> <id> : x y z`, returning the id and the items.
fn keyed<T: FromStr>(line: usize, toks: &[&str]) -> Result<(usize, Vec<T>)> {
    if toks.len() < 3 || toks[2] != ":" {
        return perr(line, format!("expected `{} <id> : ...`", toks[0]));
    }
    let id = num(line, toks[1])?;
    let items = toks[3..].iter().map(|t| num(line, t)).collect::<Result<_>>()?;
    Ok((id, items))
}

/// Parses `<head> : x y z`.
fn unkeyed<T: FromStr>(line: usize, toks: &[&str]) -> Result<Vec<T>> {
    if toks.len() < 2 || toks[1] != ":" {
        return perr(line, format!("expected `{} : ...`", toks[0]));
    }
    toks[2..].iter().map(|t| num(line, t)).collect()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_items<T: ToString>(out: &mut String, head: &str, items: impl IntoIterator<Item = T>) {
    let body = join(items);
    if body.is_empty() {
        let _ = writeln!(out, "{head}");
    } else {
        let _ = writeln!(out, "{head} {body}");
    }
}

// ---- graphs ----

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// Parses the graph format. Edge lines must have `u < v`; loops, duplicate
/// edges and an edge count differing from the header are errors.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g: Option<(Graph, usize)> = None;
    for (line, toks) in lines(text) {
        match (toks[0], &mut g) {
            ("p", None) if toks.len() == 3 => {
                let n: usize = num(line, toks[1])?;
                let m: usize = num(line, toks[2])?;
                g = Some((Graph::empty(n), m));
            }
            ("p", Some(_)) => return perr(line, "second header line"),
            ("e", Some((g, _))) if toks.len() == 3 => {
                let u: Vertex = num(line, toks[1])?;
                let v: Vertex = num(line, toks[2])?;
                if u == v {
                    return perr(line, format!("loop at vertex {u}"));
                }
                if u > v {
                    return perr(line, format!("edge {u} {v} must list the smaller end first"));
                }
                g.add_edge(u, v).or_else(|e| perr(line, e.to_string()))?;
            }
            ("e", None) => return perr(line, "edge before the `p` header"),
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    let Some((g, m)) = g else {
        return perr(0, "missing `p <n> <m>` header");
    };
    if g.m() != m {
        return perr(0, format!("header promises {m} edges, found {}", g.m()));
    }
    Ok(g)
}

// ---- list assignments ----

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, list) in l.lists.iter().enumerate() {
        write_items(&mut out, &format!("v {v} :"), list);
    }
    out
}

/// Parses a list assignment; with `n` given, every vertex `0..n` must appear
/// exactly once. Without it the ids must be `0..k` for some `k`.
pub fn parse_lists(text: &str, n: Option<usize>) -> Result<ListAssignment> {
    let mut by_vertex: BTreeMap<Vertex, ColorSet> = BTreeMap::new();
    for (line, toks) in lines(text) {
        if toks[0] != "v" {
            return perr(line, format!("unexpected line {:?}", toks.join(" ")));
        }
        let (v, colors): (Vertex, Vec<Color>) = keyed(line, &toks)?;
        if by_vertex.insert(v, colors.into_iter().collect()).is_some() {
            return perr(line, format!("vertex {v} listed twice"));
        }
    }
    let n = n.unwrap_or(by_vertex.len());
    if by_vertex.len() != n || by_vertex.keys().enumerate().any(|(i, &v)| i != v) {
        return perr(0, format!("lists must cover exactly the vertices 0..{n}"));
    }
    Ok(ListAssignment::new(by_vertex.into_values().collect()))
}

// ---- policies ----

pub fn write_policy(p: &BoundedColoringPolicy) -> String {
    let mut out = format!("eta {}\ng *={}\n", p.eta, p.g_default);
    for (x, y) in &p.g_table {
        let _ = writeln!(out, "g {x}={y}");
    }
    write_items(&mut out, "F", &p.stable_colors);
    out
}

/// Parses a policy. `g *=y` sets the default (1 when absent); `F` may be
/// omitted. The result must pass [`BoundedColoringPolicy::check`].
pub fn parse_policy(text: &str) -> Result<BoundedColoringPolicy> {
    let mut eta = None;
    let mut g_table = BTreeMap::new();
    let mut g_default = None;
    let mut stable = None;
    for (line, toks) in lines(text) {
        match toks[0] {
            "eta" if toks.len() == 2 && eta.is_none() => eta = Some(num(line, toks[1])?),
            "g" if toks.len() == 2 => {
                let Some((x, y)) = toks[1].split_once('=') else {
                    return perr(line, "expected `g <x>=<y>`");
                };
                let y: usize = num(line, y)?;
                if x == "*" {
                    if g_default.replace(y).is_some() {
                        return perr(line, "default given twice");
                    }
                } else if g_table.insert(num(line, x)?, y).is_some() {
                    return perr(line, format!("g({x}) given twice"));
                }
            }
            "F" if stable.is_none() => {
                stable = Some(toks[1..].iter().map(|t| num(line, t)).collect::<Result<ColorSet>>()?);
            }
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    let Some(eta) = eta else {
        return perr(0, "missing `eta <k>`");
    };
    let p = BoundedColoringPolicy {
        eta,
        g_table,
        g_default: g_default.unwrap_or(1),
        stable_colors: stable.unwrap_or_default(),
    };
    p.check().or_else(|e| perr(0, e))?;
    Ok(p)
}

// ---- tree decompositions ----

pub fn write_td(td: &TreeDecomposition) -> String {
    let mut out = format!("td {}\n", td.bags.len());
    for (i, bag) in td.bags.iter().enumerate() {
        write_items(&mut out, &format!("b {i} :"), bag);
    }
    for &(x, y) in &td.tree_edges {
        let _ = writeln!(out, "t {x} {y}");
    }
    out
}

/// Parses a decomposition. Bags may come in any order but each node
/// `0..N` needs exactly one. Validity against a graph is not checked here.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut count = None;
    let mut bags: BTreeMap<usize, VertexSet> = BTreeMap::new();
    let mut tree_edges = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "td" if toks.len() == 2 && count.is_none() => count = Some(num::<usize>(line, toks[1])?),
            "b" => {
                let (i, vs): (usize, Vec<Vertex>) = keyed(line, &toks)?;
                if bags.insert(i, vs.into_iter().collect()).is_some() {
                    return perr(line, format!("bag {i} given twice"));
                }
            }
            "t" if toks.len() == 3 => tree_edges.push((num(line, toks[1])?, num(line, toks[2])?)),
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    let Some(count) = count else {
        return perr(0, "missing `td <N>`");
    };
    if bags.len() != count || bags.keys().enumerate().any(|(i, &k)| i != k) {
        return perr(0, format!("expected bags for nodes 0..{count}"));
    }
    if let Some(&(x, y)) = tree_edges.iter().find(|&&(x, y)| x >= count || y >= count) {
        return perr(0, format!("tree edge {x}-{y} names a missing node"));
    }
    Ok(TreeDecomposition {
        bags: bags.into_values().collect(),
        tree_edges,
    })
}

// ---- layerings ----

pub fn write_layering(l: &Layering) -> String {
    let mut out = String::new();
    for (i, layer) in l.layers.iter().enumerate() {
        write_items(&mut out, &format!("layer {} :", i + 1), layer);
    }
    write_items(&mut out, "z :", &l.excluded);
    out
}

/// Parses a layering. Layers must be numbered `1, 2, ...` in file order.
pub fn parse_layering(text: &str) -> Result<Layering> {
    let mut layers = Vec::new();
    let mut excluded = None;
    for (line, toks) in lines(text) {
        match toks[0] {
            "layer" => {
                let (i, vs): (usize, Vec<Vertex>) = keyed(line, &toks)?;
                if i != layers.len() + 1 {
                    return perr(line, format!("expected layer {}, got {i}", layers.len() + 1));
                }
                layers.push(vs.into_iter().collect());
            }
            "z" if excluded.is_none() => excluded = Some(unkeyed::<Vertex>(line, &toks)?.into_iter().collect()),
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    Ok(Layering {
        layers,
        excluded: excluded.unwrap_or_default(),
    })
}

// ---- separations and tangles ----

fn write_separation(out: &mut String, sep: &Separation) {
    out.push_str("sep\n");
    write_items(out, "a", &sep.va);
    write_items(out, "b", &sep.vb);
    for (head, side) in [("ea", Side::A), ("eb", Side::B)] {
        let es = sep.edge_side.iter().filter(|(_, &s)| s == side).map(|((u, v), _)| format!("{u}-{v}"));
        write_items(out, head, es);
    }
    out.push_str("end\n");
}

fn parse_edge_token(line: usize, tok: &str) -> Result<Edge> {
    let Some((u, v)) = tok.split_once('-') else {
        return perr(line, format!("expected an edge `u-v`, got {tok:?}"));
    };
    let (u, v): (Vertex, Vertex) = (num(line, u)?, num(line, v)?);
    if u == v {
        return perr(line, format!("loop {tok}"));
    }
    Ok(edge(u, v))
}

/// Reads one `sep ... end` block whose `sep` line was already consumed.
fn parse_separation_block<'a>(
    start: usize,
    it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<Separation> {
    let mut va = None;
    let mut vb = None;
    let mut edge_side = BTreeMap::new();
    for (line, toks) in it.by_ref() {
        match toks[0] {
            "a" if va.is_none() => va = Some(toks[1..].iter().map(|t| num(line, t)).collect::<Result<VertexSet>>()?),
            "b" if vb.is_none() => vb = Some(toks[1..].iter().map(|t| num(line, t)).collect::<Result<VertexSet>>()?),
            "ea" | "eb" => {
                let side = if toks[0] == "ea" { Side::A } else { Side::B };
                for t in &toks[1..] {
                    if edge_side.insert(parse_edge_token(line, t)?, side).is_some() {
                        return perr(line, format!("edge {t} given twice"));
                    }
                }
            }
            "end" => {
                return match (va, vb) {
                    (Some(va), Some(vb)) => Ok(Separation { va, vb, edge_side }),
                    _ => perr(line, "separation needs both `a` and `b` lines"),
                };
            }
            _ => return perr(line, format!("unexpected line {:?} in a separation", toks.join(" "))),
        }
    }
    perr(start, "separation block without `end`")
}

pub fn write_tangle(t: &Tangle) -> String {
    let mut out = format!("theta {}\n", t.order);
    for sep in &t.separations {
        write_separation(&mut out, sep);
    }
    out
}

/// Parses a tangle file. Separations are not checked against a graph here;
/// the axiom checker does that.
pub fn parse_tangle(text: &str) -> Result<Tangle> {
    let mut it = lines(text);
    let mut order = None;
    let mut separations = BTreeSet::new();
    while let Some((line, toks)) = it.next() {
        match toks[0] {
            "theta" if toks.len() == 2 && order.is_none() => order = Some(num(line, toks[1])?),
            "sep" if toks.len() == 1 => {
                if !separations.insert(parse_separation_block(line, &mut it)?) {
                    return perr(line, "separation given twice");
                }
            }
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    let Some(order) = order else {
        return perr(0, "missing `theta <k>`");
    };
    Ok(Tangle { order, separations })
}

// ---- societies ----

pub fn write_society(s: &Society, bags: Option<&[VertexSet]>) -> String {
    let mut out = String::new();
    write_items(&mut out, "omega", &s.cyclic);
    for (i, bag) in bags.unwrap_or_default().iter().enumerate() {
        write_items(&mut out, &format!("bag {} :", i + 1), bag);
    }
    out
}

/// Parses a society on the whole of `g`, with its optional decomposition
/// bags (numbered `1, 2, ...` in file order).
pub fn parse_society(text: &str, g: &Graph) -> Result<(Society, Option<Vec<VertexSet>>)> {
    let mut cyclic = None;
    let mut bags = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "omega" if cyclic.is_none() => {
                cyclic = Some(toks[1..].iter().map(|t| num(line, t)).collect::<Result<Vec<Vertex>>>()?);
            }
            "bag" => {
                let (i, vs): (usize, Vec<Vertex>) = keyed(line, &toks)?;
                if i != bags.len() + 1 {
                    return perr(line, format!("expected bag {}, got {i}", bags.len() + 1));
                }
                bags.push(vs.into_iter().collect());
            }
            _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
        }
    }
    let Some(cyclic) = cyclic else {
        return perr(0, "missing `omega` line");
    };
    let society = Society::on_graph(g, cyclic).or_else(|e| perr(0, e.to_string()))?;
    Ok((society, (!bags.is_empty()).then_some(bags)))
}

// ---- solver answers ----

pub fn write_answer(c: Option<&Coloring>) -> String {
    match c {
        None => "NO\n".into(),
        Some(c) => {
            let mut out = String::from("YES\n");
            for (v, x) in c.as_slice().iter().enumerate() {
                let _ = writeln!(out, "v {v} {x}");
            }
            out
        }
    }
}

pub fn parse_answer(text: &str) -> Result<Option<Coloring>> {
    let mut it = lines(text);
    match it.next() {
        Some((_, t)) if t == ["NO"] => {
            if let Some((line, _)) = it.next() {
                return perr(line, "trailing lines after NO");
            }
            Ok(None)
        }
        Some((_, t)) if t == ["YES"] => {
            let mut colors = Vec::new();
            for (line, toks) in it {
                if toks.len() != 3 || toks[0] != "v" || num::<Vertex>(line, toks[1])? != colors.len() {
                    return perr(line, format!("expected `v {} <color>`", colors.len()));
                }
                colors.push(num(line, toks[2])?);
            }
            Ok(Some(Coloring::new(colors)))
        }
        Some((line, _)) => perr(line, "expected YES or NO"),
        None => perr(0, "empty answer"),
    }
}

// ---- replay instances ----

/// A self-contained instance: a named check, a graph, optional lists, integer
/// parameters, named vertex and color sets, and an optional separation.
///
/// Layout: `check <name>`, `param <key> <value>`, `vset <key> ...`,
/// `cset <key> ...`, the graph block, list lines, and at most one
/// `sep ... end` block.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Instance {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub vsets: BTreeMap<String, VertexSet>,
    pub csets: BTreeMap<String, ColorSet>,
    pub graph: Graph,
    pub lists: Option<ListAssignment>,
    pub separation: Option<Separation>,
}

impl Instance {
    pub fn new(check: &str, graph: Graph) -> Self {
        Instance {
            check: check.into(),
            graph,
            ..Default::default()
        }
    }

    pub fn param(&self, key: &str) -> Result<i64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Input(format!("instance lacks parameter {key}")))
    }

    pub fn uparam(&self, key: &str) -> Result<usize> {
        usize::try_from(self.param(key)?).map_err(|_| Error::Input(format!("parameter {key} must be nonnegative")))
    }

    /// A named vertex set (empty when absent).
    pub fn vset(&self, key: &str) -> VertexSet {
        self.vsets.get(key).cloned().unwrap_or_default()
    }

    /// A named color set (empty when absent).
    pub fn cset(&self, key: &str) -> ColorSet {
        self.csets.get(key).cloned().unwrap_or_default()
    }

    pub fn lists(&self) -> Result<&ListAssignment> {
        self.lists.as_ref().ok_or_else(|| Error::Input("instance has no lists".into()))
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn with_vset(mut self, key: &str, items: VertexSet) -> Self {
        self.vsets.insert(key.into(), items);
        self
    }

    pub fn with_cset(mut self, key: &str, items: ColorSet) -> Self {
        self.csets.insert(key.into(), items);
        self
    }

    pub fn with_lists(mut self, l: ListAssignment) -> Self {
        self.lists = Some(l);
        self
    }

    pub fn with_separation(mut self, sep: Separation) -> Self {
        self.separation = Some(sep);
        self
    }

    /// The instance on `G - v`, with later vertex ids shifted down by one.
    pub fn without_vertex(&self, v: Vertex) -> Instance {
        let shift = |u: Vertex| if u > v { u - 1 } else { u };
        let map_set = |x: &VertexSet| x.iter().filter(|&&u| u != v).map(|&u| shift(u)).collect::<VertexSet>();
        let mut graph = Graph::empty(self.graph.n() - 1);
        for &(a, b) in self.graph.edges() {
            if a != v && b != v {
                graph.add_edge(shift(a), shift(b)).expect("edges of a simple graph");
            }
        }
        let lists = self.lists.as_ref().map(|l| {
            let mut lists = l.lists.clone();
            lists.remove(v);
            ListAssignment::new(lists)
        });
        let separation = self.separation.as_ref().map(|sep| Separation {
            va: map_set(&sep.va),
            vb: map_set(&sep.vb),
            edge_side: sep
                .edge_side
                .iter()
                .filter(|((a, b), _)| *a != v && *b != v)
                .map(|(&(a, b), &side)| ((shift(a), shift(b)), side))
                .collect(),
        });
        Instance {
            check: self.check.clone(),
            params: self.params.clone(),
            vsets: self.vsets.iter().map(|(k, x)| (k.clone(), map_set(x))).collect(),
            csets: self.csets.clone(),
            graph,
            lists,
            separation,
        }
    }

    /// The instance with edge `e` deleted (and dropped from the separation).
    pub fn without_edge(&self, e: Edge) -> Instance {
        let mut out = self.clone();
        out.graph = Graph::from_edges(self.graph.n(), self.graph.edges().iter().copied().filter(|&x| x != e))
            .expect("edges of a simple graph");
        if let Some(sep) = &mut out.separation {
            sep.edge_side.remove(&e);
        }
        out
    }

    pub fn write(&self) -> String {
        let mut out = format!("check {}\n", self.check);
        for (k, v) in &self.params {
            let _ = writeln!(out, "param {k} {v}");
        }
        for (k, items) in &self.vsets {
            write_items(&mut out, &format!("vset {k}"), items);
        }
        for (k, items) in &self.csets {
            write_items(&mut out, &format!("cset {k}"), items);
        }
        out.push_str(&write_graph(&self.graph));
        if let Some(l) = &self.lists {
            out.push_str(&write_lists(l));
        }
        if let Some(sep) = &self.separation {
            write_separation(&mut out, sep);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut check = None;
        let mut params = BTreeMap::new();
        let mut vsets = BTreeMap::new();
        let mut csets = BTreeMap::new();
        let mut graph_text = String::new();
        let mut list_text = String::new();
        let mut separation = None;
        let mut it = lines(text);
        while let Some((line, toks)) = it.next() {
            match toks[0] {
                "check" if toks.len() == 2 && check.is_none() => check = Some(toks[1].to_string()),
                "param" if toks.len() == 3 => {
                    if params.insert(toks[1].to_string(), num(line, toks[2])?).is_some() {
                        return perr(line, format!("parameter {} given twice", toks[1]));
                    }
                }
                "vset" if toks.len() >= 2 => {
                    let items = toks[2..].iter().map(|t| num(line, t)).collect::<Result<VertexSet>>()?;
                    if vsets.insert(toks[1].to_string(), items).is_some() {
                        return perr(line, format!("set {} given twice", toks[1]));
                    }
                }
                "cset" if toks.len() >= 2 => {
                    let items = toks[2..].iter().map(|t| num(line, t)).collect::<Result<ColorSet>>()?;
                    if csets.insert(toks[1].to_string(), items).is_some() {
                        return perr(line, format!("set {} given twice", toks[1]));
                    }
                }
                "p" | "e" => {
                    let _ = writeln!(graph_text, "{}", toks.join(" "));
                }
                "v" => {
                    let _ = writeln!(list_text, "{}", toks.join(" "));
                }
                "sep" if separation.is_none() => separation = Some(parse_separation_block(line, &mut it)?),
                _ => return perr(line, format!("unexpected line {:?}", toks.join(" "))),
            }
        }
        let Some(check) = check else {
            return perr(0, "missing `check <name>`");
        };
        let graph = parse_graph(&graph_text)?;
        if let Some((k, _)) = vsets.iter().find(|(_, x): &(&String, &VertexSet)| x.iter().any(|&v| v >= graph.n())) {
            return perr(0, format!("vertex set {k} leaves the graph"));
        }
        let lists = if list_text.is_empty() {
            None
        } else {
            Some(parse_lists(&list_text, Some(graph.n()))?)
        };
        if let Some(sep) = &separation {
            sep.validate(&graph).or_else(|e| perr(0, e))?;
        }
        Ok(Instance {
            check,
            params,
            vsets,
            csets,
            graph,
            lists,
            separation,
        })
    }
}
