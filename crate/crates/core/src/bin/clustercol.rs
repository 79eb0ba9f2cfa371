//! Command-line front end. Exit codes: 0 yes/valid/pass, 1 no/invalid/fail,
//! 2 error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use clustercol::containment::{has_kst_subgraph, has_minor, has_odd_minor, MinorModel, OddCertificate};
use clustercol::generators::{Family, FamilySpec};
use clustercol::harness::{replay, run_campaign};
use clustercol::io;
use clustercol::lists::{check_eta_g_bounded, enlarge_precolored, growth, progress, validate_l, validate_r};
use clustercol::solver::{brute_force_list_coloring, dp_clustered_coloring};
use clustercol::structure::{
    check_tree_decomposition, find_vortical_decomposition, is_rho_vortex, tangle_axioms_check, vortical_adhesion,
    check_vortical,
};
use clustercol::{Color, ColorSet, Error, Graph, Result, VertexSet};

#[derive(Parser)]
#[command(name = "clustercol", version, about = "Clustered coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph family member.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma separated parameters.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Containment, decomposition, tangle, vortex and list checks.
    Check(CheckArgs),
    /// Clustered (list) coloring.
    Solve {
        #[arg(long, conflicts_with = "lists", required_unless_present = "lists")]
        k: Option<usize>,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long)]
        eta: usize,
        /// Tree decomposition to run the dynamic program on.
        #[arg(long, conflicts_with = "brute")]
        td: Option<PathBuf>,
        /// Use exhaustive search instead of the dynamic program.
        #[arg(long)]
        brute: bool,
        graph: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// List-assignment transformations; prints the new lists.
    Transform(TransformArgs),
    /// Run a verification campaign and write its report.
    Verify {
        campaign: String,
        /// `key=value` pairs, comma separated.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
        /// Where failing instances are saved for `check --replay`.
        #[arg(long, default_value = "counterexamples")]
        cex_dir: PathBuf,
    },
}

#[derive(Args)]
#[group(id = "mode", required = true, multiple = false)]
struct Modes {
    /// Pattern graph for a minor test.
    #[arg(long, value_name = "H")]
    minor: Option<PathBuf>,
    /// Pattern graph for an odd-minor test.
    #[arg(long, value_name = "H")]
    odd_minor: Option<PathBuf>,
    /// K_{s,t} subgraph test.
    #[arg(long, num_args = 2, value_names = ["S", "T"])]
    kst: Option<Vec<usize>>,
    /// Tree decomposition file to validate.
    #[arg(long, value_name = "FILE")]
    td: Option<PathBuf>,
    /// Tangle file to check against the axioms.
    #[arg(long, value_name = "FILE")]
    tangle: Option<PathBuf>,
    /// Society file; needs --rho.
    #[arg(long, value_name = "FILE")]
    vortex: Option<PathBuf>,
    /// List file to check against the (s, r, Y1) axioms, or the
    /// (s, Y1, l, r) axioms when --ell is given.
    #[arg(long, value_name = "LISTS")]
    list_axioms: Option<PathBuf>,
    /// Solver answer to check for (eta, g)-boundedness; needs --lists and --policy.
    #[arg(long, value_name = "ANSWER")]
    bounded: Option<PathBuf>,
    /// Instance file saved by a campaign.
    #[arg(long, value_name = "FILE")]
    replay: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    mode: Modes,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    ell: Option<Color>,
    #[arg(long)]
    rho: Option<usize>,
    #[arg(long)]
    lists: Option<PathBuf>,
    #[arg(long)]
    policy: Option<PathBuf>,
    /// Print a witness when one exists.
    #[arg(long)]
    witness: bool,
    /// Host graph (not needed with --replay).
    graph: Option<PathBuf>,
}

#[derive(Args)]
#[group(id = "op", required = true, multiple = false)]
struct Ops {
    #[arg(long)]
    progress: bool,
    #[arg(long)]
    growth: bool,
    #[arg(long)]
    enlarge: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    op: Ops,
    #[arg(long)]
    lists: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    r: usize,
    /// Vertices W (progress).
    #[arg(long, value_delimiter = ',')]
    w: Vec<usize>,
    /// Colors F (progress, enlarge).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    f: Vec<Color>,
    /// Vertices Z (growth).
    #[arg(long, value_delimiter = ',')]
    z: Vec<usize>,
    /// The color l (growth, enlarge).
    #[arg(long, allow_negative_numbers = true)]
    ell: Option<Color>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    graph: PathBuf,
    #[arg(short)]
    o: Option<PathBuf>,
}

/// Outcome of a command: text to print and whether the answer is "yes".
struct Outcome {
    text: String,
    yes: bool,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    io::parse_graph(&read(path)?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need<T: Clone>(x: &Option<T>, flag: &str) -> Result<T> {
    x.clone().ok_or_else(|| Error::Input(format!("{flag} is required here")))
}

fn write_model(m: &MinorModel, cert: Option<&OddCertificate>) -> String {
    let mut out = String::new();
    for (h, b) in m.branch_sets.iter().enumerate() {
        let _ = writeln!(out, "branch {h} : {}", join(b));
    }
    for (&(a, b), &(u, v)) in &m.edge_images {
        let _ = writeln!(out, "edge {a}-{b} {u}-{v}");
    }
    if let Some(c) = cert {
        let sides: Vec<String> = c.two_coloring.iter().map(|(v, &x)| format!("{v}:{}", x as u8)).collect();
        let _ = writeln!(out, "parity {}", sides.join(" "));
    }
    out
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn gen(family: &str, params: Vec<usize>, seed: Option<u64>) -> Result<String> {
    let family: Family = family.parse()?;
    Ok(io::write_graph(&FamilySpec::new(family, params, seed)?.build()?))
}

fn check(a: &CheckArgs) -> Result<Outcome> {
    let m = &a.mode;
    if let Some(p) = &m.replay {
        let inst = io::Instance::parse(&read(p)?)?;
        let res = replay(&inst)?;
        let mut text = String::new();
        for f in &res.failures {
            let _ = writeln!(text, "fail {}: {}", f.statement, f.detail);
        }
        if res.failures.is_empty() {
            text.push_str("pass\n");
        }
        return Ok(Outcome {
            text,
            yes: res.failures.is_empty(),
        });
    }
    let g = read_graph(&need(&a.graph, "a graph file")?)?;
    let verdict = |yes: bool, what: &str| Outcome {
        text: format!("{} {what}\n", if yes { "yes" } else { "no" }),
        yes,
    };
    if let Some(h) = &m.minor {
        let found = has_minor(&g, &read_graph(h)?)?;
        let mut o = verdict(found.is_some(), "minor");
        if let (true, Some(model)) = (a.witness, &found) {
            o.text.push_str(&write_model(model, None));
        }
        return Ok(o);
    }
    if let Some(h) = &m.odd_minor {
        let found = has_odd_minor(&g, &read_graph(h)?)?;
        let mut o = verdict(found.is_some(), "odd minor");
        if let (true, Some((model, cert))) = (a.witness, &found) {
            o.text.push_str(&write_model(model, Some(cert)));
        }
        return Ok(o);
    }
    if let Some(st) = &m.kst {
        let found = has_kst_subgraph(&g, st[0], st[1]);
        let mut o = verdict(found.is_some(), &format!("K{},{} subgraph", st[0], st[1]));
        if let (true, Some((s, t))) = (a.witness, &found) {
            let _ = write!(o.text, "S : {}\nT : {}\n", join(s), join(t));
        }
        return Ok(o);
    }
    if let Some(p) = &m.td {
        let td = io::parse_td(&read(p)?)?;
        return Ok(match check_tree_decomposition(&g, &td) {
            Ok(()) => Outcome {
                text: format!("valid width {}\n", td.width()),
                yes: true,
            },
            Err(e) => Outcome {
                text: format!("invalid: {e}\n"),
                yes: false,
            },
        });
    }
    if let Some(p) = &m.tangle {
        let t = io::parse_tangle(&read(p)?)?;
        let v = tangle_axioms_check(&g, &t.separations, t.order)?;
        let text = match v.first_failure() {
            None => format!("tangle of order {}\n", t.order),
            Some(axiom) => format!("not a tangle: {axiom} fails\n{v:?}\n"),
        };
        return Ok(Outcome { text, yes: v.is_tangle() });
    }
    if let Some(p) = &m.vortex {
        let rho = need(&a.rho, "--rho")?;
        let (society, bags) = io::parse_society(&read(p)?, &g)?;
        let yes = is_rho_vortex(&society, rho)?;
        let mut text = format!("{} {rho}-vortex\n", if yes { "yes" } else { "no" });
        match &bags {
            Some(bags) => match check_vortical(&society, bags)? {
                Ok(()) => {
                    let _ = writeln!(text, "vortical decomposition adhesion {}", vortical_adhesion(&society, bags)?);
                }
                Err(e) => {
                    let _ = writeln!(text, "invalid vortical decomposition: {e}");
                }
            },
            None if yes && a.witness => {
                if let Some(found) = find_vortical_decomposition(&society, rho)? {
                    text.push_str(&io::write_society(&society, Some(&found)));
                }
            }
            None => {}
        }
        return Ok(Outcome { text, yes });
    }
    if let Some(p) = &m.list_axioms {
        let l = io::parse_lists(&read(p)?, Some(g.n()))?;
        let (s, r) = (need(&a.s, "--s")?, need(&a.r, "--r")?);
        let res = match a.ell {
            Some(ell) => validate_r(&g, &l, s, ell, r).map_err(|e| e.to_string()),
            None => validate_l(&g, &l, s, r).map_err(|e| e.to_string()),
        };
        return Ok(match res {
            Ok(y1) => Outcome {
                text: format!("valid Y1 : {}\n", join(&y1)),
                yes: true,
            },
            Err(e) => Outcome {
                text: format!("invalid: {e}\n"),
                yes: false,
            },
        });
    }
    if let Some(p) = &m.bounded {
        let Some(c) = io::parse_answer(&read(p)?)? else {
            return Err(Error::Input("the answer file says NO; there is no coloring to check".into()));
        };
        let l = io::parse_lists(&read(&need(&a.lists, "--lists")?)?, Some(g.n()))?;
        let policy = io::parse_policy(&read(&need(&a.policy, "--policy")?)?)?;
        let v = check_eta_g_bounded(&g, &l, &c, &policy)?;
        return Ok(Outcome {
            text: format!("{}\n{v:?}\n", if v.is_bounded() { "bounded" } else { "not bounded" }),
            yes: v.is_bounded(),
        });
    }
    unreachable!("clap requires one mode")
}

fn solve(
    k: Option<usize>,
    lists: Option<&Path>,
    eta: usize,
    td: Option<&Path>,
    brute: bool,
    graph: &Path,
) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let l = match (k, lists) {
        (Some(k), _) => clustercol::lists::ListAssignment::full(g.n(), k as Color),
        (None, Some(p)) => io::parse_lists(&read(p)?, Some(g.n()))?,
        (None, None) => unreachable!("clap requires --k or --lists"),
    };
    let td = td.map(|p| read(p).and_then(|t| io::parse_td(&t))).transpose()?;
    let found = if brute {
        brute_force_list_coloring(&g, &l, eta, &ColorSet::new())?
    } else {
        dp_clustered_coloring(&g, td.as_ref(), &l, eta)?
    };
    Ok(Outcome {
        text: io::write_answer(found.as_ref()),
        yes: found.is_some(),
    })
}

fn transform(a: &TransformArgs) -> Result<String> {
    let g = read_graph(&a.graph)?;
    let l = io::parse_lists(&read(&a.lists)?, Some(g.n()))?;
    let f: ColorSet = a.f.iter().copied().collect();
    let out = if a.op.progress {
        let w: VertexSet = a.w.iter().copied().collect();
        progress(&g, &l, a.s, a.r, &w, &f, a.seed)?
    } else if a.op.growth {
        let z: VertexSet = a.z.iter().copied().collect();
        growth(&g, &l, a.s, need(&a.ell, "--ell")?, a.r, &z, a.seed)?.lists
    } else {
        enlarge_precolored(&g, &l, a.s, a.r, &f, need(&a.ell, "--ell")?, a.seed)?.lists
    };
    Ok(io::write_lists(&out))
}

fn verify(campaign: &str, params: &[String], seed: u64, o: Option<&Path>, cex_dir: &Path) -> Result<bool> {
    let mut map = BTreeMap::new();
    for kv in params {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("expected key=value, got {kv:?}")))?;
        map.insert(k.to_string(), v.to_string());
    }
    let run = run_campaign(campaign, &map, seed)?;
    emit(&run.report.write(), o)?;
    if !run.counterexamples.is_empty() {
        fs::create_dir_all(cex_dir).map_err(|e| Error::Input(format!("{}: {e}", cex_dir.display())))?;
        for cex in &run.counterexamples {
            let path = cex_dir.join(format!("{}-{}.txt", run.report.campaign, cex.id));
            fs::write(&path, cex.instance.write()).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            eprintln!("counterexample {}", path.display());
        }
    }
    eprintln!("elapsed_ms {}", run.elapsed.as_millis());
    Ok(run.report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res: Result<bool> = match &cli.cmd {
        Cmd::Gen { family, params, seed, o } => gen(family, params.clone(), *seed).and_then(|t| emit(&t, o.as_deref())).map(|_| true),
        Cmd::Check(a) => check(a).map(|o| {
            print!("{}", o.text);
            o.yes
        }),
        Cmd::Solve { k, lists, eta, td, brute, graph, o } => {
            solve(*k, lists.as_deref(), *eta, td.as_deref(), *brute, graph)
                .and_then(|out| emit(&out.text, o.as_deref()).map(|_| out.yes))
        }
        Cmd::Transform(a) => transform(a).and_then(|t| emit(&t, a.o.as_deref())).map(|_| true),
        Cmd::Verify { campaign, params, seed, o, cex_dir } => verify(campaign, params, *seed, o.as_deref(), cex_dir),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
