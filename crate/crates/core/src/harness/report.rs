//! Campaign reports: a header block and one line per instance,
//! `id | params | verdict | ops`.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::io::Instance;

/// Outcome of one instance. Details never contain `|` or line breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass(String),
    Fail(String),
    /// Not run, typically because a budget was exceeded.
    Skip(String),
}

fn clean(s: impl Into<String>) -> String {
    s.into().replace(['|', '\n', '\r'], "/").trim().to_string()
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict::Pass(String::new())
    }

    pub fn pass_with(note: impl Into<String>) -> Self {
        Verdict::Pass(clean(note))
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Verdict::Fail(clean(detail))
    }

    pub fn skip(detail: impl Into<String>) -> Self {
        Verdict::Skip(clean(detail))
    }

    /// Pass iff `ok`, with `detail` explaining a failure.
    pub fn check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(detail())
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass(_))
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    pub fn is_skip(&self) -> bool {
        matches!(self, Verdict::Skip(_))
    }

    fn parse(s: &str) -> Option<Self> {
        let (head, detail) = match s.split_once(": ") {
            Some((h, d)) => (h, d.to_string()),
            None => (s, String::new()),
        };
        match head {
            "pass" => Some(Verdict::Pass(detail)),
            "fail" => Some(Verdict::Fail(detail)),
            "skip" => Some(Verdict::Skip(detail)),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, detail) = match self {
            Verdict::Pass(d) => ("pass", d),
            Verdict::Fail(d) => ("fail", d),
            Verdict::Skip(d) => ("skip", d),
        };
        if detail.is_empty() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}: {detail}")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceLine {
    pub id: usize,
    /// Space separated `key=value` pairs.
    pub params: String,
    pub verdict: Verdict,
    /// Operation count (search nodes, colorings enumerated, ...); machine
    /// independent, unlike wall time.
    pub ops: u64,
}

/// The deterministic part of a campaign run. Re-running a campaign with the
/// same parameters and seed reproduces it exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignReport {
    pub campaign: String,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    /// Ordered by id.
    pub instances: Vec<InstanceLine>,
}

impl CampaignReport {
    pub fn new(campaign: &str, params: BTreeMap<String, String>, seed: u64) -> Self {
        CampaignReport {
            campaign: campaign.into(),
            params,
            seed,
            instances: Vec::new(),
        }
    }

    /// Appends an instance with the next id.
    pub fn push(&mut self, params: impl Into<String>, verdict: Verdict, ops: u64) -> usize {
        let id = self.instances.len();
        self.instances.push(InstanceLine {
            id,
            params: clean(params),
            verdict,
            ops,
        });
        id
    }

    pub fn count(&self, pred: impl Fn(&Verdict) -> bool) -> usize {
        self.instances.iter().filter(|i| pred(&i.verdict)).count()
    }

    /// No instance failed. Skipped instances are reported but do not fail
    /// the campaign.
    pub fn all_pass(&self) -> bool {
        self.count(Verdict::is_fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceLine> {
        self.instances.iter().filter(|i| i.verdict.is_fail())
    }

    pub fn write(&self) -> String {
        let mut out = format!("campaign {}\nseed {}\n", self.campaign, self.seed);
        out.push_str("params");
        for (k, v) in &self.params {
            let _ = write!(out, " {k}={v}");
        }
        let _ = write!(
            out,
            "\nsummary pass={} fail={} skip={}\nverdict {}\ninstances {}\n",
            self.count(Verdict::is_pass),
            self.count(Verdict::is_fail),
            self.count(Verdict::is_skip),
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.instances.len()
        );
        for i in &self.instances {
            let _ = writeln!(out, "{} | {} | {} | {}", i.id, i.params, i.verdict, i.ops);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() < 6 {
            return Err(err(lines.len(), "truncated header"));
        }
        let field = |i: usize, key: &str| -> Result<&str> {
            lines[i]
                .strip_prefix(key)
                .map(str::trim_start)
                .ok_or_else(|| err(i + 1, &format!("expected `{key}`")))
        };
        let campaign = field(0, "campaign ")?.to_string();
        let seed = field(1, "seed ")?.parse().map_err(|_| err(2, "bad seed"))?;
        let mut params = BTreeMap::new();
        for kv in field(2, "params")?.split_whitespace() {
            let (k, v) = kv.split_once('=').ok_or_else(|| err(3, "expected key=value"))?;
            params.insert(k.to_string(), v.to_string());
        }
        let summary = field(3, "summary ")?.to_string();
        let verdict = field(4, "verdict ")?.to_string();
        let count: usize = field(5, "instances ")?.parse().map_err(|_| err(6, "bad instance count"))?;
        if lines.len() != 6 + count {
            return Err(err(lines.len(), "instance count does not match the header"));
        }
        let mut instances = Vec::with_capacity(count);
        for (i, line) in lines[6..].iter().enumerate() {
            let parts: Vec<&str> = line.split(" | ").collect();
            let bad = || err(7 + i, "expected `id | params | verdict | ops`");
            if parts.len() != 4 {
                return Err(bad());
            }
            let id: usize = parts[0].parse().map_err(|_| bad())?;
            if id != i {
                return Err(err(7 + i, "instance ids must be 0, 1, 2, ..."));
            }
            instances.push(InstanceLine {
                id,
                params: parts[1].to_string(),
                verdict: Verdict::parse(parts[2]).ok_or_else(bad)?,
                ops: parts[3].parse().map_err(|_| bad())?,
            });
        }
        let report = CampaignReport {
            campaign,
            params,
            seed,
            instances,
        };
        let again = report.write();
        let mut header = again.lines().skip(3);
        if header.next() != Some(&*format!("summary {summary}")) || header.next() != Some(&*format!("verdict {verdict}")) {
            return Err(err(4, "summary does not match the instance lines"));
        }
        Ok(report)
    }
}

/// A failing instance saved for replay with `clustercol check --replay`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Report line it belongs to.
    pub id: usize,
    pub instance: Instance,
}

/// A campaign run: the reproducible report, the wall time (kept apart so the
/// report stays byte-for-byte reproducible) and minimized counterexamples.
#[derive(Clone, Debug)]
pub struct CampaignRun {
    pub report: CampaignReport,
    pub elapsed: Duration,
    pub counterexamples: Vec<Counterexample>,
}
