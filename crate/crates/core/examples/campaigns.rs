//! Verification campaigns and their reports.
//!
//! Run with `cargo run --release --example campaigns`.

use std::collections::BTreeMap;

use clustercol::harness::{replay_with, run_campaign, shrinking_progress, verify_lemma_suites_with, CampaignReport};

fn main() -> clustercol::Result<()> {
    let params: BTreeMap<String, String> = [("eta_max".to_string(), "3".to_string())].into();
    let run = run_campaign("hex", &params, 0)?;
    print!("{}", run.report.write());
    println!("({} ms)", run.elapsed.as_millis());

    let run = run_campaign("lemma_suites", &[("trials".to_string(), "50".to_string())].into(), 7)?;
    let text = run.report.write();
    assert_eq!(CampaignReport::parse(&text)?, run.report);
    println!("lemma suites: {}", text.lines().nth(3).unwrap());

    // A broken progress is caught, and each failure shrinks to a small replay file.
    let run = verify_lemma_suites_with(20, 7, shrinking_progress);
    println!("broken progress: {}", run.report.write().lines().nth(3).unwrap());
    if let Some(cex) = run.counterexamples.first() {
        print!("smallest counterexample for line {}:\n{}", cex.id, cex.instance.write());
        let again = replay_with(&cex.instance, shrinking_progress)?;
        println!("replays with {} failure(s)", again.failures.len());
    }
    Ok(())
}
