//! Drives the JSON job surface directly from the library: the same schema
//! the bundled binary accepts, without touching the filesystem.

use hurwitz_strata::{run_job, RunOptions, Verdict};

fn main() {
    let job = r#"{
        "mode": "push",
        "marking": ["pinf", "q", "u", "v"],
        "degree": 2,
        "F": {"pinf": "q", "q": "pinf", "u": "v", "v": "pinf"},
        "rm": {"pinf": 2},
        "br": {"pinf": [1, 1], "q": [2], "u": [2], "v": [1, 1]},
        "k": 0
    }"#;
    let outcome = run_job(job, &RunOptions::default()).expect("job document is valid");
    println!(
        "verdict: {}",
        match outcome.verdict {
            Verdict::Pass => "pass (exit 0)",
            Verdict::Counterexample => "counterexample (exit 1)",
        }
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&outcome.report).expect("report serializes")
    );
}
