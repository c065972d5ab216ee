//! One line per acceptance criterion. Criteria 2 and 3 fail with the
//! coefficients as stated; the run asserts their exact residues instead of
//! hiding them, and fails if anything else changes.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use decograph::standard::{order_three_combination, order_two_combination};
use decograph::verify::{run_criteria, CriterionResult, SuiteOptions, CRITERIA};
use decograph::{delta_vector, Parity};

struct Line {
    id: u32,
    name: String,
    pass: bool,
    detail: String,
}

/// Residues the stated combinations leave behind, as `coefficient graph`.
const KNOWN_RESIDUES: [(u32, Parity, &str); 2] = [
    (2, Parity::Even, "(2)even[3+0:1-2,1-3]"),
    (3, Parity::Odd, "(-2)odd[2+3:1-3,1-4,2-5,3-4,3-5,4-5]"),
];

fn failing_checks(c: &CriterionResult) -> Vec<String> {
    c.checks.iter().filter(|k| !k.pass).map(|k| format!("{} [{}]", k.name, k.detail)).collect()
}

fn verify_twice() -> (bool, String, Duration) {
    let dir = std::env::temp_dir().join(format!("decograph-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let start = Instant::now();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.join(format!("report-{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_decograph"))
            .args(["verify", "--suite", "all", "--out"])
            .arg(&path)
            .output()
            .expect("binary runs");
        // exit code 1 means some criterion failed, 2 an error
        assert_ne!(status.status.code(), Some(2), "{}", String::from_utf8_lossy(&status.stderr));
        outputs.push(std::fs::read(&path).expect("report written"));
    }
    let elapsed = start.elapsed();
    let _ = std::fs::remove_dir_all(&dir);
    let same = outputs[0] == outputs[1];
    (same, format!("{} bytes each, identical = {same}", outputs[0].len()), elapsed)
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut lines = Vec::new();
    let mut unexpected = Vec::new();

    for &(id, name) in &CRITERIA {
        let start = Instant::now();
        let report = run_criteria(&[id], &opts).expect("criterion runs");
        let elapsed = start.elapsed();
        let c = &report.criteria[0];
        let mut pass = c.pass;
        let mut detail = format!("{} checks, {:.2?}", c.checks.len(), elapsed);
        if id == 1 && elapsed > Duration::from_secs(300) {
            pass = false;
            detail.push_str(", over the 5 min budget");
        }
        if !pass {
            detail = format!("{detail}; failing: {}", failing_checks(c).join("; "));
        }
        match KNOWN_RESIDUES.iter().find(|k| k.0 == id) {
            Some(&(_, parity, residue)) => {
                let v = if id == 2 { order_two_combination(parity) } else { order_three_combination(parity) };
                let got = delta_vector(&v.expect("combination builds")).expect("coboundary").to_string();
                let only_that = failing_checks(c).len() == 1;
                if pass || got != residue || !only_that {
                    unexpected.push(format!("criterion {id}: residue {got}"));
                }
            }
            None => {
                if !pass {
                    unexpected.push(format!("criterion {id}"));
                }
            }
        }
        lines.push(Line { id, name: name.to_string(), pass, detail });
    }

    let (same, detail, elapsed) = verify_twice();
    let in_budget = elapsed < Duration::from_secs(900);
    let pass = same && in_budget;
    if !pass {
        unexpected.push("criterion 11".into());
    }
    lines.push(Line {
        id: 11,
        name: "determinism".into(),
        pass,
        detail: format!("{detail}, two full runs in {elapsed:.2?}"),
    });

    for l in &lines {
        println!("criterion {:>2} {}: {} ({})", l.id, if l.pass { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());
    if unexpected.is_empty() {
        println!("acceptance: outcome matches the recorded expectations (criteria 2 and 3 fail on their stated coefficients)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome in {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
