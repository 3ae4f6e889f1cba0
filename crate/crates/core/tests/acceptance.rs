//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cremona_core::paperlab::{criterion_of, run_suite, Status, SuiteConfig, DEFAULT_SEED, SEED_ENV};

const CHECK_LIMIT_MS: u64 = 5_000;
const SUITE_LIMIT: Duration = Duration::from_secs(60);

const CRITERIA: [&str; 14] = [
    "quadratic involutions",
    "factorization words",
    "generic pullback degree 6",
    "degree-3 theorem identities",
    "two-singularity branches",
    "Darboux first integrals",
    "lemma sufficiency",
    "lemma condition spans",
    "infeasibility and necessity",
    "invariant families",
    "transverse structures",
    "degree-sequence diagrams",
    "singular points",
    "Omega4 corollary evidence",
];

fn main() -> ExitCode {
    let seed = std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let start = Instant::now();
    let report = run_suite(&SuiteConfig {
        seed,
        filter: None,
        timings: true,
    });
    let total = start.elapsed();

    let mut all_ok = true;
    for (i, title) in CRITERIA.iter().enumerate() {
        let n = (i + 1) as u8;
        let checks: Vec<_> = report
            .checks
            .iter()
            .filter(|c| criterion_of(&c.check_id) == Some(n))
            .collect();
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.check_id.as_str())
            .collect();
        let slow: Vec<&str> = checks
            .iter()
            .filter(|c| c.elapsed_ms >= CHECK_LIMIT_MS)
            .map(|c| c.check_id.as_str())
            .collect();
        let evidence = checks.iter().filter(|c| c.status == Status::EvidenceOnly).count();
        let max_ms = checks.iter().map(|c| c.elapsed_ms).max().unwrap_or(0);
        let ok = !checks.is_empty() && failed.is_empty() && slow.is_empty();
        all_ok &= ok;
        let mut line = format!(
            "{} criterion {n:>2} {title}: {} checks, {evidence} evidence-only, max {max_ms} ms",
            if ok { "PASS" } else { "FAIL" },
            checks.len()
        );
        if !failed.is_empty() {
            line.push_str(&format!("; failed: {}", failed.join(", ")));
        }
        if !slow.is_empty() {
            line.push_str(&format!("; over {CHECK_LIMIT_MS} ms: {}", slow.join(", ")));
        }
        println!("{line}");
    }
    let total_ok = total < SUITE_LIMIT;
    all_ok &= total_ok;
    println!(
        "{} suite wall time {} ms (limit {} ms), seed {seed}",
        if total_ok { "PASS" } else { "FAIL" },
        total.as_millis(),
        SUITE_LIMIT.as_millis()
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
