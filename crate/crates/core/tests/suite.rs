use cremona_core::paperlab::{check_ids, criterion_of, run_suite, Status, SuiteConfig};

fn filtered(f: &str, seed: u64) -> cremona_core::SuiteReport {
    run_suite(&SuiteConfig {
        seed,
        filter: Some(f.to_string()),
        timings: false,
    })
}

#[test]
fn degree_three_identities_pass() {
    let r = filtered("thmA", 1);
    assert_eq!(r.checks.len(), 5);
    assert!(r.passed());
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn reports_are_reproducible_per_seed() {
    let a = serde_json::to_string(&filtered("lem_sigma", 7)).unwrap();
    let b = serde_json::to_string(&filtered("lem_sigma", 7)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn result_order_follows_registry() {
    let r = filtered("inv", 3);
    let ids: Vec<&str> = r.checks.iter().map(|c| c.check_id.as_str()).collect();
    let expected: Vec<&str> = check_ids().into_iter().filter(|i| i.contains("inv")).collect();
    assert_eq!(ids, expected);
}

#[test]
fn sampled_checks_are_evidence_only() {
    let r = filtered("necessity", 11);
    assert_eq!(r.checks.len(), 5);
    assert!(r.checks.iter().all(|c| c.status == Status::EvidenceOnly));
    assert!(r.checks.iter().all(|c| criterion_of(&c.check_id) == Some(9)));
}

#[test]
fn structured_report_has_schema_fields() {
    let v: serde_json::Value = serde_json::to_value(filtered("inv.sigma", 1)).unwrap();
    for k in ["seed", "version", "pass_count", "fail_count", "evidence_count", "checks"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    let c = &v["checks"][0];
    for k in ["check_id", "paper_ref", "status", "elapsed_ms", "details"] {
        assert!(c.get(k).is_some(), "{k}");
    }
    assert_eq!(c["elapsed_ms"], 0);
}
