use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Randomized sampling supports the claim; not a proof.
    EvidenceOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::EvidenceOnly => "evidence-only",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_ref: String,
    pub status: Status,
    /// Zero unless timings were requested, so reports stay reproducible.
    pub elapsed_ms: u64,
    pub details: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub version: String,
    pub pass_count: usize,
    pub fail_count: usize,
    pub evidence_count: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn new(seed: u64, checks: Vec<CheckResult>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        SuiteReport {
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            pass_count: count(Status::Pass),
            fail_count: count(Status::Fail),
            evidence_count: count(Status::EvidenceOnly),
            checks,
        }
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }

    /// One line per check followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(s, "{:<14} {:<28} {}", c.status.as_str(), c.check_id, c.paper_ref);
            if c.elapsed_ms > 0 {
                let _ = write!(s, " ({} ms)", c.elapsed_ms);
            }
            s.push('\n');
            for (k, v) in &c.details {
                let _ = writeln!(s, "    {k}: {v}");
            }
        }
        let _ = writeln!(
            s,
            "seed {}: {} pass, {} fail, {} evidence-only",
            self.seed, self.pass_count, self.fail_count, self.evidence_count
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, status: Status) -> CheckResult {
        CheckResult {
            check_id: id.to_string(),
            paper_ref: String::new(),
            status,
            elapsed_ms: 0,
            details: BTreeMap::new(),
        }
    }

    #[test]
    fn counts_and_overall_status() {
        let r = SuiteReport::new(1, vec![check("a", Status::Pass), check("b", Status::EvidenceOnly)]);
        assert!(r.passed());
        assert_eq!((r.pass_count, r.evidence_count), (1, 1));
        let r = SuiteReport::new(1, vec![check("a", Status::Fail)]);
        assert!(!r.passed());
        assert!(SuiteReport::new(1, vec![]).passed());
    }

    #[test]
    fn status_serializes_kebab_case() {
        assert_eq!(serde_json::to_string(&Status::EvidenceOnly).unwrap(), "\"evidence-only\"");
    }
}
