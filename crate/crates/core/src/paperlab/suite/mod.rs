//! Registry of named checks and the parallel runner.

mod identities;
mod lemmas;
mod structures;
pub(crate) mod util;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{CheckResult, Status, SuiteReport};
use crate::error::Result;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_501;

/// Environment variable overriding [`DEFAULT_SEED`] in front ends.
pub const SEED_ENV: &str = "CREMONA_SEED";

/// What a check found.
#[derive(Debug, Clone)]
pub struct Outcome {
    ok: bool,
    sampled: bool,
    details: BTreeMap<String, String>,
}

impl Outcome {
    /// A symbolic verification.
    pub fn exact(ok: bool) -> Self {
        Outcome {
            ok,
            sampled: false,
            details: BTreeMap::new(),
        }
    }

    /// A claim supported (or refuted) by random samples only.
    pub fn sampled(ok: bool) -> Self {
        Outcome {
            sampled: true,
            ..Outcome::exact(ok)
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.to_string(), value.to_string());
    }

    pub fn and(mut self, ok: bool) -> Self {
        self.ok &= ok;
        self
    }

    fn status(&self) -> Status {
        match (self.ok, self.sampled) {
            (false, _) => Status::Fail,
            (true, false) => Status::Pass,
            (true, true) => Status::EvidenceOnly,
        }
    }
}

pub(crate) type CheckFn = fn(&mut ChaCha8Rng) -> Result<Outcome>;

pub(crate) struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub criterion: u8,
    pub run: CheckFn,
}

fn registry() -> Vec<CheckDef> {
    let mut v = identities::checks();
    v.extend(lemmas::checks());
    v.extend(structures::checks());
    v.sort_by_key(|c| (c.criterion, c.id));
    v
}

/// All check identifiers in report order.
pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

/// The acceptance criterion a check belongs to.
pub fn criterion_of(id: &str) -> Option<u8> {
    registry().iter().find(|c| c.id == id).map(|c| c.criterion)
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Substring that selected check ids must contain.
    pub filter: Option<String>,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            filter: None,
            timings: false,
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn run_one(def: &CheckDef, cfg: &SuiteConfig) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ fnv1a(def.id));
    let start = Instant::now();
    let outcome = match (def.run)(&mut rng) {
        Ok(o) => o,
        Err(e) => Outcome::exact(false).with("error", e),
    };
    let elapsed = start.elapsed().as_millis() as u64;
    CheckResult {
        check_id: def.id.to_string(),
        paper_ref: def.anchor.to_string(),
        status: outcome.status(),
        elapsed_ms: if cfg.timings { elapsed.max(1) } else { 0 },
        details: outcome.details,
    }
}

/// Run every check whose id contains the filter. Checks run in parallel;
/// the result order is the registry order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let defs: Vec<CheckDef> = registry()
        .into_iter()
        .filter(|d| cfg.filter.as_deref().is_none_or(|f| d.id.contains(f)))
        .collect();
    let checks: Vec<CheckResult> = defs.par_iter().map(|d| run_one(d, cfg)).collect();
    SuiteReport::new(cfg.seed, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_mapped() {
        let ids = check_ids();
        let mut s = ids.clone();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), ids.len());
        for c in 1..=14u8 {
            assert!(ids.iter().any(|i| criterion_of(i) == Some(c)), "criterion {c}");
        }
    }

    #[test]
    fn empty_filter_match_passes() {
        let r = run_suite(&SuiteConfig {
            filter: Some("no-such-check".into()),
            ..SuiteConfig::default()
        });
        assert!(r.checks.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn per_check_seeds_differ() {
        assert_ne!(fnv1a("inv.sigma"), fnv1a("inv.rho"));
    }
}
