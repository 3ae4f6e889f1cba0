//! Parametric families, the obstruction calculus and the registry of
//! named checks.
pub mod families;
pub mod obstructions;
pub mod report;
pub mod suite;

pub use families::{family, family_names, general_quadratic_form, ParamForm};
pub use obstructions::{
    invariance_obstructions, monomial_div_obstructions, remainder_obstructions, span_equal, ObstructionSet,
};
pub use report::{CheckResult, Status, SuiteReport};
pub use suite::{check_ids, criterion_of, run_suite, Outcome, SuiteConfig, DEFAULT_SEED, SEED_ENV};
