//! Exact computations with holomorphic foliations of the projective plane
//! and their pullbacks by quadratic birational maps.

pub mod birmap;
pub mod dforms;
pub mod error;
pub mod exactalg;
pub mod foliation;
pub mod paperlab;
pub mod parse;
pub mod reduce;

pub use birmap::{MapWord, RatMap};
pub use dforms::{Aff1Form, Proj1Form, Proj2Form, RationalFn};
pub use error::{Error, Result};
pub use foliation::Foliation;
pub use exactalg::{MPoly, Monomial, Rational, SymbolTable, Table};
pub use paperlab::{run_suite, CheckResult, ObstructionSet, ParamForm, Status, SuiteConfig, SuiteReport};
