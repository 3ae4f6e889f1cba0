//! Projective and affine differential forms.

pub mod affine;
pub mod proj;
pub mod ratfn;

pub use affine::{riccati_triplet, sl2_triplet_check, Aff1Form};
pub use proj::{chart, euler_contract, homogenize, wedge11, wedge_triples, Proj1Form, Proj2Form};
pub use ratfn::RationalFn;
