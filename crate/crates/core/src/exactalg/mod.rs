//! Exact arithmetic: rationals, sparse multivariate polynomials, gcd,
//! resultants and linear algebra over the rationals.

pub mod gcd;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod symbols;
pub mod univariate;

pub use gcd::{gcd, gcd_homogeneous, gcd_many};
pub use monomial::Monomial;
pub use poly::{Homogeneity, MPoly};
pub use rational::{int, rat, Rational};
pub use resultant::resultant;
pub use symbols::{SymbolTable, Table};
