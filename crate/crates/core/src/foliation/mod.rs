//! Foliations of the projective plane: reduction, pullback, degree
//! sequences, singular points and first integrals.

pub mod core;
pub mod integrals;
pub mod singular;

pub use self::core::{degree_sequence, from_form, from_form_with, pullback_foliation, Foliation};
pub use integrals::{curve_invariant, darboux_first_integral_check, rational_first_integral_check};
pub use singular::{is_radial_at, jet_class, singular_points, JetClass, SingularSet};
