//! Birational maps of the projective plane: composition, pullback and the
//! built-in quadratic and cubic maps.

pub mod builtins;
pub mod ratmap;
pub mod word;

pub use ratmap::{compose_reduce, pullback_raw, pullback_triple, Exceptional, RatMap};
pub use word::{verify_word, MapWord};
