//! Fixed inputs shared by the benchmarks.

use cremona_core::dforms::Proj1Form;
use cremona_core::exactalg::{MPoly, SymbolTable, Table};
use cremona_core::foliation::{from_form, Foliation};
use cremona_core::parse::{parse_form_literal, parse_poly};

pub fn geo() -> Table {
    SymbolTable::geometric()
}

pub fn poly(s: &str) -> MPoly {
    parse_poly(s, &geo()).expect("fixture polynomial")
}

/// A degree-2 foliation with no special structure.
pub fn generic_foliation() -> Foliation {
    let w = parse_form_literal(
        "[y*(x^2 - 2*x*y + 3*z^2) - z*(2*x*y + y^2 - x*z), \
         z*(x^2 + y*z - 4*y^2) - x*(x^2 - 2*x*y + 3*z^2), \
         x*(2*x*y + y^2 - x*z) - y*(x^2 + y*z - 4*y^2)]",
        &geo(),
    )
    .expect("fixture form");
    from_form(&Proj1Form::new(w).expect("euler")).expect("foliation")
}
