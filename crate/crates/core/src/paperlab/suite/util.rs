use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::birmap::RatMap;
use crate::dforms::Proj1Form;
use crate::error::{Error, Result};
use crate::exactalg::{int, MPoly, Rational, SymbolTable, Table};
use crate::foliation::{from_form, Foliation};
use crate::paperlab::families::{family, general_at};
use crate::parse::{parse_form_literal, parse_poly};

pub fn geo() -> Table {
    SymbolTable::geometric()
}

pub fn std_t() -> Table {
    SymbolTable::standard()
}

pub fn poly(s: &str, t: &Table) -> MPoly {
    parse_poly(s, t).expect("built-in polynomial")
}

pub fn triple(s: &str, t: &Table) -> [MPoly; 3] {
    parse_form_literal(s, t).expect("built-in triple")
}

pub fn form(s: &str, t: &Table) -> Proj1Form {
    Proj1Form::new(triple(s, t)).expect("built-in form")
}

pub fn map(s: &str, t: &Table) -> RatMap {
    RatMap::new(crate::parse::parse_map_literal(s, t).expect("built-in map")).expect("built-in map")
}

/// Numeric family member over `x, y, z` defining a foliation of degree 2.
pub fn family_sample(name: &str, rng: &mut ChaCha8Rng) -> Result<Foliation> {
    let f = family(name, &[])?;
    for _ in 0..50 {
        let s = f.sample(rng)?.to_geometric()?;
        let fol = from_form(&s)?;
        if fol.degree() == 2 {
            return Ok(fol);
        }
    }
    Err(Error::Binding(format!("no degree-2 sample of {name}")))
}

/// Random point of `Q^18` with integer entries in `-20..=20`.
pub fn random_general_point(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..18).map(|_| int(rng.gen_range(-20..=20))).collect()
}

/// The general form at `v` over `x, y, z`; `None` when it vanishes
/// identically.
pub fn general_nonzero(v: &[Rational]) -> Result<Option<Proj1Form>> {
    match general_at(v) {
        Ok(w) if w.components().iter().any(|p| !p.is_zero()) => Ok(Some(w.to_geometric()?)),
        Ok(_) | Err(Error::ZeroForm) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Random foliation of degree 2 from the general form.
pub fn random_degree2(rng: &mut ChaCha8Rng) -> Result<Foliation> {
    loop {
        let Some(w) = general_nonzero(&random_general_point(rng))? else {
            continue;
        };
        let f = from_form(&w)?;
        if f.degree() == 2 {
            return Ok(f);
        }
    }
}

/// Random invertible linear map with entries in `-9..=9`.
pub fn random_linear(rng: &mut ChaCha8Rng, t: &Table) -> RatMap {
    loop {
        let m: [[Rational; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| int(rng.gen_range(-9..=9))));
        if let Ok(l) = RatMap::linear(m, t) {
            return l;
        }
    }
}

/// `d` divides every entry, `d` having a constant leading coefficient.
pub fn divides_all(c: &[MPoly; 3], d: &MPoly) -> Result<bool> {
    for p in c {
        if !p.div_rem_geometric(d)?.1.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn seq_str(v: &[u32]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}
