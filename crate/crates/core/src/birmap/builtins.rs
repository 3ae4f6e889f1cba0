//! The quadratic involutions, the cubic maps and the linear letters used to
//! write them as words in `sigma`.

use num_traits::Zero;

use super::ratmap::{Exceptional, RatMap};
use super::word::MapWord;
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Rational, Table};
use crate::parse::parse_map_literal;

fn lit(s: &str, t: &Table) -> RatMap {
    RatMap::new(parse_map_literal(s, t).expect("built-in literal")).expect("built-in map")
}

pub fn sigma(t: &Table) -> RatMap {
    lit("(y*z : x*z : x*y)", t).with_exceptional(Exceptional::CoordinateLines)
}

pub fn rho(t: &Table) -> RatMap {
    lit("(x*y : z^2 : y*z)", t).with_exceptional(Exceptional::CoordinateLines)
}

pub fn tau(t: &Table) -> RatMap {
    lit("(x^2 : x*y : y^2 - x*z)", t).with_exceptional(Exceptional::CoordinateLines)
}

/// The cubic map `(x z^2 + y^3 : y z^2 : z^3)`.
pub fn psi(t: &Table) -> RatMap {
    lit("(x*z^2 + y^3 : y*z^2 : z^3)", t).with_exceptional(Exceptional::CoordinateLines)
}

/// `Q = x^2 + y^2 + a x y + b x z + y z`.
pub fn phi_quadric(t: &Table, a: &MPoly, b: &MPoly) -> MPoly {
    let v = |i| MPoly::var_index(t, i);
    let (x, y, z) = (v(0), v(1), v(2));
    &(&(&x.pow(2) + &y.pow(2)) + &(&(a * &x) * &y)) + &(&(&(b * &x) * &z) + &(&y * &z))
}

/// The cubic map `(x Q : y Q : x y z)`. Numeric `a`, `b` must satisfy
/// `a^2 != 4` and `b^2 - a b + 1 != 0`.
pub fn phi(t: &Table, a: &MPoly, b: &MPoly) -> Result<RatMap> {
    let c1 = &a.pow(2) - &MPoly::constant(t, Rational::from_integer(4.into()));
    let c2 = &(&b.pow(2) - &(a * b)) + &MPoly::one(t);
    for (c, what) in [(&c1, "a^2 - 4 = 0"), (&c2, "b^2 - a*b + 1 = 0")] {
        if c.constant_value().map(|v| v.is_zero()).unwrap_or(false) {
            return Err(Error::NotBirational(what.to_string()));
        }
    }
    let q = phi_quadric(t, a, b);
    let v = |i| MPoly::var_index(t, i);
    let (x, y, z) = (v(0), v(1), v(2));
    RatMap::new([&x * &q, &y * &q, &(&x * &y) * &z])
}

const RHO_L: [&str; 3] = ["(z - y : y - x : y)", "(y + z : z : x)", "(x + z : y - z : z)"];

const TAU_L: [&str; 4] = [
    "(x - y : x - 2*y : -x + y - z)",
    "(x + z : x : y)",
    "(-y : x - 3*y + z : x)",
    "(y - x : z - 2*x : 2*x - y)",
];

const PSI_L: [&str; 7] = [
    "(z - y : y : y - x)",
    "(y + z : z : x)",
    "(-z : -y : x - y)",
    "(x + z : x : y)",
    "(-y : x - 3*y + z : x)",
    "(-x : -y - z : x + y)",
    "(x + y : z - y : y)",
];

fn letters(kind: &str) -> Option<&'static [&'static str]> {
    match kind {
        "rho" => Some(&RHO_L),
        "tau" => Some(&TAU_L),
        "psi" => Some(&PSI_L),
        _ => None,
    }
}

/// Linear letter `<kind>_l<k>` (1-based), e.g. `tau_l3`.
pub fn letter(name: &str, t: &Table) -> Option<RatMap> {
    let (kind, k) = name.split_once("_l")?;
    let k: usize = k.parse().ok()?;
    let table = letters(kind)?;
    table.get(k.checked_sub(1)?).map(|s| lit(s, t))
}

/// The words expressing `rho`, `tau` and `psi` through `sigma`.
pub fn word(name: &str, t: &Table) -> Option<MapWord> {
    let l = |n: &str| letter(n, t).expect("letter");
    let s = sigma(t);
    let seq: Vec<RatMap> = match name {
        "rho_word" => vec![l("rho_l1"), s.clone(), l("rho_l2"), s.clone(), l("rho_l3")],
        "tau_word" => {
            let mut v = vec![l("tau_l1")];
            for n in ["tau_l2", "tau_l3", "tau_l2", "tau_l4"] {
                v.push(s.clone());
                v.push(l(n));
            }
            v
        }
        "psi_word" => {
            let mut v = vec![l("psi_l1")];
            for n in ["psi_l2", "psi_l3", "psi_l4", "psi_l5", "psi_l4", "psi_l6", "psi_l2", "psi_l7"] {
                v.push(s.clone());
                v.push(l(n));
            }
            v
        }
        _ => return None,
    };
    Some(MapWord::new(seq))
}

/// Look up a parameter-free built-in map or letter by name.
pub fn named_map(name: &str, t: &Table) -> Result<RatMap> {
    match name {
        "sigma" => Ok(sigma(t)),
        "rho" => Ok(rho(t)),
        "tau" => Ok(tau(t)),
        "psi" => Ok(psi(t)),
        _ => letter(name, t).ok_or_else(|| Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birmap::compose_reduce;
    use crate::exactalg::{int, SymbolTable};

    #[test]
    fn quadratic_involutions() {
        let t = SymbolTable::geometric();
        for m in [sigma(&t), rho(&t), tau(&t)] {
            assert_eq!(m.degree(), 2);
            assert!(compose_reduce(&m, &m).unwrap().is_identity());
        }
    }

    #[test]
    fn letters_resolve() {
        let t = SymbolTable::geometric();
        assert!(letter("tau_l4", &t).unwrap().is_linear());
        assert!(letter("tau_l5", &t).is_none());
        assert!(letter("psi_l0", &t).is_none());
        assert!(named_map("omega", &t).is_err());
    }

    #[test]
    fn phi_constraints() {
        let t = SymbolTable::geometric();
        let c = |n| MPoly::constant(&t, int(n));
        assert!(matches!(phi(&t, &c(2), &c(0)), Err(Error::NotBirational(_))));
        // b^2 - a b + 1 = 0 for a = 5/2, b = 2
        let a = MPoly::constant(&t, crate::exactalg::rat(5, 2));
        assert!(matches!(phi(&t, &a, &c(2)), Err(Error::NotBirational(_))));
        assert!(phi(&t, &c(0), &c(1)).is_ok());
        assert_eq!(phi(&t, &c(0), &c(0)).unwrap().degree(), 3);
    }
}
