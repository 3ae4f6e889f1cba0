//! Removal of common factors from coefficient triples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{gcd_many, MPoly, Monomial, Rational};

/// How much reduction to attempt after the monomial content is removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    /// Common factors are known to be monomials.
    MonomialOnly,
    /// Full gcd for numeric data; a generic probe for parametric data.
    Full,
}

/// Divide out the common factor of the nonzero entries. Returns the
/// reduced triple and the removed factor.
pub fn reduce_triple(c: [MPoly; 3], depth: Depth) -> Result<([MPoly; 3], MPoly)> {
    let t = c[0].table().clone();
    let mut m: Option<Monomial> = None;
    for p in c.iter().filter(|p| !p.is_zero()) {
        let cm = p.content_monomial()?;
        m = Some(match m {
            None => cm,
            Some(g) => g.gcd(&cm),
        });
    }
    let m = m.ok_or(Error::ZeroForm)?;
    let mut c = c.map(|p| p.div_monomial(&m).expect("content divides"));
    let mono = MPoly::term(&t, m, num_traits::One::one());
    if depth == Depth::MonomialOnly {
        return Ok((c, mono));
    }
    if c.iter().all(|p| p.is_numeric()) {
        let g = gcd_many(&c)?.expect("nonzero");
        if g.is_constant() {
            return Ok((c, mono));
        }
        for p in c.iter_mut() {
            *p = p.trial_divide(&g)?.expect("gcd divides");
        }
        return Ok((c, &mono * &g));
    }
    if generic_factor(&c)? {
        return Err(Error::NonMonomialParametricReduction);
    }
    Ok((c, mono))
}

/// Does a generic specialization of the parameters acquire a
/// non-constant common factor? Two independent probes must agree.
fn generic_factor(c: &[MPoly; 3]) -> Result<bool> {
    let t = c[0].table().clone();
    let out = crate::exactalg::SymbolTable::geometric();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut hits = 0;
    for _ in 0..2 {
        let vals: Vec<(usize, Rational)> = t
            .param_indices()
            .map(|i| {
                let n: i64 = rng.gen_range(1..=211) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let d: i64 = rng.gen_range(1..=17);
                (i, Rational::new(n.into(), d.into()))
            })
            .collect();
        let s: Vec<MPoly> = c
            .iter()
            .map(|p| p.specialize(&vals, &out))
            .collect::<Result<_>>()?;
        if let Some(g) = gcd_many(&s)? {
            if !g.is_constant() {
                hits += 1;
            }
        }
    }
    Ok(hits == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SymbolTable;
    use crate::parse::parse_poly;

    #[test]
    fn numeric_full_reduction() {
        let t = SymbolTable::geometric();
        let p = |s: &str| parse_poly(s, &t).unwrap();
        let (c, f) = reduce_triple(
            [p("x*(x+y)*y"), p("x*(x+y)*z"), p("0")],
            Depth::Full,
        )
        .unwrap();
        assert_eq!(f, p("x^2 + x*y"));
        assert_eq!(c[0], p("y"));
    }

    #[test]
    fn parametric_hidden_factor_detected() {
        let t = SymbolTable::standard();
        let p = |s: &str| parse_poly(s, &t).unwrap();
        let c = [p("(x + a*y)*y"), p("(x + a*y)*z"), p("0")];
        assert_eq!(
            reduce_triple(c.clone(), Depth::Full).unwrap_err(),
            Error::NonMonomialParametricReduction
        );
        assert!(reduce_triple(c, Depth::MonomialOnly).is_ok());
    }
}
