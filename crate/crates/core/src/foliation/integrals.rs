//! Invariant curves and first integrals.

use num_traits::One;

use super::core::Foliation;
use crate::dforms::RationalFn;
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Rational};

/// `C = 0` is invariant: `C` divides every component of `omega ^ dC`.
pub fn curve_invariant(f: &Foliation, c: &MPoly) -> Result<bool> {
    if c.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let w = f.form().components();
    let dc = [c.partial(0), c.partial(1), c.partial(2)];
    let wedge = crate::dforms::wedge_triples(w, &dc);
    for p in &wedge {
        if p.trial_divide(c)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn affine(f: &Foliation) -> (MPoly, MPoly) {
    let one = Rational::one();
    let c = f.form().components();
    (c[0].eval_var(2, &one), c[1].eval_var(2, &one))
}

fn dehomogenize(h: &RationalFn) -> Result<RationalFn> {
    let one = Rational::one();
    RationalFn::new(h.num().eval_var(2, &one), h.den().eval_var(2, &one))
}

/// `dH ^ omega = 0` on the chart `z = 1`.
pub fn rational_first_integral_check(f: &Foliation, h: &RationalFn) -> Result<bool> {
    let h = dehomogenize(h)?;
    let (hx, hy) = (h.partial(0), h.partial(1));
    if hx.is_zero() && hy.is_zero() {
        return Err(Error::ConstantFunction);
    }
    let (a, b) = affine(f);
    let (a, b) = (RationalFn::poly(a), RationalFn::poly(b));
    Ok(hx.mul(&b).sub(&hy.mul(&a)).is_zero())
}

/// `R exp(S)` is a first integral: `(dR + R dS) ^ omega = 0`. A constant
/// candidate (`dR + R dS = 0`) is rejected with `false`.
pub fn darboux_first_integral_check(f: &Foliation, r: &RationalFn, s: &RationalFn) -> Result<bool> {
    let r = dehomogenize(r)?;
    let s = dehomogenize(s)?;
    if r.is_zero() {
        return Err(Error::ConstantFunction);
    }
    let u = r.partial(0).add(&r.mul(&s.partial(0)));
    let v = r.partial(1).add(&r.mul(&s.partial(1)));
    if u.is_zero() && v.is_zero() {
        return Ok(false);
    }
    let (a, b) = affine(f);
    let (a, b) = (RationalFn::poly(a), RationalFn::poly(b));
    Ok(u.mul(&b).sub(&v.mul(&a)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dforms::Proj1Form;
    use crate::exactalg::SymbolTable;
    use crate::foliation::from_form;
    use crate::parse::{parse_form_literal, parse_poly};

    fn fol(s: &str) -> Foliation {
        let t = SymbolTable::geometric();
        from_form(&Proj1Form::new(parse_form_literal(s, &t).unwrap()).unwrap()).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFn {
        let t = SymbolTable::geometric();
        RationalFn::new(parse_poly(n, &t).unwrap(), parse_poly(d, &t).unwrap()).unwrap()
    }

    #[test]
    fn pencil_of_lines() {
        let f = fol("[-y*z, x*z, 0]");
        assert!(rational_first_integral_check(&f, &rf("y", "x")).unwrap());
        assert!(!rational_first_integral_check(&f, &rf("x + y", "1")).unwrap());
        assert!(curve_invariant(&f, &parse_poly("x", &SymbolTable::geometric()).unwrap()).unwrap());
        assert!(!curve_invariant(&f, &parse_poly("x + z", &SymbolTable::geometric()).unwrap()).unwrap());
    }

    #[test]
    fn darboux_agrees_with_rational_check() {
        let f = fol("[-y*z, x*z, 0]");
        let zero = rf("0", "1");
        assert!(darboux_first_integral_check(&f, &rf("y", "x"), &zero).unwrap());
        assert!(!darboux_first_integral_check(&f, &rf("1", "1"), &zero).unwrap());
        assert!(rational_first_integral_check(&f, &rf("3", "1")).is_err());
    }
}
