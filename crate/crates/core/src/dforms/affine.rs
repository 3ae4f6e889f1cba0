use std::fmt;

use super::ratfn::RationalFn;
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Table};

/// `a dx + b dy` on the chart `z = 1`, rational coefficients in `x`, `y`
/// (and possibly parameters).
#[derive(Debug, Clone)]
pub struct Aff1Form {
    pub a: RationalFn,
    pub b: RationalFn,
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

impl Aff1Form {
    pub fn new(a: RationalFn, b: RationalFn) -> Result<Self> {
        if !crate::exactalg::symbols::same_table(a.table(), b.table()) {
            return Err(Error::TableMismatch);
        }
        for f in [&a, &b] {
            if f.num().contains_var(Z) || f.den().contains_var(Z) {
                return Err(Error::NotAffine);
            }
        }
        Ok(Aff1Form { a, b })
    }

    pub fn from_polys(a: MPoly, b: MPoly) -> Result<Self> {
        Self::new(RationalFn::poly(a), RationalFn::poly(b))
    }

    pub fn table(&self) -> &Table {
        self.a.table()
    }

    /// Coefficient of `dx ^ dy` in the exterior derivative.
    pub fn d(&self) -> RationalFn {
        self.b.partial(X).sub(&self.a.partial(Y))
    }

    /// Coefficient of `dx ^ dy` in `self ^ other`.
    pub fn wedge(&self, o: &Aff1Form) -> RationalFn {
        self.a.mul(&o.b).sub(&self.b.mul(&o.a))
    }

    pub fn is_closed(&self) -> bool {
        self.d().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale_by(&self, f: &RationalFn) -> Aff1Form {
        Aff1Form {
            a: self.a.mul(f),
            b: self.b.mul(f),
        }
    }
}

impl fmt::Display for Aff1Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.a, self.b)
    }
}

fn rf_eq(a: &RationalFn, b: &RationalFn) -> bool {
    a.equals(b)
}

/// `d theta0 = theta0 ^ theta1`, `d theta1 = theta0 ^ theta2`,
/// `d theta2 = theta1 ^ theta2`.
pub fn sl2_triplet_check(t0: &Aff1Form, t1: &Aff1Form, t2: &Aff1Form) -> bool {
    rf_eq(&t0.d(), &t0.wedge(t1)) && rf_eq(&t1.d(), &t0.wedge(t2)) && rf_eq(&t2.d(), &t1.wedge(t2))
}

/// Triplet of the Riccati foliation `dy - (a y^2 + b y + c) dx` with
/// `a, b, c` functions of `x`:
/// `theta1 = -(2 a y + b) dx`, `theta2 = -2 a dx`.
pub fn riccati_triplet(a: &RationalFn, b: &RationalFn, c: &RationalFn) -> Result<[Aff1Form; 3]> {
    let t = a.table().clone();
    for f in [a, b, c] {
        if f.num().contains_var(Y) || f.den().contains_var(Y) {
            return Err(Error::NotAffine);
        }
    }
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::ZeroForm);
    }
    let y = RationalFn::poly(MPoly::var_index(&t, Y));
    let two = RationalFn::constant(&t, crate::exactalg::int(2));
    let zero = RationalFn::zero(&t);
    let one = RationalFn::constant(&t, crate::exactalg::int(1));
    let r = a.mul(&y).mul(&y).add(&b.mul(&y)).add(c);
    let t0 = Aff1Form::new(r.neg(), one)?;
    let t1 = Aff1Form::new(two.mul(a).mul(&y).add(b).neg(), zero.clone())?;
    let t2 = Aff1Form::new(two.mul(a).neg(), zero)?;
    Ok([t0, t1, t2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SymbolTable;
    use crate::parse::{parse_affine_literal, parse_poly};

    fn g() -> Table {
        SymbolTable::geometric()
    }

    fn aff(s: &str) -> Aff1Form {
        let [(an, ad), (bn, bd)] = parse_affine_literal(s, &g()).unwrap();
        Aff1Form::new(RationalFn::new(an, ad).unwrap(), RationalFn::new(bn, bd).unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert!(aff("{(1) / (x*(1+x)), -1 / (y*(1+y))}").is_closed());
        assert!(!aff("{y, 0}").is_closed());
    }

    #[test]
    fn riccati_example() {
        let t = g();
        let one = RationalFn::constant(&t, crate::exactalg::int(1));
        let zero = RationalFn::zero(&t);
        let [t0, t1, t2] = riccati_triplet(&one, &zero, &zero).unwrap();
        assert!(t0.b.equals(&one));
        assert!(t0.a.equals(&RationalFn::poly(parse_poly("-y^2", &t).unwrap())));
        assert!(t1.a.equals(&RationalFn::poly(parse_poly("-2*y", &t).unwrap())));
        assert!(t2.a.equals(&RationalFn::poly(parse_poly("-2", &t).unwrap())));
        assert!(sl2_triplet_check(&t0, &t1, &t2));
    }

    #[test]
    fn chart_variable_rejected() {
        let p = RationalFn::poly(parse_poly("z", &g()).unwrap());
        assert_eq!(Aff1Form::new(p.clone(), p).unwrap_err(), Error::NotAffine);
    }
}
