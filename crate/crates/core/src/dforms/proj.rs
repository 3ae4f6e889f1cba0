use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Homogeneity, MPoly, Monomial, Rational, Table};

/// `A dX + B dY + C dZ` with homogeneous coefficients of a common degree
/// satisfying `X*A + Y*B + Z*C = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proj1Form {
    c: [MPoly; 3],
    degree: u32,
}

/// Components on `dY^dZ`, `dZ^dX`, `dX^dY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proj2Form {
    pub c: [MPoly; 3],
}

/// `x*A + y*B + z*C` for an arbitrary coefficient triple.
pub fn euler_contract(c: &[MPoly; 3]) -> MPoly {
    let t = c[0].table();
    let mut s = MPoly::zero(t);
    for (i, ci) in c.iter().enumerate() {
        s.add_assign(&(&MPoly::var_index(t, i) * ci));
    }
    s
}

/// Coordinate wedge of two coefficient triples, no checks.
pub fn wedge_triples(a: &[MPoly; 3], b: &[MPoly; 3]) -> [MPoly; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

impl Proj1Form {
    pub fn new(c: [MPoly; 3]) -> Result<Self> {
        let t = c[0].table().clone();
        for ci in &c[1..] {
            if !crate::exactalg::symbols::same_table(ci.table(), &t) {
                return Err(Error::TableMismatch);
            }
        }
        let mut degree = None;
        for ci in &c {
            match ci.homogeneous_degree() {
                Homogeneity::Zero => {}
                Homogeneity::NotHomogeneous => return Err(Error::NotHomogeneous),
                Homogeneity::Degree(d) => match degree {
                    None => degree = Some(d),
                    Some(e) if e == d => {}
                    Some(_) => return Err(Error::NotHomogeneous),
                },
            }
        }
        let degree = degree.ok_or(Error::ZeroForm)?;
        let e = euler_contract(&c);
        if !e.is_zero() {
            return Err(Error::EulerViolation(e.to_string()));
        }
        Ok(Proj1Form { c, degree })
    }

    pub fn components(&self) -> &[MPoly; 3] {
        &self.c
    }

    pub fn into_components(self) -> [MPoly; 3] {
        self.c
    }

    /// Common degree of the coefficients.
    pub fn coeff_degree(&self) -> u32 {
        self.degree
    }

    pub fn table(&self) -> &Table {
        self.c[0].table()
    }

    pub fn is_numeric(&self) -> bool {
        self.c.iter().all(|p| p.is_numeric())
    }

    pub fn scale(&self, s: &Rational) -> Result<Proj1Form> {
        Proj1Form::new(self.c.clone().map(|p| p.scale(s)))
    }

    /// Common monomial (in the geometric variables) of the nonzero components.
    pub fn content_monomial(&self) -> Monomial {
        let mut m: Option<Monomial> = None;
        for p in self.c.iter().filter(|p| !p.is_zero()) {
            let cm = p.content_monomial().expect("nonzero");
            m = Some(match m {
                None => cm,
                Some(g) => g.gcd(&cm),
            });
        }
        m.expect("nonzero form")
    }

    pub fn div_monomial(&self, m: &Monomial) -> Result<Proj1Form> {
        let mut out = Vec::with_capacity(3);
        for p in &self.c {
            out.push(p.div_monomial(m).ok_or(Error::NotHomogeneous)?);
        }
        Proj1Form::new(out.try_into().expect("three"))
    }

    /// Divide every component exactly by `d`.
    pub fn div_exact(&self, d: &MPoly) -> Result<Option<Proj1Form>> {
        let mut out = Vec::with_capacity(3);
        for p in &self.c {
            match p.trial_divide(d)? {
                Some(q) => out.push(q),
                None => return Ok(None),
            }
        }
        Proj1Form::new(out.try_into().expect("three")).map(Some)
    }

    pub fn specialize(&self, values: &[(usize, Rational)], out: &Table) -> Result<Proj1Form> {
        let mut v = Vec::with_capacity(3);
        for p in &self.c {
            v.push(p.specialize(values, out)?);
        }
        Proj1Form::new(v.try_into().expect("three"))
    }

    pub fn embed(&self, t: &Table) -> Result<Proj1Form> {
        let mut v = Vec::with_capacity(3);
        for p in &self.c {
            v.push(p.embed(t)?);
        }
        Proj1Form::new(v.try_into().expect("three"))
    }

    /// Same foliation up to a nonzero constant factor.
    pub fn proportional(&self, o: &Proj1Form) -> bool {
        let Some(i) = (0..3).find(|&i| !self.c[i].is_zero()) else {
            return false;
        };
        let (m, a) = self.c[i].leading().expect("nonzero");
        let b = o.c[i].coeff(m);
        if num_traits::Zero::is_zero(&b) {
            return false;
        }
        let s = b / a;
        (0..3).all(|j| self.c[j].scale(&s) == o.c[j])
    }
}

impl fmt::Display for Proj1Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.c[0], self.c[1], self.c[2])
    }
}

impl Proj2Form {
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|p| p.is_zero())
    }
}

impl fmt::Display for Proj2Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "ZERO");
        }
        write!(f, "[{}, {}, {}]", self.c[0], self.c[1], self.c[2])
    }
}

/// Wedge product of two projective 1-forms.
pub fn wedge11(a: &Proj1Form, b: &Proj1Form) -> Result<Proj2Form> {
    if !crate::exactalg::symbols::same_table(a.table(), b.table()) {
        return Err(Error::TableMismatch);
    }
    Ok(Proj2Form {
        c: wedge_triples(&a.c, &b.c),
    })
}

/// Homogenize the affine polynomial form `a dx + b dy` (chart `z = 1`):
/// `(z*A_h, z*B_h, -(x*A_h + y*B_h))` with the common power of `z` removed.
pub fn homogenize(a: &MPoly, b: &MPoly) -> Result<Proj1Form> {
    let t = a.table().clone();
    if !crate::exactalg::symbols::same_table(b.table(), &t) {
        return Err(Error::TableMismatch);
    }
    if a.contains_var(2) || b.contains_var(2) {
        return Err(Error::NotAffine);
    }
    let n = match (a.geometric_degree(), b.geometric_degree()) {
        (None, None) => return Err(Error::ZeroForm),
        (d, e) => d.unwrap_or(0).max(e.unwrap_or(0)),
    };
    let ah = a.homogenize(2, n)?;
    let bh = b.homogenize(2, n)?;
    let (x, y, z) = (
        MPoly::var_index(&t, 0),
        MPoly::var_index(&t, 1),
        MPoly::var_index(&t, 2),
    );
    let c = [&z * &ah, &z * &bh, -(&(&x * &ah) + &(&y * &bh))];
    let zmin = c
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.content_monomial().expect("nonzero").exp(2))
        .min()
        .unwrap_or(0);
    let f = Proj1Form::new(c)?;
    f.div_monomial(&Monomial::var(t.len(), 2, zmin))
}

/// Restriction to the chart `var = 1`: the remaining two geometric
/// variables `(u, v)` and the coefficients of `du`, `dv`.
pub fn chart(form: &Proj1Form, var: usize) -> ([usize; 2], [MPoly; 2]) {
    let one = num_traits::One::one();
    let uv: Vec<usize> = (0..3).filter(|&i| i != var).collect();
    let c = form.components();
    (
        [uv[0], uv[1]],
        [c[uv[0]].eval_var(var, &one), c[uv[1]].eval_var(var, &one)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SymbolTable;
    use crate::parse::{parse_form_literal, parse_poly};

    fn g() -> Table {
        SymbolTable::geometric()
    }

    fn form(s: &str) -> Proj1Form {
        Proj1Form::new(parse_form_literal(s, &g()).unwrap()).unwrap()
    }

    #[test]
    fn euler_enforced() {
        assert!(matches!(
            Proj1Form::new(parse_form_literal("[x, y, z]", &g()).unwrap()),
            Err(Error::EulerViolation(_))
        ));
        assert!(matches!(
            Proj1Form::new(parse_form_literal("[0, 0, 0]", &g()).unwrap()),
            Err(Error::ZeroForm)
        ));
    }

    #[test]
    fn self_wedge_vanishes() {
        let w = form("[y*z, -2*x*z, x*y]");
        assert!(wedge11(&w, &w).unwrap().is_zero());
    }

    #[test]
    fn homogenizes_affine_form() {
        // (x^2 - y^3) dx + x y^2 dy  ->  [x^2 z - y^3, x y^2, -x^3]
        let a = parse_poly("x^2 - y^3", &g()).unwrap();
        let b = parse_poly("x*y^2", &g()).unwrap();
        let f = homogenize(&a, &b).unwrap();
        assert_eq!(f.to_string(), "[x^2*z - y^3, x*y^2, -x^3]");
    }
}
