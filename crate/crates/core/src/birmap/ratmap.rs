use std::fmt;

use crate::dforms::Proj1Form;
use crate::error::{Error, Result};
use crate::exactalg::{Homogeneity, MPoly, Rational, Table};
use crate::reduce::{reduce_triple, Depth};

/// Where the pullback of a reduced form can acquire a common factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exceptional {
    /// Automorphism: no factor ever appears.
    Empty,
    /// Only monomials in the coordinates can appear.
    CoordinateLines,
    /// Anything; a full gcd is needed.
    General,
}

/// Rational self-map `(P0 : P1 : P2)` of the projective plane, components
/// homogeneous of a common degree without common factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMap {
    c: [MPoly; 3],
    degree: u32,
    exceptional: Exceptional,
}

fn common_degree(c: &[MPoly; 3]) -> Result<u32> {
    let mut d = None;
    for p in c {
        match p.homogeneous_degree() {
            Homogeneity::Zero => {}
            Homogeneity::NotHomogeneous => return Err(Error::BadMapDegree),
            Homogeneity::Degree(e) => match d {
                None => d = Some(e),
                Some(f) if f == e => {}
                Some(_) => return Err(Error::BadMapDegree),
            },
        }
    }
    d.ok_or(Error::ZeroMap)
}

impl RatMap {
    /// Reduce and validate. Parametric components are only reduced by
    /// their monomial content, after a generic probe for hidden factors.
    pub fn new(c: [MPoly; 3]) -> Result<Self> {
        let t = c[0].table().clone();
        if c.iter().any(|p| !crate::exactalg::symbols::same_table(p.table(), &t)) {
            return Err(Error::TableMismatch);
        }
        common_degree(&c)?;
        let (c, _) = reduce_triple(c, Depth::Full).map_err(|e| match e {
            Error::ZeroForm => Error::ZeroMap,
            other => other,
        })?;
        let degree = common_degree(&c)?;
        if degree == 0 {
            return Err(Error::BadMapDegree);
        }
        let exceptional = if degree == 1 {
            Exceptional::Empty
        } else {
            Exceptional::General
        };
        Ok(RatMap {
            c,
            degree,
            exceptional,
        })
    }

    /// Linear map `v -> M v`; `M` must be invertible.
    pub fn linear(m: [[Rational; 3]; 3], table: &Table) -> Result<Self> {
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        if num_traits::Zero::is_zero(&det) {
            return Err(Error::SingularMatrix);
        }
        let c = m.map(|row| {
            let mut p = MPoly::zero(table);
            for (j, a) in row.iter().enumerate() {
                p.add_assign(&MPoly::var_index(table, j).scale(a));
            }
            p
        });
        RatMap::new(c)
    }

    pub(crate) fn with_exceptional(mut self, e: Exceptional) -> Self {
        self.exceptional = e;
        self
    }

    pub fn components(&self) -> &[MPoly; 3] {
        &self.c
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exceptional(&self) -> Exceptional {
        self.exceptional
    }

    pub fn table(&self) -> &Table {
        self.c[0].table()
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn embed(&self, t: &Table) -> Result<RatMap> {
        let mut v = Vec::with_capacity(3);
        for p in &self.c {
            v.push(p.embed(t)?);
        }
        Ok(RatMap {
            c: v.try_into().expect("three"),
            degree: self.degree,
            exceptional: self.exceptional,
        })
    }

    fn substitution(&self) -> Vec<Option<MPoly>> {
        let t = self.table();
        let mut s = vec![None; t.len()];
        for (i, p) in self.c.iter().enumerate() {
            s[i] = Some(p.clone());
        }
        s
    }

    /// `p(P0, P1, P2)`.
    pub fn apply_to(&self, p: &MPoly) -> Result<MPoly> {
        if !crate::exactalg::symbols::same_table(p.table(), self.table()) {
            return Err(Error::TableMismatch);
        }
        p.substitute(&self.substitution(), self.table())
    }

    /// Projective equality: components proportional by a nonzero constant.
    pub fn projectively_equal(&self, o: &RatMap) -> bool {
        if self.degree != o.degree {
            return false;
        }
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

    pub fn is_identity(&self) -> bool {
        let t = self.table();
        let id = RatMap {
            c: [0, 1, 2].map(|i| MPoly::var_index(t, i)),
            degree: 1,
            exceptional: Exceptional::Empty,
        };
        self.projectively_equal(&id)
    }
}

impl fmt::Display for RatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.c[0], self.c[1], self.c[2])
    }
}

/// `phi o psi` (apply `psi` first), reduced.
pub fn compose_reduce(phi: &RatMap, psi: &RatMap) -> Result<RatMap> {
    if !crate::exactalg::symbols::same_table(phi.table(), psi.table()) {
        return Err(Error::TableMismatch);
    }
    let s = psi.substitution();
    let mut c = Vec::with_capacity(3);
    for p in &phi.c {
        c.push(p.substitute(&s, psi.table())?);
    }
    let c: [MPoly; 3] = c.try_into().expect("three");
    let depth = if phi.is_linear() || psi.is_linear() {
        Depth::MonomialOnly
    } else {
        Depth::Full
    };
    let (c, _) = reduce_triple(c, depth)?;
    let degree = common_degree(&c)?;
    // A linear outer map keeps the exceptional locus of the inner one.
    let exceptional = match phi.exceptional {
        Exceptional::Empty => psi.exceptional,
        _ => Exceptional::General,
    };
    Ok(RatMap {
        c,
        degree,
        exceptional,
    })
}

/// Coefficients of `phi^*` applied to an arbitrary triple:
/// component `i` is `sum_j w_j(phi) * d phi_j / d x_i`.
pub fn pullback_triple(phi: &RatMap, w: &[MPoly; 3]) -> Result<[MPoly; 3]> {
    for p in w {
        if !crate::exactalg::symbols::same_table(p.table(), phi.table()) {
            return Err(Error::TableMismatch);
        }
    }
    let s = phi.substitution();
    let t = phi.table();
    let wphi: Vec<MPoly> = w
        .iter()
        .map(|p| p.substitute(&s, t))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let mut acc = MPoly::zero(t);
        for (j, wj) in wphi.iter().enumerate() {
            if wj.is_zero() {
                continue;
            }
            let d = phi.c[j].partial(i);
            if !d.is_zero() {
                acc.add_assign(&(wj * &d));
            }
        }
        out.push(acc);
    }
    Ok(out.try_into().expect("three"))
}

/// Unreduced pullback of a projective 1-form.
pub fn pullback_raw(phi: &RatMap, w: &Proj1Form) -> Result<Proj1Form> {
    Proj1Form::new(pullback_triple(phi, w.components())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, SymbolTable};
    use crate::parse::{parse_form_literal, parse_map_literal};

    fn g() -> Table {
        SymbolTable::geometric()
    }

    fn map(s: &str) -> RatMap {
        RatMap::new(parse_map_literal(s, &g()).unwrap()).unwrap()
    }

    #[test]
    fn construction_validates() {
        let bad = parse_map_literal("(x : y^2 : z)", &g()).unwrap();
        assert_eq!(RatMap::new(bad).unwrap_err(), Error::BadMapDegree);
        let zero = parse_map_literal("(0 : 0 : 0)", &g()).unwrap();
        assert_eq!(RatMap::new(zero).unwrap_err(), Error::ZeroMap);
        // common factor x is removed
        assert_eq!(map("(x^2 : x*y : x*z)").degree(), 1);
        let m = [[int(1), int(2), int(3)], [int(2), int(4), int(6)], [int(0), int(0), int(1)]];
        assert_eq!(RatMap::linear(m, &g()).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn sigma_is_an_involution() {
        let s = map("(y*z : x*z : x*y)");
        assert!(compose_reduce(&s, &s).unwrap().is_identity());
    }

    #[test]
    fn composition_order() {
        // phi o psi substitutes psi into phi
        let phi = map("(x^2 : x*y : y*z)");
        let psi = map("(y : x : z)");
        assert_eq!(compose_reduce(&phi, &psi).unwrap(), map("(y^2 : x*y : x*z)"));
    }

    #[test]
    fn sigma_pullback_of_eta() {
        let s = map("(y*z : x*z : x*y)");
        let eta = Proj1Form::new(
            parse_form_literal("[y*z*(y+z), -x*z*(x+z), x*y*(x-y)]", &g()).unwrap(),
        )
        .unwrap();
        let p = pullback_raw(&s, &eta).unwrap();
        let m = p.content_monomial();
        assert_eq!(m.exps(), &[2, 2, 2]);
        let reduced = p.div_monomial(&m).unwrap();
        let expected = parse_form_literal("[-(y+z), x+z, x-y]", &g()).unwrap();
        assert_eq!(reduced.components(), &expected);
    }
}
