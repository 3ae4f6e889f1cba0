//! Singular points with rational coordinates and the radial criterion.

use num_traits::{One, Zero};

use super::core::Foliation;
use crate::dforms::chart;
use crate::error::{Error, Result};
use crate::exactalg::univariate::UniPoly;
use crate::exactalg::{gcd_many, resultant, MPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularSet {
    /// Normalized so the last nonzero coordinate is one.
    pub points: Vec<[Rational; 3]>,
    /// True when every singular point is guaranteed to be listed.
    pub complete: bool,
}

fn normalize(p: [Rational; 3]) -> [Rational; 3] {
    let k = (0..3).rev().find(|&i| !p[i].is_zero()).expect("nonzero point");
    let s = p[k].clone();
    p.map(|c| c / &s)
}

fn uni(p: &MPoly, var: usize) -> UniPoly {
    UniPoly::from_mpoly(p, var).expect("univariate")
}

/// Singular points of a numeric foliation. Errors when the singular set is
/// positive dimensional.
pub fn singular_points(f: &Foliation) -> Result<SingularSet> {
    let w = f.form();
    for p in w.components() {
        p.require_numeric()?;
    }
    let one = Rational::one();
    let zero = Rational::zero();
    let (x, y, z) = (0usize, 1usize, 2usize);
    let c = w.components();
    let mut points = Vec::new();
    let mut complete = true;

    // Chart z = 1.
    let aff: Vec<MPoly> = c
        .iter()
        .map(|p| p.eval_var(z, &one))
        .filter(|p| !p.is_zero())
        .collect();
    if let Some(g) = gcd_many(&aff)? {
        if !g.is_constant() {
            return Err(Error::PositiveDimensional);
        }
    }
    let mut e: Option<UniPoly> = None;
    let mut informative = false;
    for i in 0..aff.len() {
        for j in i..aff.len() {
            let r = if i == j {
                if aff[i].contains_var(y) {
                    continue;
                }
                aff[i].clone()
            } else if aff[i].contains_var(y) && aff[j].contains_var(y) {
                resultant(&aff[i], &aff[j], y)?
            } else {
                continue;
            };
            if r.is_zero() {
                continue;
            }
            informative = true;
            let u = uni(&r, x);
            e = Some(match e {
                None => u.monic(),
                Some(acc) => acc.gcd(&u),
            });
        }
    }
    if !informative && aff.iter().any(|p| !p.is_constant()) {
        return Err(Error::DegenerateResultant);
    }
    if let Some(e) = e {
        if e.degree().unwrap_or(0) > 0 {
            let (roots, splits) = e.rational_roots();
            complete &= splits;
            for (x0, _) in roots {
                let mut g: Option<UniPoly> = None;
                for p in &aff {
                    let q = uni(&p.eval_var(x, &x0), y);
                    if q.is_zero() {
                        continue;
                    }
                    g = Some(match g {
                        None => q.monic(),
                        Some(h) => h.gcd(&q),
                    });
                }
                let Some(g) = g else {
                    return Err(Error::PositiveDimensional);
                };
                if g.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let (ys, splits) = g.rational_roots();
                complete &= splits;
                for (y0, _) in ys {
                    points.push([x0.clone(), y0, one.clone()]);
                }
            }
        }
    }

    // Line at infinity: points (x : 1 : 0), then (1 : 0 : 0).
    let inf: Vec<UniPoly> = c
        .iter()
        .map(|p| uni(&p.eval_var(z, &zero).eval_var(y, &one), x))
        .collect();
    let mut g: Option<UniPoly> = None;
    for q in inf.iter().filter(|q| !q.is_zero()) {
        g = Some(match g {
            None => q.monic(),
            Some(h) => h.gcd(q),
        });
    }
    match g {
        None => return Err(Error::PositiveDimensional),
        Some(g) => {
            if g.degree().unwrap_or(0) > 0 {
                let (xs, splits) = g.rational_roots();
                complete &= splits;
                for (x0, _) in xs {
                    points.push(normalize([x0, one.clone(), zero.clone()]));
                }
            }
        }
    }
    let corner = [one.clone(), zero.clone(), zero.clone()];
    if c.iter().all(|p| p.evaluate(&corner).is_zero()) {
        points.push(corner);
    }
    let points: Vec<[Rational; 3]> = points.into_iter().map(normalize).collect();
    Ok(SingularSet { points, complete })
}

/// Shape of the linear part of the dual vector field at a singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetClass {
    /// Nonzero multiple of the identity.
    Radial,
    /// Vanishing linear part.
    ZeroJet,
    Other,
}

/// Classify the linear part at `p`. Errors if `p` is not singular.
pub fn jet_class(f: &Foliation, p: &[Rational; 3]) -> Result<JetClass> {
    let w = f.form();
    for c in w.components() {
        c.require_numeric()?;
    }
    if !w.components().iter().all(|c| c.evaluate(p).is_zero()) {
        return Err(Error::NotSingular);
    }
    let k = (0..3).rev().find(|&i| !p[i].is_zero()).ok_or(Error::NotSingular)?;
    let q: Vec<Rational> = p.iter().map(|c| c / &p[k]).collect();
    let ([u, v], [a, b]) = chart(w, k);
    let t = w.table();
    // translate (u, v) -> (u + u0, v + v0)
    let mut subs: Vec<Option<MPoly>> = vec![None; t.len()];
    for &i in &[u, v] {
        subs[i] = Some(&MPoly::var_index(t, i) + &MPoly::constant(t, q[i].clone()));
    }
    let a = a.substitute(&subs, t)?;
    let b = b.substitute(&subs, t)?;
    let origin: Vec<Rational> = vec![Rational::zero(); t.len()];
    let d = |f: &MPoly, i: usize| f.partial(i).evaluate(&origin);
    // dual field b d/du - a d/dv
    let m = [[d(&b, u), d(&b, v)], [-d(&a, u), -d(&a, v)]];
    if m.iter().flatten().all(|c| c.is_zero()) {
        return Ok(JetClass::ZeroJet);
    }
    if m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1] {
        return Ok(JetClass::Radial);
    }
    Ok(JetClass::Other)
}

pub fn is_radial_at(f: &Foliation, p: &[Rational; 3]) -> Result<bool> {
    Ok(jet_class(f, p)? == JetClass::Radial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dforms::Proj1Form;
    use crate::exactalg::{int, SymbolTable};
    use crate::foliation::from_form;
    use crate::parse::parse_form_literal;

    fn fol(s: &str) -> Foliation {
        let t = SymbolTable::geometric();
        from_form(&Proj1Form::new(parse_form_literal(s, &t).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn radial_pencil_has_one_radial_point() {
        // lines through the origin: x dy - y dx = [-y z, x z, 0]
        let f = fol("[-y*z, x*z, 0]");
        let s = singular_points(&f).unwrap();
        assert!(s.complete);
        assert_eq!(s.points, vec![[int(0), int(0), int(1)]]);
        assert!(is_radial_at(&f, &s.points[0]).unwrap());
    }

    #[test]
    fn saddle_is_not_radial() {
        // x dy + y dx: dual field x d/dx - y d/dy
        let f = fol("[y*z, x*z, -2*x*y]");
        let o = [int(0), int(0), int(1)];
        assert_eq!(jet_class(&f, &o).unwrap(), JetClass::Other);
        assert_eq!(is_radial_at(&f, &[int(1), int(1), int(1)]).unwrap_err(), Error::NotSingular);
    }
}
