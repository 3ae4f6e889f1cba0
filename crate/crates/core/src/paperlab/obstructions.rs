//! Parameter conditions for divisibility and invariance of pullbacks.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::families::ParamForm;
use crate::birmap::{pullback_triple, RatMap};
use crate::dforms::wedge_triples;
use crate::error::{Error, Result};
use crate::exactalg::linalg::{nullspace, rref, same_row_space, Matrix};
use crate::exactalg::{MPoly, Monomial, Rational, Table};

/// Nonzero parameter polynomials, each normalized to leading coefficient
/// one, deduplicated and kept in a fixed order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ObstructionSet {
    polys: BTreeMap<String, MPoly>,
}

impl ObstructionSet {
    pub fn from_polys(it: impl IntoIterator<Item = MPoly>) -> Self {
        let mut polys = BTreeMap::new();
        for p in it {
            if p.is_zero() {
                continue;
            }
            let m = p.monic();
            polys.insert(m.to_string(), m);
        }
        ObstructionSet { polys }
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> impl Iterator<Item = &MPoly> {
        self.polys.values()
    }

    /// Parameter indices occurring in the set, in table order.
    pub fn params(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.polys.values().flat_map(|p| p.vars_present()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Rows of coefficients over `params` followed by the constant term.
    /// Errors on a member of degree above one.
    pub fn linear_matrix(&self, params: &[usize]) -> Result<Matrix> {
        let mut rows = Vec::with_capacity(self.len());
        for p in self.polys.values() {
            if p.total_degree().unwrap_or(0) > 1 {
                return Err(Error::NonLinear(p.to_string()));
            }
            let mut row = vec![Rational::zero(); params.len() + 1];
            for (m, c) in p.terms() {
                if m.is_one() {
                    row[params.len()] = c.clone();
                    continue;
                }
                let i = (0..m.len()).find(|&i| m.exp(i) > 0).expect("nonconstant");
                let k = params
                    .iter()
                    .position(|&q| q == i)
                    .ok_or_else(|| Error::UnknownSymbol(p.table().name(i).to_string()))?;
                row[k] = c.clone();
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// Every member vanishes at the point.
    pub fn vanishes_at(&self, point: &[Rational]) -> bool {
        self.polys.values().all(|p| p.evaluate(point).is_zero())
    }
}

impl fmt::Display for ObstructionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<&str> = self.polys.keys().map(|s| s.as_str()).collect();
        write!(f, "{{{}}}", v.join(", "))
    }
}

/// Parameter coefficients of each geometric monomial rejected by `keep`.
fn coefficient_conditions(c: &[MPoly; 3], keep: impl Fn(&Monomial) -> bool) -> ObstructionSet {
    let mut out = Vec::new();
    for p in c {
        for (m, coef) in p.collect_geometric() {
            if !keep(&m) {
                out.push(coef);
            }
        }
    }
    ObstructionSet::from_polys(out)
}

fn raw_pullback(phi: &RatMap, w: &ParamForm) -> Result<[MPoly; 3]> {
    let phi = phi.embed(w.table())?;
    pullback_triple(&phi, w.components())
}

/// Conditions for the monomial `m` to divide every component of `phi^* w`.
pub fn monomial_div_obstructions(phi: &RatMap, w: &ParamForm, m: &Monomial) -> Result<ObstructionSet> {
    let raw = raw_pullback(phi, w)?;
    Ok(coefficient_conditions(&raw, |g| m.divides(g)))
}

/// Conditions for `d` to divide every component of `phi^* w`: the
/// coefficients of the remainders modulo `d`. The leading geometric
/// coefficient of `d` must be a constant.
pub fn remainder_obstructions(phi: &RatMap, w: &ParamForm, d: &MPoly) -> Result<ObstructionSet> {
    let raw = raw_pullback(phi, w)?;
    let d = d.embed(w.table())?;
    let mut rem = Vec::with_capacity(3);
    for p in &raw {
        rem.push(p.div_rem_geometric(&d)?.1);
    }
    let rem: [MPoly; 3] = rem.try_into().expect("three");
    Ok(coefficient_conditions(&rem, |_| false))
}

/// Conditions for `phi^* w ^ w = 0`, i.e. `phi^* F = F`.
pub fn invariance_obstructions(phi: &RatMap, w: &ParamForm) -> Result<ObstructionSet> {
    let raw = raw_pullback(phi, w)?;
    let wedge = wedge_triples(&raw, w.components());
    Ok(coefficient_conditions(&wedge, |_| false))
}

/// Equality of the rational linear spans of two sets of linear
/// polynomials.
pub fn span_equal(a: &ObstructionSet, b: &ObstructionSet) -> Result<bool> {
    let mut params = a.params();
    params.extend(b.params());
    params.sort_unstable();
    params.dedup();
    let ma = a.linear_matrix(&params)?;
    let mb = b.linear_matrix(&params)?;
    Ok(same_row_space(&ma, &mb))
}

/// Solve a set of linear conditions: the returned substitution expresses
/// each pivot parameter through the remaining ones. Pivots are chosen in
/// table order.
pub fn solve_linear(set: &ObstructionSet, table: &Table) -> Result<Vec<Option<MPoly>>> {
    let params = set.params();
    let mut m = set.linear_matrix(&params)?;
    let pivots = rref(&mut m);
    let n = params.len();
    if pivots.contains(&n) {
        return Err(Error::Binding("inconsistent linear conditions".to_string()));
    }
    let mut subs = vec![None; table.len()];
    for (row, &pc) in m.iter().zip(&pivots) {
        let mut v = MPoly::constant(table, -row[n].clone());
        for (j, &q) in params.iter().enumerate() {
            if j != pc && !row[j].is_zero() {
                v.add_assign(&MPoly::var_index(table, q).scale(&-row[j].clone()));
            }
        }
        subs[params[pc]] = Some(v);
    }
    Ok(subs)
}

/// Basis of the solutions in `Q^n` of homogeneous linear conditions in the
/// parameters `params` (one coordinate per listed parameter).
pub fn solution_space(set: &ObstructionSet, params: &[usize]) -> Result<Vec<Vec<Rational>>> {
    let m = set.linear_matrix(params)?;
    if m.iter().any(|r| !r[params.len()].is_zero()) {
        return Err(Error::Binding("inhomogeneous linear conditions".to_string()));
    }
    let m: Matrix = m.into_iter().map(|mut r| {
        r.pop();
        r
    }).collect();
    Ok(nullspace(&m, params.len()))
}

/// Geometric monomial `x^i y^j z^k` over `t`.
pub fn geometric_monomial(t: &Table, e: [u32; 3]) -> Monomial {
    let mut v = vec![0u32; t.len()];
    v[..3].copy_from_slice(&e);
    Monomial::from_exponents(v)
}

/// Linear polynomial from a coefficient row over `params` (with an
/// optional trailing constant).
pub fn linear_poly(t: &Table, params: &[usize], row: &[Rational]) -> MPoly {
    let mut p = MPoly::zero(t);
    for (j, &q) in params.iter().enumerate() {
        p.add_assign(&MPoly::var_index(t, q).scale(&row[j]));
    }
    if row.len() > params.len() {
        p.add_assign(&MPoly::constant(t, row[params.len()].clone()));
    }
    p
}

/// `v` as a point of the full table: coordinates of `params` set from
/// `v`, the rest zero.
pub fn point(t: &Table, params: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); t.len()];
    for (j, &q) in params.iter().enumerate() {
        p[q] = v[j].clone();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birmap::builtins;
    use crate::exactalg::SymbolTable;
    use crate::paperlab::families::general_quadratic_form;
    use crate::parse::parse_poly;

    fn set(v: &[&str]) -> ObstructionSet {
        let t = SymbolTable::standard();
        ObstructionSet::from_polys(v.iter().map(|s| parse_poly(s, &t).unwrap()))
    }

    #[test]
    fn normalization_dedups_scalar_multiples() {
        let s = set(&["b3 - c4", "c4 - b3", "2*a1"]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn span_comparisons() {
        assert!(span_equal(&set(&["b3 - c4"]), &set(&["c4 - b3"])).unwrap());
        assert!(!span_equal(&set(&["a1", "b0"]), &set(&["a1 + b0"])).unwrap());
        assert!(matches!(
            span_equal(&set(&["a1*b0"]), &set(&["a1"])),
            Err(Error::NonLinear(_))
        ));
    }

    #[test]
    fn sigma_x2yz_span() {
        let t = SymbolTable::standard();
        let g = general_quadratic_form();
        let m = geometric_monomial(&t, [2, 1, 1]);
        let s = monomial_div_obstructions(&builtins::sigma(&t), &g, &m).unwrap();
        let listed = set(&["c0", "b0", "a2", "b2", "a1", "c1", "b4", "c3", "b3 - c4"]);
        assert!(span_equal(&s, &listed).unwrap());
    }

    #[test]
    fn identity_map_is_invariant() {
        let t = SymbolTable::standard();
        let g = general_quadratic_form();
        let s2 = crate::birmap::compose_reduce(&builtins::sigma(&t), &builtins::sigma(&t)).unwrap();
        assert!(invariance_obstructions(&s2, &g).unwrap().is_empty());
        assert!(!invariance_obstructions(&builtins::sigma(&t), &g).unwrap().is_empty());
    }

    #[test]
    fn solve_linear_substitutes_pivots() {
        let t = SymbolTable::standard();
        let s = set(&["a0 - c4", "b3 - c4"]);
        let subs = solve_linear(&s, &t).unwrap();
        let a0 = t.index("a0").unwrap();
        assert_eq!(subs[a0].as_ref().unwrap().to_string(), "c4");
    }
}
