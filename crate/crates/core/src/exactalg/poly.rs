use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{fmt_rational, Rational};
use super::symbols::{same_table, Table};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct MPoly {
    table: Table,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    NotHomogeneous,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(table: &Table) -> Self {
        MPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Table) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn constant(table: &Table, c: Rational) -> Self {
        Self::term(table, Monomial::one(table.len()), c)
    }

    pub fn term(table: &Table, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(table: &Table, name: &str) -> Result<Self> {
        Ok(Self::var_index(table, table.index(name)?))
    }

    pub fn var_index(table: &Table, i: usize) -> Self {
        Self::term(table, Monomial::var(table.len(), i, 1), Rational::one())
    }

    pub fn from_terms(table: &Table, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    /// Degree in the geometric variables only.
    pub fn geometric_degree(&self) -> Option<u32> {
        let g = self.geometric_vars();
        self.terms.keys().map(|m| m.degree_in(&g)).max()
    }

    pub fn geometric_vars(&self) -> Vec<usize> {
        (0..self.table.n_geometric()).collect()
    }

    pub fn vars_present(&self) -> Vec<usize> {
        (0..self.table.len())
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    /// First parameter symbol occurring, if any.
    pub fn first_param(&self) -> Option<usize> {
        self.table
            .param_indices()
            .find(|&i| self.contains_var(i))
    }

    pub fn is_numeric(&self) -> bool {
        self.first_param().is_none()
    }

    pub fn require_numeric(&self) -> Result<()> {
        match self.first_param() {
            Some(i) => Err(Error::Parametric(self.table.name(i).to_string())),
            None => Ok(()),
        }
    }

    /// Homogeneity with respect to the listed variables.
    pub fn homogeneity_in(&self, vars: &[usize]) -> Homogeneity {
        let mut it = self.terms.keys().map(|m| m.degree_in(vars));
        match it.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::NotHomogeneous
                }
            }
        }
    }

    /// Homogeneity in the geometric variables.
    pub fn homogeneous_degree(&self) -> Homogeneity {
        self.homogeneity_in(&self.geometric_vars())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &MPoly) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_table(other)?;
        let mut r = MPoly::zero(&self.table);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.table);
        }
        MPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial(&self, i: usize) -> MPoly {
        let mut r = MPoly::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                r.add_term(m.with_exp(i, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        r
    }

    /// Substitute polynomials (in `out`) for the bound symbols; unbound
    /// symbols are carried over by name into `out`.
    pub fn substitute(&self, subs: &[Option<MPoly>], out: &Table) -> Result<MPoly> {
        assert_eq!(subs.len(), self.table.len(), "one binding slot per symbol");
        for s in subs.iter().flatten() {
            if !same_table(s.table(), out) {
                return Err(Error::TableMismatch);
            }
        }
        let mut target: Vec<Option<usize>> = vec![None; self.table.len()];
        for (i, s) in subs.iter().enumerate() {
            if s.is_none() && self.contains_var(i) {
                target[i] = Some(out.index(self.table.name(i))?);
            }
        }
        // Group terms by the exponents of bound symbols so each product of
        // powers is formed once.
        let mut groups: BTreeMap<Vec<u32>, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut bound = vec![0u32; self.table.len()];
            let mut kept = vec![0u32; out.len()];
            for i in 0..self.table.len() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match target[i] {
                    Some(j) => kept[j] += e,
                    None => bound[i] = e,
                }
            }
            groups
                .entry(bound)
                .or_insert_with(|| MPoly::zero(out))
                .add_term(Monomial::from_exponents(kept), c.clone());
        }
        let mut cache: BTreeMap<(usize, u32), MPoly> = BTreeMap::new();
        let mut result = MPoly::zero(out);
        for (bound, kept) in groups {
            let mut prod = kept;
            for (i, &e) in bound.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| subs[i].as_ref().expect("bound").pow(e))
                    .clone();
                prod = &prod * &p;
            }
            result.add_assign(&prod);
        }
        Ok(result)
    }

    /// Replace symbols by rational values; the result lives in `out`.
    pub fn specialize(&self, values: &[(usize, Rational)], out: &Table) -> Result<MPoly> {
        let mut subs: Vec<Option<MPoly>> = vec![None; self.table.len()];
        for (i, v) in values {
            subs[*i] = Some(MPoly::constant(out, v.clone()));
        }
        self.substitute(&subs, out)
    }

    /// Set one variable to a constant, staying in the same table.
    pub fn eval_var(&self, i: usize, v: &Rational) -> MPoly {
        let mut r = MPoly::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            let factor = num_traits::pow(v.clone(), e as usize);
            r.add_term(m.with_exp(i, 0), c * factor);
        }
        r
    }

    /// Full evaluation at a point given for every symbol.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Multiply each term by `var^(d - geometric degree)`.
    pub fn homogenize(&self, var: usize, d: u32) -> Result<MPoly> {
        let g = self.geometric_vars();
        let mut r = MPoly::zero(&self.table);
        for (m, c) in &self.terms {
            let k = m.degree_in(&g);
            if k > d {
                return Err(Error::NotHomogeneous);
            }
            r.add_term(m.with_exp(var, m.exp(var) + d - k), c.clone());
        }
        Ok(r)
    }

    /// Largest monomial in the geometric variables dividing every term.
    pub fn content_monomial(&self) -> Result<Monomial> {
        let n = self.table.n_geometric();
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let mut g = first.restrict(|i| i < n);
        for m in it {
            g = g.gcd(m);
        }
        Ok(g)
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<MPoly> {
        let mut terms = BTreeMap::new();
        for (n, c) in &self.terms {
            if !m.divides(n) {
                return None;
            }
            terms.insert(m.quotient_of(n), c.clone());
        }
        Some(MPoly {
            table: self.table.clone(),
            terms,
        })
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None`.
    pub fn trial_divide(&self, d: &MPoly) -> Result<Option<MPoly>> {
        self.check_table(d)?;
        let (lm, lc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if d.n_terms() == 1 {
            return Ok(self.div_monomial(&lm).map(|q| q.scale(&lc.recip())));
        }
        let mut rem = self.clone();
        let mut q = MPoly::zero(&self.table);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            rem = &rem - &d.mul_monomial(&qm).scale(&qc);
            q.add_term(qm, qc);
        }
        Ok(Some(q))
    }

    /// Division in the geometric variables by `d`, whose leading
    /// geometric coefficient must be a nonzero constant. Returns
    /// `(quotient, remainder)`; coefficients stay polynomial in the parameters.
    pub fn div_rem_geometric(&self, d: &MPoly) -> Result<(MPoly, MPoly)> {
        self.check_table(d)?;
        let dg = d.collect_geometric();
        let (lm, lc) = match dg.iter().next_back() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let lc = lc.constant_value().ok_or_else(|| {
            Error::Parametric("leading coefficient of divisor".to_string())
        })?;
        let mut rem = self.collect_geometric();
        let mut q = MPoly::zero(&self.table);
        let mut r = MPoly::zero(&self.table);
        while let Some((m, c)) = rem.pop_last() {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = c.scale(&lc.recip());
                for (dm, dc) in &dg {
                    if dm == &lm {
                        continue;
                    }
                    let key = dm.mul(&qm);
                    let delta = dc * &qc;
                    let slot = rem.entry(key.clone()).or_insert_with(|| MPoly::zero(&self.table));
                    *slot = &*slot - &delta;
                    if slot.is_zero() {
                        rem.remove(&key);
                    }
                }
                q.add_assign(&qc.mul_monomial(&qm));
            } else {
                r.add_assign(&c.mul_monomial(&m));
            }
        }
        Ok((q, r))
    }

    /// Group terms by their geometric monomial; values are the parameter
    /// coefficients (same table, no geometric variables).
    pub fn collect_geometric(&self) -> BTreeMap<Monomial, MPoly> {
        let n = self.table.n_geometric();
        let mut out: BTreeMap<Monomial, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let g = m.restrict(|i| i < n);
            let p = m.restrict(|i| i >= n);
            out.entry(g)
                .or_insert_with(|| MPoly::zero(&self.table))
                .add_term(p, c.clone());
        }
        out
    }

    /// Coefficients with respect to one variable: `coeffs[k]` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(&self.table); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].add_term(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn from_coefficients_in(table: &Table, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero(table);
        for (k, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(table.len(), var, k as u32);
            for (m, a) in &c.terms {
                r.add_term(m.mul(&shift), a.clone());
            }
        }
        r
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        assert!(same_table(&self.table, &other.table), "symbol tables differ");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// Scale so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Re-express over another table, matching symbols by name.
    pub fn embed(&self, table: &Table) -> Result<MPoly> {
        if same_table(&self.table, table) {
            return Ok(self.clone());
        }
        let mut map = vec![None; self.table.len()];
        for i in self.vars_present() {
            map[i] = Some(table.index(self.table.name(i))?);
        }
        let mut r = MPoly::zero(table);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; table.len()];
            for (i, &k) in m.exps().iter().enumerate() {
                if k > 0 {
                    e[map[i].expect("present")] += k;
                }
            }
            r.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(r)
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.table.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.table.name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", self.fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), self.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect("symbol tables differ")
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$checked(&rhs).expect("symbol tables differ")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};
    use crate::exactalg::symbols::SymbolTable;

    fn g() -> Table {
        SymbolTable::geometric()
    }

    fn v(n: &str) -> MPoly {
        MPoly::var(&g(), n).unwrap()
    }

    #[test]
    fn canonical_text() {
        let p = v("x").pow(2).scale(&int(2)) * v("y") - v("z").pow(3).scale(&rat(1, 3));
        assert_eq!(p.to_string(), "2*x^2*y - 1/3*z^3");
        assert_eq!(MPoly::zero(&g()).to_string(), "0");
        assert_eq!((-v("x") + MPoly::constant(&g(), rat(-1, 2))).to_string(), "-x - 1/2");
    }

    #[test]
    fn x_minus_x_is_zero() {
        assert!((v("x") - v("x")).is_zero());
    }

    #[test]
    fn mismatched_tables() {
        let a = v("x");
        let b = MPoly::var(&SymbolTable::standard(), "x").unwrap();
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::TableMismatch);
    }

    #[test]
    fn homogeneity() {
        let p = v("x") * v("y") + v("z").pow(2);
        assert_eq!(p.homogeneous_degree(), Homogeneity::Degree(2));
        assert_eq!((p + v("x")).homogeneous_degree(), Homogeneity::NotHomogeneous);
        assert_eq!(MPoly::zero(&g()).homogeneous_degree(), Homogeneity::Zero);
    }

    #[test]
    fn trial_division() {
        let a = v("x") + v("y");
        let b = v("x") - v("z").scale(&int(3));
        let p = &a * &b;
        assert_eq!(p.trial_divide(&a).unwrap().unwrap(), b);
        assert!(p.trial_divide(&(v("x") + v("z"))).unwrap().is_none());
        assert_eq!(p.trial_divide(&MPoly::zero(&g())).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn geometric_remainder() {
        let t = SymbolTable::standard();
        let x = MPoly::var(&t, "x").unwrap();
        let y = MPoly::var(&t, "y").unwrap();
        let a = MPoly::var(&t, "a").unwrap();
        // (x^2 + a*y^2) mod (x + y): remainder (1 + a) y^2
        let p = x.pow(2) + &a * &y.pow(2);
        let (q, r) = p.div_rem_geometric(&(&x + &y)).unwrap();
        assert_eq!(&(&q * &(&x + &y)) + &r, p);
        assert_eq!(r, &(MPoly::one(&t) + a) * &y.pow(2));
    }

    #[test]
    fn substitution_and_specialization() {
        let t = SymbolTable::standard();
        let x = MPoly::var(&t, "x").unwrap();
        let a = MPoly::var(&t, "a").unwrap();
        let p = &a * &x.pow(2) + x.clone();
        let ai = t.index("a").unwrap();
        let q = p.specialize(&[(ai, int(3))], &g()).unwrap();
        assert_eq!(q.to_string(), "3*x^2 + x");
        let mut subs = vec![None; t.len()];
        subs[0] = Some(MPoly::var(&g(), "y").unwrap());
        assert!(matches!(p.substitute(&subs, &g()), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn content_and_homogenize() {
        let p = v("x").pow(2) * v("y") + v("x") * v("y") * v("z");
        assert_eq!(p.content_monomial().unwrap().exps(), &[1, 1, 0]);
        assert!(MPoly::zero(&g()).content_monomial().is_err());
        let a = v("x") + MPoly::one(&g());
        assert_eq!(a.homogenize(2, 2).unwrap().to_string(), "x*z + z^2");
    }
}
