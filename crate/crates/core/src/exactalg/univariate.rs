//! Dense univariate polynomials over the rationals and rational root
//! extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::MPoly;
use super::rational::{lcm_of_denominators, Rational};
use crate::error::{Error, Result};

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

const TRIAL_LIMIT: u64 = 2_000_000;

impl UniPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UniPoly(c)
    }

    /// Read an `MPoly` that involves only `var`.
    pub fn from_mpoly(p: &MPoly, var: usize) -> Result<Self> {
        let mut c = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, a) in p.terms() {
            if m.exps().iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(Error::NotAffine);
            }
            c[m.exp(var) as usize] = a.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> UniPoly {
        match self.0.last() {
            Some(l) => UniPoly(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        let dl = d.0.last().expect("nonzero divisor").clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap().clone() / &dl;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            r.pop();
            while r.last().map(|x| x.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        UniPoly(r)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide by `(x - r)`, assuming `r` is a root.
    fn deflate(&self, r: &Rational) -> UniPoly {
        let n = self.0.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.0[i] + carry * r;
            q[i - 1] = carry.clone();
        }
        UniPoly::new(q)
    }

    /// Rational roots with multiplicities, and whether the polynomial
    /// splits completely over the rationals.
    pub fn rational_roots(&self) -> (Vec<(Rational, u32)>, bool) {
        let mut roots = Vec::new();
        if self.is_zero() {
            return (roots, false);
        }
        let mut p = self.clone();
        let mut zeros = 0u32;
        while p.0.len() > 1 && p.0[0].is_zero() {
            p.0.remove(0);
            zeros += 1;
        }
        if zeros > 0 {
            roots.push((Rational::zero(), zeros));
        }
        if p.0.len() == 1 {
            return (roots, true);
        }
        let l = lcm_of_denominators(&p.0);
        let ints: Vec<BigInt> = p
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let nd = divisors(&ints[0]);
        let ld = divisors(ints.last().unwrap());
        let bound = cauchy_bound(&p);
        let mut cands: Vec<Rational> = Vec::new();
        for a in &nd {
            for b in &ld {
                let r = Rational::new(a.clone(), b.clone());
                if r.abs() <= bound {
                    cands.push(r.clone());
                    cands.push(-r);
                }
            }
        }
        cands.sort();
        cands.dedup();
        for r in cands {
            let mut mult = 0u32;
            while p.0.len() > 1 && p.eval(&r).is_zero() {
                p = p.deflate(&r);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        // A missed root (from an unfactored cofactor) only makes this
        // answer conservative.
        (roots, p.0.len() == 1)
    }
}

fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.0.last().unwrap().abs();
    let m = p.0[..p.0.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Positive divisors of |n|. A cofactor left after trial division is
/// treated as prime, so the list can be incomplete for huge inputs.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(&bp) {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (q, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut m = d.clone();
            for _ in 0..=e {
                next.push(m.clone());
                m *= &q;
            }
        }
        divs = next;
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&k| int(k)).collect())
    }

    #[test]
    fn roots_with_multiplicity() {
        // (x - 1)^2 (2x + 3) x = 2x^4 - x^3 - 4x^2 + 3x
        let p = poly(&[0, 3, -4, -1, 2]);
        let (r, splits) = p.rational_roots();
        assert!(splits);
        assert_eq!(r, vec![(rat(-3, 2), 1), (int(0), 1), (int(1), 2)]);
    }

    #[test]
    fn irreducible_quadratic_does_not_split() {
        let (r, splits) = poly(&[-2, 0, 1]).rational_roots();
        assert!(r.is_empty());
        assert!(!splits);
    }

    #[test]
    fn euclid() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
    }
}
