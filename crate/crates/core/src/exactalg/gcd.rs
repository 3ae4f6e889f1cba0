//! Multivariate gcd over the rationals by recursive subresultant
//! pseudo-remainder sequences.

use super::poly::{Homogeneity, MPoly};
use crate::error::{Error, Result};

fn precheck(p: &MPoly, q: &MPoly) -> Result<()> {
    if !super::symbols::same_table(p.table(), q.table()) {
        return Err(Error::TableMismatch);
    }
    p.require_numeric()?;
    q.require_numeric()?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// Monic gcd of two nonzero numeric polynomials.
pub fn gcd(p: &MPoly, q: &MPoly) -> Result<MPoly> {
    precheck(p, q)?;
    Ok(gcd_nonzero(p, q))
}

/// Monic gcd of all nonzero entries; `None` when every entry is zero.
pub fn gcd_many(ps: &[MPoly]) -> Result<Option<MPoly>> {
    let mut acc: Option<MPoly> = None;
    for p in ps.iter().filter(|p| !p.is_zero()) {
        p.require_numeric()?;
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => {
                if g.is_constant() {
                    return Ok(Some(g));
                }
                gcd(&g, p)?
            }
        });
    }
    Ok(acc)
}

/// Gcd of homogeneous polynomials, computed on the chart of the last
/// geometric variable and homogenized back.
pub fn gcd_homogeneous(p: &MPoly, q: &MPoly) -> Result<MPoly> {
    precheck(p, q)?;
    for f in [p, q] {
        if f.homogeneous_degree() == Homogeneity::NotHomogeneous {
            return Err(Error::NotHomogeneous);
        }
    }
    let mp = p.content_monomial()?;
    let mq = q.content_monomial()?;
    let m = mp.gcd(&mq);
    let p1 = p.div_monomial(&mp).expect("content divides");
    let q1 = q.div_monomial(&mq).expect("content divides");
    if p1.is_constant() || q1.is_constant() {
        return Ok(MPoly::term(p.table(), m, num_traits::One::one()));
    }
    let z = p.table().n_geometric() - 1;
    let one = num_traits::One::one();
    let g = gcd_nonzero(&p1.eval_var(z, &one), &q1.eval_var(z, &one));
    let d = g.total_degree().unwrap_or(0);
    Ok(g.homogenize(z, d)?.mul_monomial(&m).monic())
}

fn gcd_nonzero(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_constant() || q.is_constant() {
        return MPoly::one(p.table());
    }
    let mp = p.content_monomial().expect("nonzero");
    let mq = q.content_monomial().expect("nonzero");
    let m = mp.gcd(&mq);
    let p1 = p.div_monomial(&mp).expect("content divides");
    let q1 = q.div_monomial(&mq).expect("content divides");
    core(&p1, &q1).mul_monomial(&m).monic()
}

fn core(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_constant() || q.is_constant() {
        return MPoly::one(p.table());
    }
    let vars: Vec<usize> = {
        let mut v = p.vars_present();
        v.extend(q.vars_present());
        v
    };
    let v = *vars.iter().min().expect("non-constant");
    if !q.contains_var(v) {
        return core(&content_in(p, v), q);
    }
    if !p.contains_var(v) {
        return core(p, &content_in(q, v));
    }
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let pp = exact(p, &cp);
    let qq = exact(q, &cq);
    let c = core(&cp, &cq);
    let g = prs(&pp, &qq, v);
    (&c * &g).monic()
}

fn exact(p: &MPoly, d: &MPoly) -> MPoly {
    p.trial_divide(d)
        .expect("same table")
        .expect("exact division in gcd")
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content_in(p: &MPoly, v: usize) -> MPoly {
    let mut g: Option<MPoly> = None;
    for c in p.coefficients_in(v).into_iter().filter(|c| !c.is_zero()) {
        g = Some(match g {
            None => c.monic(),
            Some(h) => {
                if h.is_constant() {
                    return h;
                }
                gcd_nonzero(&h, &c)
            }
        });
    }
    g.unwrap_or_else(|| MPoly::one(p.table()))
}

fn lc_in(p: &MPoly, v: usize) -> MPoly {
    p.coefficients_in(v).pop().expect("nonzero")
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
pub(crate) fn prem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_in(v);
    let da = a.degree_in(v);
    let lcb = lc_in(b, v);
    let n = a.table().len();
    let mut r = a.clone();
    let mut steps = 0u32;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = lc_in(&r, v);
        let shift = super::monomial::Monomial::var(n, v, dr - db);
        r = &(&lcb * &r) - &(&lcr * &b.mul_monomial(&shift));
        steps += 1;
    }
    let extra = (da + 1).saturating_sub(db).saturating_sub(steps);
    &r * &lcb.pow(extra)
}

fn prs(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let one = MPoly::one(a.table());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = a.degree_in(v) - b.degree_in(v);
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if !r.contains_var(v) {
            return one;
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = exact(&r, &divisor);
        g = lc_in(&a, v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => exact(&g.pow(delta), &h.pow(delta - 1)),
        };
    }
    let c = content_in(&b, v);
    exact(&b, &c).monic()
}

/// True when `p` and `q` share no non-constant factor.
pub fn coprime(p: &MPoly, q: &MPoly) -> Result<bool> {
    Ok(gcd(p, q)?.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;
    use crate::exactalg::symbols::SymbolTable;

    fn v(n: &str) -> MPoly {
        MPoly::var(&SymbolTable::geometric(), n).unwrap()
    }

    fn c(n: i64) -> MPoly {
        MPoly::constant(&SymbolTable::geometric(), int(n))
    }

    #[test]
    fn univariate_gcd() {
        let x = v("x");
        let p = &(&x - &c(1)) * &(&x + &c(2));
        let q = &(&x - &c(1)) * &(&x - &c(3));
        assert_eq!(gcd(&p, &q).unwrap(), &x - &c(1));
    }

    #[test]
    fn trivariate_gcd() {
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let f = &(&x * &y) + &z.pow(2);
        let a = &f * &(&x + &(&y * &z));
        let b = &f.pow(2) * &(&x - &y);
        let g = gcd(&a, &b).unwrap();
        assert_eq!(g, f.monic());
    }

    #[test]
    fn zero_and_parametric_rejected() {
        assert_eq!(gcd(&v("x"), &c(0)).unwrap_err(), Error::ZeroPolynomial);
        let t = SymbolTable::standard();
        let a = MPoly::var(&t, "a").unwrap();
        assert!(matches!(gcd(&a, &a), Err(Error::Parametric(_))));
    }

    #[test]
    fn homogeneous_gcd_keeps_monomial_content() {
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let p = &(&x.pow(2) * &y) * &(&x + &z);
        let q = &(&x * &y.pow(3)) * &(&x + &z);
        let g = gcd_homogeneous(&p, &q).unwrap();
        assert_eq!(g, &(&x * &y) * &(&x + &z));
        let nh = &x + &c(1);
        assert_eq!(gcd_homogeneous(&nh, &x).unwrap_err(), Error::NotHomogeneous);
    }
}
