use super::poly::MPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` and `q` with respect to `v`; entries are
/// polynomials in the remaining variables.
pub fn sylvester(p: &MPoly, q: &MPoly, v: usize) -> Vec<Vec<MPoly>> {
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let zero = MPoly::zero(p.table());
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(mut a: Vec<Vec<MPoly>>, one: &MPoly) -> MPoly {
    let n = a.len();
    if n == 0 {
        return one.clone();
    }
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return MPoly::zero(one.table()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .trial_divide(&prev)
                    .expect("same table")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Resultant of two nonzero numeric polynomials with respect to `v`.
pub fn resultant(p: &MPoly, q: &MPoly, v: usize) -> Result<MPoly> {
    if !super::symbols::same_table(p.table(), q.table()) {
        return Err(Error::TableMismatch);
    }
    p.require_numeric()?;
    q.require_numeric()?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(determinant(sylvester(p, q, v), &MPoly::one(p.table())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;
    use crate::exactalg::symbols::SymbolTable;

    #[test]
    fn linear_resultant() {
        let t = SymbolTable::geometric();
        let x = MPoly::var(&t, "x").unwrap();
        let y = MPoly::var(&t, "y").unwrap();
        // res_y(y - x, y + x) = 2x up to sign convention: det [[1, -x], [1, x]] = 2x
        let r = resultant(&(&y - &x), &(&y + &x), 1).unwrap();
        assert_eq!(r, x.scale(&int(2)));
    }

    #[test]
    fn common_root_gives_zero() {
        let t = SymbolTable::geometric();
        let x = MPoly::var(&t, "x").unwrap();
        let one = MPoly::one(&t);
        let p = &(&x - &one) * &(&x + &one);
        let q = &(&x - &one) * &x;
        assert!(resultant(&p, &q, 0).unwrap().is_zero());
    }
}
