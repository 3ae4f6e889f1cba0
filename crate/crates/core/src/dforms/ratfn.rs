use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{gcd, MPoly, Rational, Table};

/// Quotient of polynomials with a nonzero denominator. Not reduced unless
/// [`RationalFn::reduced`] is called on numeric data.
#[derive(Debug, Clone)]
pub struct RationalFn {
    num: MPoly,
    den: MPoly,
}

impl RationalFn {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !crate::exactalg::symbols::same_table(num.table(), den.table()) {
            return Err(Error::TableMismatch);
        }
        Ok(RationalFn { num, den })
    }

    pub fn poly(p: MPoly) -> Self {
        let den = MPoly::one(p.table());
        RationalFn { num: p, den }
    }

    pub fn zero(t: &Table) -> Self {
        Self::poly(MPoly::zero(t))
    }

    pub fn constant(t: &Table, c: Rational) -> Self {
        Self::poly(MPoly::constant(t, c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn table(&self) -> &Table {
        self.num.table()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RationalFn) -> RationalFn {
        if self.den == o.den {
            return RationalFn {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        RationalFn {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    pub fn sub(&self, o: &RationalFn) -> RationalFn {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn partial(&self, i: usize) -> RationalFn {
        if self.den.is_constant() {
            let c = self.den.constant_value().expect("constant");
            return RationalFn::poly(self.num.partial(i).scale(&c.recip()));
        }
        RationalFn {
            num: &(&self.num.partial(i) * &self.den) - &(&self.num * &self.den.partial(i)),
            den: self.den.pow(2),
        }
    }

    /// Equality as functions (cross multiplication).
    pub fn equals(&self, o: &RationalFn) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    /// Cancel the numerator/denominator gcd when both are numeric.
    pub fn reduced(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn::zero(self.table());
        }
        if self.num.is_numeric() && self.den.is_numeric() {
            if let Ok(g) = gcd(&self.num, &self.den) {
                if !g.is_constant() {
                    let n = self.num.trial_divide(&g).ok().flatten();
                    let d = self.den.trial_divide(&g).ok().flatten();
                    if let (Some(n), Some(d)) = (n, d) {
                        return RationalFn { num: n, den: d };
                    }
                }
            }
        }
        self.clone()
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().map(|c| c == num_traits::One::one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SymbolTable;
    use crate::parse::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s, &SymbolTable::geometric()).unwrap()
    }

    #[test]
    fn quotient_rule() {
        let f = RationalFn::new(p("x"), p("x + y")).unwrap();
        let fx = f.partial(0);
        let expected = RationalFn::new(p("y"), p("(x + y)^2")).unwrap();
        assert!(fx.equals(&expected));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFn::new(p("x"), p("0")).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn reduction_cancels_common_factor() {
        let f = RationalFn::new(p("x^2 - y^2"), p("x - y")).unwrap().reduced();
        assert_eq!(f.num(), &p("x + y"));
        assert!(f.den().is_constant());
    }
}
