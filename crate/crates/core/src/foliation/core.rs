use std::fmt;

use crate::birmap::{pullback_raw, Exceptional, MapWord, RatMap};
use crate::dforms::Proj1Form;
use crate::error::{Error, Result};
use crate::exactalg::MPoly;
use crate::reduce::{reduce_triple, Depth};

/// A foliation given by a reduced projective 1-form. For parametric forms
/// only monomial factors are removed; `generic` records that the reduction
/// holds for generic parameter values.
#[derive(Debug, Clone)]
pub struct Foliation {
    form: Proj1Form,
    degree: u32,
    removed: MPoly,
    generic: bool,
}

impl Foliation {
    pub fn form(&self) -> &Proj1Form {
        &self.form
    }

    /// Coefficient degree minus one.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Factor divided out of the input form.
    pub fn removed_factor(&self) -> &MPoly {
        &self.removed
    }

    pub fn is_generic(&self) -> bool {
        self.generic
    }

    pub fn is_numeric(&self) -> bool {
        self.form.is_numeric()
    }
}

impl fmt::Display for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form)
    }
}

/// Reduce a form by its full common factor.
pub fn from_form(w: &Proj1Form) -> Result<Foliation> {
    from_form_with(w, Depth::Full)
}

pub fn from_form_with(w: &Proj1Form, depth: Depth) -> Result<Foliation> {
    let generic = !w.is_numeric();
    let (c, removed) = reduce_triple(w.components().clone(), depth)?;
    let form = Proj1Form::new(c)?;
    let degree = form.coeff_degree().checked_sub(1).ok_or(Error::ZeroForm)?;
    Ok(Foliation {
        form,
        degree,
        removed,
        generic,
    })
}

/// `phi^* F`, reduced. Maps whose exceptional locus lies on the
/// coordinate lines only need monomial reduction.
pub fn pullback_foliation(phi: &RatMap, f: &Foliation) -> Result<Foliation> {
    let raw = pullback_raw(phi, &f.form)?;
    let depth = match phi.exceptional() {
        Exceptional::Empty | Exceptional::CoordinateLines => Depth::MonomialOnly,
        Exceptional::General => Depth::Full,
    };
    let mut g = from_form_with(&raw, depth)?;
    g.generic |= f.generic;
    Ok(g)
}

/// Degrees along the word: the initial degree, then the degree after each
/// non-linear letter; the last entry is the degree of the full pullback.
pub fn degree_sequence(word: &MapWord, f: &Foliation) -> Result<Vec<u32>> {
    let mut seq = vec![f.degree];
    let mut cur = f.clone();
    for m in word.letters() {
        cur = pullback_foliation(m, &cur)?;
        if !m.is_linear() {
            seq.push(cur.degree);
        }
    }
    if *seq.last().expect("nonempty") != cur.degree {
        seq.push(cur.degree);
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birmap::builtins;
    use crate::exactalg::SymbolTable;
    use crate::parse::parse_form_literal;

    fn fol(s: &str) -> Foliation {
        let t = SymbolTable::geometric();
        from_form(&Proj1Form::new(parse_form_literal(s, &t).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn degree_from_reduced_coefficients() {
        assert_eq!(fol("[x^2*z - y^3, x*y^2, -x^3]").degree(), 2);
        // the same form times (x + y) reduces back
        let f = fol("[(x+y)*(x^2*z - y^3), (x+y)*x*y^2, -(x+y)*x^3]");
        assert_eq!(f.degree(), 2);
        assert_eq!(f.removed_factor().to_string(), "x + y");
    }

    #[test]
    fn linear_pullback_preserves_degree() {
        let t = SymbolTable::geometric();
        let f = fol("[x^2*z - y^3, x*y^2, -x^3]");
        let l = builtins::letter("tau_l3", &t).unwrap();
        assert_eq!(pullback_foliation(&l, &f).unwrap().degree(), 2);
    }

    #[test]
    fn sequence_of_a_single_letter() {
        let t = SymbolTable::geometric();
        let f = fol("[x^2*z - y^3, x*y^2, -x^3]");
        let w = MapWord::new(vec![builtins::letter("rho_l1", &t).unwrap()]);
        assert_eq!(degree_sequence(&w, &f).unwrap(), vec![2]);
    }
}
