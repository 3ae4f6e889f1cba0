//! Named parametric families of degree-2 foliations.

use num_traits::Zero;
use rand::Rng;

use crate::dforms::{homogenize, Proj1Form};
use crate::error::{Error, Result};
use crate::exactalg::{rat, MPoly, Rational, SymbolTable, Table};
use crate::foliation::{from_form, Foliation};
use crate::parse::{parse_form_literal, parse_poly};

/// A projective 1-form whose coefficients may involve parameters of the
/// standard table. Homogeneity and the Euler identity hold identically in
/// the parameters.
#[derive(Debug, Clone)]
pub struct ParamForm {
    form: Proj1Form,
    params: Vec<String>,
}

impl ParamForm {
    pub fn new(form: Proj1Form) -> Self {
        let t = form.table().clone();
        let mut idx: Vec<usize> = form
            .components()
            .iter()
            .flat_map(|p| p.vars_present())
            .filter(|&i| !t.is_geometric(i))
            .collect();
        idx.sort_unstable();
        idx.dedup();
        let params = idx.iter().map(|&i| t.name(i).to_string()).collect();
        ParamForm { form, params }
    }

    pub fn form(&self) -> &Proj1Form {
        &self.form
    }

    pub fn components(&self) -> &[MPoly; 3] {
        self.form.components()
    }

    pub fn table(&self) -> &Table {
        self.form.table()
    }

    /// Parameter names present, in table order.
    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn is_numeric(&self) -> bool {
        self.params.is_empty()
    }

    /// Substitute rational values for some parameters.
    pub fn bind(&self, values: &[(&str, Rational)]) -> Result<ParamForm> {
        let t = self.table();
        let mut v = Vec::with_capacity(values.len());
        for (name, q) in values {
            v.push((t.index(name)?, q.clone()));
        }
        Ok(ParamForm::new(self.form.specialize(&v, t)?))
    }

    /// Substitute polynomials for parameters (`None` keeps the symbol).
    pub fn substitute(&self, subs: &[Option<MPoly>]) -> Result<ParamForm> {
        let t = self.table().clone();
        let mut c = Vec::with_capacity(3);
        for p in self.components() {
            c.push(p.substitute(subs, &t)?);
        }
        Ok(ParamForm::new(Proj1Form::new(c.try_into().expect("three"))?))
    }

    /// The same form over `x, y, z` only. Errors if a parameter remains.
    pub fn to_geometric(&self) -> Result<Proj1Form> {
        if let Some(p) = self.params.first() {
            return Err(Error::Parametric(p.clone()));
        }
        self.form.embed(&SymbolTable::geometric())
    }

    /// Bind every parameter to a random rational `n/d`, `n` in -9..=9
    /// nonzero, `d` in 1..=4.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Result<ParamForm> {
        let vals: Vec<(String, Rational)> = self
            .params
            .iter()
            .map(|p| (p.clone(), random_rational(rng)))
            .collect();
        let refs: Vec<(&str, Rational)> = vals.iter().map(|(n, q)| (n.as_str(), q.clone())).collect();
        self.bind(&refs)
    }

    pub fn foliation(&self) -> Result<Foliation> {
        from_form(&self.form)
    }
}

impl std::fmt::Display for ParamForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.form)
    }
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    rat(n, rng.gen_range(1..=4))
}

enum Def {
    /// `a dx + b dy` in the chart `z = 1`.
    Affine(&'static str, &'static str),
    Projective(&'static str),
}

const REGISTRY: &[(&str, Def)] = &[
    ("omega1", Def::Affine("y*(kappa + epsilon*y)", "beta*x + delta*y + alpha*x^2 + gamma*x*y")),
    ("omega2", Def::Affine("delta + beta*y + kappa*y^2", "alpha + epsilon*x + gamma*x^2")),
    (
        "omega3",
        Def::Affine(
            "y*(kappa + epsilon*y + lambda*y^2)",
            "beta + kappa*x + delta*y + gamma*x*y + alpha*y^2 - lambda*x*y^2",
        ),
    ),
    (
        "omega4",
        Def::Affine(
            "y*(mu + delta*x + gamma*y + epsilon*x*y)",
            "alpha + beta*x + lambda*y + delta*x^2 + kappa*x*y - epsilon*x^2*y",
        ),
    ),
    (
        "omega5",
        Def::Affine("lambda + gamma*y + kappa*x*y + epsilon*y^2", "beta + delta*x + alpha*x^2"),
    ),
    (
        "omega6",
        Def::Affine(
            "-delta*x + alpha*y - epsilon*x^2 + theta*x*y + beta*y^2 + kappa*x^2*y + mu*x*y^2 + lambda*y^3",
            "-3*alpha*x + xi*x^2 + 2*(delta - beta)*x*y + alpha*y^2 - kappa*x^3 - mu*x^2*y - lambda*x*y^2",
        ),
    ),
    ("omega7", Def::Affine("y*(alpha + gamma*y)", "-x*(alpha + kappa*x)")),
    (
        "omega8",
        Def::Affine(
            "b*(b^2 - a*b + 1 + (a - 2*b)*y + y^2)",
            "(b^2 - a*b + 1) + (a*b - 2)*x + x^2",
        ),
    ),
    (
        "omega9",
        Def::Affine(
            "-alpha + beta*y + gamma*y^2",
            "epsilon - 3*beta*x + kappa*y - 3*gamma*x*y + lambda*y^2",
        ),
    ),
    ("Omega1", Def::Affine("x^2 - y^3", "x*y^2")),
    ("Omega2", Def::Affine("x^2 - x*y - y^3", "x^2 + x*y^2")),
    ("Omega3", Def::Affine("x*y - x^2*y - y^3", "x^3 + x*y^2")),
    ("Omega4", Def::Affine("x^2 + x*y^2", "x + y^2 - x^2*y")),
    ("eta", Def::Projective("[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]")),
    ("eta_prime", Def::Affine("y*(1 + y)", "-x*(1 + x)")),
    (
        "sigma_inv1",
        Def::Affine("y*(1 + y)", "beta*x + alpha*y + alpha*x^2 + beta*x*y"),
    ),
    (
        "sigma_inv2",
        Def::Affine("y*(1 - y)", "beta*x - alpha*y + alpha*x^2 - beta*x*y"),
    ),
    ("sigma_inv3", Def::Affine("y", "alpha + epsilon*x + alpha*x^2")),
    ("rho_inv1", Def::Affine("y*(1 - y)", "beta + x")),
    ("rho_inv2", Def::Affine("y^2", "-1 + y")),
    (
        "rho_inv3",
        Def::Affine("y*(1 - y)*(gamma + delta*x)", "(1 + y)*(alpha + beta*x + delta*x^2)"),
    ),
    (
        "rho_inv4",
        Def::Affine("y*(1 + y)*(gamma + delta*x)", "(1 - y)*(alpha + beta*x + delta*x^2)"),
    ),
    ("rho_inv5", Def::Affine("1 - y^2", "beta + delta*x + alpha*x^2")),
    (
        "tau_inv1",
        Def::Affine(
            "-epsilon*x^2 + theta*x*y + beta*y^2 + epsilon*x*y^2 - (1/2*xi + theta)*y^3",
            "x*(xi*x - 2*beta*y - epsilon*x*y + (1/2*xi + theta)*y^2)",
        ),
    ),
    (
        "tau_inv2",
        Def::Affine(
            "-delta*x + alpha*y + 3/2*delta*y^2 + kappa*x^2*y + mu*x*y^2 + lambda*y^3",
            "-(3*alpha*x + delta*x*y - alpha*y^2 + kappa*x^3 + mu*x^2*y + lambda*x*y^2)",
        ),
    ),
];

/// Every registered family name, plus `general`.
pub fn family_names() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = REGISTRY.iter().map(|(n, _)| *n).collect();
    v.push("general");
    v
}

/// The affine coefficients `(a, b)` of a chart-defined family.
pub fn affine_coefficients(name: &str) -> Result<(MPoly, MPoly)> {
    let t = SymbolTable::standard();
    match REGISTRY.iter().find(|(n, _)| *n == name) {
        Some((_, Def::Affine(a, b))) => Ok((parse_poly(a, &t)?, parse_poly(b, &t)?)),
        Some(_) => Err(Error::NotAffine),
        None => Err(Error::UnknownName(name.to_string())),
    }
}

/// A registered family over the standard table, homogenized if it is
/// given in a chart, with the listed parameters bound.
pub fn family(name: &str, bindings: &[(&str, Rational)]) -> Result<ParamForm> {
    let t = SymbolTable::standard();
    let form = if name == "general" {
        general_quadratic_form().form
    } else {
        match REGISTRY.iter().find(|(n, _)| *n == name) {
            Some((_, Def::Affine(a, b))) => homogenize(&parse_poly(a, &t)?, &parse_poly(b, &t)?)?,
            Some((_, Def::Projective(s))) => Proj1Form::new(parse_form_literal(s, &t)?)?,
            None => return Err(Error::UnknownName(name.to_string())),
        }
    };
    ParamForm::new(form).bind(bindings)
}

/// The 18-parameter normal form
/// `q1 yz (dy/y - dz/z) + q2 xz (dz/z - dx/x) + q3 xy (dx/x - dy/y)`
/// with `q1 = a0 x^2 + a1 y^2 + a2 z^2 + a3 xy + a4 xz + a5 yz` and
/// likewise `q2` (`b*`), `q3` (`c*`).
pub fn general_quadratic_form() -> ParamForm {
    let t = SymbolTable::standard();
    let q: Vec<MPoly> = ["a", "b", "c"]
        .iter()
        .map(|p| {
            let s = format!(
                "{p}0*x^2 + {p}1*y^2 + {p}2*z^2 + {p}3*x*y + {p}4*x*z + {p}5*y*z"
            );
            parse_poly(&s, &t).expect("static")
        })
        .collect();
    let v = |i| MPoly::var_index(&t, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let c = [
        &(&y * &q[2]) - &(&z * &q[1]),
        &(&z * &q[0]) - &(&x * &q[2]),
        &(&x * &q[1]) - &(&y * &q[0]),
    ];
    ParamForm::new(Proj1Form::new(c).expect("Euler-null by construction"))
}

/// Names of the 18 coefficients of the general form, in order.
pub fn general_params() -> Vec<String> {
    ["a", "b", "c"]
        .iter()
        .flat_map(|p| (0..6).map(move |i| format!("{p}{i}")))
        .collect()
}

/// The general form at a point of `Q^18`.
pub fn general_at(v: &[Rational]) -> Result<ParamForm> {
    let names = general_params();
    let b: Vec<(&str, Rational)> = names.iter().map(|n| n.as_str()).zip(v.iter().cloned()).collect();
    general_quadratic_form().bind(&b)
}

/// True when all 18 coordinates vanish.
pub fn is_origin(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dforms::euler_contract;
    use crate::exactalg::int;
    use crate::foliation::from_form;

    #[test]
    fn every_family_satisfies_euler() {
        for n in family_names() {
            let f = family(n, &[]).unwrap();
            assert!(euler_contract(f.components()).is_zero(), "{n}");
        }
    }

    #[test]
    fn general_form_has_eighteen_parameters() {
        let g = general_quadratic_form();
        assert_eq!(g.params().len(), 18);
        assert_eq!(g.form().coeff_degree(), 3);
    }

    #[test]
    fn displayed_families() {
        let w7 = family("omega7", &[]).unwrap();
        assert_eq!(w7.params(), ["alpha", "gamma", "kappa"]);
        let eta = family("eta", &[]).unwrap();
        assert_eq!(eta.components()[2].to_string(), "x^2*y - x*y^2");
        assert!(family("omega10", &[]).is_err());
        let w9 = affine_coefficients("omega9").unwrap();
        assert_eq!(w9.1.to_string(), "-3*x*y*gamma + y^2*lambda - 3*x*beta + y*kappa + epsilon");
    }

    #[test]
    fn general_form_specializes_to_omega1_prime() {
        // Omega'_1 = [x^2 z - y^3, x y^2, -x^3]; q3 = c0 x^2 ... solved by hand:
        // -z q2 + y q3 = x^2 z - y^3, z q1 - x q3 = x y^2, -y q1 + x q2 = -x^3
        let mut v = vec![int(0); 18];
        v[6] = int(-1); // b0: q2 = -x^2
        v[13] = int(-1); // c1: q3 = -y^2
        let w = general_at(&v).unwrap().to_geometric().unwrap();
        let o = family("Omega1", &[]).unwrap().to_geometric().unwrap();
        assert!(w.proportional(&o));
        assert_eq!(from_form(&w).unwrap().degree(), 2);
    }

    #[test]
    fn binding_removes_parameters() {
        let w = family("omega7", &[("alpha", int(1)), ("gamma", int(1)), ("kappa", int(1))]).unwrap();
        assert!(w.is_numeric());
        assert!(w.to_geometric().is_ok());
    }
}
