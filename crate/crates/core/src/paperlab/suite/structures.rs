//! Transverse structures and degree sequences along factorization words.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::util::*;
use super::{CheckDef, Outcome};
use crate::birmap::{builtins, pullback_triple, MapWord, RatMap};
use crate::dforms::{riccati_triplet, sl2_triplet_check, Aff1Form, Proj1Form, RationalFn};
use crate::error::{Error, Result};
use crate::exactalg::{int, MPoly, Rational, Table};
use crate::foliation::{degree_sequence, from_form};
use crate::paperlab::families::{affine_coefficients, general_at, general_params, general_quadratic_form, ParamForm};
use crate::paperlab::obstructions::{geometric_monomial, monomial_div_obstructions, solution_space};

pub(crate) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef { id: "transv.riccati", anchor: "Riccati triplet; F_omega5 is a Riccati foliation", criterion: 11, run: transv_riccati },
        CheckDef { id: "transv.omega3", anchor: "sl(2) triplet of F_omega3 with theta2 = 0", criterion: 11, run: transv_omega3 },
        CheckDef { id: "transv.eta_prime", anchor: "dx/(x(1+x)) - dy/(y(1+y)) is closed", criterion: 11, run: transv_eta_prime },
        CheckDef { id: "transv.omega8", anchor: "F_omega8 is given by a closed 1-form", criterion: 11, run: transv_omega8 },
        CheckDef { id: "transv.sigma_eta", anchor: "sigma^*eta = xyz(-(y+z)dx + (x+z)dy + (x-y)dz)", criterion: 11, run: transv_sigma_eta },
        CheckDef { id: "degseq.rho", anchor: "rho-word degree diagram 2 -> 5 -> 2", criterion: 12, run: degseq_rho },
        CheckDef { id: "degseq.xi.S1", anchor: "xi-word degree diagram 2 -> 4 -> 2", criterion: 12, run: degseq_xi_s1 },
        CheckDef { id: "degseq.xi.S2", anchor: "xi-word degree diagram 2 -> 2 -> 2", criterion: 12, run: degseq_xi_s2 },
        CheckDef { id: "degseq.tau", anchor: "tau-word degree diagram 2 -> 5 -> 4 -> 5 -> 2", criterion: 12, run: degseq_tau },
        CheckDef { id: "degseq.psi", anchor: "Psi-word degree diagram 2 -> 4 -> 3 -> 5 -> 3 -> 5 -> 3 -> 4 -> 2", criterion: 12, run: degseq_psi },
    ]
}

fn rfn(n: &MPoly, d: &MPoly) -> Result<RationalFn> {
    RationalFn::new(n.clone(), d.clone())
}

fn affine(name: &str) -> Result<Aff1Form> {
    let (a, b) = affine_coefficients(name)?;
    Aff1Form::from_polys(a, b)
}

fn transv_riccati(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let p = |s: &str| RationalFn::poly(poly(s, &t));
    // generic quadratic coefficients in x
    let [t0, t1, t2] = riccati_triplet(&p("a0 + a1*x + a2*x^2"), &p("b0 + b1*x + b2*x^2"), &p("c0 + c1*x + c2*x^2"))?;
    let generic = sl2_triplet_check(&t0, &t1, &t2);

    let den = poly("beta + delta*x + alpha*x^2", &t);
    let coeff = |s: &str| -> Result<RationalFn> { rfn(&poly(s, &t), &den) };
    let w5 = affine("omega5")?;
    let mut out = Outcome::exact(generic).with("generic_triplet", generic);
    for (key, b) in [("omega5", "-(gamma + kappa*x)"), ("omega5_displayed_gamma_plus_kappa", "-(gamma + kappa)")] {
        let [s0, s1, s2] = riccati_triplet(&coeff("-epsilon")?, &coeff(b)?, &coeff("-lambda")?)?;
        let tangent = s0.wedge(&w5).is_zero();
        let triplet = sl2_triplet_check(&s0, &s1, &s2);
        if key == "omega5" {
            out = out.and(tangent && triplet);
        }
        out = out.with(&format!("{key}.tangent"), tangent).with(&format!("{key}.triplet"), triplet);
    }
    Ok(out)
}

fn omega3_triplet(sign: i64, w: &Aff1Form, vals: &[(usize, Rational)]) -> Result<bool> {
    let t = w.table().clone();
    let p = |s: &str| poly(s, &t).specialize(vals, &t);
    let one = RationalFn::constant(&t, int(1));
    let zero = RationalFn::zero(&t);
    let ratio = w.b.mul(&RationalFn::new(w.a.den().clone(), w.a.num().clone())?);
    let ratio = if sign < 0 { ratio.neg() } else { ratio };
    let t0 = Aff1Form::new(one, ratio)?;
    let t1 = Aff1Form::new(
        zero.clone(),
        rfn(&p("kappa + gamma*y - lambda*y^2")?, &p("y*(kappa + epsilon*y + lambda*y^2)")?)?,
    )?;
    let t2 = Aff1Form::new(zero.clone(), zero)?;
    Ok(t0.wedge(w).is_zero() && sl2_triplet_check(&t0, &t1, &t2))
}

fn transv_omega3(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let symbolic = affine("omega3")?;
    let exact = omega3_triplet(1, &symbolic, &[])?;
    let displayed = omega3_triplet(-1, &symbolic, &[])?;
    let names = ["alpha", "beta", "gamma", "delta", "epsilon", "kappa", "lambda"];
    let mut sampled = 0;
    let mut all = true;
    while sampled < 5 {
        let vals: Vec<(usize, Rational)> = names
            .iter()
            .map(|n| (t.index(n).expect("standard"), int(rng.gen_range(-6..=6))))
            .collect();
        let (a, b) = affine_coefficients("omega3")?;
        let a = a.specialize(&vals, &t)?;
        // keep kappa + epsilon y + lambda y^2 nonzero
        if a.is_zero() {
            continue;
        }
        let w = Aff1Form::from_polys(a, b.specialize(&vals, &t)?)?;
        all &= omega3_triplet(1, &w, &vals)?;
        sampled += 1;
    }
    Ok(Outcome::exact(exact && all)
        .with("symbolic", exact)
        .with("samples", sampled)
        .with("samples_ok", all)
        .with("theta0_as_displayed", displayed)
        .with("theta0", "dx + B/(y(kappa + epsilon y + lambda y^2)) dy"))
}

fn transv_eta_prime(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let g = geo();
    let closed_form = Aff1Form::new(
        rfn(&poly("1", &g), &poly("x*(1 + x)", &g))?,
        rfn(&poly("-1", &g), &poly("y*(1 + y)", &g))?,
    )?;
    let eta = Aff1Form::from_polys(poly("y*(1 + y)", &g), poly("-x*(1 + x)", &g))?;
    let closed = closed_form.is_closed();
    let tangent = closed_form.wedge(&eta).is_zero();
    Ok(Outcome::exact(closed && tangent).with("closed", closed).with("tangent", tangent))
}

/// `b dx / P(x) + dy / R(y)` for `omega8 = b R(y) dx + P(x) dy`.
fn omega8_closed(w: &Aff1Form, t: &Table, ab: Option<(&Rational, &Rational)>) -> Result<(bool, bool)> {
    let at = |s: &str| -> Result<MPoly> {
        let p = poly(s, t);
        match ab {
            Some((a, b)) => p.specialize(&[(t.index("a")?, a.clone()), (t.index("b")?, b.clone())], t),
            None => Ok(p),
        }
    };
    let r = at("b^2 - a*b + 1 + (a - 2*b)*y + y^2")?;
    let p = at("b^2 - a*b + 1 + (a*b - 2)*x + x^2")?;
    let form = Aff1Form::new(rfn(&at("b")?, &p)?, rfn(&at("1")?, &r)?)?;
    Ok((form.is_closed(), form.wedge(w).is_zero()))
}

fn transv_omega8(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let (closed, tangent) = omega8_closed(&affine("omega8")?, &t, None)?;
    let mut all = true;
    let mut pts = Vec::new();
    for _ in 0..5 {
        let (a, b) = loop {
            let a = int(rng.gen_range(-6..=6));
            let b = int(rng.gen_range(-6..=6));
            if !num_traits::Zero::is_zero(&b) && &a * &a != int(4) {
                break (a, b);
            }
        };
        let (wa, wb) = affine_coefficients("omega8")?;
        let vals = [(t.index("a")?, a.clone()), (t.index("b")?, b.clone())];
        let w = Aff1Form::from_polys(wa.specialize(&vals, &t)?, wb.specialize(&vals, &t)?)?;
        let (c, tg) = omega8_closed(&w, &t, Some((&a, &b)))?;
        all &= c && tg;
        pts.push(format!("({a},{b})"));
    }
    Ok(Outcome::exact(closed && tangent && all)
        .with("symbolic_closed", closed)
        .with("symbolic_tangent", tangent)
        .with("sampled_ab", pts.join(" "))
        .with("samples_ok", all))
}

fn transv_sigma_eta(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let g = geo();
    let eta = triple("[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]", &g);
    let raw = Proj1Form::new(pullback_triple(&builtins::sigma(&g), &eta)?)?;
    let m = raw.content_monomial();
    let reduced = raw.div_monomial(&m)?;
    let expected = form("[-(y + z), x + z, x - y]", &g);
    let matches = reduced.proportional(&expected);
    let content = MPoly::term(&g, m.clone(), int(1));
    // the factor in front of the bracket, read off the raw pullback
    let factor = raw.components()[0]
        .trial_divide(&expected.components()[0])?
        .ok_or_else(|| Error::Binding("bracket does not divide".into()))?;
    Ok(Outcome::exact(matches)
        .with("reduced_bracket_matches", matches)
        .with("content", content)
        .with("factor", factor)
        .with("displayed_factor", "x*y*z"))
}

fn sequence_check(samples: &[(String, Vec<u32>)], expected: &[u32]) -> Outcome {
    let ok = samples.iter().all(|(_, s)| s == expected);
    let mut out = Outcome::sampled(ok).with("expected", seq_str(expected));
    for (i, (name, s)) in samples.iter().enumerate() {
        out = out.with(&format!("sample{i}"), format!("{name}: {}", seq_str(s)));
    }
    out
}

fn family_sequences(word: &str, fams: &[&str], rng: &mut ChaCha8Rng) -> Result<Vec<(String, Vec<u32>)>> {
    let g = geo();
    let w = builtins::word(word, &g).expect("built-in word");
    let mut v = Vec::new();
    for i in 0..5 {
        let fam = fams[i % fams.len()];
        let f = family_sample(fam, rng)?;
        v.push((fam.to_string(), degree_sequence(&w, &f)?));
    }
    Ok(v)
}

fn degseq_rho(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = family_sequences("rho_word", &["omega3", "omega4", "omega5"], rng)?;
    Ok(sequence_check(&s, &[2, 5, 2]))
}

fn degseq_tau(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = family_sequences("tau_word", &["omega6"], rng)?;
    Ok(sequence_check(&s, &[2, 5, 4, 5, 2]))
}

fn degseq_psi(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = family_sequences("psi_word", &["omega9"], rng)?;
    Ok(sequence_check(&s, &[2, 4, 3, 5, 3, 5, 3, 4, 2]))
}

/// `l2 = (a y + b z : c y + e z : f x + g y + h z)` with random nonzero
/// entries.
fn random_l2(rng: &mut ChaCha8Rng, t: &Table) -> RatMap {
    loop {
        let mut r = || int(rng.gen_range(1..=30) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let m = [[int(0), r(), r()], [int(0), r(), r()], [r(), r(), r()]];
        if let Ok(l) = RatMap::linear(m, t) {
            return l;
        }
    }
}

/// A degree-2 foliation `F` with `m1 | sigma^*F` and `m2 | sigma^*(l2^*(sigma^*F / m1))`.
fn xi_member(l2: &RatMap, m1: [u32; 3], m2: [u32; 3], rng: &mut ChaCha8Rng) -> Result<Option<crate::foliation::Foliation>> {
    let t = std_t();
    let sigma = builtins::sigma(&t);
    let gp = general_params();
    let idx: Vec<usize> = gp.iter().map(|n| t.index(n).expect("standard")).collect();
    let first = monomial_div_obstructions(&sigma, &general_quadratic_form(), &geometric_monomial(&t, m1))?;
    let basis = solution_space(&first, &idx)?;
    if basis.len() > idx.len() {
        return Err(Error::Binding("too many basis vectors".into()));
    }
    // w1(t) = sum t_i sigma^*(W_i) / m1 with t_i carried by the general parameter names
    let mono = geometric_monomial(&t, m1);
    let mut w1: [MPoly; 3] = std::array::from_fn(|_| MPoly::zero(&t));
    for (v, ti) in basis.iter().zip(&idx) {
        let w = general_at(v)?;
        let raw = pullback_triple(&sigma, w.components())?;
        let tv = MPoly::var_index(&t, *ti);
        for (acc, c) in w1.iter_mut().zip(&raw) {
            let q = c.div_monomial(&mono).ok_or_else(|| Error::Binding("m1 does not divide".into()))?;
            acc.add_assign(&(&q * &tv));
        }
    }
    let w1 = ParamForm::new(Proj1Form::new(pullback_triple(l2, &w1)?)?);
    let second = monomial_div_obstructions(&sigma, &w1, &geometric_monomial(&t, m2))?;
    let tidx: Vec<usize> = idx[..basis.len()].to_vec();
    let sols = solution_space(&second, &tidx)?;
    if sols.is_empty() {
        return Ok(None);
    }
    for _ in 0..20 {
        let mut coords = vec![int(0); 18];
        for s in &sols {
            let c = int(rng.gen_range(1..=30) * if rng.gen_bool(0.5) { 1 } else { -1 });
            for (k, b) in basis.iter().enumerate() {
                for (x, bj) in coords.iter_mut().zip(b) {
                    *x += &c * &s[k] * bj;
                }
            }
        }
        let Some(w) = general_nonzero(&coords)? else {
            continue;
        };
        let f = from_form(&w)?;
        if f.degree() == 2 {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn xi_sequences(m1: [u32; 3], m2: [u32; 3], expected: &[u32], rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let g = geo();
    let t = std_t();
    let mut samples = Vec::new();
    let mut tries = 0;
    while samples.len() < 5 && tries < 25 {
        tries += 1;
        let l2 = random_l2(rng, &t);
        let Some(f) = xi_member(&l2, m1, m2, rng)? else {
            continue;
        };
        let l2g = l2.embed(&g)?;
        let word = MapWord::new(vec![builtins::sigma(&g), l2g.clone(), builtins::sigma(&g)]);
        samples.push((l2g.to_string(), degree_sequence(&word, &f)?));
    }
    let mut out = sequence_check(&samples, expected);
    if samples.len() < 5 {
        out = out.and(false);
    }
    Ok(out.with("samples", samples.len()))
}

fn degseq_xi_s1(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    xi_sequences([0, 0, 2], [4, 2, 2], &[2, 4, 2], rng)
}

fn degseq_xi_s2(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    xi_sequences([0, 2, 2], [2, 0, 2], &[2, 2, 2], rng)
}
