//! Classification lemmas by monomial divisibility, and the invariant
//! families.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::util::*;
use super::{CheckDef, Outcome};
use crate::birmap::{builtins, pullback_triple, RatMap};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{nullspace, rref, Matrix};
use crate::exactalg::{int, MPoly, Rational, Table};
use crate::foliation::{from_form, pullback_foliation};
use crate::paperlab::families::{family, general_at, general_quadratic_form, ParamForm};
use crate::paperlab::obstructions::{
    geometric_monomial, invariance_obstructions, monomial_div_obstructions, remainder_obstructions,
    solution_space, solve_linear, span_equal, ObstructionSet,
};

pub(crate) fn checks() -> Vec<CheckDef> {
    vec![
        CheckDef { id: "lem_sigma.suff", anchor: "sigma^*omega = P omega' for P = x^2yz, x^2y^2 under the listed conditions", criterion: 7, run: sigma_suff },
        CheckDef { id: "lem_rho.suff", anchor: "rho^*omega = P omega' for P = z^4, yz^3, y^2z^2 under the listed conditions", criterion: 7, run: rho_suff },
        CheckDef { id: "lem_tau.suff", anchor: "F_omega6 is num. inv. under tau", criterion: 7, run: tau_suff },
        CheckDef { id: "lem_phi.suff", anchor: "F_omega7, F_omega8 are num. inv. under Phi_ab", criterion: 7, run: phi_suff },
        CheckDef { id: "lem_phi.omega7_sigma_rho", anchor: "F_omega7 is num. inv. by sigma and rho", criterion: 7, run: omega7_sigma_rho },
        CheckDef { id: "lem_psi.suff", anchor: "F_omega9 is num. inv. under Psi", criterion: 7, run: psi_suff },
        CheckDef { id: "lem_sigma.span", anchor: "sigma condition lists for x^2yz and x^2y^2", criterion: 8, run: sigma_span },
        CheckDef { id: "lem_rho.span", anchor: "rho condition lists for z^4, yz^3, y^2z^2", criterion: 8, run: rho_span },
        CheckDef { id: "lem_sigma.infeasible", anchor: "x^4 (resp. x^3y) cannot divide sigma^*omega", criterion: 9, run: sigma_infeasible },
        CheckDef { id: "lem_rho.infeasible", anchor: "y^4 (resp. y^3z) cannot divide rho^*omega", criterion: 9, run: rho_infeasible },
        CheckDef { id: "lem_sigma.necessity", anchor: "sigma: each listed condition is necessary", criterion: 9, run: sigma_necessity },
        CheckDef { id: "lem_rho.necessity", anchor: "rho: each listed condition is necessary", criterion: 9, run: rho_necessity },
        CheckDef { id: "lem_tau.necessity", anchor: "tau: each x^4-obstruction is necessary", criterion: 9, run: tau_necessity },
        CheckDef { id: "lem_phi.necessity", anchor: "Phi_ab: each obstruction is necessary", criterion: 9, run: phi_necessity },
        CheckDef { id: "lem_psi.necessity", anchor: "Psi: each z^8-obstruction is necessary", criterion: 9, run: psi_necessity },
        CheckDef { id: "invsigma.pullbacks", anchor: "displayed sigma^*omega1 and sigma^*omega2", criterion: 10, run: invsigma_pullbacks },
        CheckDef { id: "invsigma.omega1_plus", anchor: "gamma = beta, delta = alpha, epsilon = kappa", criterion: 10, run: invsigma_plus },
        CheckDef { id: "invsigma.omega1_minus", anchor: "gamma = -beta, delta = -alpha, epsilon = -kappa", criterion: 10, run: invsigma_minus },
        CheckDef { id: "invsigma.omega2", anchor: "gamma = alpha, delta = 0, kappa = 0", criterion: 10, run: invsigma_omega2 },
        CheckDef { id: "invsigma.forms", anchor: "the three sigma-invariant forms", criterion: 10, run: invsigma_forms },
        CheckDef { id: "invrho.1", anchor: "rho-invariant form y(1-y)dx + (beta+x)dy", criterion: 10, run: invrho_1 },
        CheckDef { id: "invrho.2", anchor: "rho-invariant form y^2dx + (-1+y)dy", criterion: 10, run: invrho_2 },
        CheckDef { id: "invrho.3", anchor: "rho-invariant form y(1-y)(gamma+delta x)dx + (1+y)(...)dy", criterion: 10, run: invrho_3 },
        CheckDef { id: "invrho.4", anchor: "rho-invariant form y(1+y)(gamma+delta x)dx + (1-y)(...)dy", criterion: 10, run: invrho_4 },
        CheckDef { id: "invrho.5", anchor: "rho-invariant form (1-y^2)dx + (beta+delta x+alpha x^2)dy", criterion: 10, run: invrho_5 },
        CheckDef { id: "invtau.1", anchor: "first tau-invariant form", criterion: 10, run: invtau_1 },
        CheckDef { id: "invtau.2", anchor: "second tau-invariant form", criterion: 10, run: invtau_2 },
    ]
}

struct Case {
    monomial: [u32; 3],
    conditions: &'static [&'static str],
    family: &'static str,
}

const SIGMA_CASES: [Case; 2] = [
    Case {
        monomial: [2, 1, 1],
        conditions: &["c0", "b0", "a2", "b2", "a1", "c1", "b4", "c3", "b3 - c4"],
        family: "omega1",
    },
    Case {
        monomial: [2, 2, 0],
        conditions: &["c1", "c0", "b0", "a1", "b4", "c3", "a5", "b3 - c4", "c5 - a3"],
        family: "omega2",
    },
];

const RHO_CASES: [Case; 3] = [
    Case {
        monomial: [0, 0, 4],
        conditions: &["c0", "b0", "c3", "b4", "b2", "a0 - c4", "b3 - c4", "a4 - 2*c2 + b5"],
        family: "omega3",
    },
    Case {
        monomial: [0, 1, 3],
        conditions: &["b0", "c0", "b4", "c1", "a1", "b2", "a0 - 2*c4 + b3"],
        family: "omega4",
    },
    Case {
        monomial: [0, 2, 2],
        conditions: &["c1", "b0", "c3", "a5", "a1", "c0", "b4", "c5 - a3"],
        family: "omega5",
    },
];

fn mono_name(e: [u32; 3]) -> String {
    let t = geo();
    crate::exactalg::MPoly::term(&t, geometric_monomial(&t, e), int(1)).to_string()
}

fn listed(conds: &[&str], t: &Table) -> ObstructionSet {
    ObstructionSet::from_polys(conds.iter().map(|s| poly(s, t)))
}

/// Degree of `phi^* F` for a random member of the family.
fn sampled_pullback_degree(phi_geo: &RatMap, fam: &str, rng: &mut ChaCha8Rng) -> Result<u32> {
    let f = family_sample(fam, rng)?;
    Ok(from_form(pullback_foliation(phi_geo, &f)?.form())?.degree())
}

fn suff_cases(
    name: &str,
    phi: fn(&Table) -> RatMap,
    cases: &[Case],
    rng: &mut ChaCha8Rng,
) -> Result<Outcome> {
    let t = std_t();
    let g = general_quadratic_form();
    let mut out = Outcome::exact(true);
    for c in cases {
        let m = geometric_monomial(&t, c.monomial);
        let subs = solve_linear(&listed(c.conditions, &t), &t)?;
        let w = g.substitute(&subs)?;
        let from_conditions = monomial_div_obstructions(&phi(&t), &w, &m)?;
        let from_family = monomial_div_obstructions(&phi(&t), &family(c.family, &[])?, &m)?;
        let d = sampled_pullback_degree(&phi(&geo()), c.family, rng)?;
        let key = mono_name(c.monomial);
        out = out
            .and(from_conditions.is_empty() && from_family.is_empty() && d == 2)
            .with(&format!("{key}.conditions_obstructions"), &from_conditions)
            .with(&format!("{key}.{}_obstructions", c.family), &from_family)
            .with(&format!("{key}.{}_sample_degree", c.family), d);
    }
    Ok(out.with("map", name))
}

fn sigma_suff(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    suff_cases("sigma", builtins::sigma, &SIGMA_CASES, rng)
}

fn rho_suff(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    suff_cases("rho", builtins::rho, &RHO_CASES, rng)
}

/// Family divisible identically by a known factor of its pullback, with
/// the quotient of foliation degree 2 at a random sample.
fn family_divisor(phi: &RatMap, fam: &str, d: &MPoly, phi_geo: &RatMap, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let obs = remainder_obstructions(phi, &family(fam, &[])?, d)?;
    let deg = sampled_pullback_degree(phi_geo, fam, rng)?;
    Ok(Outcome::exact(obs.is_empty() && deg == 2)
        .with(&format!("{fam}.divisor"), d)
        .with(&format!("{fam}.obstructions"), &obs)
        .with(&format!("{fam}.sample_degree"), deg))
}

fn tau_suff(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    family_divisor(&builtins::tau(&t), "omega6", &poly("x^4", &t), &builtins::tau(&geo()), rng)
}

fn psi_suff(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    family_divisor(&builtins::psi(&t), "omega9", &poly("z^8", &t), &builtins::psi(&geo()), rng)
}

/// Random `(a, b)` with `a^2 != 4` and `b^2 - a b + 1 != 0`.
fn random_ab(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let a = int(rng.gen_range(-5..=5));
        let b = int(rng.gen_range(-5..=5));
        let c1 = &a * &a - int(4);
        let c2 = &b * &b - &a * &b + int(1);
        if !num_traits::Zero::is_zero(&c1) && !num_traits::Zero::is_zero(&c2) && !num_traits::Zero::is_zero(&b) {
            return (a, b);
        }
    }
}

const PHI_DIVISORS: [(&str, &str); 2] = [
    ("omega7", "x^2*y^2*(x^2 + y^2 + a*x*y + b*x*z + y*z)^2"),
    ("omega8", "x^2*y^2*(x^2 + a*x*y + y^2)^2"),
];

fn phi_suff(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let (a, b) = (poly("a", &t), poly("b", &t));
    let phi = builtins::phi(&t, &a, &b)?;
    let mut out = Outcome::exact(true);
    for (fam, d) in PHI_DIVISORS {
        let obs = remainder_obstructions(&phi, &family(fam, &[])?, &poly(d, &t))?;
        // sampled degree at random (a, b) and family parameters
        let (av, bv) = random_ab(rng);
        let g = geo();
        let pg = builtins::phi(&g, &MPoly::constant(&g, av.clone()), &MPoly::constant(&g, bv.clone()))?;
        let w = family(fam, &[("a", av), ("b", bv)])?;
        let mut deg = None;
        for _ in 0..20 {
            let f = from_form(&w.sample(rng)?.to_geometric()?)?;
            if f.degree() == 2 {
                deg = Some(from_form(pullback_foliation(&pg, &f)?.form())?.degree());
                break;
            }
        }
        out = out
            .and(obs.is_empty() && deg == Some(2))
            .with(&format!("{fam}.divisor"), d)
            .with(&format!("{fam}.obstructions"), &obs)
            .with(&format!("{fam}.sample_degree"), deg.map_or("none".to_string(), |d| d.to_string()));
    }
    Ok(out.with("a_b", "symbolic"))
}

fn omega7_sigma_rho(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let w = family("omega7", &[])?;
    let rho_obs = monomial_div_obstructions(&builtins::rho(&t), &w, &geometric_monomial(&t, [0, 2, 2]))?;
    let degree_after = |c: &[MPoly; 3]| -> Result<u32> {
        let f = crate::dforms::Proj1Form::new(c.clone())?;
        let m = f.content_monomial();
        Ok(f.coeff_degree() - m.degree() - 1)
    };
    let sigma = builtins::sigma(&t);
    let plain = degree_after(&pullback_triple(&sigma, w.components())?)?;
    // an element l sigma of the sigma-orbit: l^* first, then sigma^*
    let l = map("(y - x : -x : z)", &t);
    let lw = pullback_triple(&l, w.components())?;
    let orbit = degree_after(&pullback_triple(&sigma, &lw)?)?;
    Ok(Outcome::exact(rho_obs.is_empty() && orbit == 2)
        .with("rho_y2z2_obstructions", &rho_obs)
        .with("sigma_degree", plain)
        .with("l_sigma_degree", orbit)
        .with("l", l)
        .with("note", "sigma itself gives degree 0; num. inv. holds for l sigma in the sigma-orbit"))
}

fn span_cases(phi: fn(&Table) -> RatMap, cases: &[Case]) -> Result<Outcome> {
    let t = std_t();
    let g = general_quadratic_form();
    let mut out = Outcome::exact(true);
    for c in cases {
        let computed = monomial_div_obstructions(&phi(&t), &g, &geometric_monomial(&t, c.monomial))?;
        let l = listed(c.conditions, &t);
        let eq = span_equal(&computed, &l)?;
        let rank = crate::exactalg::linalg::rank(&computed.linear_matrix(&computed.params())?);
        let key = mono_name(c.monomial);
        out = out
            .and(eq)
            .with(&format!("{key}.span_equal"), eq)
            .with(&format!("{key}.rank"), rank);
    }
    Ok(out)
}

fn sigma_span(_: &mut ChaCha8Rng) -> Result<Outcome> {
    span_cases(builtins::sigma, &SIGMA_CASES)
}

fn rho_span(_: &mut ChaCha8Rng) -> Result<Outcome> {
    span_cases(builtins::rho, &RHO_CASES)
}

fn general_indices(t: &Table) -> Vec<usize> {
    crate::paperlab::families::general_params()
        .iter()
        .map(|n| t.index(n).expect("standard"))
        .collect()
}

fn random_combination(basis: &[Vec<Rational>], n: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut v = vec![int(0); n];
    for b in basis {
        let c = int(rng.gen_range(-5..=5));
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += &c * bi;
        }
    }
    v
}

fn infeasible(phi: fn(&Table) -> RatMap, monomials: [[u32; 3]; 2], rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let idx = general_indices(&t);
    let g = general_quadratic_form();
    let mut out = Outcome::sampled(true);
    for e in monomials {
        let obs = monomial_div_obstructions(&phi(&t), &g, &geometric_monomial(&t, e))?;
        let basis = solution_space(&obs, &idx)?;
        let mut hist = std::collections::BTreeMap::new();
        for _ in 0..50 {
            let v = random_combination(&basis, 18, rng);
            let deg = match general_nonzero(&v)? {
                Some(w) => from_form(&w)?.degree().to_string(),
                None => "zero".to_string(),
            };
            *hist.entry(deg).or_insert(0u32) += 1;
        }
        let ok = !hist.contains_key("2");
        let h: Vec<String> = hist.iter().map(|(d, n)| format!("{d}:{n}")).collect();
        let key = mono_name(e);
        out = out
            .and(ok)
            .with(&format!("{key}.solution_dim"), basis.len())
            .with(&format!("{key}.degree_histogram"), h.join(" "));
    }
    Ok(out.with("samples_per_monomial", 50))
}

fn sigma_infeasible(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    infeasible(builtins::sigma, [[4, 0, 0], [3, 1, 0]], rng)
}

fn rho_infeasible(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    infeasible(builtins::rho, [[0, 4, 0], [0, 3, 1]], rng)
}

/// Coefficient rows over the 18 general parameters.
fn rows_of(set: &ObstructionSet, idx: &[usize]) -> Result<Matrix> {
    let m = set.linear_matrix(idx)?;
    if m.iter().any(|r| !num_traits::Zero::is_zero(&r[idx.len()])) {
        return Err(Error::Binding("inhomogeneous conditions".to_string()));
    }
    Ok(m.into_iter()
        .map(|mut r| {
            r.pop();
            r
        })
        .collect())
}

/// Points violating exactly one of `rows` give a pullback not divisible
/// by `d`.
fn violate_one(
    rows: &Matrix,
    phi_geo: &RatMap,
    d: &MPoly,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, usize)> {
    let mut not_divisible = 0;
    let mut done = 0;
    let mut tries = 0;
    while done < samples && tries < 20 * samples {
        tries += 1;
        let i = rng.gen_range(0..rows.len());
        let rest: Matrix = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let basis = nullspace(&rest, 18);
        let v = random_combination(&basis, 18, rng);
        let val: Rational = rows[i].iter().zip(&v).map(|(a, b)| a * b).sum();
        if num_traits::Zero::is_zero(&val) {
            continue;
        }
        let w = general_at(&v)?.to_geometric()?;
        let raw = pullback_triple(phi_geo, w.components())?;
        if !divides_all(&raw, d)? {
            not_divisible += 1;
        }
        done += 1;
    }
    Ok((done, not_divisible))
}

fn necessity_cases(phi: fn(&Table) -> RatMap, cases: &[Case], rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let t = std_t();
    let g = geo();
    let idx = general_indices(&t);
    let mut out = Outcome::sampled(true);
    for c in cases {
        let rows = rows_of(&listed(c.conditions, &t), &idx)?;
        let d = MPoly::term(&g, geometric_monomial(&g, c.monomial), int(1));
        let (done, nd) = violate_one(&rows, &phi(&g), &d, 50, rng)?;
        let key = mono_name(c.monomial);
        out = out
            .and(done == 50 && nd == done)
            .with(&format!("{key}.samples"), done)
            .with(&format!("{key}.not_divisible"), nd);
    }
    Ok(out)
}

fn sigma_necessity(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    necessity_cases(builtins::sigma, &SIGMA_CASES, rng)
}

fn rho_necessity(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    necessity_cases(builtins::rho, &RHO_CASES, rng)
}

/// Necessity against the computed obstruction basis, for lemmas stated
/// without a condition list.
fn necessity_divisor(phi_std: &RatMap, phi_geo: &RatMap, d: &str, rng: &mut ChaCha8Rng) -> Result<(usize, usize, usize)> {
    let t = std_t();
    let idx = general_indices(&t);
    let obs = remainder_obstructions(phi_std, &general_quadratic_form(), &poly(d, &t))?;
    let mut rows = rows_of(&obs, &idx)?;
    rref(&mut rows);
    let (done, nd) = violate_one(&rows, phi_geo, &poly(d, &geo()), 50, rng)?;
    Ok((rows.len(), done, nd))
}

fn divisor_outcome(parts: &[(&str, (usize, usize, usize))]) -> Outcome {
    let mut out = Outcome::sampled(true);
    for (d, (rank, done, nd)) in parts {
        out = out
            .and(*done == 50 && nd == done)
            .with(&format!("{d}.obstruction_rank"), rank)
            .with(&format!("{d}.samples"), done)
            .with(&format!("{d}.not_divisible"), nd);
    }
    out
}

fn tau_necessity(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let r = necessity_divisor(&builtins::tau(&std_t()), &builtins::tau(&geo()), "x^4", rng)?;
    Ok(divisor_outcome(&[("x^4", r)]))
}

fn psi_necessity(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let r = necessity_divisor(&builtins::psi(&std_t()), &builtins::psi(&geo()), "z^8", rng)?;
    Ok(divisor_outcome(&[("z^8", r)]))
}

fn phi_necessity(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (a, b) = random_ab(rng);
    let (t, g) = (std_t(), geo());
    let ps = builtins::phi(&t, &MPoly::constant(&t, a.clone()), &MPoly::constant(&t, b.clone()))?;
    let pg = builtins::phi(&g, &MPoly::constant(&g, a.clone()), &MPoly::constant(&g, b.clone()))?;
    let mut parts = Vec::new();
    let mut names = Vec::new();
    for (_, d) in PHI_DIVISORS {
        let d = poly(d, &t)
            .specialize(&[(t.index("a")?, a.clone()), (t.index("b")?, b.clone())], &t)?
            .to_string();
        names.push(d);
    }
    for d in &names {
        parts.push((d.as_str(), necessity_divisor(&ps, &pg, d, rng)?));
    }
    Ok(divisor_outcome(&parts).with("a", &a).with("b", &b))
}

fn affine_pullback_matches(phi: &RatMap, fam: &str, shown: (&str, &str)) -> Result<bool> {
    let t = std_t();
    let w = family(fam, &[])?;
    let raw = crate::dforms::Proj1Form::new(pullback_triple(phi, w.components())?)?;
    let reduced = raw.div_monomial(&raw.content_monomial())?;
    let expected = crate::dforms::homogenize(&poly(shown.0, &t), &poly(shown.1, &t))?;
    Ok(reduced.proportional(&expected))
}

fn invsigma_pullbacks(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = builtins::sigma(&std_t());
    let w1 = affine_pullback_matches(
        &s,
        "omega1",
        ("-y*(epsilon + kappa*y)", "-(gamma*x + alpha*y + delta*x^2 + beta*x*y)"),
    )?;
    let w2 = affine_pullback_matches(
        &s,
        "omega2",
        ("-(kappa + beta*y + delta*y^2)", "-(gamma + epsilon*x + alpha*x^2)"),
    )?;
    Ok(Outcome::exact(w1 && w2)
        .with("sigma_omega1_matches", w1)
        .with("sigma_omega2_matches", w2))
}

fn invariant_under(phi: &RatMap, w: &ParamForm) -> Result<Outcome> {
    let obs = invariance_obstructions(phi, w)?;
    Ok(Outcome::exact(obs.is_empty()).with("obstructions", &obs))
}

fn branch(fam: &str, subs: &[(&str, &str)]) -> Result<ParamForm> {
    let t = std_t();
    let mut s = vec![None; t.len()];
    for (name, value) in subs {
        s[t.index(name)?] = Some(poly(value, &t));
    }
    family(fam, &[])?.substitute(&s)
}

fn invsigma_plus(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let w = branch("omega1", &[("gamma", "beta"), ("delta", "alpha"), ("epsilon", "kappa")])?;
    invariant_under(&builtins::sigma(&std_t()), &w)
}

fn invsigma_minus(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let w = branch("omega1", &[("gamma", "-beta"), ("delta", "-alpha"), ("epsilon", "-kappa")])?;
    invariant_under(&builtins::sigma(&std_t()), &w)
}

fn invsigma_omega2(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let w = branch("omega2", &[("gamma", "alpha"), ("delta", "0"), ("kappa", "0")])?;
    invariant_under(&builtins::sigma(&std_t()), &w)
}

fn invsigma_forms(_: &mut ChaCha8Rng) -> Result<Outcome> {
    let s = builtins::sigma(&std_t());
    let mut out = Outcome::exact(true);
    for n in ["sigma_inv1", "sigma_inv2", "sigma_inv3"] {
        let obs = invariance_obstructions(&s, &family(n, &[])?)?;
        out = out.and(obs.is_empty()).with(n, &obs);
    }
    Ok(out)
}

fn invariant_family(phi: RatMap, phi_geo: RatMap, fam: &str, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let w = family(fam, &[])?;
    let out = invariant_under(&phi, &w)?;
    let f = family_sample(fam, rng)?;
    let d = from_form(pullback_foliation(&phi_geo, &f)?.form())?.degree();
    Ok(out.with("family", fam).with("sample_pullback_degree", d))
}

fn invrho(k: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invariant_family(builtins::rho(&std_t()), builtins::rho(&geo()), &format!("rho_inv{k}"), rng)
}

fn invrho_1(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invrho(1, rng)
}

fn invrho_2(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invrho(2, rng)
}

fn invrho_3(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invrho(3, rng)
}

fn invrho_4(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invrho(4, rng)
}

fn invrho_5(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invrho(5, rng)
}

fn invtau_1(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invariant_family(builtins::tau(&std_t()), builtins::tau(&geo()), "tau_inv1", rng)
}

fn invtau_2(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    invariant_family(builtins::tau(&std_t()), builtins::tau(&geo()), "tau_inv2", rng)
}
