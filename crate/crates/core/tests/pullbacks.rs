use cremona_core::birmap::{builtins, compose_reduce, pullback_raw, RatMap};
use cremona_core::dforms::{euler_contract, wedge11, Proj1Form};
use cremona_core::exactalg::{int, Rational, SymbolTable, Table};
use cremona_core::foliation::{from_form, pullback_foliation};
use cremona_core::parse::parse_form_literal;
use proptest::prelude::*;

fn geo() -> Table {
    SymbolTable::geometric()
}

/// Quadratic form `[y q3 - z q2, z q1 - x q3, x q2 - y q1]` from 18
/// coefficients, which satisfies the Euler identity by construction.
fn general(v: &[i64]) -> Option<Proj1Form> {
    let q = |k: usize| {
        let c = &v[6 * k..6 * k + 6];
        format!(
            "({}*x^2 + {}*x*y + {}*y^2 + {}*x*z + {}*y*z + {}*z^2)",
            c[0], c[1], c[2], c[3], c[4], c[5]
        )
    };
    let (q1, q2, q3) = (q(0), q(1), q(2));
    let lit = format!("[y*{q3} - z*{q2}, z*{q1} - x*{q3}, x*{q2} - y*{q1}]");
    Proj1Form::new(parse_form_literal(&lit, &geo()).ok()?).ok()
}

fn linear(m: [[i64; 3]; 3]) -> Option<RatMap> {
    RatMap::linear(m.map(|r| r.map(int)), &geo()).ok()
}

fn arb_linear() -> impl Strategy<Value = RatMap> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3)).prop_filter_map("singular", linear)
}

fn arb_form() -> impl Strategy<Value = Proj1Form> {
    prop::collection::vec(-4i64..=4, 18).prop_filter_map("zero form", |v| general(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn raw_pullback_keeps_euler_identity(w in arb_form(), l in arb_linear()) {
        let s = compose_reduce(&builtins::sigma(&geo()), &l).unwrap();
        let p = pullback_raw(&s, &w).unwrap();
        prop_assert!(euler_contract(p.components()).is_zero());
    }

    // (sigma o l)^* F = l^*(sigma^* F)
    #[test]
    fn pullback_is_contravariant(w in arb_form(), l in arb_linear()) {
        let g = geo();
        let f = from_form(&w).unwrap();
        let composite = compose_reduce(&builtins::sigma(&g), &l).unwrap();
        let at_once = pullback_foliation(&composite, &f).unwrap();
        let stepwise = pullback_foliation(&l, &pullback_foliation(&builtins::sigma(&g), &f).unwrap()).unwrap();
        prop_assert_eq!(at_once.degree(), stepwise.degree());
        prop_assert!(at_once.form().proportional(stepwise.form()));
    }

    #[test]
    fn linear_pullback_preserves_degree(w in arb_form(), l in arb_linear()) {
        let f = from_form(&w).unwrap();
        prop_assert_eq!(pullback_foliation(&l, &f).unwrap().degree(), f.degree());
    }

    #[test]
    fn wedge_with_itself_vanishes(w in arb_form()) {
        prop_assert!(wedge11(&w, &w).unwrap().is_zero());
    }

    #[test]
    fn involutions_fix_generic_degree(w in arb_form()) {
        let g = geo();
        let f = from_form(&w).unwrap();
        for m in [builtins::sigma(&g), builtins::rho(&g), builtins::tau(&g)] {
            let back = pullback_foliation(&m, &pullback_foliation(&m, &f).unwrap()).unwrap();
            prop_assert!(back.form().proportional(f.form()));
        }
    }
}

#[test]
fn sigma_pullback_of_eta_is_a_pencil() {
    let g = geo();
    let eta = Proj1Form::new(
        parse_form_literal("[y*z*(y + z), -x*z*(x + z), x*y*(x - y)]", &g).unwrap(),
    )
    .unwrap();
    let f = from_form(&eta).unwrap();
    assert_eq!(f.degree(), 2);
    let back = pullback_foliation(&builtins::sigma(&g), &f).unwrap();
    // linear coefficients: a foliation of degree 0
    assert_eq!(back.form().coeff_degree(), 1);
    assert_eq!(back.degree(), 0);
}

#[test]
fn scaling_the_form_does_not_change_the_foliation() {
    let w = general(&[1, 0, 2, -1, 0, 3, 0, 1, 0, 2, -2, 1, 1, 1, 0, 0, -1, 2]).unwrap();
    let half: Rational = Rational::new(1.into(), 2.into());
    let a = from_form(&w).unwrap();
    let b = from_form(&w.scale(&half).unwrap()).unwrap();
    assert!(a.form().proportional(b.form()));
}
