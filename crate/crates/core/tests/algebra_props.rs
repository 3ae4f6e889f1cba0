use cremona_core::exactalg::{gcd, int, resultant, MPoly, Monomial, Rational, SymbolTable, Table};
use cremona_core::parse::parse_poly;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn geo() -> Table {
    SymbolTable::geometric()
}

fn poly_from(terms: &[([u32; 3], i64)]) -> MPoly {
    let t = geo();
    MPoly::from_terms(
        &t,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.to_vec()), int(*c))),
    )
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::array::uniform3(0u32..4), -9i64..=9), 0..6)
        .prop_map(|v| poly_from(&v))
}

/// `prod (x - r)` in `x` only.
fn from_roots(roots: &[i64]) -> MPoly {
    let t = geo();
    let x = MPoly::var(&t, "x").unwrap();
    roots.iter().fold(MPoly::one(&t), |acc, r| {
        &acc * &(&x - &MPoly::constant(&t, int(*r)))
    })
}

proptest! {
    #[test]
    fn display_reparses_to_the_same_polynomial(p in arb_poly()) {
        let q = parse_poly(&p.to_string(), &geo()).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn multiplication_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
    }

    #[test]
    fn subtraction_inverts_addition(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j) for monic inputs.
    #[test]
    fn resultant_matches_root_product(
        a in prop::collection::vec(-6i64..=6, 1..4),
        b in prop::collection::vec(-6i64..=6, 1..4),
    ) {
        let r = resultant(&from_roots(&a), &from_roots(&b), 0).unwrap();
        let mut expected = Rational::one();
        for ai in &a {
            for bj in &b {
                expected *= int(ai - bj);
            }
        }
        prop_assert_eq!(r.constant_value().unwrap_or_else(Rational::zero), expected);
    }

    // Disjoint root sets leave exactly the shared factor.
    #[test]
    fn gcd_recovers_common_factor(
        common in prop::collection::vec(-5i64..=5, 0..3),
        left in prop::collection::vec(6i64..=9, 0..3),
        right in prop::collection::vec(-9i64..=-6, 0..3),
    ) {
        let f = from_roots(&common);
        let p = &f * &from_roots(&left);
        let q = &f * &from_roots(&right);
        let g = gcd(&p, &q).unwrap();
        prop_assert_eq!(g.monic(), f.monic());
    }
}

#[test]
fn resultant_of_linear_factors_vanishes_on_shared_root() {
    let r = resultant(&from_roots(&[1, 2]), &from_roots(&[2, 5]), 0).unwrap();
    assert!(r.is_zero());
}
