//! Ring laws and period-sequence properties on random Laurent polynomials.

use num_bigint::BigInt;
use proptest::prelude::*;
use pwhodge::poly::{period_sequence, period_sequence_opts, LaurentPoly, MonomialKey};
use pwhodge::{parse_laurent, substitute, RationalExpr};
use std::collections::BTreeMap;

fn vars3() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec(
        (prop::collection::vec(-3i64..=3, 3), -9i64..=9),
        0..=6,
    )) -> LaurentPoly {
        LaurentPoly::from_terms(
            &vars3(),
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap()
    }
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn addition_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.add(&b).unwrap().add(&c).unwrap();
        let right = a.add(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pow_is_additive(p in arb_poly(), m in 0u64..=4, n in 0u64..=4) {
        let left = p.pow(m + n);
        let right = p.pow(m).mul(&p.pow(n)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn print_parse_round_trip(p in arb_poly()) {
        let reparsed = parse_laurent(&p.to_string(), &vars3()).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn period_invariant_under_variable_permutation(
        p in arb_poly(),
        perm in Just([0usize, 1, 2]).prop_shuffle(),
    ) {
        let permuted = p.permute_vars(&perm).unwrap();
        prop_assert_eq!(period_sequence(&p, 5), period_sequence(&permuted, 5));
    }

    #[test]
    fn constant_term_of_monomial_product_picks_opposite_coefficient(
        p in arb_poly(),
        e in prop::collection::vec(-3i64..=3, 3),
        c in 1i64..=9,
    ) {
        let m = LaurentPoly::monomial(&vars3(), e.clone(), c).unwrap();
        let product = p.mul(&m).unwrap();
        let opposite = MonomialKey::new(e.iter().map(|x| -x).collect());
        prop_assert_eq!(product.constant_term(), p.coeff(&opposite) * BigInt::from(c));
    }

    #[test]
    fn pruned_and_unpruned_periods_agree(p in arb_poly(), n in 0usize..=7) {
        prop_assert_eq!(
            period_sequence_opts(&p, n, false),
            period_sequence_opts(&p, n, true)
        );
    }

    #[test]
    fn rational_equality_is_cross_multiplicative(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        // (a·b)/b must equal a/1
        let quotient = RationalExpr::new(a.mul(&b).unwrap(), b.clone()).unwrap();
        let plain = RationalExpr::from_poly(a.clone());
        prop_assert!(quotient.equivalent(&plain).unwrap());
    }

    #[test]
    fn identity_substitution_fixes_polynomials(p in arb_poly()) {
        let target = RationalExpr::from_poly(p.clone());
        let mut images = BTreeMap::new();
        for v in vars3() {
            images.insert(
                v.clone(),
                RationalExpr::from_poly(LaurentPoly::variable(&vars3(), &v).unwrap()),
            );
        }
        let out = substitute(&target, &images).unwrap();
        prop_assert!(out.equivalent(&target).unwrap());
    }
}

#[test]
fn superpotential_periods_have_even_support() {
    // the z-degree of every monomial of f is odd, so odd powers cannot
    // reach z-degree zero
    let f = parse_laurent("(x+1)^2*(y+1)^2/(x*y*z)+z", &vars3()).unwrap();
    let seq = period_sequence(&f, 9);
    for (n, value) in seq.iter().enumerate() {
        if n % 2 == 1 {
            assert_eq!(value, &BigInt::from(0), "odd period at n = {n}");
        }
    }
    assert_eq!(seq[2], BigInt::from(8));
    assert_eq!(seq[4], BigInt::from(216));
}
