//! The degree-(2,2) threefold example, end to end at the library level:
//! birational substitution checks, the compactly-supported long exact
//! sequence, duality back to the open total space, the mirror identity,
//! and the grid comparison.

use num_bigint::BigInt;
use pwhodge::grid::{check_grid_equality, hodge_numbers, GridTransform};
use pwhodge::les::{Edge, LesProblem, Pattern, RankHint, SlotStatus, UnknownOutcome};
use pwhodge::mhs::{affine_perverse, poincare_dual, table_from_tate, Kind, TateSummand};
use pwhodge::pw::{parse_pw, pw_polynomial, verify_mirror_pair};
use pwhodge::rational::{substitute, RationalExpr};
use pwhodge::{builtin, parse_expr, period_sequence, PerverseHodgeTable};
use std::collections::BTreeMap;

fn vs(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The birational change of variables from the three-torus into the
/// Givental-style locus.
fn birational_map() -> BTreeMap<String, RationalExpr> {
    let target = vs(&["x'", "z'", "v"]);
    let mut map = BTreeMap::new();
    let img = |s: &str| parse_expr(s, &target).unwrap();
    map.insert("x".to_string(), img("x'/(x'+1)"));
    map.insert("y".to_string(), img("1/(x'+1)"));
    map.insert("z".to_string(), img("z'/(z'+1)"));
    map.insert("u".to_string(), img("1/(z'+1)"));
    map.insert("v".to_string(), img("v"));
    map
}

#[test]
fn substitution_recovers_the_second_potential_summand() {
    let five = vs(&["x", "y", "z", "u", "v"]);
    let target = vs(&["x'", "z'", "v"]);
    let w2 = parse_expr("1/(x*y*z*u*v)", &five).unwrap();
    let image = substitute(&w2, &birational_map()).unwrap();
    let expected = parse_expr("(x'+1)^2*(z'+1)^2/(x'*z'*v)", &target).unwrap();
    assert!(image.equivalent(&expected).unwrap());
}

#[test]
fn substitution_recovers_the_full_superpotential() {
    let five = vs(&["x", "y", "z", "u", "v"]);
    let target = vs(&["x'", "z'", "v"]);
    let w = parse_expr("v + 1/(x*y*z*u*v)", &five).unwrap();
    let image = substitute(&w, &birational_map()).unwrap();
    let expected = parse_expr("v + (x'+1)^2*(z'+1)^2/(x'*z'*v)", &target).unwrap();
    assert!(image.equivalent(&expected).unwrap());

    // rename (x', z', v) -> (x, y, z): the image is the toric superpotential
    let three = vs(&["x", "y", "z"]);
    let mut rename = BTreeMap::new();
    rename.insert("x'".to_string(), parse_expr("x", &three).unwrap());
    rename.insert("z'".to_string(), parse_expr("y", &three).unwrap());
    rename.insert("v".to_string(), parse_expr("z", &three).unwrap());
    let renamed = substitute(&image, &rename).unwrap();
    let f = parse_expr("(x+1)^2*(y+1)^2/(x*y*z)+z", &three).unwrap();
    assert!(renamed.equivalent(&f).unwrap());
}

#[test]
fn periods_of_the_superpotential() {
    let f = pwhodge::parse_laurent("(x+1)^2*(y+1)^2/(x*y*z)+z", &vs(&["x", "y", "z"])).unwrap();
    assert_eq!(f.pow(2).constant_term(), BigInt::from(8));
    let seq = period_sequence(&f, 4);
    let expected: Vec<BigInt> = [1, 0, 8, 0, 216].iter().map(|&n| BigInt::from(n)).collect();
    assert_eq!(seq, expected);
}

fn y22_problem(hints: Vec<RankHint>) -> LesProblem {
    LesProblem {
        pattern: Pattern::TripleCompact,
        table_a: builtin("Y22c").unwrap(),
        table_b: builtin("Dh").unwrap(),
        hints,
    }
}

fn documented_hints() -> Vec<RankHint> {
    vec![
        RankHint {
            hodge: 1,
            weight: 2,
            degree: 2,
            edge: Edge::AToB,
            rank: 1,
        },
        RankHint {
            hodge: 2,
            weight: 4,
            degree: 4,
            edge: Edge::AToB,
            rank: 10,
        },
    ]
}

#[test]
fn les_solves_the_open_total_space() {
    let solution = pwhodge::solve(&y22_problem(documented_hints())).unwrap();
    assert!(solution.fully_determined);
    // the solved compact table, piece by piece
    let expected = PerverseHodgeTable::with_pieces(
        "solved",
        3,
        Kind::Compact,
        [
            pwhodge::HodgePiece::new(2, 1, 2, None, 2),
            pwhodge::HodgePiece::new(3, 0, 0, None, 1),
            pwhodge::HodgePiece::new(4, 1, 2, None, 1),
            pwhodge::HodgePiece::new(4, 2, 4, None, 11),
            pwhodge::HodgePiece::new(6, 3, 6, None, 1),
        ],
    )
    .unwrap();
    assert!(solution.solved.same_content(&expected));

    // its dual is the open space's ordinary cohomology (perverse data aside)
    let dual = poincare_dual(&solution.solved).unwrap();
    let ycirc = builtin("Ycirc").unwrap().strip_perverse();
    assert!(dual.same_content(&ycirc));
    // equivalently, dualizing the catalog table recovers the solved one
    let expected_from_catalog = poincare_dual(&ycirc).unwrap();
    assert!(expected_from_catalog.same_content(&solution.solved));
}

#[test]
fn les_without_hints_reports_the_ambiguous_interval() {
    let solution = pwhodge::solve(&y22_problem(vec![])).unwrap();
    assert!(!solution.fully_determined);
    let slot12 = solution
        .slots
        .iter()
        .find(|s| s.slot.hodge == 1 && s.slot.weight == 2)
        .expect("slot (1,2) present");
    assert_eq!(slot12.status, SlotStatus::Underdetermined);
    let x2 = slot12
        .unknowns
        .iter()
        .find(|u| u.degree == 2)
        .expect("X^2 tracked");
    assert_eq!(
        x2.outcome,
        UnknownOutcome::Admissible([2, 3].into_iter().collect())
    );
    // the top degree stays forced even without hints
    let x4 = slot12.unknowns.iter().find(|u| u.degree == 4).unwrap();
    assert_eq!(x4.outcome, UnknownOutcome::Forced(1));
}

#[test]
fn mirror_identity_holds_for_the_pair() {
    let u22 = builtin("U22").unwrap();
    let ycirc = builtin("Ycirc").unwrap();
    let report = verify_mirror_pair(&u22, &ycirc).unwrap();
    assert!(report.holds);
    assert!(report.difference.is_zero());

    // the two polynomials, exactly as computed by hand
    assert_eq!(
        pw_polynomial(&u22).unwrap(),
        parse_pw("p^3 + p^2*u*t*w + u^3*t^3*w^2 + u^2*t^3*w^2 + 8*u^2*t^3*w + 2*u^2*t^3 + 2*u*t^3")
            .unwrap()
    );
    assert_eq!(
        pw_polynomial(&ycirc).unwrap(),
        parse_pw("u^3*t^3*w^3 + 2*u*t^2 + 2*u^2*t^4 + 8*u*t^2*p + u^2*t^2*w^2*p + p^2 + u*t^2*p^2")
            .unwrap()
    );
}

#[test]
fn perturbing_any_multiplicity_breaks_the_identity() {
    let u22 = builtin("U22").unwrap();
    let ycirc = builtin("Ycirc").unwrap();
    let pieces: Vec<_> = u22.pieces().collect();
    for bumped in &pieces {
        let mut perturbed = PerverseHodgeTable::new("perturbed", u22.dim(), u22.kind());
        for p in u22.pieces() {
            let mut p = p;
            if p == *bumped {
                p.mult += 1;
            }
            perturbed.add_piece(p).unwrap();
        }
        let report = verify_mirror_pair(&perturbed, &ycirc).unwrap();
        assert!(!report.holds, "bumping {bumped:?} kept the identity");
        assert_eq!(
            report.difference.num_terms(),
            1,
            "difference should be a single term for {bumped:?}"
        );
    }
}

#[test]
fn grids_match_under_the_mirror_transform_of_indices() {
    let gu = hodge_numbers(&builtin("U22").unwrap());
    let gy = hodge_numbers(&builtin("Ycirc").unwrap());
    assert_eq!(gu.total(), 16);
    assert_eq!(gy.total(), 16);
    let report = check_grid_equality(&gu, &gy, GridTransform::LogCY(3));
    assert!(report.holds, "mismatches: {:?}", report.mismatches);
    // and the comparison is direction-free
    assert!(check_grid_equality(&gy, &gu, GridTransform::LogCY(3)).holds);
}

#[test]
fn affine_rule_reproduces_the_catalog_perverse_data() {
    let u22 = builtin("U22").unwrap();
    let recomputed = affine_perverse(&u22.strip_perverse()).unwrap();
    assert!(recomputed.same_content(&u22));
}

#[test]
fn compact_tables_from_tate_notation() {
    let y22c = table_from_tate(
        "Y22c",
        3,
        Kind::Compact,
        &[
            TateSummand::new(2, 1, 3),
            TateSummand::new(3, 0, 1),
            TateSummand::new(4, 2, 21),
            TateSummand::new(6, 3, 1),
        ],
    )
    .unwrap();
    assert!(y22c.same_content(&builtin("Y22c").unwrap()));
    assert_eq!(y22c.total_dim(), 26);
}
