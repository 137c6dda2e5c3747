//! Perverse-weight polynomials and the mirror transform.
//!
//! A table with full perverse data yields a four-variable polynomial: each
//! piece of multiplicity m in degree s with Hodge index a, weight w = s + b,
//! and perverse index r contributes m·u^a t^s w^b p^r. The mirror transform
//! for dimension d is the exponent involution
//! (a, s, b, r) -> (d−a, s+d−2a, r, b),
//! which realizes substituting (u, t, w, p) -> (u⁻¹t⁻², t, p, w) and
//! multiplying by u^d t^d.

use crate::mhs::{MhsError, PerverseHodgeTable};
use crate::parse::{parse_expr, ParseError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of one PW term: u^a t^s w^b p^r stored as (u, t, w, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PwTerm {
    pub u: i64,
    pub t: i64,
    pub w: i64,
    pub p: i64,
}

impl PwTerm {
    pub fn new(u: i64, t: i64, w: i64, p: i64) -> Self {
        PwTerm { u, t, w, p }
    }
}

// Canonical term order: ascending lexicographic by (p, t, u, w),
// i.e. by (perverse, degree, hodge, weight-offset).
impl Ord for PwTerm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p, self.t, self.u, self.w).cmp(&(other.p, other.t, other.u, other.w))
    }
}

impl PartialOrd for PwTerm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in u, t, w, p with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PWPolynomial {
    terms: BTreeMap<PwTerm, BigInt>,
}

impl PWPolynomial {
    pub fn zero() -> Self {
        PWPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(PwTerm::new(0, 0, 0, 0), BigInt::one());
        p
    }

    pub fn add_term(&mut self, term: PwTerm, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(term).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&term);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (p, t, u, w) order.
    pub fn terms(&self) -> impl Iterator<Item = (PwTerm, &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, term: PwTerm) -> BigInt {
        self.terms.get(&term).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at u = t = w = p = 1, i.e. the total graded dimension.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t, -c);
        }
        out
    }
}

impl fmt::Display for PWPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (term, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.magnitude();
            let exps = [("u", term.u), ("t", term.t), ("w", term.w), ("p", term.p)];
            let mut factors: Vec<String> = Vec::new();
            let constant = exps.iter().all(|&(_, e)| e == 0);
            if !mag.is_one() || constant {
                factors.push(mag.to_string());
            }
            for (name, e) in exps {
                if e == 0 {
                    continue;
                } else if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// The perverse-weight polynomial of a table. Every piece must carry a
/// perverse index; the offending piece is reported otherwise.
pub fn pw_polynomial(table: &PerverseHodgeTable) -> Result<PWPolynomial, MhsError> {
    let mut out = PWPolynomial::zero();
    for piece in table.pieces() {
        let r = piece.perverse.ok_or(MhsError::MissingPerverse {
            degree: piece.degree,
            hodge: piece.hodge,
            weight: piece.weight,
            mult: piece.mult,
        })?;
        let term = PwTerm::new(
            i64::from(piece.hodge),
            i64::from(piece.degree),
            i64::from(piece.weight) - i64::from(piece.degree),
            i64::from(r),
        );
        out.add_term(term, BigInt::from(piece.mult));
    }
    Ok(out)
}

/// Apply the dimension-d mirror exponent map to every term. A term with
/// u-exponent above d or with t-exponent leaving the valid cone is an error.
pub fn mirror_transform(q: &PWPolynomial, dim: u32) -> Result<PWPolynomial, MhsError> {
    let d = i64::from(dim);
    let mut out = PWPolynomial::zero();
    for (term, coeff) in q.terms() {
        let s2 = term.t + d - 2 * term.u;
        if term.u > d || s2 < 0 {
            return Err(MhsError::OutOfCone {
                u: term.u,
                t: term.t,
                w: term.w,
                p: term.p,
                dim,
            });
        }
        out.add_term(PwTerm::new(d - term.u, s2, term.p, term.w), coeff.clone());
    }
    Ok(out)
}

/// Outcome of a mirror-pair check.
#[derive(Debug, Clone)]
pub struct MirrorReport {
    pub holds: bool,
    pub dim: u32,
    /// PW polynomial of side A before the transform.
    pub pw_a: PWPolynomial,
    /// Transformed side A.
    pub lhs: PWPolynomial,
    /// PW polynomial of side B.
    pub rhs: PWPolynomial,
    /// lhs − rhs, term by term.
    pub difference: PWPolynomial,
}

/// Check the mirror identity between two tables of equal dimension:
/// the transformed PW polynomial of `a` must equal the PW polynomial of `b`.
pub fn verify_mirror_pair(
    a: &PerverseHodgeTable,
    b: &PerverseHodgeTable,
) -> Result<MirrorReport, MhsError> {
    if a.dim() != b.dim() {
        return Err(MhsError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let pw_a = pw_polynomial(a)?;
    let lhs = mirror_transform(&pw_a, a.dim())?;
    let rhs = pw_polynomial(b)?;
    let difference = lhs.sub(&rhs);
    Ok(MirrorReport {
        holds: difference.is_zero(),
        dim: a.dim(),
        pw_a,
        lhs,
        rhs,
        difference,
    })
}

/// Parse a PW polynomial from text over the variables u, t, w, p.
pub fn parse_pw(text: &str) -> Result<PWPolynomial, ParseError> {
    let vars: Vec<String> = ["u", "t", "w", "p"].iter().map(|s| s.to_string()).collect();
    let expr = parse_expr(text, &vars)?;
    let poly = expr
        .as_laurent()
        .map_err(|e| ParseError::Arith { pos: 0, source: e })?;
    let mut out = PWPolynomial::zero();
    for (key, coeff) in poly.sorted_terms() {
        let e = key.exponents();
        out.add_term(PwTerm::new(e[0], e[1], e[2], e[3]), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mhs::{HodgePiece, Kind};

    fn point() -> PerverseHodgeTable {
        PerverseHodgeTable::with_pieces(
            "point",
            0,
            Kind::Ordinary,
            [HodgePiece::new(0, 0, 0, Some(0), 1)],
        )
        .unwrap()
    }

    #[test]
    fn point_pw_is_one() {
        let pw = pw_polynomial(&point()).unwrap();
        assert_eq!(pw, PWPolynomial::one());
        assert_eq!(pw.to_string(), "1");
    }

    #[test]
    fn missing_perverse_reports_piece() {
        let t = PerverseHodgeTable::with_pieces(
            "t",
            1,
            Kind::Ordinary,
            [HodgePiece::new(1, 1, 2, None, 4)],
        )
        .unwrap();
        match pw_polynomial(&t) {
            Err(MhsError::MissingPerverse {
                degree: 1,
                hodge: 1,
                weight: 2,
                mult: 4,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn transform_examples() {
        // p^3 with d = 3 -> u^3 t^3 w^3
        let p3 = parse_pw("p^3").unwrap();
        let out = mirror_transform(&p3, 3).unwrap();
        assert_eq!(out, parse_pw("u^3*t^3*w^3").unwrap());
        assert_eq!(out.to_string(), "u^3*t^3*w^3");

        // 8 u^2 t^3 w with d = 3 -> 8 u t^2 p
        let q = parse_pw("8*u^2*t^3*w").unwrap();
        assert_eq!(
            mirror_transform(&q, 3).unwrap(),
            parse_pw("8*u*t^2*p").unwrap()
        );

        // identity in dimension 0
        let one = parse_pw("1").unwrap();
        assert_eq!(mirror_transform(&one, 0).unwrap(), one);
    }

    #[test]
    fn transform_rejects_out_of_cone() {
        let q = parse_pw("u^2").unwrap();
        assert!(matches!(
            mirror_transform(&q, 1),
            Err(MhsError::OutOfCone { .. })
        ));
        // a <= d but s + d - 2a < 0
        let q2 = parse_pw("u^2*t").unwrap();
        assert!(matches!(
            mirror_transform(&q2, 2),
            Err(MhsError::OutOfCone { .. })
        ));
    }

    #[test]
    fn transform_is_involutive_here() {
        let q = parse_pw("p^3 + u*t*w*p^2 + 2*u*t^3 + 2*u^2*t^3 + 8*u^2*t^3*w").unwrap();
        let twice = mirror_transform(&mirror_transform(&q, 3).unwrap(), 3).unwrap();
        assert_eq!(twice, q);
    }

    #[test]
    fn point_pair_holds() {
        let report = verify_mirror_pair(&point(), &point()).unwrap();
        assert!(report.holds);
        assert!(report.difference.is_zero());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = point();
        let b = PerverseHodgeTable::with_pieces(
            "b",
            1,
            Kind::Ordinary,
            [HodgePiece::new(0, 0, 0, Some(1), 1)],
        )
        .unwrap();
        assert!(matches!(
            verify_mirror_pair(&a, &b),
            Err(MhsError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_order_is_r_s_a_b() {
        let q = parse_pw("u^3*t^3*w^3 + 2*u*t^2 + p^2 + 8*u*t^2*p").unwrap();
        assert_eq!(q.to_string(), "2*u*t^2 + u^3*t^3*w^3 + 8*u*t^2*p + p^2");
    }
}
