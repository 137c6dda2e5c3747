//! Rational expressions: quotients of Laurent polynomials.
//!
//! Equality is cross-multiplication: (n1, d1) = (n2, d2) iff n1·d2 = n2·d1.
//! A single-monomial denominator with unit coefficient is folded into the
//! numerator, so pure Laurent expressions normalize to denominator 1.

use crate::poly::{LaurentPoly, MonomialKey, PolyError};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;

/// Quotient of two Laurent polynomials over a shared variable list.
#[derive(Debug, Clone)]
pub struct RationalExpr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        if num.vars() != den.vars() {
            return Err(PolyError::VarMismatch {
                left: num.vars().join(","),
                right: den.vars().join(","),
            });
        }
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut r = RationalExpr { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.vars());
        RationalExpr { num: p, den: one }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.num.vars());
            return;
        }
        if let Some((key, coeff)) = self.den.as_monomial() {
            if coeff.magnitude().is_one() {
                let inv = MonomialKey::new(key.exponents().iter().map(|e| -e).collect());
                let sign = if coeff.is_negative() {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                };
                self.num = self.num.mul_monomial(&inv, &sign);
                self.den = LaurentPoly::one(self.num.vars());
            }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator normalized to 1.
    pub fn as_laurent(&self) -> Result<LaurentPoly, PolyError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(PolyError::NotPolynomial(self.den.to_string()))
        }
    }

    /// Cross-multiplication equality.
    pub fn equivalent(&self, other: &Self) -> Result<bool, PolyError> {
        let lhs = self.num.mul(&other.den)?;
        let rhs = other.num.mul(&self.den)?;
        Ok(lhs == rhs)
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        let den = self.den.mul(&other.den)?;
        RationalExpr::new(num, den)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalExpr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        RationalExpr::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RationalExpr::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    /// Integer power; negative exponents invert (error on zero numerator).
    pub fn pow(&self, n: i64) -> Result<Self, PolyError> {
        if n < 0 {
            if self.num.is_zero() {
                return Err(PolyError::DivisionByZero);
            }
            let m = n.unsigned_abs();
            RationalExpr::new(self.den.pow(m), self.num.pow(m))
        } else {
            RationalExpr::new(self.num.pow(n as u64), self.den.pow(n as u64))
        }
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Substitute an image for every variable of `target`.
///
/// All images must share one variable list; the result lives over that list.
/// Fails when a denominator vanishes along the way.
pub fn substitute(
    target: &RationalExpr,
    images: &BTreeMap<String, RationalExpr>,
) -> Result<RationalExpr, PolyError> {
    if target.vars().is_empty() || images.is_empty() {
        return Ok(target.clone());
    }
    let mut image_vars: Option<&[String]> = None;
    let ordered: Vec<&RationalExpr> = target
        .vars()
        .iter()
        .map(|v| {
            images
                .get(v)
                .ok_or_else(|| PolyError::MissingImage(v.clone()))
        })
        .collect::<Result<_, _>>()?;
    for img in &ordered {
        match image_vars {
            None => image_vars = Some(img.vars()),
            Some(vs) if vs == img.vars() => {}
            Some(vs) => {
                return Err(PolyError::VarMismatch {
                    left: vs.join(","),
                    right: img.vars().join(","),
                })
            }
        }
    }
    let image_vars = image_vars.expect("nonempty");
    let num = substitute_poly(target.numerator(), &ordered, image_vars)?;
    let den = substitute_poly(target.denominator(), &ordered, image_vars)?;
    if den.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    num.div(&den)
}

fn substitute_poly(
    p: &LaurentPoly,
    ordered_images: &[&RationalExpr],
    image_vars: &[String],
) -> Result<RationalExpr, PolyError> {
    let mut acc = RationalExpr::from_poly(LaurentPoly::zero(image_vars));
    for (key, coeff) in p.sorted_terms() {
        let mut term = RationalExpr::from_poly(LaurentPoly::constant(image_vars, coeff));
        for (img, &e) in ordered_images.iter().zip(key.exponents()) {
            if e != 0 {
                term = term.mul(&img.pow(e)?)?;
            }
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expr;

    fn vs(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn monomial_denominator_folds() {
        let v = vs(&["x"]);
        let r = parse_expr("(x+1)/x", &v).unwrap();
        assert!(r.denominator().is_one());
        assert_eq!(r.numerator().to_string(), "x^-1 + 1");
    }

    #[test]
    fn cross_multiplication_equality() {
        let v = vs(&["x"]);
        let a = parse_expr("(x^2-1)/(x-1)", &v).unwrap();
        let b = parse_expr("x+1", &v).unwrap();
        assert!(a.equivalent(&b).unwrap());
        let c = parse_expr("x-1", &v).unwrap();
        assert!(!a.equivalent(&c).unwrap());
    }

    #[test]
    fn identity_substitution_is_noop() {
        let v = vs(&["x", "y"]);
        let target = parse_expr("(x+1)^2/(y-2)", &v).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_string(), parse_expr("x", &v).unwrap());
        images.insert("y".to_string(), parse_expr("y", &v).unwrap());
        let out = substitute(&target, &images).unwrap();
        assert!(out.equivalent(&target).unwrap());
    }

    #[test]
    fn substitution_with_vanishing_denominator_fails() {
        let v = vs(&["x"]);
        let w = vs(&["t"]);
        let target = parse_expr("1/(x-1)", &v).unwrap();
        let mut images = BTreeMap::new();
        images.insert("x".to_string(), parse_expr("1", &w).unwrap());
        assert!(matches!(
            substitute(&target, &images),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn negative_power_of_zero_fails() {
        let v = vs(&["x"]);
        let zero = RationalExpr::from_poly(LaurentPoly::zero(&v));
        assert!(matches!(zero.pow(-1), Err(PolyError::DivisionByZero)));
        assert!(zero.pow(0).unwrap().as_laurent().unwrap().is_one());
    }
}
