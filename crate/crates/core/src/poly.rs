//! Exact sparse multivariate Laurent polynomial arithmetic.
//!
//! A polynomial is a hash map from exponent vectors (one signed exponent per
//! declared variable) to nonzero arbitrary-precision integer coefficients.
//!
//! Invariants:
//! - no stored coefficient is zero
//! - every key has exactly one exponent per declared variable
//!
//! The canonical text form sorts terms lexicographically ascending by
//! exponent vector, so output is deterministic regardless of storage order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VarMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    BadKeyLength { got: usize, expected: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("expression is not a Laurent polynomial: denominator {0}")]
    NotPolynomial(String),
    #[error("invalid variable permutation")]
    BadPermutation,
    #[error("no image provided for variable `{0}`")]
    MissingImage(String),
}

/// Exponent vector of a single monomial, one entry per ambient variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialKey(Vec<i64>);

impl MonomialKey {
    pub fn new(exponents: Vec<i64>) -> Self {
        MonomialKey(exponents)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All exponents zero (the constant monomial).
    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &MonomialKey) -> MonomialKey {
        MonomialKey(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<i64>> for MonomialKey {
    fn from(v: Vec<i64>) -> Self {
        MonomialKey(v)
    }
}

/// Sparse Laurent polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: HashMap<MonomialKey, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String]) -> Self {
        LaurentPoly {
            vars: vars.to_vec(),
            terms: HashMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(MonomialKey(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, 1)
    }

    /// The polynomial `name^1`; `name` must be declared.
    pub fn variable(vars: &[String], name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0i64; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, exps, 1)
    }

    pub fn monomial(
        vars: &[String],
        exponents: Vec<i64>,
        coeff: impl Into<BigInt>,
    ) -> Result<Self, PolyError> {
        if exponents.len() != vars.len() {
            return Err(PolyError::BadKeyLength {
                got: exponents.len(),
                expected: vars.len(),
            });
        }
        let mut p = Self::zero(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(MonomialKey(exponents), c);
        }
        Ok(p)
    }

    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(PolyError::BadKeyLength {
                    got: exps.len(),
                    expected: vars.len(),
                });
            }
            p.add_term(MonomialKey(exps), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, key: MonomialKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(k, c)| k.is_constant() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.is_constant())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector, zero if absent.
    pub fn coeff(&self, key: &MonomialKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the all-zero exponent vector, zero if absent.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&MonomialKey(vec![0; self.vars.len()]))
    }

    /// The stored exponent vectors, sorted lexicographically.
    pub fn support(&self) -> Vec<MonomialKey> {
        let mut keys: Vec<MonomialKey> = self.terms.keys().cloned().collect();
        keys.sort();
        keys
    }

    /// Terms as (key, coefficient) pairs, sorted lexicographically by key.
    pub fn sorted_terms(&self) -> Vec<(MonomialKey, BigInt)> {
        let mut ts: Vec<(MonomialKey, BigInt)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        ts.sort_by(|a, b| a.0.cmp(&b.0));
        ts
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(MonomialKey, BigInt)> {
        if self.terms.len() == 1 {
            self.terms
                .iter()
                .next()
                .map(|(k, c)| (k.clone(), c.clone()))
        } else {
            None
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.add(kb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiply by a single monomial (exponent shift).
    pub fn mul_monomial(&self, key: &MonomialKey, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.add(key), c * coeff))
                .collect(),
        }
    }

    /// Nonnegative power by repeated squaring; `pow(p, 0) = 1`.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same vars");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same vars");
            }
        }
        result
    }

    /// Reindex variables: entry `i` of `perm` is the old position of the
    /// variable placed at new position `i`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Self, PolyError> {
        let n = self.vars.len();
        if perm.len() != n {
            return Err(PolyError::BadPermutation);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(PolyError::BadPermutation);
            }
            seen[p] = true;
        }
        let vars: Vec<String> = perm.iter().map(|&p| self.vars[p].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let exps: Vec<i64> = perm.iter().map(|&p| k.0[p]).collect();
                (MonomialKey(exps), c.clone())
            })
            .collect();
        Ok(LaurentPoly { vars, terms })
    }

    /// Per-variable (min, max) exponents over the support; `None` when zero.
    pub fn exponent_ranges(&self) -> Option<Vec<(i64, i64)>> {
        if self.terms.is_empty() {
            return None;
        }
        let n = self.vars.len();
        let mut ranges = vec![(i64::MAX, i64::MIN); n];
        for k in self.terms.keys() {
            for (i, &e) in k.0.iter().enumerate() {
                ranges[i].0 = ranges[i].0.min(e);
                ranges[i].1 = ranges[i].1.max(e);
            }
        }
        Some(ranges)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.sorted_terms().iter().enumerate() {
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
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || key.is_constant() {
                factors.push(mag.to_string());
            }
            for (name, &e) in self.vars.iter().zip(key.exponents()) {
                if e == 0 {
                    continue;
                } else if e == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Sequence of constant terms of successive powers: `π_n = ct(p^n)`.
///
/// Powers are built incrementally (`p^{n+1} = p^n · p`).
pub fn period_sequence(p: &LaurentPoly, max_n: usize) -> Vec<BigInt> {
    period_sequence_opts(p, max_n, false)
}

/// As [`period_sequence`], optionally pruning monomials that provably cannot
/// contribute to any remaining constant term. Pruned and unpruned runs agree
/// bit for bit; pruning is off by default.
pub fn period_sequence_opts(p: &LaurentPoly, max_n: usize, prune: bool) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(BigInt::one());
    if max_n == 0 {
        return out;
    }
    let ranges = p.exponent_ranges();
    let mut power = LaurentPoly::one(p.vars());
    for step in 1..=max_n {
        power = power.mul(p).expect("same vars");
        out.push(power.constant_term());
        if prune {
            if let Some(ranges) = &ranges {
                let remaining = (max_n - step) as i64;
                power
                    .terms
                    .retain(|k, _| key_can_reach_zero(k.exponents(), ranges, remaining));
            }
        }
    }
    out
}

/// True when some number of further multiplications by a polynomial with the
/// given per-variable exponent ranges can cancel `exps` exactly. Necessary
/// condition per variable: j steps reach the window [j·min, j·max].
fn key_can_reach_zero(exps: &[i64], ranges: &[(i64, i64)], remaining: i64) -> bool {
    if exps.iter().all(|&e| e == 0) {
        return true;
    }
    (1..=remaining).any(|j| {
        exps.iter()
            .zip(ranges)
            .all(|(&e, &(lo, hi))| e + j * lo <= 0 && 0 <= e + j * hi)
    })
}
