//! Laurent polynomials in the Lefschetz class `L` with arbitrary-precision
//! integer coefficients.
//!
//! These are the scalars of the toolkit: motivic classes that are integer
//! combinations of powers `L^a`, `a` possibly negative.
//!
//! Invariants:
//! - no zero coefficient is ever stored;
//! - exponents are `i64` and may be negative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer Laurent polynomial in `L`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// How to evaluate a motivic class down to a number or a weight polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecializeMode {
    /// `L -> 1`: the Euler characteristic.
    Euler,
    /// `L -> q`: the point count over a field with `q` elements.
    PointCount(BigInt),
    /// `L -> t^2`: the weight polynomial.
    Weight,
}

/// Result of a specialization: an integer or a polynomial in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Int(BigInt),
    /// A polynomial in `t` (reusing the Laurent representation; render with
    /// variable `t`).
    Poly(LaurentPoly),
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The Lefschetz class `L` itself.
    pub fn l() -> Self {
        Self::monomial(1, BigInt::one())
    }

    /// `L^a`.
    pub fn l_pow(a: i64) -> Self {
        Self::monomial(a, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::monomial(0, n)
    }

    /// `c * L^a`.
    pub fn monomial(a: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// The coefficient of `L^a` (zero if absent).
    pub fn coeff(&self, a: i64) -> BigInt {
        self.terms.get(&a).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate over `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&a, c)| (a, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, a: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&a);
        }
    }

    /// Multiply by `c * L^a` in place.
    pub fn scale(&self, a: i64, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = BTreeMap::new();
        for (&e, v) in &self.terms {
            out.insert(e + a, v * c);
        }
        LaurentPoly { terms: out }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let quo_min = self.min_exp().unwrap() - d.min_exp().unwrap();
        let d_max = d.max_exp().unwrap();
        let d_lead = d.coeff(d_max);
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero();
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap() - d_max;
            if e < quo_min {
                return None;
            }
            let (q, r) = num_integer::Integer::div_rem(&rem.coeff(e + d_max), &d_lead);
            if !r.is_zero() {
                return None;
            }
            quo.add_term(e, &q);
            rem = &rem - &d.scale(e, &q);
        }
        Some(quo)
    }

    /// Evaluate at `L = 1` (the Euler characteristic).
    pub fn euler(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluate at `L = q` exactly; errors if the value is not an integer.
    pub fn eval_int(&self, q: &BigInt) -> Result<BigInt> {
        let non_integral = || Error::NonIntegralSpecialization { q: q.to_string() };
        if q.is_zero() {
            if self.min_exp().map_or(false, |m| m < 0) {
                return Err(non_integral());
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (a, c) in self.terms() {
            let p = q.pow(a.unsigned_abs() as u32);
            let term = if a >= 0 {
                BigRational::from_integer(c * p)
            } else {
                BigRational::new(c.clone(), p)
            };
            acc += term;
        }
        if !acc.is_integer() {
            return Err(non_integral());
        }
        Ok(acc.to_integer())
    }

    /// The weight polynomial `L -> t^2`; requires non-negative exponents.
    pub fn weight(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (a, c) in self.terms() {
            if a < 0 {
                return Err(Error::NegativeWeightExponent { exp: a });
            }
            out.add_term(2 * a, c);
        }
        Ok(out)
    }

    /// Dispatch over the three specializations.
    pub fn specialize(&self, mode: &SpecializeMode) -> Result<Specialized> {
        match mode {
            SpecializeMode::Euler => Ok(Specialized::Int(self.euler())),
            SpecializeMode::PointCount(q) => self.eval_int(q).map(Specialized::Int),
            SpecializeMode::Weight => self.weight().map(Specialized::Poly),
        }
    }

    /// Canonical text: terms in descending exponent order, e.g. `3*L^2 - L + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&a, c)) in self.terms.iter().rev().enumerate() {
            push_term(&mut out, i == 0, c, &[(var, a)]);
        }
        out
    }
}

/// Append one rendered term to `out`. `vars` lists `(name, exponent)` parts;
/// parts with exponent zero are dropped.
pub(crate) fn push_term(out: &mut String, first: bool, c: &BigInt, vars: &[(&str, i64)]) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let abs = c.abs();
    let mut parts: Vec<String> = Vec::new();
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    if parts.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            parts.insert(0, abs.to_string());
        }
        out.push_str(&parts.join("*"));
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("L"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (a, c) in rhs.terms() {
            out.add_term(a, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (a, c) in rhs.terms() {
            out.add_term(a, &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                out.add_term(a + b, &(c * d));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&a, c)| (a, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(a, c) in pairs {
            p.add_term(a, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn product_of_l_minus_one_and_l_plus_one() {
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn euler_counts_coefficients() {
        assert_eq!(lp(&[(1, 1), (0, 1)]).euler(), BigInt::from(2));
        assert_eq!(lp(&[(2, 1), (0, -1)]).euler(), BigInt::zero());
    }

    #[test]
    fn point_count_at_three() {
        let p = lp(&[(2, 1), (0, -1)]);
        assert_eq!(p.eval_int(&BigInt::from(3)).unwrap(), BigInt::from(8));
    }

    #[test]
    fn point_count_with_negative_exponents() {
        // 3*L^-1 at q = 3 is the integer 1.
        let p = lp(&[(-1, 3)]);
        assert_eq!(p.eval_int(&BigInt::from(3)).unwrap(), BigInt::one());
        // 3*L^-2 + L at q = 3 is 1/3 + 3: not an integer.
        let p = lp(&[(-2, 3), (1, 1)]);
        assert!(matches!(
            p.eval_int(&BigInt::from(3)),
            Err(Error::NonIntegralSpecialization { .. })
        ));
        // q = 0 with a negative exponent is rejected.
        assert!(p.eval_int(&BigInt::zero()).is_err());
    }

    #[test]
    fn weight_doubles_exponents() {
        let p = lp(&[(1, 1), (0, 1)]);
        assert_eq!(p.weight().unwrap().render("t"), "t^2 + 1");
        let q = lp(&[(-1, 1)]);
        assert!(matches!(
            q.weight(),
            Err(Error::NegativeWeightExponent { exp: -1 })
        ));
    }

    #[test]
    fn render_is_canonical() {
        let p = lp(&[(2, 3), (1, -1), (0, 1)]);
        assert_eq!(p.render("L"), "3*L^2 - L + 1");
        assert_eq!(lp(&[(-1, 2)]).render("L"), "2*L^-1");
        assert_eq!(lp(&[(1, -1)]).render("L"), "-L");
        assert_eq!(LaurentPoly::zero().render("L"), "0");
    }

    #[test]
    fn exact_division() {
        let num = lp(&[(2, 1), (0, -1)]);
        let den = lp(&[(1, 1), (0, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), lp(&[(1, 1), (0, 1)]));
        // L^2 + 1 is not divisible by L - 1.
        assert!(lp(&[(2, 1), (0, 1)]).div_exact(&den).is_none());
        // Laurent shift: (L - 1) / (1 - L^-1) = L.
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(0, 1), (-1, -1)]);
        assert_eq!(a.div_exact(&b).unwrap(), lp(&[(1, 1)]));
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = lp(&[(1, 1), (0, 1)]);
        let q = lp(&[(1, -1), (0, 1)]);
        let s = &p + &q;
        assert_eq!(s.term_count(), 1);
        assert_eq!(s.coeff(0), BigInt::from(2));
    }
}
