//! Polynomials in the formal variable `T` whose coefficients are Laurent
//! polynomials in `L`.
//!
//! Invariants:
//! - `T`-exponents are non-negative; `L`-exponents may be negative;
//! - no zero coefficient is ever stored.
//!
//! `T` tracks contact order (it stands for `L^-s`), so substitutions of the
//! form `T -> L^a * T^b` with `b >= 1` are ring endomorphisms here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::{push_term, LaurentPoly};

/// An element of `Z[L, L^-1][T]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    /// Keyed by `(T-exponent, L-exponent)`.
    terms: BTreeMap<(u32, i64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// The variable `T`.
    pub fn t() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    /// `L^a`.
    pub fn l_pow(a: i64) -> Self {
        Self::monomial(0, a, BigInt::one())
    }

    /// `c * T^t * L^a`.
    pub fn monomial(t: u32, a: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((t, a), c);
        }
        BiPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(n))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = BiPoly::zero();
        for (a, c) in p.terms() {
            out.add_term(0, a, c);
        }
        out
    }

    /// `p * T^t` for a Laurent coefficient `p`.
    pub fn from_laurent_at(p: &LaurentPoly, t: u32) -> Self {
        let mut out = BiPoly::zero();
        for (a, c) in p.terms() {
            out.add_term(t, a, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub(crate) fn add_term(&mut self, t: u32, a: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((t, a)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(t, a));
        }
    }

    /// Iterate `(t_exp, l_exp, coefficient)` in ascending `(t, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64, &BigInt)> {
        self.terms.iter().map(|(&(t, a), c)| (t, a, c))
    }

    /// Smallest `T`-exponent present.
    pub fn t_min(&self) -> Option<u32> {
        self.terms.keys().next().map(|&(t, _)| t)
    }

    /// Largest `T`-exponent present.
    pub fn t_max(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|&(t, _)| t)
    }

    /// Smallest `L`-exponent present anywhere.
    pub fn l_min(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, a)| a).min()
    }

    /// The coefficient of `T^t` as a Laurent polynomial in `L`.
    pub fn t_slice(&self, t: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(tt, a), c) in self.terms.range((t, i64::MIN)..=(t, i64::MAX)) {
            debug_assert_eq!(tt, t);
            out.add_term(a, c);
        }
        out
    }

    /// All nonzero `T`-slices, keyed by `T`-exponent.
    pub fn slices(&self) -> BTreeMap<u32, LaurentPoly> {
        let mut out: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
        for (t, a, c) in self.terms() {
            out.entry(t).or_insert_with(LaurentPoly::zero).add_term(a, c);
        }
        out
    }

    /// Multiply by the monomial `c * T^t * L^a`.
    pub fn shift(&self, t: u32, a: i64, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut out = BTreeMap::new();
        for (&(tt, aa), v) in &self.terms {
            out.insert((tt + t, aa + a), v * c);
        }
        BiPoly { terms: out }
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `T -> L^a * T^b`, a ring map for `b >= 1`.
    pub fn substitute_t(&self, a: i64, b: u32) -> BiPoly {
        assert!(b >= 1, "T-substitution must keep positive T-order");
        let mut out = BiPoly::zero();
        for (t, l, c) in self.terms() {
            out.add_term(t * b, l + a * t as i64, c);
        }
        out
    }

    /// If `self` is free of `T`, view it as a Laurent polynomial in `L`.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.t_max().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.t_slice(0))
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None`.
    ///
    /// Works slice-by-slice from the lowest `T`-exponent, so it succeeds
    /// whenever the quotient exists in `Z[L, L^-1][T]`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let d_slices = d.slices();
        let (&d_min, d_low) = d_slices.first_key_value().unwrap();
        let quo_t_max = self.t_max().unwrap().checked_sub(d.t_max().unwrap())?;
        let mut rem = self.clone();
        let mut quo = BiPoly::zero();
        while !rem.is_zero() {
            let r_min = rem.t_min().unwrap();
            if r_min < d_min || r_min - d_min > quo_t_max {
                return None;
            }
            let q = rem.t_slice(r_min).div_exact(d_low)?;
            let q_term = BiPoly::from_laurent_at(&q, r_min - d_min);
            rem = &rem - &(&q_term * d);
            quo = &quo + &q_term;
        }
        Some(quo)
    }

    /// The largest monomial `L^a * T^t` dividing every term, with the sign of
    /// the lowest slice's leading coefficient; `None` for the zero polynomial.
    ///
    /// Used to normalize denominator factors: `L - L*T` has content `L`, and
    /// `L*T - 1` has content `-1` (so that the reduced factor is `1 - L*T`).
    pub fn monomial_content(&self) -> Option<(u32, i64, BigInt)> {
        if self.is_zero() {
            return None;
        }
        let t = self.t_min().unwrap();
        let a = self.l_min().unwrap();
        let lead = self.t_slice(t);
        let sign = if lead.coeff(lead.max_exp().unwrap()).is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Some((t, a, sign))
    }

    /// Canonical text: descending `L`-exponent, then ascending `T`-exponent.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, i64)> = self.terms.keys().copied().collect();
        keys.sort_by(|&(t1, a1), &(t2, a2)| a2.cmp(&a1).then(t1.cmp(&t2)));
        let mut out = String::new();
        for (i, &(t, a)) in keys.iter().enumerate() {
            let c = &self.terms[&(t, a)];
            push_term(&mut out, i == 0, c, &[("L", a), ("T", t as i64)]);
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (t, a, c) in rhs.terms() {
            out.add_term(t, a, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (t, a, c) in rhs.terms() {
            out.add_term(t, a, &-c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (t1, a1, c1) in self.terms() {
            for (t2, a2, c2) in rhs.terms() {
                out.add_term(t1 + t2, a1 + a2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}
