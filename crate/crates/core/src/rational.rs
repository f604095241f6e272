//! Rational functions in `(L, T)` kept as a numerator and a factored
//! denominator.
//!
//! Denominators are never expanded into a single polynomial and never
//! cancelled against the numerator implicitly; equality is decided by
//! cross-multiplication, so no polynomial gcd is ever needed.
//!
//! Invariants:
//! - every denominator factor is nonzero and carries multiplicity >= 1;
//! - series expansion requires every factor to have a unit constant term
//!   `±L^a` in `T` (all factors produced here do: powers of `L`, `L - T`,
//!   `1 - T`, `1 - L*T`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::series::SeriesT;

/// A quotient `num / (f1^m1 * ... * fr^mr)` of bivariate polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRational {
    num: BiPoly,
    den: Vec<(BiPoly, u32)>,
}

impl FactoredRational {
    pub fn zero() -> Self {
        FactoredRational {
            num: BiPoly::zero(),
            den: Vec::new(),
        }
    }

    pub fn one() -> Self {
        FactoredRational {
            num: BiPoly::one(),
            den: Vec::new(),
        }
    }

    pub fn from_bipoly(p: BiPoly) -> Self {
        FactoredRational {
            num: p,
            den: Vec::new(),
        }
    }

    /// Build `num / prod(factors)`; rejects zero factors.
    pub fn new(num: BiPoly, den: Vec<(BiPoly, u32)>) -> Result<Self> {
        if den.iter().any(|(f, _)| f.is_zero()) {
            return Err(Error::DivisionByZeroSeries);
        }
        let den = den.into_iter().filter(|&(_, m)| m > 0).collect();
        Ok(FactoredRational { num, den })
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(BiPoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The expanded denominator product.
    pub fn den_product(&self) -> BiPoly {
        let mut acc = BiPoly::one();
        for (f, m) in &self.den {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn rat_eq(&self, other: &FactoredRational) -> bool {
        &self.num * &other.den_product() == &other.num * &self.den_product()
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &BiPoly) -> FactoredRational {
        FactoredRational {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Divide by a nonzero polynomial factor.
    pub fn div_poly(&self, f: &BiPoly) -> Result<FactoredRational> {
        if f.is_zero() {
            return Err(Error::DivisionByZeroSeries);
        }
        let mut den = self.den.clone();
        push_factor(&mut den, f.clone(), 1);
        Ok(FactoredRational {
            num: self.num.clone(),
            den,
        })
    }

    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            push_factor(&mut den, f.clone(), *m);
        }
        FactoredRational {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn neg(&self) -> FactoredRational {
        FactoredRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Sum over the naive common denominator (factor lists are concatenated).
    pub fn add(&self, other: &FactoredRational) -> FactoredRational {
        let num = &(&self.num * &other.den_product()) + &(&other.num * &self.den_product());
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            push_factor(&mut den, f.clone(), *m);
        }
        FactoredRational { num, den }
    }

    pub fn sub(&self, other: &FactoredRational) -> FactoredRational {
        self.add(&other.neg())
    }

    /// Apply `T -> L^a * T^b` (with `b >= 1`) to numerator and denominator.
    pub fn substitute_t(&self, a: i64, b: u32) -> FactoredRational {
        FactoredRational {
            num: self.num.substitute_t(a, b),
            den: self
                .den
                .iter()
                .map(|(f, m)| (f.substitute_t(a, b), *m))
                .collect(),
        }
    }

    /// Pull monomial content out of every factor, fix signs so each factor's
    /// lowest `T`-slice has positive leading coefficient, absorb what cancels
    /// into the numerator, and cancel factors that divide the numerator
    /// exactly. The result is `rat_eq` to the input.
    pub fn normalized(&self) -> FactoredRational {
        let mut num = self.num.clone();
        let mut den: Vec<(BiPoly, u32)> = Vec::new();
        // Accumulated monomial L^l_shift * T^t_shift * sign scaling the
        // denominator product after content extraction.
        let mut t_shift: u32 = 0;
        let mut l_shift: i64 = 0;
        let mut sign = BigInt::one();
        for (f, m) in &self.den {
            let (t, a, s) = match f.monomial_content() {
                Some(c) => c,
                None => continue,
            };
            let reduced = f
                .div_exact(&BiPoly::monomial(t, a, s.clone()))
                .expect("monomial content always divides");
            t_shift += t * m;
            l_shift += a * *m as i64;
            if !s.is_one() && m % 2 == 1 {
                sign = -sign;
            }
            if !reduced.is_one() {
                push_factor(&mut den, reduced, *m);
            }
        }
        // num / (L^l * T^t * sign * rest) = (sign * L^-l * num) / (T^t * rest)
        num = num.shift(0, -l_shift, &sign);
        if t_shift > 0 {
            match num.div_exact(&BiPoly::monomial(t_shift, 0, BigInt::one())) {
                Some(q) => num = q,
                None => push_factor(&mut den, BiPoly::t(), t_shift),
            }
        }
        // Cancel whole factors into the numerator where possible.
        let mut final_den: Vec<(BiPoly, u32)> = Vec::new();
        for (f, mut m) in den {
            while m > 0 {
                match num.div_exact(&f) {
                    Some(q) => {
                        num = q;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m > 0 {
                push_factor(&mut final_den, f, m);
            }
        }
        FactoredRational {
            num,
            den: final_den,
        }
    }

    /// Expand as a power series in `T` to order `k`.
    ///
    /// Every denominator factor must have a unit constant term `±L^a` in `T`.
    pub fn expand(&self, k: u32) -> Result<SeriesT> {
        let mut s = SeriesT::from_bipoly(&self.num, k);
        for (f, m) in &self.den {
            let inv = invert_factor(f, k)?;
            for _ in 0..*m {
                s = s.mul(&inv);
            }
        }
        Ok(s)
    }

    /// Render as `num / (f1 * f2^m)`; factors are parenthesized, monomial
    /// factors are not.
    pub fn render(&self) -> String {
        let num = self.num.render();
        if self.den.is_empty() {
            return num;
        }
        let num = if self.num.terms().count() > 1 {
            format!("({})", num)
        } else {
            num
        };
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(f, m)| {
                let body = if f.terms().count() > 1 {
                    format!("({})", f.render())
                } else {
                    f.render()
                };
                if *m == 1 {
                    body
                } else {
                    format!("{}^{}", body, m)
                }
            })
            .collect();
        let den = factors.join("*");
        let den = if self.den.len() > 1 || self.den[0].1 > 1 {
            format!("({})", den)
        } else {
            den
        };
        format!("{} / {}", num, den)
    }
}

/// Free-function alias for the equality predicate.
pub fn rat_eq(a: &FactoredRational, b: &FactoredRational) -> bool {
    a.rat_eq(b)
}

/// Merge a factor into a factor list, coalescing equal factors.
fn push_factor(den: &mut Vec<(BiPoly, u32)>, f: BiPoly, m: u32) {
    if m == 0 || f.is_one() {
        return;
    }
    for (g, k) in den.iter_mut() {
        if *g == f {
            *k += m;
            return;
        }
    }
    den.push((f, m));
}

/// Series inverse of a single factor, truncated at order `k`.
fn invert_factor(f: &BiPoly, k: u32) -> Result<SeriesT> {
    let c0 = f.t_slice(0);
    let unit_exp = match (c0.term_count(), c0.min_exp()) {
        (1, Some(a)) if c0.coeff(a).clone().abs() == BigInt::one() => a,
        _ => {
            return Err(Error::NonInvertibleDenominator {
                factor: f.render(),
            })
        }
    };
    let unit_coeff = c0.coeff(unit_exp);
    // f = u * (1 + h/u) with u = ±L^a; 1/f = u^-1 * sum_j (-h/u)^j.
    let u_inv = BiPoly::monomial(0, -unit_exp, unit_coeff.clone());
    let h = f - &BiPoly::monomial(0, unit_exp, unit_coeff.clone());
    let minus_h_over_u = (-&h).shift(0, -unit_exp, &unit_coeff);
    let step = SeriesT::from_bipoly(&minus_h_over_u, k);
    let mut acc = SeriesT::from_bipoly(&BiPoly::one(), k);
    let mut sum = acc.clone();
    for _ in 0..k {
        acc = acc.mul(&step);
        if acc.is_zero() {
            break;
        }
        sum = sum.add(&acc);
    }
    Ok(sum.mul(&SeriesT::from_bipoly(&u_inv, k)))
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
