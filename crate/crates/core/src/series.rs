//! Truncated power series in `T` with Laurent-polynomial coefficients.
//!
//! A `SeriesT` holds coefficients of `T^0 .. T^K` for its truncation order
//! `K`; arithmetic drops everything beyond `K`.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::laurent::{push_term, LaurentPoly};

/// A power series in `T` truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesT {
    coeffs: Vec<LaurentPoly>,
}

impl SeriesT {
    /// The zero series truncated at order `k`.
    pub fn zero(k: u32) -> Self {
        SeriesT {
            coeffs: vec![LaurentPoly::zero(); k as usize + 1],
        }
    }

    /// Truncate a polynomial to a series of order `k`.
    pub fn from_bipoly(p: &BiPoly, k: u32) -> Self {
        let mut s = SeriesT::zero(k);
        for (t, a, c) in p.terms() {
            if t <= k {
                s.coeffs[t as usize].add_term(a, c);
            }
        }
        s
    }

    /// The truncation order `K`.
    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// The coefficient of `T^t` (zero beyond the truncation order).
    pub fn coeff(&self, t: u32) -> LaurentPoly {
        self.coeffs
            .get(t as usize)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Smallest exponent with a nonzero coefficient, if any.
    pub fn t_order(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| i as u32)
    }

    pub fn add(&self, rhs: &SeriesT) -> SeriesT {
        let k = self.order().min(rhs.order());
        let mut s = SeriesT::zero(k);
        for t in 0..=k {
            s.coeffs[t as usize] = &self.coeff(t) + &rhs.coeff(t);
        }
        s
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &SeriesT) -> SeriesT {
        let k = self.order().min(rhs.order());
        let mut s = SeriesT::zero(k);
        for t1 in 0..=k {
            if self.coeffs[t1 as usize].is_zero() {
                continue;
            }
            for t2 in 0..=(k - t1) {
                let prod = &self.coeffs[t1 as usize] * &rhs.coeff(t2);
                let slot = &mut s.coeffs[(t1 + t2) as usize];
                *slot = &*slot + &prod;
            }
        }
        s
    }

    /// Multiply every coefficient by a fixed Laurent polynomial.
    pub fn scale(&self, c: &LaurentPoly) -> SeriesT {
        SeriesT {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Render as `c0 + c1*T + (c2)*T^2 + ...`, parenthesizing multi-term
    /// coefficients.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.term_count() == 1 {
                let (a, v) = c.terms().next().unwrap();
                push_term(&mut out, first, v, &[("L", a), ("T", t as i64)]);
            } else {
                if !first {
                    out.push_str(" + ");
                }
                out.push('(');
                out.push_str(&c.render("L"));
                out.push(')');
                match t {
                    0 => {}
                    1 => out.push_str("*T"),
                    _ => out.push_str(&format!("*T^{}", t)),
                }
            }
            first = false;
        }
        if first {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for SeriesT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bp(terms: &[(u32, i64, i64)]) -> BiPoly {
        let mut p = BiPoly::zero();
        for &(t, a, c) in terms {
            p.add_term(t, a, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn truncation_keeps_low_terms() {
        let p = bp(&[(0, 0, 1), (3, 1, 2), (9, 0, 1)]);
        let s = SeriesT::from_bipoly(&p, 4);
        assert_eq!(s.coeff(0).render("L"), "1");
        assert_eq!(s.coeff(3).render("L"), "2*L");
        assert_eq!(s.coeff(4).render("L"), "0");
        assert_eq!(s.t_order(), Some(0));
    }

    #[test]
    fn cauchy_product_matches_polynomial_product() {
        let a = bp(&[(0, 1, 1), (1, 0, -1), (2, -1, 3)]);
        let b = bp(&[(0, 0, 2), (1, 2, 1)]);
        let k = 3;
        let lhs = SeriesT::from_bipoly(&a, k).mul(&SeriesT::from_bipoly(&b, k));
        let rhs = SeriesT::from_bipoly(&(&a * &b), k);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_wraps_sums() {
        let s = SeriesT::from_bipoly(&bp(&[(2, 1, 1), (2, 0, 1), (3, 1, 1)]), 3);
        assert_eq!(s.render(), "(L + 1)*T^2 + L*T^3");
    }
}
