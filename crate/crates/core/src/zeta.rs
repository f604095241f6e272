//! Contact-order zeta function and Hilbert classes from resolution data.
//!
//! Everything here consumes a [`ResolutionData`] and is independent of how
//! it was produced (plane engine or file). Three views of the same
//! information are computed, and they satisfy exact identities that the
//! tests cross-check:
//!
//! * [`denef_zeta`] assembles the zeta function `Z(T) = Σ c_k T^k`, where
//!   `c_k` is the motivic measure of the primitive arcs based at the origin
//!   whose composition with the defining equation vanishes to order exactly
//!   `k`. Only divisors of arc multiplicity `m = 1` contribute: an arc
//!   crossing a divisor with `m > 1` is not primitive.
//! * [`hilb_recursion`] computes the classes `H_k` of the curvilinear
//!   punctual Hilbert schemes by a forward recursion whose correction terms
//!   come from the same per-divisor data.
//! * [`q_series_closed`] produces the generating series
//!   `Q(T) = Σ_{k>=2} H_k T^k` in closed form by inverting the affine
//!   change of variables that relates it to `Z(T)`; [`igusa_from_q`] is
//!   that change of variables, so the two functions are mutually inverse.
//!
//! The measure of the primitive arcs based at the origin is
//! `L^-n - L^-2n`; it enters `Z` as the coefficient of `T` in the
//! inversion identity. [`LeadingTerm`] selects between this normalization
//! ([`LeadingTerm::Standard`]) and a variant scaled by a further `L^-n`
//! ([`LeadingTerm::Scaled`]) that is kept for comparison; the scaled form
//! fails the round-trip identity already for a smooth line, which the test
//! suite pins down.

use num_bigint::BigInt;
use num_traits::One;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::FactoredRational;
use crate::resolve::ResolutionData;

/// Normalization of the degree-one term of the zeta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingTerm {
    /// `(L^-n - L^-2n) T`: the measure of primitive arcs at the origin.
    Standard,
    /// The same term scaled by `L^-n`; kept for comparison, and wrong.
    Scaled,
}

impl LeadingTerm {
    /// The degree-one term as a polynomial in `T` and `L`.
    fn term(self, ambient_dim: u32) -> BiPoly {
        let n = ambient_dim as i64;
        let shift = match self {
            LeadingTerm::Standard => 0,
            LeadingTerm::Scaled => -n,
        };
        let mut out = BiPoly::monomial(1, -n + shift, BigInt::one());
        out = &out - &BiPoly::monomial(1, -2 * n + shift, BigInt::one());
        out
    }
}

fn t_exponent(n: u64) -> u32 {
    u32::try_from(n).expect("pullback orders fit in a T-exponent")
}

/// The zeta function `Z(T)` of the resolved singularity: a polynomial in
/// `T` when no divisor of arc multiplicity 1 meets the strict transform,
/// and otherwise a rational function with the single denominator factor
/// `L - T`.
pub fn denef_zeta(res: &ResolutionData) -> Result<FactoredRational> {
    let n = res.ambient_dim as i64;
    let mut open_sum = BiPoly::zero();
    let mut strict_sum = BiPoly::zero();
    for d in res.divisors() {
        if d.m != 1 {
            continue;
        }
        let nu = i64::try_from(d.nu).expect("log discrepancies fit in an exponent");
        let open = res.class_open(d.id)?.scale(-nu, &BigInt::one());
        open_sum = &open_sum + &BiPoly::from_laurent_at(&open, t_exponent(d.n));
        let strict = res.class_strict(d.id)?;
        if !strict.is_zero() {
            // (L - 1) L^-nu times the strict class, attached to T^(N+1):
            // the first factor of the geometric tail T(L-1)/(L-T).
            let s = &strict.scale(1 - nu, &BigInt::one()) - &strict.scale(-nu, &BigInt::one());
            strict_sum = &strict_sum + &BiPoly::from_laurent_at(&s, t_exponent(d.n) + 1);
        }
    }
    // (L^-1 - L^-2) L^-(n-1) = L^-n - L^-n-1.
    let pref = &BiPoly::l_pow(-n) - &BiPoly::l_pow(-n - 1);
    if strict_sum.is_zero() {
        return Ok(FactoredRational::from_bipoly(&pref * &open_sum));
    }
    let l_minus_t = &BiPoly::l_pow(1) - &BiPoly::t();
    let num = &pref * &(&(&open_sum * &l_minus_t) + &strict_sum);
    FactoredRational::new(num, vec![(l_minus_t, 1)])
}

/// Largest contact order with nonzero Hilbert class, when finite: the
/// largest pullback order among arc-multiplicity-1 divisors. `None` when a
/// smooth branch lets jets extend to every order.
pub fn threshold(res: &ResolutionData) -> Option<u64> {
    if res.has_smooth_branch() {
        return None;
    }
    res.divisors().filter(|d| d.m == 1).map(|d| d.n).max()
}

/// Classes of the curvilinear punctual Hilbert schemes `H_k` for
/// `k = 2 ..= k_max`.
#[derive(Debug, Clone)]
pub struct HilbTable {
    k_max: u64,
    /// `classes[i]` is `H_(i+2)`.
    classes: Vec<LaurentPoly>,
    threshold: Option<u64>,
}

impl HilbTable {
    pub fn k_max(&self) -> u64 {
        self.k_max
    }

    pub fn threshold(&self) -> Option<u64> {
        self.threshold
    }

    /// The class `H_k`, for `2 <= k <= k_max`.
    pub fn class_at(&self, k: u64) -> Result<&LaurentPoly> {
        if k < 2 || k > self.k_max {
            return Err(Error::HilbTableRange {
                needed: k,
                have: self.k_max,
            });
        }
        Ok(&self.classes[(k - 2) as usize])
    }

    /// All `(k, H_k)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &LaurentPoly)> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u64 + 2, c))
    }

    /// Predicted number of solutions for the finite-field jet count at
    /// order `k`: the class of the primitive-jet preimage,
    /// `H_k * (L - 1) * L^(k-2)`, which specializes to a point count.
    pub fn jet_prediction(&self, k: u64) -> Result<LaurentPoly> {
        let h = self.class_at(k)?;
        let lm1 = &LaurentPoly::l() - &LaurentPoly::one();
        Ok((h * &lm1).scale(k as i64 - 2, &BigInt::one()))
    }
}

/// Run the forward recursion for the Hilbert classes up to `k_max`.
///
/// The base case `H_2` is the explicit `h2` of the data when present;
/// otherwise it is derived from the origin multiplicity: the projective
/// space of all tangent directions for a singular point, and of the
/// directions tangent to the hypersurface for a smooth one.
pub fn hilb_recursion(res: &ResolutionData, k_max: u64) -> Result<HilbTable> {
    let n = res.ambient_dim;
    let h2 = match (&res.h2, res.origin_mult) {
        (Some(h), _) => h.clone(),
        (None, Some(mult)) => {
            let dim = if mult >= 2 { n - 1 } else { n.saturating_sub(2) };
            projective_space(dim)
        }
        (None, None) => return Err(Error::MissingBaseCase),
    };

    struct Row {
        order: u64,
        nu: i64,
        open: LaurentPoly,
        strict: LaurentPoly,
    }
    let mut rows = Vec::new();
    for d in res.divisors() {
        if d.m != 1 {
            continue;
        }
        rows.push(Row {
            order: d.n,
            nu: i64::try_from(d.nu).expect("log discrepancies fit in an exponent"),
            open: res.class_open(d.id)?,
            strict: res.class_strict(d.id)?,
        });
    }

    let mut classes = Vec::new();
    if k_max >= 2 {
        classes.push(h2);
    }
    let step = (n - 1) as i64;
    let lm1 = &LaurentPoly::l() - &LaurentPoly::one();
    for k in 2..k_max {
        // Correction: the zeta coefficient c_k, rescaled by L^(n+1)/(L-1).
        let mut rhs = LaurentPoly::zero();
        for r in &rows {
            if r.order == k {
                rhs = &rhs + &r.open.scale(-r.nu, &BigInt::one());
            } else if r.order < k && !r.strict.is_zero() {
                let shift = -r.nu - (k - r.order) as i64;
                rhs = &rhs + &(&r.strict * &lm1).scale(shift, &BigInt::one());
            }
        }
        let prev = classes.last().expect("base case present");
        let next = &prev.scale(step, &BigInt::one()) - &rhs.scale(k as i64 * step, &BigInt::one());
        classes.push(next);
    }
    Ok(HilbTable {
        k_max,
        classes,
        threshold: threshold(res),
    })
}

/// `[P^dim] = 1 + L + ... + L^dim`.
fn projective_space(dim: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=dim as i64 {
        out = &out + &LaurentPoly::l_pow(i);
    }
    out
}

/// Closed form of `Q(T) = Σ_{k>=2} H_k T^k`, obtained by inverting
/// [`igusa_from_q`] on the zeta function of the resolution.
pub fn q_series_closed(res: &ResolutionData, leading: LeadingTerm) -> Result<FactoredRational> {
    let n = res.ambient_dim;
    let z = denef_zeta(res)?;
    let lead = leading.term(n);
    let num = &(z.numerator() - &(&lead * &z.den_product())) * &BiPoly::monomial(1, 2, BigInt::one());
    let mut den = z.denominator_factors().to_vec();
    den.push((&BiPoly::l_pow(1) - &BiPoly::one(), 1));
    den.push((&BiPoly::t() - &BiPoly::one(), 1));
    // (Z - lead) * L^2 T / ((L - 1)(T - 1)) equals Q(T L^(1-n)).
    let q = FactoredRational::new(num, den)?;
    Ok(q.substitute_t((n - 1) as i64, 1).normalized())
}

/// Reassemble the zeta function from `Q(T)`:
/// `Z(T) = lead(T) + (L-1)/L^2 * (T-1)/T * Q(T L^(1-n))`.
pub fn igusa_from_q(
    q: &FactoredRational,
    ambient_dim: u32,
    leading: LeadingTerm,
) -> Result<FactoredRational> {
    let n = ambient_dim;
    let sub = q.substitute_t(1 - n as i64, 1);
    let lm1 = &BiPoly::l_pow(1) - &BiPoly::one();
    let tm1 = &BiPoly::t() - &BiPoly::one();
    let scaled = sub
        .mul_poly(&(&lm1 * &tm1))
        .mul_poly(&BiPoly::l_pow(-2))
        .div_poly(&BiPoly::t())?;
    let lead = FactoredRational::from_bipoly(leading.term(n));
    Ok(lead.add(&scaled).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_curve, parse_laurent, parse_rational};
    use crate::rational::rat_eq;
    use crate::resolve::resolve;

    fn resolved(src: &str) -> ResolutionData {
        resolve(&parse_curve(src).unwrap()).unwrap()
    }

    fn laurent(src: &str) -> LaurentPoly {
        parse_laurent(src).unwrap()
    }

    /// Independent route to the Hilbert classes: expand the zeta function
    /// as a series and telescope the measures of the contact loci.
    fn hilb_from_zeta_series(res: &ResolutionData, k_max: u64) -> Vec<LaurentPoly> {
        let n = res.ambient_dim as i64;
        let z = denef_zeta(res).unwrap();
        let series = z.expand(k_max as u32 + 1).unwrap();
        let lm1 = &LaurentPoly::l() - &LaurentPoly::one();
        // Measure of the primitive arcs based at the origin.
        let mut mu = &LaurentPoly::l_pow(-n) - &LaurentPoly::l_pow(-2 * n);
        let mut out = Vec::new();
        for m in 1..k_max as u32 {
            // mu is the measure of arcs with contact order >= m; peel off
            // the arcs with contact exactly m.
            mu = &mu - &series.coeff(m);
            let k = (m + 1) as i64;
            let h = mu.scale(k * n - k + 2, &num_bigint::BigInt::one());
            out.push(h.div_exact(&lm1).expect("telescoped class divisible by L - 1"));
        }
        out
    }

    #[test]
    fn cusp_zeta_is_a_polynomial() {
        let z = denef_zeta(&resolved("y^2 - x^3")).unwrap();
        assert!(z.denominator_factors().is_empty());
        let expect = parse_rational("(L^-2 - L^-3)*T^2 + (L^-3 - L^-4)*T^3").unwrap();
        assert!(rat_eq(&z, &expect), "got {}", z.render());
    }

    #[test]
    fn line_zeta_has_the_geometric_tail() {
        let z = denef_zeta(&resolved("y")).unwrap();
        let expect = parse_rational("(L - 1)*T*(L^2 - T) / (L^4*(L - T))").unwrap();
        assert!(rat_eq(&z, &expect), "got {}", z.render());
    }

    #[test]
    fn zeta_at_t_equals_one_is_the_primitive_arc_measure() {
        // Summing all coefficients of Z recovers the measure of the
        // primitive arcs at the origin, L^-2 - L^-4.
        for src in ["y^2 - x^3", "x^2 - y^5", "y^3 - x^4"] {
            let z = denef_zeta(&resolved(src)).unwrap();
            assert!(z.denominator_factors().is_empty(), "curve {src}");
            let total: LaurentPoly = z
                .numerator()
                .slices()
                .values()
                .fold(LaurentPoly::zero(), |acc, s| &acc + s);
            assert_eq!(total, laurent("L^-2 - L^-4"), "curve {src}");
        }
    }

    #[test]
    fn hilbert_tables_match_hand_computations() {
        let cases: Vec<(&str, Vec<&str>)> = vec![
            ("y", vec!["1", "1", "1", "1", "1"]),
            ("y^2 - x^3", vec!["L + 1", "L", "0", "0", "0"]),
            ("x*y", vec!["L + 1", "2*L", "2*L", "2*L", "2*L"]),
            ("x^2 - y^5", vec!["L + 1", "L", "L^2", "L^2", "0", "0"]),
            ("y^3 - x^4", vec!["L + 1", "L^2 + L", "L^2", "0", "0"]),
            (
                "x*y^2 - x^4",
                vec!["L + 1", "L^2 + L", "2*L^2", "L^2", "L^2", "L^2"],
            ),
            ("y^2 - x^4", vec!["L + 1", "L", "L^2", "2*L^2", "2*L^2"]),
        ];
        for (src, expected) in cases {
            let res = resolved(src);
            let table = hilb_recursion(&res, expected.len() as u64 + 1).unwrap();
            for (i, e) in expected.iter().enumerate() {
                let k = i as u64 + 2;
                assert_eq!(
                    table.class_at(k).unwrap(),
                    &laurent(e),
                    "H_{k} of {src}"
                );
            }
        }
    }

    #[test]
    fn recursion_agrees_with_zeta_telescoping() {
        for src in [
            "y",
            "y^2 - x^3",
            "x*y",
            "x^2 - y^5",
            "y^3 - x^4",
            "x*y^2 - x^4",
            "y^2 - x^4",
            "y^2 - x^2*y",
        ] {
            let res = resolved(src);
            let k_max = 9;
            let table = hilb_recursion(&res, k_max).unwrap();
            let independent = hilb_from_zeta_series(&res, k_max);
            for (i, h) in independent.iter().enumerate() {
                let k = i as u64 + 2;
                assert_eq!(table.class_at(k).unwrap(), h, "H_{k} of {src}");
            }
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold(&resolved("y^2 - x^3")), Some(3));
        assert_eq!(threshold(&resolved("x^2 - y^5")), Some(5));
        assert_eq!(threshold(&resolved("y^3 - x^4")), Some(4));
        assert_eq!(threshold(&resolved("y")), None);
        assert_eq!(threshold(&resolved("x*y")), None);
        assert_eq!(threshold(&resolved("y^2 - x^4")), None);
    }

    #[test]
    fn classes_vanish_beyond_the_threshold() {
        for src in ["y^2 - x^3", "x^2 - y^5", "y^3 - x^4"] {
            let res = resolved(src);
            let t = threshold(&res).unwrap();
            let table = hilb_recursion(&res, t + 6).unwrap();
            assert!(!table.class_at(t).unwrap().is_zero(), "H at threshold, {src}");
            for k in t + 1..=t + 6 {
                assert!(table.class_at(k).unwrap().is_zero(), "H_{k} of {src}");
            }
        }
    }

    #[test]
    fn q_series_closed_forms() {
        let q = q_series_closed(&resolved("y^2 - x^3"), LeadingTerm::Standard).unwrap();
        let expect = parse_rational("(L + 1)*T^2 + L*T^3").unwrap();
        assert!(rat_eq(&q, &expect), "got {}", q.render());

        let q = q_series_closed(&resolved("y"), LeadingTerm::Standard).unwrap();
        assert_eq!(q.render(), "T^2 / (1 - T)");
    }

    #[test]
    fn q_series_expansion_matches_the_recursion() {
        for src in ["y", "y^2 - x^3", "x*y", "x^2 - y^5", "x*y^2 - x^4"] {
            let res = resolved(src);
            let q = q_series_closed(&res, LeadingTerm::Standard).unwrap();
            let series = q.expand(9).unwrap();
            let table = hilb_recursion(&res, 8).unwrap();
            assert!(series.coeff(0).is_zero(), "curve {src}");
            assert!(series.coeff(1).is_zero(), "curve {src}");
            for (k, h) in table.iter() {
                assert_eq!(&series.coeff(k as u32), h, "H_{k} of {src}");
            }
        }
    }

    #[test]
    fn igusa_from_q_inverts_the_q_series() {
        for src in ["y", "y^2 - x^3", "x*y", "y^3 - x^4", "y^2 - x^4"] {
            let res = resolved(src);
            let q = q_series_closed(&res, LeadingTerm::Standard).unwrap();
            let z = igusa_from_q(&q, 2, LeadingTerm::Standard).unwrap();
            let expect = denef_zeta(&res).unwrap();
            assert!(rat_eq(&z, &expect), "curve {src}: got {}", z.render());
        }
    }

    #[test]
    fn scaled_leading_term_breaks_the_identity() {
        // With the scaled degree-one term, the extracted series no longer
        // matches the Hilbert classes — visible already for a smooth line.
        let res = resolved("y");
        let q = q_series_closed(&res, LeadingTerm::Scaled).unwrap();
        let series = q.expand(5).unwrap();
        let table = hilb_recursion(&res, 4).unwrap();
        let mismatch = table
            .iter()
            .any(|(k, h)| &series.coeff(k as u32) != h);
        assert!(mismatch, "scaled normalization unexpectedly matched");
    }

    #[test]
    fn jet_predictions() {
        let table = hilb_recursion(&resolved("y^2 - x^3"), 4).unwrap();
        assert_eq!(table.jet_prediction(2).unwrap(), laurent("L^2 - 1"));
        assert_eq!(table.jet_prediction(3).unwrap(), laurent("L^3 - L^2"));
        assert_eq!(table.jet_prediction(4).unwrap(), laurent("0"));
        let table = hilb_recursion(&resolved("x*y"), 3).unwrap();
        assert_eq!(table.jet_prediction(3).unwrap(), laurent("2*L^3 - 2*L^2"));
    }

    #[test]
    fn table_range_errors() {
        let table = hilb_recursion(&resolved("y^2 - x^3"), 5).unwrap();
        assert!(matches!(
            table.class_at(6).unwrap_err(),
            Error::HilbTableRange { needed: 6, have: 5 }
        ));
        assert!(table.class_at(1).is_err());
    }

    #[test]
    fn missing_base_case_is_reported() {
        let mut res = resolved("y^2 - x^3");
        res.origin_mult = None;
        assert_eq!(
            hilb_recursion(&res, 4).unwrap_err().code(),
            "MissingBaseCase"
        );
        // An explicit h2 override fills the gap.
        res.h2 = Some(laurent("L + 1"));
        let table = hilb_recursion(&res, 4).unwrap();
        assert_eq!(table.class_at(3).unwrap(), &laurent("L"));
    }

    #[test]
    fn igusa_from_explicit_series() {
        let q = parse_rational("T^2 / (1 - T)").unwrap();
        let z = igusa_from_q(&q, 2, LeadingTerm::Standard).unwrap();
        let expect = denef_zeta(&resolved("y")).unwrap();
        assert!(rat_eq(&z, &expect), "got {}", z.render());
    }
}
