//! Exact polynomial arithmetic over the rationals, in one and two variables.
//!
//! `UniPoly` is a dense univariate polynomial over `Q`; `QPoly` is a sparse
//! bivariate polynomial in `(x, y)`. Together they carry everything the
//! blowup engine needs: chart substitutions, translations, restrictions to
//! coordinate axes, squarefreeness via gcds, and extraction of rational
//! roots with multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A dense univariate polynomial over `Q`; index `i` holds the `t^i`
/// coefficient, and trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lead(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Smallest index with a nonzero coefficient (the order of vanishing at
    /// `t = 0`), or `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![BigRational::zero(); self.coeffs.len()];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.lead() / d.lead();
            let shift = rd - dd;
            quo[shift] = c.clone();
            let mut scaled = vec![BigRational::zero(); shift];
            scaled.extend(d.coeffs.iter().map(|a| a * &c));
            rem = rem.sub(&UniPoly::from_coeffs(scaled));
        }
        (UniPoly::from_coeffs(quo), rem)
    }

    /// Monic gcd (Euclid); `gcd(a, 0) = a` made monic.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.lead();
        a.scale(&lead.recip())
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// All rational roots with multiplicities, provided the polynomial
    /// splits into rational linear factors (times a constant); `None` when
    /// an irreducible factor of degree >= 2 remains.
    pub fn rational_roots(&self) -> Option<Vec<(BigRational, u32)>> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut roots: Vec<(BigRational, u32)> = Vec::new();
        let mut f = self.clone();
        // Roots at t = 0.
        if let Some(e) = f.order().filter(|&e| e > 0) {
            roots.push((BigRational::zero(), e as u32));
            f = UniPoly::from_coeffs(f.coeffs[e..].to_vec());
        }
        if f.degree() == Some(0) {
            return Some(roots);
        }
        // Scale to a primitive integer polynomial for the candidate bound.
        let denom_lcm = f
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = f
            .coeffs
            .iter()
            .map(|c| c.numer() * &denom_lcm / c.denom())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let a0 = (&ints[0] / &content).abs();
        let alead = (ints.last().unwrap() / &content).abs();
        for p in divisors(&a0) {
            for q in divisors(&alead) {
                if p.gcd(&q) != BigInt::one() {
                    continue;
                }
                for sign in [1i32, -1] {
                    let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                    let lin = UniPoly::from_coeffs(vec![-cand.clone(), BigRational::one()]);
                    let mut mult = 0u32;
                    loop {
                        let (quo, rem) = f.divrem(&lin);
                        if !rem.is_zero() {
                            break;
                        }
                        f = quo;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
        }
        if f.degree() == Some(0) {
            Some(roots)
        } else {
            None
        }
    }

    pub fn render(&self, var: &str) -> String {
        let terms: Vec<(u32, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.clone()))
            .collect();
        render_rational_terms(&terms.iter().map(|(e, c)| (vec![(var, *e)], c.clone())).collect::<Vec<_>>())
    }
}

/// Positive divisors of a nonzero non-negative integer.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let e = n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// A sparse bivariate polynomial over `Q`, keyed by `(x-exp, y-exp)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        QPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigRational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&(0, 0))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, i: u32, j: u32, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((i, j))
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, &-c);
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Smallest total degree of a term: the multiplicity at the origin.
    /// `None` for the zero polynomial.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn diff_x(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (i, j, c) in self.terms() {
            if i > 0 {
                out.add_term(i - 1, j, &(c * BigRational::from_integer(BigInt::from(i))));
            }
        }
        out
    }

    pub fn diff_y(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (i, j, c) in self.terms() {
            if j > 0 {
                out.add_term(i, j - 1, &(c * BigRational::from_integer(BigInt::from(j))));
            }
        }
        out
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, j, c) in self.terms() {
            acc += c * pow_rat(a, i) * pow_rat(b, j);
        }
        acc
    }

    /// `f(x + a, y + b)`.
    pub fn translate(&self, a: &BigRational, b: &BigRational) -> QPoly {
        let max_x = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_y = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let xs = binomial_powers(a, max_x, true);
        let ys = binomial_powers(b, max_y, false);
        let mut out = QPoly::zero();
        for (i, j, c) in self.terms() {
            let term = xs[i as usize].mul(&ys[j as usize]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// `f(x, y + b)`: the translation used for points along a new divisor.
    pub fn translate_y(&self, b: &BigRational) -> QPoly {
        self.translate(&BigRational::zero(), b)
    }

    /// Strict transform in the chart `(x, y) -> (x, x*y)`: each term
    /// `x^i y^j` becomes `x^(i+j-d) y^j`, where `d` is the multiplicity at
    /// the origin.
    pub fn blowup_chart_x(&self, d: u32) -> QPoly {
        let mut out = QPoly::zero();
        for (i, j, c) in self.terms() {
            debug_assert!(i + j >= d);
            out.add_term(i + j - d, j, c);
        }
        out
    }

    /// Strict transform in the chart `(x, y) -> (x*y, y)`: each term
    /// `x^i y^j` becomes `x^i y^(i+j-d)`.
    pub fn blowup_chart_y(&self, d: u32) -> QPoly {
        let mut out = QPoly::zero();
        for (i, j, c) in self.terms() {
            debug_assert!(i + j >= d);
            out.add_term(i, i + j - d, c);
        }
        out
    }

    /// `f(0, t)` as a univariate polynomial.
    pub fn restrict_x_zero(&self) -> UniPoly {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (i, j, c) in self.terms() {
            if i == 0 {
                if coeffs.len() <= j as usize {
                    coeffs.resize(j as usize + 1, BigRational::zero());
                }
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// `f(t, 0)` as a univariate polynomial.
    pub fn restrict_y_zero(&self) -> UniPoly {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (i, j, c) in self.terms() {
            if j == 0 {
                if coeffs.len() <= i as usize {
                    coeffs.resize(i as usize + 1, BigRational::zero());
                }
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// True when the polynomial has no repeated factor.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let g = gcd_bivar(self, &self.diff_x());
        let g = gcd_bivar(&g, &self.diff_y());
        g.total_degree() == Some(0)
    }

    /// Grammar-compatible text: terms in ascending total degree, ties broken
    /// by descending `x`-exponent; rational coefficients as `p/q`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|&(i1, j1), &(i2, j2)| (i1 + j1, j1).cmp(&(i2 + j2, j2)));
        let terms: Vec<(Vec<(&str, u32)>, BigRational)> = keys
            .iter()
            .map(|&(i, j)| (vec![("x", i), ("y", j)], self.terms[&(i, j)].clone()))
            .collect();
        render_rational_terms(&terms)
    }
}

fn pow_rat(a: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= a;
    }
    acc
}

/// Powers `(v + a)^0 .. (v + a)^max` for `v = x` or `v = y`.
fn binomial_powers(a: &BigRational, max: u32, is_x: bool) -> Vec<QPoly> {
    let var = if is_x { QPoly::x() } else { QPoly::y() };
    let base = var.add(&QPoly::constant(a.clone()));
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(QPoly::one());
    for i in 1..=max {
        let prev = &out[i as usize - 1];
        out.push(prev.mul(&base));
    }
    out
}

/// Render `(variable parts, coefficient)` terms with rational coefficients.
fn render_rational_terms(terms: &[(Vec<(&str, u32)>, BigRational)]) -> String {
    let mut out = String::new();
    for (idx, (vars, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
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
            out.push_str(&render_ratio(&abs));
        } else {
            if !abs.is_one() {
                parts.insert(0, render_ratio(&abs));
            }
            out.push_str(&parts.join("*"));
        }
    }
    out
}

fn render_ratio(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// The polynomial viewed in `y` with coefficients in `Q[x]`.
fn y_slices(f: &QPoly) -> BTreeMap<u32, UniPoly> {
    let mut out: BTreeMap<u32, Vec<BigRational>> = BTreeMap::new();
    for (i, j, c) in f.terms() {
        let slot = out.entry(j).or_default();
        if slot.len() <= i as usize {
            slot.resize(i as usize + 1, BigRational::zero());
        }
        slot[i as usize] = c.clone();
    }
    out.into_iter()
        .map(|(j, v)| (j, UniPoly::from_coeffs(v)))
        .collect()
}

fn from_y_slices(slices: &BTreeMap<u32, UniPoly>) -> QPoly {
    let mut out = QPoly::zero();
    for (&j, u) in slices {
        for (i, c) in u.coeffs.iter().enumerate() {
            out.add_term(i as u32, j, c);
        }
    }
    out
}

fn deg_y(f: &QPoly) -> Option<u32> {
    f.terms.keys().map(|&(_, j)| j).max()
}

/// Leading `y`-coefficient as a polynomial in `x`.
fn y_lead(f: &QPoly) -> UniPoly {
    match deg_y(f) {
        None => UniPoly::zero(),
        Some(d) => y_slices(f).remove(&d).unwrap_or_else(UniPoly::zero),
    }
}

/// Gcd of all `y`-slices, as a polynomial in `x`.
fn y_content(f: &QPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    for u in y_slices(f).values() {
        acc = acc.gcd(u);
        if acc.degree() == Some(0) {
            break;
        }
    }
    acc
}

/// Divide every `y`-slice exactly by a polynomial in `x`.
fn div_by_x_poly(f: &QPoly, d: &UniPoly) -> QPoly {
    let slices = y_slices(f);
    let mut out: BTreeMap<u32, UniPoly> = BTreeMap::new();
    for (j, u) in slices {
        let (q, r) = u.divrem(d);
        debug_assert!(r.is_zero(), "content division must be exact");
        out.insert(j, q);
    }
    from_y_slices(&out)
}

/// Lift a polynomial in `x` to a bivariate polynomial.
fn lift_x(u: &UniPoly) -> QPoly {
    let mut out = QPoly::zero();
    for (i, c) in u.coeffs.iter().enumerate() {
        out.add_term(i as u32, 0, c);
    }
    out
}

/// Pseudo-remainder of `a` by `b` in `y` (defined up to factors of the
/// leading coefficient of `b`, which the primitive-part step removes).
fn pseudo_rem_y(a: &QPoly, b: &QPoly) -> QPoly {
    let n = deg_y(b).expect("pseudo-remainder by zero");
    let lc_b = lift_x(&y_lead(b));
    let mut r = a.clone();
    while let Some(m) = deg_y(&r) {
        if m < n || r.is_zero() {
            break;
        }
        let lc_r = lift_x(&y_lead(&r));
        let shift = QPoly::monomial(0, m - n, BigRational::one());
        r = r.mul(&lc_b).sub(&b.mul(&lc_r).mul(&shift));
        if deg_y(&r).map_or(true, |d| d < n) {
            break;
        }
    }
    r
}

fn y_primitive(f: &QPoly) -> QPoly {
    if f.is_zero() {
        return f.clone();
    }
    let c = y_content(f);
    div_by_x_poly(f, &c)
}

/// A gcd of two bivariate polynomials (up to a nonzero rational scalar).
pub fn gcd_bivar(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let ca = y_content(a);
    let cb = y_content(b);
    let content_gcd = ca.gcd(&cb);
    let mut f = y_primitive(a);
    let mut g = y_primitive(b);
    if deg_y(&f) < deg_y(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem_y(&f, &g);
        f = g;
        g = if r.is_zero() { QPoly::zero() } else { y_primitive(&r) };
    }
    lift_x(&content_gcd).mul(&y_primitive(&f))
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// `y^2 - x^3`.
    fn cusp() -> QPoly {
        QPoly::monomial(0, 2, q(1)).add(&QPoly::monomial(3, 0, q(-1)))
    }

    #[test]
    fn multiplicity_at_origin_is_min_total_degree() {
        assert_eq!(cusp().min_total_degree(), Some(2));
        assert_eq!(QPoly::x().min_total_degree(), Some(1));
        let xy = QPoly::x().mul(&QPoly::y());
        assert_eq!(xy.min_total_degree(), Some(2));
    }

    #[test]
    fn translation_recenters() {
        // The cusp is smooth at (1, 1): multiplicity 1 there.
        let moved = cusp().translate(&q(1), &q(1));
        assert!(moved.constant_term().is_zero());
        assert_eq!(moved.min_total_degree(), Some(1));
        // At a point off the curve the multiplicity is 0.
        let off = cusp().translate(&q(1), &q(2));
        assert_eq!(off.min_total_degree(), Some(0));
    }

    #[test]
    fn blowup_charts_divide_out_the_center() {
        // Cusp, chart (x, x*y): y^2 x^2 - x^3 -> x^2 (y^2 - x).
        let g = cusp().blowup_chart_x(2);
        let expect = QPoly::monomial(0, 2, q(1)).add(&QPoly::monomial(1, 0, q(-1)));
        assert_eq!(g, expect);
        // Chart (x*y, y): y^2 - x^3 y^3 -> y^2 (1 - x^3 y).
        let g = cusp().blowup_chart_y(2);
        let expect = QPoly::one().sub(&QPoly::monomial(3, 1, q(1)));
        assert_eq!(g, expect);
    }

    #[test]
    fn restrictions_pick_axis_values() {
        let g = cusp().blowup_chart_x(2);
        assert_eq!(g.restrict_x_zero().render("t"), "t^2");
        assert_eq!(g.restrict_y_zero().render("t"), "-t");
    }

    #[test]
    fn squarefree_detection() {
        assert!(cusp().is_squarefree());
        let sq = cusp().mul(&cusp());
        assert!(!sq.is_squarefree());
        // x^2 * y has the repeated factor x.
        let p = QPoly::monomial(2, 1, q(1));
        assert!(!p.is_squarefree());
        // x * y and x * (y^2 - x^3) are squarefree.
        assert!(QPoly::x().mul(&QPoly::y()).is_squarefree());
        assert!(QPoly::x().mul(&cusp()).is_squarefree());
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        let a = cusp().mul(&QPoly::x());
        let b = cusp().mul(&QPoly::y());
        let g = gcd_bivar(&a, &b);
        assert_eq!(g.total_degree(), cusp().total_degree());
        // The gcd divides both inputs: check by pseudo-remainder degree.
        assert_eq!(gcd_bivar(&g, &cusp()).total_degree(), cusp().total_degree());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // t^2 (t - 1) (2t + 3) = 2t^4 + t^3 - 3t^2
        let p = UniPoly::from_coeffs(vec![q(0), q(0), q(-3), q(1), q(2)]);
        let roots = p.rational_roots().unwrap();
        let mut found: Vec<(String, u32)> = roots
            .iter()
            .map(|(r, m)| (render_ratio(r), *m))
            .collect();
        found.sort();
        assert_eq!(
            found,
            vec![
                ("-3/2".to_string(), 1),
                ("0".to_string(), 2),
                ("1".to_string(), 1)
            ]
        );
    }

    #[test]
    fn irrational_roots_are_detected() {
        // t^2 + 2 has no rational roots.
        let p = UniPoly::from_coeffs(vec![q(2), q(0), q(1)]);
        assert!(p.rational_roots().is_none());
        // (t^2 + 2) * (t - 1) still fails even with one rational root.
        let lin = UniPoly::from_coeffs(vec![q(-1), q(1)]);
        assert!(p.mul(&lin).rational_roots().is_none());
        // A constant splits trivially.
        let c = UniPoly::constant(q(5));
        assert_eq!(c.rational_roots().unwrap(), vec![]);
    }

    #[test]
    fn render_uses_grammar_coefficients() {
        let p = cusp();
        assert_eq!(p.render(), "y^2 - x^3");
        let half_x = QPoly::monomial(1, 0, BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(half_x.render(), "1/2*x");
        let p = QPoly::x().mul(&QPoly::y()).scale(&q(-1));
        assert_eq!(p.render(), "-x*y");
    }
}
