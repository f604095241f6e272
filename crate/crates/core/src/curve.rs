//! A validated plane curve: a nonzero squarefree polynomial vanishing at
//! the origin.
//!
//! `CurvePoly` is the entry point for everything downstream — resolution,
//! zeta functions, and jet counting all start from one of these. The
//! constructor enforces the two input contracts (nonzero constant-free
//! polynomial, no repeated factors) so later stages can assume them.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// A squarefree polynomial `f` in `Q[x, y]` with `f(0, 0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoly {
    poly: QPoly,
}

impl CurvePoly {
    /// Validate and wrap a polynomial.
    pub fn new(poly: QPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::NonReducedInput {
                detail: "the zero polynomial does not define a curve".to_string(),
            });
        }
        let c = poly.constant_term();
        if !num_traits::Zero::is_zero(&c) {
            return Err(Error::ZeroConstantViolation {
                value: c.to_string(),
            });
        }
        if !poly.is_squarefree() {
            return Err(Error::NonReducedInput {
                detail: format!("{} has a repeated factor", poly.render()),
            });
        }
        Ok(CurvePoly { poly })
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    /// Multiplicity of the curve at the origin.
    pub fn origin_mult(&self) -> u32 {
        self.poly
            .min_total_degree()
            .expect("a curve polynomial is nonzero")
    }

    /// Multiplicity at an arbitrary rational point: 0 when the point is not
    /// on the curve, 1 at a smooth point, and >= 2 at a singular point.
    pub fn multiplicity_at(&self, a: &BigRational, b: &BigRational) -> u32 {
        self.poly
            .translate(a, b)
            .min_total_degree()
            .expect("a curve polynomial is nonzero")
    }

    pub fn render(&self) -> String {
        self.poly.render()
    }
}

impl fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
