//! Exact arithmetic for plane curve singularities: embedded resolution by
//! iterated point blowups, contact-order zeta functions, motivic classes of
//! curvilinear punctual Hilbert schemes, and brute-force verification of the
//! results by jet counts over small prime fields.
//!
//! The scalars live in the ring generated by the Lefschetz class `L` (the
//! class of the affine line) and its inverse; generating series use a second
//! variable `T` that tracks contact order. Everything is exact: integer and
//! rational arithmetic is arbitrary-precision, rational functions keep
//! factored denominators and compare by cross-multiplication, and the only
//! floating point anywhere is in timing output.

pub mod bipoly;
pub mod curve;
pub mod error;
pub mod jets;
pub mod laurent;
pub mod parse;
pub mod qpoly;
pub mod rational;
pub mod resfile;
pub mod resolve;
pub mod series;
pub mod zeta;

pub use bipoly::BiPoly;
pub use curve::CurvePoly;
pub use error::{Error, Result};
pub use jets::{count_primitive_jets, verify, JetCountReport, DEFAULT_JET_BUDGET};
pub use laurent::{LaurentPoly, SpecializeMode, Specialized};
pub use parse::{parse_curve, parse_laurent, parse_rational};
pub use rational::{rat_eq, FactoredRational};
pub use resfile::{parse_resolution_file, serialize_resolution};
pub use resolve::{has_smooth_branch, resolve, resolve_with_log, Divisor, ResolutionData};
pub use series::SeriesT;
pub use zeta::{
    denef_zeta, hilb_recursion, igusa_from_q, q_series_closed, threshold, HilbTable, LeadingTerm,
};
