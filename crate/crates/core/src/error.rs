//! Error type shared by every module of the toolkit.
//!
//! Each variant carries a stable machine-readable code (see [`Error::code`])
//! so that front ends can report failures without string matching.

use thiserror::Error;

/// Everything that can go wrong while resolving, computing, or verifying.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A denominator factor has no unit constant term in `T`, so it cannot
    /// be inverted as a power series.
    #[error("denominator factor `{factor}` has no invertible constant term in T")]
    NonInvertibleDenominator { factor: String },

    /// Evaluating at `L = q` produced a non-integer (or `q = 0` met a
    /// negative exponent).
    #[error("specialization at q = {q} is not an integer")]
    NonIntegralSpecialization { q: String },

    /// The weight specialization `L -> t^2` needs non-negative exponents.
    #[error("weight specialization requires non-negative exponents, found L^{exp}")]
    NegativeWeightExponent { exp: i64 },

    /// A blowup center (or a curve/divisor intersection point) is not
    /// rational: the restriction polynomial kept a factor of degree >= 2.
    #[error("non-rational center: `{restriction}` has an irreducible factor of degree >= 2 over Q")]
    IrrationalCenter { restriction: String },

    /// The input curve has a repeated factor (or is identically zero).
    #[error("curve is not reduced: {detail}")]
    NonReducedInput { detail: String },

    /// A divisor id that does not occur in the resolution.
    #[error("unknown divisor id {0}")]
    UnknownDivisor(u32),

    /// No class data for a divisor, and the ambient dimension admits no
    /// combinatorial derivation.
    #[error("divisor {divisor} carries no class data (ambient dimension {ambient_dim})")]
    MissingClassData { divisor: u32, ambient_dim: u32 },

    /// A series inversion or rational-function constructor met a zero
    /// denominator.
    #[error("division by zero in a series computation")]
    DivisionByZeroSeries,

    /// The chosen prime divides a coefficient denominator of the curve.
    #[error("prime {prime} divides a coefficient denominator of the curve")]
    BadReduction { prime: u64 },

    /// The jet enumeration would exceed the configured candidate budget.
    #[error("enumeration needs {needed} candidates, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// A parse error, with the byte offset of the offending token.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// The curve does not pass through the origin.
    #[error("curve has nonzero constant term {value}")]
    ZeroConstantViolation { value: String },

    /// A malformed resolution file.
    #[error("resolution file line {line}: {message}")]
    ResolutionFile { line: usize, message: String },

    /// The Hilbert recursion needs an explicit base case `h2` when the
    /// ambient dimension exceeds 2 (or when no origin multiplicity is known).
    #[error("Hilbert recursion needs an explicit h2 record for this input")]
    MissingBaseCase,

    /// A requested table index lies beyond what was computed.
    #[error("Hilbert table covers k <= {have}, but k = {needed} was requested")]
    HilbTableRange { needed: u64, have: u64 },

    /// The finite-field oracle only works over prime fields.
    #[error("{q} is not prime; jet counts are only defined over prime fields")]
    CompositeCharacteristic { q: u64 },

    /// Safety cap on the number of blowups; reached only on invalid input.
    #[error("blowup count exceeded the safety cap; input is likely not reduced")]
    BlowupCapExceeded,
}

impl Error {
    /// Stable machine-readable code, used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonInvertibleDenominator { .. } => "NonInvertibleDenominator",
            Error::NonIntegralSpecialization { .. } => "NonIntegralSpecialization",
            Error::NegativeWeightExponent { .. } => "NegativeWeightExponent",
            Error::IrrationalCenter { .. } => "IrrationalCenter",
            Error::NonReducedInput { .. } => "NonReducedInput",
            Error::UnknownDivisor(_) => "UnknownDivisor",
            Error::MissingClassData { .. } => "MissingClassData",
            Error::DivisionByZeroSeries => "DivisionByZeroSeries",
            Error::BadReduction { .. } => "BadReduction",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Syntax { .. } => "SyntaxError",
            Error::ZeroConstantViolation { .. } => "ZeroConstantViolation",
            Error::ResolutionFile { .. } => "InvalidResolutionFile",
            Error::MissingBaseCase => "MissingBaseCase",
            Error::HilbTableRange { .. } => "HilbTableRange",
            Error::CompositeCharacteristic { .. } => "CompositeCharacteristic",
            Error::BlowupCapExceeded => "BlowupCapExceeded",
        }
    }

    /// True for errors caused by malformed textual input rather than by the
    /// mathematics of a well-formed input.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::ZeroConstantViolation { .. }
                | Error::ResolutionFile { .. }
                | Error::CompositeCharacteristic { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
