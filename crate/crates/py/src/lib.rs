//! Python bindings: curves, resolutions, and factored rational functions,
//! with the same exact arithmetic as the Rust crate underneath.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use chilbert::curve::CurvePoly;
use chilbert::jets::DEFAULT_JET_BUDGET;
use chilbert::laurent::{SpecializeMode, Specialized};
use chilbert::parse::{parse_curve, parse_laurent, parse_rational as parse_rational_core};
use chilbert::rational::{rat_eq, FactoredRational};
use chilbert::resfile::{parse_resolution_file, serialize_resolution};
use chilbert::resolve::{resolve as resolve_core, ResolutionData};
use chilbert::zeta::{
    denef_zeta, hilb_recursion, igusa_from_q as igusa_core, q_series_closed, threshold,
    LeadingTerm,
};

fn pyerr(e: chilbert::Error) -> PyErr {
    PyValueError::new_err(format!("{e} [{}]", e.code()))
}

fn leading_from(name: &str) -> PyResult<LeadingTerm> {
    match name {
        "standard" => Ok(LeadingTerm::Standard),
        "scaled" => Ok(LeadingTerm::Scaled),
        other => Err(PyValueError::new_err(format!(
            "leading term must be 'standard' or 'scaled', not {other:?}"
        ))),
    }
}

fn rational_from(text: &str) -> PyResult<BigRational> {
    text.trim()
        .parse::<BigRational>()
        .map_err(|e| PyValueError::new_err(format!("bad rational number {text:?}: {e}")))
}

/// A plane curve through the origin, reduced, with exact rational
/// coefficients.
#[pyclass(frozen)]
struct Curve {
    inner: CurvePoly,
}

#[pymethods]
impl Curve {
    #[new]
    fn new(source: &str) -> PyResult<Self> {
        parse_curve(source).map(|inner| Curve { inner }).map_err(pyerr)
    }

    fn __repr__(&self) -> String {
        format!("Curve({:?})", self.inner.render())
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    /// Multiplicity at the origin.
    fn origin_mult(&self) -> u32 {
        self.inner.origin_mult()
    }

    /// Multiplicity at the rational point (x, y), given as strings like
    /// "1" or "-3/2"; zero when the point is off the curve.
    fn multiplicity(&self, x: &str, y: &str) -> PyResult<u32> {
        Ok(self.inner.multiplicity_at(&rational_from(x)?, &rational_from(y)?))
    }

    /// Resolve the singularity at the origin.
    fn resolve(&self) -> PyResult<Resolution> {
        resolve_core(&self.inner)
            .map(|inner| Resolution { inner })
            .map_err(pyerr)
    }

    /// Whether some branch of the curve through the origin is smooth.
    fn has_smooth_branch(&self) -> PyResult<bool> {
        Ok(chilbert::resolve::has_smooth_branch(&resolve_core(&self.inner).map_err(pyerr)?))
    }

    /// Count order-`k` jet pairs on the curve over F_p with nonvanishing
    /// linear part.
    #[pyo3(signature = (prime, k, jobs = 1, budget = None))]
    fn count_jets(&self, prime: u64, k: u64, jobs: usize, budget: Option<u128>) -> PyResult<u128> {
        chilbert::jets::count_primitive_jets(
            &self.inner,
            prime,
            k,
            budget.unwrap_or(DEFAULT_JET_BUDGET),
            jobs,
        )
        .map_err(pyerr)
    }

    /// Compare brute-force counts with the predicted classes; returns one
    /// dict per (prime, k) with keys prime, k, raw_count, predicted,
    /// matches.
    #[pyo3(signature = (primes, max_k, jobs = 1, budget = None))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        primes: Vec<u64>,
        max_k: u64,
        jobs: usize,
        budget: Option<u128>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let res = resolve_core(&self.inner).map_err(pyerr)?;
        let table = hilb_recursion(&res, max_k).map_err(pyerr)?;
        let reports = chilbert::jets::verify(
            &self.inner,
            &table,
            &primes,
            max_k,
            jobs,
            budget.unwrap_or(DEFAULT_JET_BUDGET),
        )
        .map_err(pyerr)?;
        let mut out = Vec::with_capacity(reports.len());
        for r in reports {
            let d = PyDict::new(py);
            d.set_item("prime", r.prime)?;
            d.set_item("k", r.k)?;
            d.set_item("raw_count", r.raw_count)?;
            d.set_item("predicted", r.predicted)?;
            d.set_item("matches", r.matches)?;
            out.push(d);
        }
        Ok(out)
    }
}

/// Exceptional data of an embedded resolution: decorated divisors plus
/// adjacency.
#[pyclass(frozen)]
struct Resolution {
    inner: ResolutionData,
}

#[pymethods]
impl Resolution {
    /// Parse the line-oriented resolution file format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_resolution_file(text)
            .map(|inner| Resolution { inner })
            .map_err(pyerr)
    }

    /// Render in the resolution file format.
    fn to_text(&self) -> String {
        serialize_resolution(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Resolution(ambient_dim={}, divisors={})",
            self.inner.ambient_dim,
            self.inner.divisor_count()
        )
    }

    fn ambient_dim(&self) -> u32 {
        self.inner.ambient_dim
    }

    fn origin_mult(&self) -> Option<u64> {
        self.inner.origin_mult
    }

    /// One dict per divisor: id, N, nu, m, strict, neighbors, class_open,
    /// class_strict.
    fn divisors<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let mut out = Vec::new();
        for d in self.inner.divisors() {
            let e = PyDict::new(py);
            e.set_item("id", d.id)?;
            e.set_item("N", d.n)?;
            e.set_item("nu", d.nu)?;
            e.set_item("m", d.m)?;
            e.set_item("strict", d.strict_meets)?;
            e.set_item("neighbors", d.neighbors.iter().copied().collect::<Vec<u32>>())?;
            e.set_item("class_open", self.inner.class_open(d.id).map_err(pyerr)?.render("L"))?;
            e.set_item(
                "class_strict",
                self.inner.class_strict(d.id).map_err(pyerr)?.render("L"),
            )?;
            out.push(e);
        }
        Ok(out)
    }

    /// Dual-graph adjacency as (smaller id, larger id) pairs.
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges()
    }

    fn has_smooth_branch(&self) -> bool {
        chilbert::resolve::has_smooth_branch(&self.inner)
    }

    /// Largest order of an order-one divisor, when no branch is smooth.
    fn threshold(&self) -> Option<u64> {
        threshold(&self.inner)
    }

    /// The contact-order zeta function.
    fn zeta(&self) -> PyResult<Rational> {
        denef_zeta(&self.inner)
            .map(|inner| Rational { inner })
            .map_err(pyerr)
    }

    /// Hilbert classes as (k, class text) pairs for 2 <= k <= max_k.
    fn hilb(&self, max_k: u64) -> PyResult<Vec<(u64, String)>> {
        let table = hilb_recursion(&self.inner, max_k).map_err(pyerr)?;
        Ok(table.iter().map(|(k, h)| (k, h.render("L"))).collect())
    }

    /// Closed form of the generating series of Hilbert classes.
    #[pyo3(signature = (leading = "standard"))]
    fn q_series(&self, leading: &str) -> PyResult<Rational> {
        q_series_closed(&self.inner, leading_from(leading)?)
            .map(|inner| Rational { inner })
            .map_err(pyerr)
    }
}

/// A rational function in L and T with a factored denominator; equality
/// is exact cross-multiplication.
#[pyclass(frozen)]
struct Rational {
    inner: FactoredRational,
}

#[pymethods]
impl Rational {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_rational_core(text)
            .map(|inner| Rational { inner })
            .map_err(pyerr)
    }

    fn __repr__(&self) -> String {
        format!("Rational({:?})", self.inner.render())
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __eq__(&self, other: &Rational) -> bool {
        rat_eq(&self.inner, &other.inner)
    }

    /// Series coefficients of T^0 .. T^k as class texts in L.
    fn expand(&self, k: u32) -> PyResult<Vec<String>> {
        let series = self.inner.expand(k).map_err(pyerr)?;
        Ok((0..=k).map(|t| series.coeff(t).render("L")).collect())
    }

    /// Substitute T -> L^a * T^b.
    fn substitute_t(&self, a: i64, b: u32) -> Rational {
        Rational {
            inner: self.inner.substitute_t(a, b).normalized(),
        }
    }
}

/// Recover the zeta function from a closed-form generating series.
#[pyfunction]
#[pyo3(signature = (q, ambient_dim, leading = "standard"))]
fn igusa_from_q(q: &Rational, ambient_dim: u32, leading: &str) -> PyResult<Rational> {
    igusa_core(&q.inner, ambient_dim, leading_from(leading)?)
        .map(|inner| Rational { inner })
        .map_err(pyerr)
}

/// Parse a rational function in L and T from its canonical text.
#[pyfunction]
fn parse_rational(text: &str) -> PyResult<Rational> {
    Rational::new(text)
}

/// Specialize a class polynomial in L: mode is "euler", "weight", or
/// "q=<integer>"; returns the result as text.
#[pyfunction]
fn specialize(class_text: &str, mode: &str) -> PyResult<String> {
    let poly = parse_laurent(class_text).map_err(pyerr)?;
    let mode = match mode {
        "euler" => SpecializeMode::Euler,
        "weight" => SpecializeMode::Weight,
        _ => match mode.strip_prefix("q=") {
            Some(q) => SpecializeMode::PointCount(q.parse::<BigInt>().map_err(|_| {
                PyValueError::new_err(format!("bad integer in q=<integer>: {q:?}"))
            })?),
            None => {
                return Err(PyValueError::new_err(format!(
                    "mode must be 'euler', 'weight', or 'q=<integer>', not {mode:?}"
                )))
            }
        },
    };
    Ok(match poly.specialize(&mode).map_err(pyerr)? {
        Specialized::Int(n) => n.to_string(),
        Specialized::Poly(p) => p.render("t"),
    })
}

#[pymodule]
fn chilbert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Curve>()?;
    m.add_class::<Resolution>()?;
    m.add_class::<Rational>()?;
    m.add_function(wrap_pyfunction!(igusa_from_q, m)?)?;
    m.add_function(wrap_pyfunction!(parse_rational, m)?)?;
    m.add_function(wrap_pyfunction!(specialize, m)?)?;
    m.add("DEFAULT_JET_BUDGET", DEFAULT_JET_BUDGET)?;
    Ok(())
}
