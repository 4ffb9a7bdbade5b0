//! Python bindings for the verification workbench. Exact integers cross
//! the boundary as Python ints, exact rationals as (numerator,
//! denominator) pairs, and every check comes back as a Report object.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use supercong::arith::{self, Integer, Modulus, Rational};
use supercong::combinat::{self, MultiIndex};
use supercong::harmonic::{harmonic_eval_exact, harmonic_eval_mod, HarmonicSignature};
use supercong::report::{CheckReport, Status, Value};
use supercong::runner::{self, SuiteConfig, SuiteSelection};
use supercong::theorems::{self, SumSpec, DEFAULT_TERM_BUDGET};
use supercong::wz::{self, WzPairId};
use supercong::Suite;

fn pyerr(e: supercong::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ensure_odd_prime(p: u64) -> PyResult<()> {
    if p < 3 || !arith::is_prime(p) {
        return Err(PyValueError::new_err(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

fn fraction(r: &Rational) -> (Integer, Integer) {
    (r.numer().clone(), r.denom().clone())
}

fn rational_from(pair: Option<(i64, i64)>) -> PyResult<Rational> {
    match pair {
        None => Ok(Rational::from_integer(Integer::from(1))),
        Some((_, 0)) => Err(PyValueError::new_err("zero denominator in twist")),
        Some((n, d)) => Ok(Rational::new(Integer::from(n), Integer::from(d))),
    }
}

/// One finished check: what was compared, at which parameters, and
/// whether the two sides agreed.
#[pyclass(frozen)]
struct Report {
    inner: CheckReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn suite(&self) -> &'static str {
        self.inner.suite.as_str()
    }

    #[getter]
    fn check_id(&self) -> &str {
        &self.inner.check_id
    }

    #[getter]
    fn prime(&self) -> Option<u64> {
        self.inner.prime
    }

    #[getter]
    fn params(&self) -> std::collections::BTreeMap<String, i64> {
        self.inner.params.clone()
    }

    /// (p, k) when the comparison happened in Z/p^kZ, None when exact.
    #[getter]
    fn modulus(&self) -> Option<(u64, u32)> {
        self.inner.modulus.map(|m| (m.p, m.k))
    }

    #[getter]
    fn lhs(&self) -> String {
        value_text(&self.inner.lhs)
    }

    #[getter]
    fn rhs(&self) -> String {
        value_text(&self.inner.rhs)
    }

    #[getter]
    fn status(&self) -> &'static str {
        self.inner.status.as_str()
    }

    fn passed(&self) -> bool {
        self.inner.passed()
    }

    fn json(&self) -> String {
        self.inner.json_line()
    }

    fn __repr__(&self) -> String {
        let at = match self.inner.prime {
            Some(p) => format!(" p={p}"),
            None => String::new(),
        };
        format!(
            "Report({} {}{} {})",
            self.inner.suite.as_str(),
            self.inner.check_id,
            at,
            self.inner.status.as_str()
        )
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Residue(r) => r.value().to_string(),
        Value::Exact(x) => x.to_string(),
    }
}

fn wrap(reports: Vec<CheckReport>) -> Vec<Report> {
    reports.into_iter().map(|inner| Report { inner }).collect()
}

/// binom(n, m), zero outside the triangle.
#[pyfunction]
fn binomial(n: u64, m: i64) -> Integer {
    combinat::binomial_exact(n, m)
}

/// Multinomial coefficient of the given parts.
#[pyfunction]
fn multinomial(parts: Vec<u64>) -> Integer {
    combinat::multinomial_exact(&MultiIndex::new(parts))
}

/// Number of length-2n strings over the alphabet whose halves are
/// anagrams, by the closed multinomial-square sum.
#[pyfunction]
fn abelian_squares(alphabet: u64, n: u64) -> Integer {
    combinat::abelian_square_count(alphabet, n)
}

/// Same count by brute-force string enumeration, capped at max_strings.
#[pyfunction]
#[pyo3(signature = (alphabet, n, max_strings = 1 << 24))]
fn abelian_squares_oracle(alphabet: u64, n: u64, max_strings: u128) -> PyResult<Integer> {
    combinat::abelian_square_oracle(alphabet, n, max_strings).map_err(pyerr)
}

/// Multiple harmonic sum over 1 <= k_1 < ... < k_r <= n as an exact
/// (numerator, denominator) pair. Negative exponents mark the slots
/// twisted by x, given as a (num, den) pair and 1 when omitted.
#[pyfunction]
#[pyo3(signature = (n, s, x = None))]
fn harmonic_sum(n: u64, s: Vec<i32>, x: Option<(i64, i64)>) -> PyResult<(Integer, Integer)> {
    let sig = HarmonicSignature::new(s, rational_from(x)?);
    Ok(fraction(&harmonic_eval_exact(n, &sig)))
}

/// The same sum reduced mod p^k; fails when p divides a denominator.
#[pyfunction]
#[pyo3(signature = (n, s, p, k = 1, x = None))]
fn harmonic_residue(n: u64, s: Vec<i32>, p: u64, k: u32, x: Option<(i64, i64)>) -> PyResult<u64> {
    ensure_odd_prime(p)?;
    let sig = HarmonicSignature::new(s, rational_from(x)?);
    let res = harmonic_eval_mod(n, &sig, Modulus::new(p, k)).map_err(pyerr)?;
    Ok(res.to_u64())
}

/// (2^(p-1) - 1)/p mod p^k.
#[pyfunction]
#[pyo3(signature = (p, k = 1))]
fn fermat_quotient(p: u64, k: u32) -> PyResult<u64> {
    ensure_odd_prime(p)?;
    Ok(arith::fermat_quotient(p, k).to_u64())
}

/// Legendre symbol of a modulo the odd prime p.
#[pyfunction]
fn legendre(a: Integer, p: u64) -> PyResult<i8> {
    ensure_odd_prime(p)?;
    Ok(arith::legendre(&a, p))
}

/// Box sum over prod(radii * p) lattice points of the multinomial
/// weight (squared when asked), reduced mod p^k.
#[pyfunction]
#[pyo3(signature = (radii, p, squared = false, k = 3, budget = DEFAULT_TERM_BUDGET))]
fn box_sum(radii: Vec<u64>, p: u64, squared: bool, k: u32, budget: u128) -> PyResult<u64> {
    ensure_odd_prime(p)?;
    let spec = SumSpec::new(radii, p, squared, k).map_err(pyerr)?;
    Ok(theorems::multi_sum_lhs(&spec, budget).map_err(pyerr)?.to_u64())
}

/// The closed form the box sum lands on mod p^k.
#[pyfunction]
#[pyo3(signature = (radii, squared = false))]
fn box_rhs(radii: Vec<u64>, squared: bool) -> Integer {
    theorems::multi_sum_rhs(&radii, squared)
}

/// Dimension-reduced route to the three-box plain sum mod p^k.
#[pyfunction]
#[pyo3(signature = (p, r, s, t, k = 3))]
fn box_sum_fast(p: u64, r: u64, s: u64, t: u64, k: u32) -> PyResult<u64> {
    ensure_odd_prime(p)?;
    Ok(theorems::theorem1_fast_lhs(p, r, s, t, k).to_u64())
}

/// Checks the plain three-box sum against its closed form mod p^3,
/// running both the oracle and the reduced route.
#[pyfunction]
#[pyo3(signature = (p, r, s, t, budget = DEFAULT_TERM_BUDGET))]
fn verify_box(p: u64, r: u64, s: u64, t: u64, budget: u128) -> PyResult<Report> {
    Ok(Report { inner: theorems::verify_theorem1(p, r, s, t, budget).map_err(pyerr)? })
}

/// Checks the squared three-box sum against its closed form mod p^2.
#[pyfunction]
#[pyo3(signature = (p, r, s, t, budget = DEFAULT_TERM_BUDGET))]
fn verify_box_squared(p: u64, r: u64, s: u64, t: u64, budget: u128) -> PyResult<Report> {
    Ok(Report { inner: theorems::verify_theorem_tt(p, r, s, t, budget).map_err(pyerr)? })
}

/// Verifies one difference certificate ("FW" or "TG") on the full grid
/// n <= n_max, telescoped consequences included.
#[pyfunction]
fn verify_certificate(pair: &str, n_max: u64) -> PyResult<Report> {
    let pair: WzPairId = pair.parse().map_err(pyerr)?;
    Ok(Report { inner: wz::verify_wz(pair, n_max) })
}

/// Runs one suite (or "all") over an inclusive prime window and returns
/// the reports in canonical order.
#[pyfunction]
#[pyo3(signature = (
    suite,
    prime_lo = 3,
    prime_hi = 13,
    n_max = 20,
    rst = (1, 2),
    ij = (0, 2),
    jobs = 1,
    term_budget = DEFAULT_TERM_BUDGET,
    decomposition = false,
))]
#[allow(clippy::too_many_arguments)]
fn run_suite(
    suite: &str,
    prime_lo: u64,
    prime_hi: u64,
    n_max: u64,
    rst: (u64, u64),
    ij: (u64, u64),
    jobs: usize,
    term_budget: u128,
    decomposition: bool,
) -> PyResult<Vec<Report>> {
    let selection = if suite == "all" {
        SuiteSelection::All
    } else {
        SuiteSelection::One(suite.parse::<Suite>().map_err(pyerr)?)
    };
    let cfg = SuiteConfig {
        suite: selection,
        prime_lo,
        prime_hi,
        n_max,
        rst_lo: rst.0,
        rst_max: rst.1,
        ij_lo: ij.0,
        ij_max: ij.1,
        jobs,
        term_budget,
        decomposition,
        ..SuiteConfig::default()
    };
    cfg.validate().map_err(pyerr)?;
    Ok(wrap(runner::run_suite(&cfg).map_err(pyerr)?))
}

/// True when no report in the list failed (informational ones count as
/// fine).
#[pyfunction]
fn all_passed(reports: Vec<PyRef<'_, Report>>) -> bool {
    reports.iter().all(|r| r.inner.status != Status::Fail)
}

#[pymodule]
fn supercong_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(multinomial, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_squares, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_squares_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_sum, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_residue, m)?)?;
    m.add_function(wrap_pyfunction!(fermat_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(legendre, m)?)?;
    m.add_function(wrap_pyfunction!(box_sum, m)?)?;
    m.add_function(wrap_pyfunction!(box_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(box_sum_fast, m)?)?;
    m.add_function(wrap_pyfunction!(verify_box, m)?)?;
    m.add_function(wrap_pyfunction!(verify_box_squared, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(all_passed, m)?)?;
    Ok(())
}
