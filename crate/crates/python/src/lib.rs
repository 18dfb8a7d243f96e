//! Python bindings. Words are lists of ints (row-major, one entry per symbol).

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use num_bigint::BigInt;
use num_rational::BigRational;
use qtcodes::analysis::{self, QiVariant};
use qtcodes::catalog::ternary_20_10_4;
use qtcodes::cryptosystem::{self, KeyParams};
use qtcodes::decoder::decode_traced;
use qtcodes::io::{CodeFile, ConfigFile};
use qtcodes::oracle::{self, OracleBudget};
use qtcodes::{BoundParams, BoundSearch, DecodeOutcome, DecoderConfig, Distance, Gf, QtCode};

create_exception!(qtcodes_py, QtcError, PyException);
create_exception!(qtcodes_py, DecodingFailure, QtcError);

fn err(e: qtcodes::Error) -> PyErr {
    QtcError::new_err(format!("{} ({})", e, e.kind()))
}

fn gf(word: &[u32]) -> Vec<Gf> {
    word.iter().copied().map(Gf).collect()
}

fn ints(word: &[Gf]) -> Vec<u32> {
    word.iter().map(|x| x.0).collect()
}

fn distance(d: Distance) -> Option<usize> {
    match d {
        Distance::Finite(d) => Some(d),
        Distance::Infinite => None,
    }
}

fn check_symbols(word: &[u32], q: u32) -> PyResult<()> {
    match word.iter().find(|&&x| x >= q) {
        Some(x) => Err(PyValueError::new_err(format!("symbol {x} is outside F_{q}"))),
        None => Ok(()),
    }
}

#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: QtCode,
}

#[pymethods]
impl PyCode {
    /// Builds a code from the JSON code-file format used by the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: CodeFile = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyCode { inner: file.build().map_err(err)? })
    }

    /// The [20, 10, 4] ternary reference code.
    #[staticmethod]
    fn example() -> Self {
        PyCode { inner: ternary_20_10_4().0 }
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CodeFile::from_code(&self.inner)).expect("plain data")
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.base_field().q()
    }
    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }
    #[getter]
    fn ell(&self) -> usize {
        self.inner.ell()
    }
    #[getter]
    fn length(&self) -> usize {
        self.inner.m() * self.inner.ell()
    }
    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn encode(&self, message: Vec<u32>) -> PyResult<Vec<u32>> {
        check_symbols(&message, self.q())?;
        Ok(ints(&self.inner.encode(&gf(&message)).map_err(err)?))
    }

    fn contains(&self, word: Vec<u32>) -> PyResult<bool> {
        check_symbols(&word, self.q())?;
        self.inner.contains(&gf(&word)).map_err(err)
    }

    /// d* for one parameter choice.
    #[pyo3(signature = (a, n1, delta, n2 = 1, s = 0))]
    fn ht_bound(&self, a: usize, n1: usize, delta: usize, n2: usize, s: usize) -> PyResult<usize> {
        Ok(self.inner.ht_bound(BoundParams { a, n1, n2, s, delta }).map_err(err)?.d_star)
    }

    /// (d*, (a, n1, n2, s, delta)) for the best choice found, or None.
    #[pyo3(signature = (max_s = 2))]
    fn best_bound(&self, max_s: usize) -> Option<(usize, (usize, usize, usize, usize, usize))> {
        let b = self.inner.best_bound(&BoundSearch { max_s, ..BoundSearch::default() })?;
        let p = b.params;
        Some((b.d_star, (p.a, p.n1, p.n2, p.s, p.delta)))
    }

    /// Exhaustive minimum distance; None for the zero code.
    #[pyo3(signature = (max_codewords = 1 << 22))]
    fn min_distance(&self, max_codewords: u128) -> PyResult<Option<usize>> {
        let budget = OracleBudget { max_codewords, ..OracleBudget::default() };
        Ok(distance(oracle::min_distance_bruteforce(&self.inner, &budget).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Code(q={}, m={}, ell={}, k={})", self.q(), self.m(), self.ell(), self.dimension())
    }
}

#[pyclass(name = "Decoder", frozen)]
struct PyDecoder {
    code: QtCode,
    config: DecoderConfig,
}

#[pymethods]
impl PyDecoder {
    /// Without parameters the best configuration found by search is used.
    #[new]
    #[pyo3(signature = (code, a = None, n1 = 1, delta = 2, n2 = 1, s = 0))]
    fn new(code: &PyCode, a: Option<usize>, n1: usize, delta: usize, n2: usize, s: usize) -> PyResult<Self> {
        let config = match a {
            Some(a) => DecoderConfig::with_auto_vector(&code.inner, BoundParams { a, n1, n2, s, delta }).map_err(err)?,
            None => DecoderConfig::search(&code.inner, &BoundSearch::default())
                .ok_or_else(|| QtcError::new_err("no decoder configuration with a positive radius"))?,
        };
        Ok(PyDecoder { code: code.inner.clone(), config })
    }

    #[getter]
    fn capacity(&self) -> usize {
        self.config.capacity
    }
    #[getter]
    fn d_star(&self) -> usize {
        self.config.d_star
    }

    fn config_json(&self) -> String {
        serde_json::to_string_pretty(&ConfigFile::from_config(&self.code, &self.config)).expect("plain data")
    }

    /// (codeword, error, locations); raises DecodingFailure when the word cannot be decoded.
    fn decode(&self, word: Vec<u32>) -> PyResult<(Vec<u32>, Vec<u32>, Vec<usize>)> {
        check_symbols(&word, self.code.base_field().q())?;
        match decode_traced(&gf(&word), &self.code, &self.config).map_err(err)?.0 {
            DecodeOutcome::Decoded(d) => Ok((ints(&d.codeword), ints(&d.error), d.locations)),
            DecodeOutcome::Failure(r) => Err(DecodingFailure::new_err(r.to_string())),
        }
    }
}

#[pyclass(name = "PublicKey", frozen)]
struct PyPublicKey {
    inner: cryptosystem::PublicKey,
}

#[pymethods]
impl PyPublicKey {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyPublicKey { inner: cryptosystem::PublicKey::from_text(text).map_err(err)? })
    }
    fn to_text(&self) -> String {
        self.inner.to_text()
    }
    /// Largest message weight the key accepts.
    #[getter]
    fn t(&self) -> usize {
        self.inner.t
    }
    #[getter]
    fn length(&self) -> usize {
        self.inner.params.len()
    }
    fn encrypt(&self, message: Vec<u32>) -> PyResult<Vec<u32>> {
        check_symbols(&message, self.inner.params.q)?;
        Ok(ints(&cryptosystem::encrypt(&self.inner, &gf(&message)).map_err(err)?))
    }
}

#[pyclass(name = "PrivateKey", frozen)]
struct PyPrivateKey {
    inner: cryptosystem::PrivateKey,
}

#[pymethods]
impl PyPrivateKey {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyPrivateKey { inner: cryptosystem::PrivateKey::from_text(text).map_err(err)? })
    }
    /// Starts with a "NOT FOR PRODUCTION USE" line.
    fn to_text(&self) -> String {
        self.inner.to_text()
    }
    fn decrypt(&self, ciphertext: Vec<u32>) -> PyResult<Vec<u32>> {
        check_symbols(&ciphertext, self.inner.params().q)?;
        Ok(ints(&cryptosystem::decrypt(&self.inner, &gf(&ciphertext)).map_err(err)?))
    }
}

/// Deterministic in `seed`.
#[pyfunction]
fn keygen(q: u32, m: usize, ell: usize, lam: u32, seed: u64) -> PyResult<(PyPublicKey, PyPrivateKey)> {
    let pair = cryptosystem::keygen(&KeyParams { q, m, ell, lambda: lam }, seed).map_err(err)?;
    Ok((PyPublicKey { inner: pair.public }, PyPrivateKey { inner: pair.private }))
}

fn parse_rational(s: &str) -> PyResult<BigRational> {
    let bad = || PyValueError::new_err(format!("'{s}' is not a rational such as 3 or 3/2"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// (exact value as "p/q" or integer string, log2).
#[pyfunction]
#[pyo3(signature = (m, ell, eps, alpha = "1"))]
fn work_factor(m: u64, ell: u64, eps: u64, alpha: &str) -> PyResult<(String, f64)> {
    let w = analysis::work_factor(m, ell, eps, &parse_rational(alpha)?).map_err(err)?;
    Ok((w.value.to_string(), w.log2))
}

#[pyfunction]
#[pyo3(signature = (m, ell, eps, classical = false))]
fn min_work_factor(m: u64, ell: u64, eps: u64, classical: bool) -> PyResult<(String, f64)> {
    let variant = if classical { QiVariant::Classical } else { QiVariant::Verbatim };
    let r = analysis::min_work_factor(m, ell, eps, variant).map_err(err)?;
    Ok((r.w_min.value.to_string(), r.w_min.log2))
}

#[pyfunction]
fn qfs_check(q: u64, m: u64, ell: u64) -> PyResult<bool> {
    Ok(analysis::qfs_check(q, m, ell).map_err(err)?.satisfied)
}

/// Decoding trace of the reference example: syndromes, Lambda_1, locations and corrected word.
#[pyfunction]
fn paper_example(py: Python<'_>) -> PyResult<Py<pyo3::types::PyDict>> {
    let (code, cfg) = ternary_20_10_4();
    let f = code.field();
    let mut word = vec![Gf::ZERO; 20];
    word[17] = Gf::ONE;
    let (outcome, trace) = decode_traced(&word, &code, &cfg).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    let syndromes: Vec<String> = trace.syndromes.seqs[0].iter().map(|&x| f.power_form(x)).collect();
    d.set_item("syndromes", syndromes)?;
    d.set_item("lambda_1", f.power_form(f.neg(trace.locator.poly.coeff(1))))?;
    d.set_item("locations", trace.roots)?;
    d.set_item("codeword", outcome.decoded().map(|x| ints(&x.codeword)))?;
    d.set_item("error", outcome.decoded().map(|x| ints(&x.error)))?;
    Ok(d.unbind())
}

#[pymodule]
fn qtcodes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QtcError", m.py().get_type::<QtcError>())?;
    m.add("DecodingFailure", m.py().get_type::<DecodingFailure>())?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyDecoder>()?;
    m.add_class::<PyPublicKey>()?;
    m.add_class::<PyPrivateKey>()?;
    m.add_function(wrap_pyfunction!(keygen, m)?)?;
    m.add_function(wrap_pyfunction!(work_factor, m)?)?;
    m.add_function(wrap_pyfunction!(min_work_factor, m)?)?;
    m.add_function(wrap_pyfunction!(qfs_check, m)?)?;
    m.add_function(wrap_pyfunction!(paper_example, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_words() {
        assert_eq!(parse_rational("3/2").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(ints(&gf(&[2, 0, 1])), vec![2, 0, 1]);
        assert_eq!(distance(Distance::Infinite), None);
    }
}
