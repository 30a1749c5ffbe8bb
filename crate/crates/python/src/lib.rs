use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use twgr_core::braidchar::{self, CharacterTable};
use twgr_core::chromatic::{self, StemGroup};
use twgr_core::coeffring::Sign;
use twgr_core::graded::{FiniteAbelianGroup, GradedDim, Twist};
use twgr_core::oracle::{self, GradedVectorSpace, Permutation};
use twgr_core::symgroup::{self, Partition};
use twgr_core::{extalg, Error};

create_exception!(twgr, TwgrError, PyException);

fn py_err(e: Error) -> PyErr {
    TwgrError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

fn twist(name: &str) -> PyResult<Twist<BigInt>> {
    match name {
        "trivial" => Ok(Twist::Trivial),
        "koszul" => Ok(Twist::Koszul),
        other => Err(TwgrError::new_err(format!(
            "unknown twist {other:?}; expected \"trivial\" or \"koszul\""
        ))),
    }
}

fn sign(omega: i64) -> PyResult<Sign> {
    Sign::from_i64(omega).ok_or_else(|| TwgrError::new_err("omega must be 1 or -1"))
}

/// Braiding character of a tensor power, one row per conjugacy class.
#[pyclass(name = "CharacterTable", module = "twgr", frozen)]
pub struct PyCharacterTable {
    inner: CharacterTable<BigInt>,
}

#[pymethods]
impl PyCharacterTable {
    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    #[getter]
    fn twist(&self) -> String {
        self.inner.twist.to_string()
    }

    #[getter]
    fn dim(&self) -> BigInt {
        self.inner.dim.clone()
    }

    /// `(partition, cycles, class_size, value, degree)` tuples in table order.
    #[getter]
    fn rows(&self) -> Vec<(Vec<u32>, usize, BigUint, BigInt, u32)> {
        self.inner
            .rows
            .iter()
            .map(|r| {
                (
                    r.partition.parts().to_vec(),
                    r.cycles,
                    r.class_size.clone(),
                    r.value.clone(),
                    r.degree,
                )
            })
            .collect()
    }

    fn value(&self, parts: Vec<u32>) -> PyResult<BigInt> {
        let lambda = partition(parts)?;
        self.inner
            .value(&lambda)
            .cloned()
            .ok_or_else(|| TwgrError::new_err(format!("{lambda} is not a partition of {}", self.inner.m)))
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.rows.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacterTable(m={}, twist={}, dim={}, rows={})",
            self.inner.m,
            self.inner.twist,
            self.inner.dim,
            self.inner.rows.len()
        )
    }
}

#[pyfunction]
fn partitions(m: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(symgroup::partitions(m)
        .map_err(py_err)?
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect())
}

#[pyfunction]
fn cycle_counts(parts: Vec<u32>) -> PyResult<BTreeMap<u32, u32>> {
    Ok(partition(parts)?.cycle_counts())
}

#[pyfunction]
fn centralizer_order(parts: Vec<u32>) -> PyResult<BigUint> {
    Ok(partition(parts)?.centralizer_order())
}

#[pyfunction]
fn class_size(parts: Vec<u32>) -> PyResult<BigUint> {
    Ok(partition(parts)?.class_size())
}

#[pyfunction]
fn braiding_character(twist_name: &str, dim: BigInt, m: u32) -> PyResult<PyCharacterTable> {
    let inner = braidchar::braiding_character(&twist(twist_name)?, &dim, m).map_err(py_err)?;
    Ok(PyCharacterTable { inner })
}

#[pyfunction]
#[pyo3(signature = (parts, dim1, dim2, twist_name = "trivial"))]
fn induced_character_value(parts: Vec<u32>, dim1: BigInt, dim2: BigInt, twist_name: &str) -> PyResult<BigInt> {
    let tw = twist(twist_name)?;
    Ok(braidchar::induced_character_value(&partition(parts)?, &dim1, &dim2, &tw, &tw))
}

#[pyfunction]
fn ext_dim(twist_name: &str, dim: BigInt, n: u32) -> PyResult<BigInt> {
    extalg::ext_dim(&twist(twist_name)?, &dim, n).map_err(py_err)
}

/// Returns `{"categorical": [...], "underlying": [...]}`.
#[pyfunction]
fn ext_series(twist_name: &str, dim: BigInt, order: u32) -> PyResult<BTreeMap<&'static str, Vec<BigInt>>> {
    let s = extalg::ext_series(&twist(twist_name)?, &dim, order).map_err(py_err)?;
    Ok(BTreeMap::from([
        ("categorical", s.categorical.coeffs().to_vec()),
        ("underlying", s.underlying.coeffs().to_vec()),
    ]))
}

#[pyfunction]
fn verify_sym_ext_identity(dim: u64, order: u32) -> PyResult<(bool, Vec<BigInt>)> {
    let check = extalg::verify_sym_ext_identity(dim, order).map_err(py_err)?;
    Ok((check.holds, check.witness.coeffs().to_vec()))
}

#[pyfunction]
fn koszul_sign(images: Vec<usize>, degrees: Vec<i64>) -> PyResult<i64> {
    let sigma = Permutation::new(images).map_err(py_err)?;
    if sigma.len() != degrees.len() {
        return Err(TwgrError::new_err("one degree per tensor factor"));
    }
    Ok(oracle::koszul_sign(&sigma, &degrees).to_i64())
}

/// Brute-force categorical trace of the canonical permutation of class `parts`
/// on `(Q^dim)^{⊗m}` with `Q^dim` in degree one.
#[pyfunction]
fn oracle_trace(parts: Vec<u32>, dim: usize, twist_name: &str) -> PyResult<BigInt> {
    oracle::trace_at_class(&partition(parts)?, dim, &twist(twist_name)?).map_err(py_err)
}

/// Averaged categorical trace over `Σ_m` for a space with the given basis degrees.
#[pyfunction]
fn projector_dim(degrees: Vec<i64>, m: u32, twist_name: &str) -> PyResult<BigInt> {
    let space = GradedVectorSpace::new(degrees.into_iter().enumerate().collect()).map_err(py_err)?;
    let value = oracle::projector_dim(&space, m, &twist(twist_name)?).map_err(py_err)?;
    if !value.is_integer() {
        return Err(TwgrError::new_err(format!("non-integral projector dimension {value}")));
    }
    Ok(value.to_integer())
}

#[pyfunction]
fn day_convolve(x: BTreeMap<i64, BigInt>, y: BTreeMap<i64, BigInt>) -> BTreeMap<i64, BigInt> {
    GradedDim::new(x)
        .day_convolve(&GradedDim::new(y))
        .entries()
        .clone()
}

#[pyfunction]
fn is_invertible(x: BTreeMap<i64, BigInt>) -> Option<i64> {
    GradedDim::new(x).is_invertible()
}

#[pyfunction]
fn dim_shift(twist_name: &str, dim: BigInt) -> PyResult<BigInt> {
    Ok(twgr_core::dim_shift(&twist(twist_name)?, &dim))
}

#[pyfunction]
fn count_twists(orders: Vec<u64>) -> PyResult<u64> {
    Ok(twgr_core::count_twists(&FiniteAbelianGroup::new(orders).map_err(py_err)?))
}

#[pyfunction]
fn truncated_units(p: u64, n: u32) -> Vec<i64> {
    chromatic::truncated_units(p, n).into_iter().map(Sign::to_i64).collect()
}

fn stem_group(p: u64, n: u32, stem_orders: Option<Vec<u64>>) -> PyResult<StemGroup> {
    match stem_orders {
        Some(orders) => StemGroup::new(p, n, orders),
        None => StemGroup::reference(p, n),
    }
    .map_err(py_err)
}

/// `(omega, label)` for the twist `alpha` of `E_n`; the stem group defaults to
/// the reference table.
#[pyfunction]
#[pyo3(signature = (p, n, alpha, stem_orders = None))]
fn chromatic_decision(p: u64, n: u32, alpha: Vec<u64>, stem_orders: Option<Vec<u64>>) -> PyResult<(i64, &'static str)> {
    let group = stem_group(p, n, stem_orders)?;
    let d = chromatic::chromatic_decision(&group, &alpha).map_err(py_err)?;
    Ok((d.omega.to_i64(), d.label.as_str()))
}

#[pyfunction]
#[pyo3(signature = (p, n, alpha, m, stem_orders = None))]
fn chromatic_character(
    p: u64,
    n: u32,
    alpha: Vec<u64>,
    m: u32,
    stem_orders: Option<Vec<u64>>,
) -> PyResult<PyCharacterTable> {
    let group = stem_group(p, n, stem_orders)?;
    let inner = chromatic::chromatic_character(&group, &alpha, m).map_err(py_err)?;
    Ok(PyCharacterTable { inner })
}

#[pyfunction]
fn bz2_cardinality(n: u32) -> PyResult<BigInt> {
    chromatic::bz2_cardinality(n).map_err(py_err)
}

#[pyfunction]
fn integral_bz2_sq(n: u32, omega: i64) -> PyResult<BigInt> {
    chromatic::integral_bz2_sq(n, sign(omega)?).map_err(py_err)
}

#[pyfunction]
fn loop_bz2_integral(n: u32) -> PyResult<BigInt> {
    chromatic::loop_bz2_integral(n).map_err(py_err)
}

#[pyfunction]
fn no_truncated_unit_check(n: u32) -> PyResult<bool> {
    chromatic::no_truncated_unit_check(n).map_err(py_err)
}

/// `(coords, valuation, value, action)` tuples.
type TranschromaticTuple = (Vec<u64>, u32, i64, &'static str);

#[pyfunction]
fn transchromatic_table(k: u32, j: u32, omega: i64) -> PyResult<Vec<TranschromaticTuple>> {
    Ok(chromatic::transchromatic_table(k, j, sign(omega)?)
        .map_err(py_err)?
        .into_iter()
        .map(|r| {
            (
                r.component.coords.clone(),
                r.component.valuation,
                r.value.to_i64(),
                r.action.as_str(),
            )
        })
        .collect())
}

/// Runs the command-line front end in-process: returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn cli(args: Vec<String>) -> (i32, String, String) {
    let out = twgr_core::cli::run(std::iter::once("twgr".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
pub fn twgr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TwgrError", m.py().get_type::<TwgrError>())?;
    m.add_class::<PyCharacterTable>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_counts, m)?)?;
    m.add_function(wrap_pyfunction!(centralizer_order, m)?)?;
    m.add_function(wrap_pyfunction!(class_size, m)?)?;
    m.add_function(wrap_pyfunction!(braiding_character, m)?)?;
    m.add_function(wrap_pyfunction!(induced_character_value, m)?)?;
    m.add_function(wrap_pyfunction!(ext_dim, m)?)?;
    m.add_function(wrap_pyfunction!(ext_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sym_ext_identity, m)?)?;
    m.add_function(wrap_pyfunction!(koszul_sign, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_trace, m)?)?;
    m.add_function(wrap_pyfunction!(projector_dim, m)?)?;
    m.add_function(wrap_pyfunction!(day_convolve, m)?)?;
    m.add_function(wrap_pyfunction!(is_invertible, m)?)?;
    m.add_function(wrap_pyfunction!(dim_shift, m)?)?;
    m.add_function(wrap_pyfunction!(count_twists, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_units, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_decision, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_character, m)?)?;
    m.add_function(wrap_pyfunction!(bz2_cardinality, m)?)?;
    m.add_function(wrap_pyfunction!(integral_bz2_sq, m)?)?;
    m.add_function(wrap_pyfunction!(loop_bz2_integral, m)?)?;
    m.add_function(wrap_pyfunction!(no_truncated_unit_check, m)?)?;
    m.add_function(wrap_pyfunction!(transchromatic_table, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}
