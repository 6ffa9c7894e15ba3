//! Python module `sphere_gauge`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sphere_gauge::gauge::{self, Localization, PlocalVariant};
use sphere_gauge::{bundles, cli, manifold, oracle, tables, AbGroup, Error, LieGroupId, Prime};

create_exception!(
    sphere_gauge,
    OutOfScopeError,
    PyException,
    "No proved statement covers the query."
);
create_exception!(
    sphere_gauge,
    UnknownError,
    PyException,
    "The answer is not known (e.g. a table gap)."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::OutOfScope(_) => OutOfScopeError::new_err(e.to_string()),
        Error::Unknown(_) | Error::Overflow(_) => UnknownError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn group_id(name: &str) -> PyResult<LieGroupId> {
    name.parse().map_err(to_py)
}

fn prime(p: u64) -> PyResult<Prime> {
    Prime::new(p).map_err(to_py)
}

/// A finitely generated abelian group, integral or local at a prime.
#[pyclass(
    name = "AbGroup",
    module = "sphere_gauge",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyAbGroup(AbGroup);

#[pymethods]
impl PyAbGroup {
    #[new]
    #[pyo3(signature = (free_rank=0, torsion=Vec::new(), p=None))]
    fn new(free_rank: u32, torsion: Vec<u64>, p: Option<u64>) -> PyResult<Self> {
        let g = match p {
            Some(p) => AbGroup::new_local(free_rank, &torsion, prime(p)?),
            None => AbGroup::new(free_rank, &torsion),
        };
        g.map(PyAbGroup).map_err(to_py)
    }

    /// Parse the text form, e.g. `"Z + Z_2 + Z_12"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyAbGroup).map_err(to_py)
    }

    #[getter]
    fn free_rank(&self) -> u32 {
        self.0.free_rank()
    }

    #[getter]
    fn invariant_factors(&self) -> Vec<u64> {
        self.0.invariant_factors().to_vec()
    }

    /// `None` for integral groups, else the prime.
    #[getter]
    fn prime(&self) -> Option<u64> {
        match self.0.locality() {
            sphere_gauge::Locality::Integral => None,
            sphere_gauge::Locality::Local(p) => Some(p.value()),
        }
    }

    fn order(&self) -> Option<u64> {
        self.0.order()
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn unicode(&self) -> String {
        self.0.to_unicode()
    }

    fn direct_sum(&self, other: PyRef<'_, PyAbGroup>) -> PyResult<Self> {
        self.0.direct_sum(&other.0).map(PyAbGroup).map_err(to_py)
    }

    fn __add__(&self, other: PyRef<'_, PyAbGroup>) -> PyResult<Self> {
        self.direct_sum(other)
    }

    fn localize(&self, p: u64) -> PyResult<Self> {
        self.0.localize(prime(p)?).map(PyAbGroup).map_err(to_py)
    }

    fn tensor_with_cyclic(&self, q: u64) -> PyResult<Self> {
        self.0.tensor_with_cyclic(q).map(PyAbGroup).map_err(to_py)
    }

    fn tor_with_cyclic(&self, q: u64) -> PyResult<Self> {
        self.0.tor_with_cyclic(q).map(PyAbGroup).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("AbGroup.parse({:?})", self.0.to_string())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }
}

/// `M_{l,m}` in normal form.
#[pyclass(
    name = "Manifold",
    module = "sphere_gauge",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyManifold(manifold::ManifoldSpec);

#[pymethods]
impl PyManifold {
    #[new]
    fn new(l: i64, m: i64) -> PyResult<Self> {
        manifold::normalize(l, m).map(PyManifold).map_err(to_py)
    }

    #[getter]
    fn l(&self) -> i64 {
        self.0.l()
    }

    #[getter]
    fn m(&self) -> u64 {
        self.0.m()
    }

    fn twist_class(&self) -> u8 {
        self.0.twist_class()
    }

    fn homology(&self) -> Vec<PyAbGroup> {
        manifold::homology(&self.0)
            .into_iter()
            .map(PyAbGroup)
            .collect()
    }

    /// Returns `(equivalent, reason)`.
    fn is_homotopy_equivalent(&self, other: PyRef<'_, PyManifold>) -> (bool, String) {
        let v = manifold::is_homotopy_equivalent(&self.0, &other.0);
        (v.equivalent, v.reason)
    }

    /// Canonical expression for the suspension, `p`-local when `p` is given.
    #[pyo3(signature = (p=None))]
    fn suspension(&self, p: Option<u64>) -> PyResult<String> {
        let e = match p {
            Some(p) => manifold::suspension_plocal(&self.0, prime(p)?),
            None => manifold::suspension(&self.0),
        };
        e.map(|e| e.to_string()).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Manifold({}, {})", self.0.l(), self.0.m())
    }
}

/// Returns `(set, size)`; `size` is `None` when there are countably many classes.
#[pyfunction]
fn classify_bundles(group: &str, l: i64, m: i64) -> PyResult<(PyAbGroup, Option<u64>)> {
    let spec = manifold::normalize(l, m).map_err(to_py)?;
    let c = bundles::classify_bundles(group_id(group)?, &spec).map_err(to_py)?;
    Ok((PyAbGroup(c.set), c.size))
}

/// Decompose a gauge group. Returns a dict with `expr`, `caveats`, `theorem`, `looped`.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (group, l, m, k=0, p=None, pointed=false, looped=false))]
fn decompose<'py>(
    py: Python<'py>,
    group: &str,
    l: i64,
    m: i64,
    k: i64,
    p: Option<u64>,
    pointed: bool,
    looped: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let g = group_id(group)?;
    let spec = manifold::normalize(l, m).map_err(to_py)?;
    let res = match (spec.m(), p) {
        (0, None) if pointed => gauge::decompose_pointed_m0(g, spec.l(), k),
        (0, None) => gauge::decompose_unpointed_m0(g, spec.l(), k),
        (_, Some(p)) => {
            let variant = match (pointed, looped) {
                (false, _) => PlocalVariant::Unpointed,
                (true, false) => PlocalVariant::Pointed,
                (true, true) => PlocalVariant::PointedLooped,
            };
            gauge::decompose_plocal(g, spec.l(), spec.m(), k, prime(p)?, variant)
        }
        (m, None) => Err(Error::OutOfScope(format!(
            "for m = {m} only p-local decompositions (p >= 5) are known"
        ))),
    }
    .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("expr", res.expr.to_string())?;
    d.set_item("caveats", res.caveats)?;
    d.set_item("theorem", res.theorem)?;
    d.set_item("pointed", res.pointed)?;
    d.set_item("looped", res.looped)?;
    Ok(d)
}

/// `pi_n` of the pointed gauge group over `M_{l,0}`; returns `(group, symbolic summands)`.
#[pyfunction]
#[pyo3(signature = (group, l, n, k=0))]
fn pi_pointed_gauge_m0(group: &str, l: i64, n: u32, k: i64) -> PyResult<(PyAbGroup, Vec<String>)> {
    let r = gauge::pi_pointed_gauge_m0(group_id(group)?, l, k, n).map_err(to_py)?;
    Ok((PyAbGroup(r.group), r.symbolic))
}

#[pyfunction]
fn pi0_unpointed_gauge_m0(group: &str, l: i64) -> PyResult<PyAbGroup> {
    gauge::pi0_unpointed_gauge_m0(group_id(group)?, l)
        .map(PyAbGroup)
        .map_err(to_py)
}

/// `p`-local `pi_n` of the pointed gauge group over `M_{l,m}`, `m >= 2`.
#[pyfunction]
#[pyo3(signature = (group, m, n, p, k=0, looped=false))]
fn pi_pointed_gauge_plocal(
    group: &str,
    m: u64,
    n: u32,
    p: u64,
    k: i64,
    looped: bool,
) -> PyResult<PyAbGroup> {
    gauge::pi_pointed_gauge_plocal(group_id(group)?, m, k, n, prime(p)?, looped)
        .map(|r| PyAbGroup(r.group))
        .map_err(to_py)
}

/// Returns `(group, extension_assumed_split)`.
#[pyfunction]
fn pi_with_coefficients(group: &str, i: u32, p: u64, r: u32) -> PyResult<(PyAbGroup, bool)> {
    let c = gauge::pi_with_coefficients(group_id(group)?, i, prime(p)?, r).map_err(to_py)?;
    Ok((PyAbGroup(c.group), c.extension_assumed_split))
}

/// Returns `(decision, reason)` with decision one of
/// `"equivalent"`, `"not-equivalent"`, `"out-of-scope"`.
#[pyfunction]
#[pyo3(signature = (group, k, k2, locality="integral"))]
fn s7_gauge_equivalent(group: &str, k: i64, k2: i64, locality: &str) -> PyResult<(String, String)> {
    let loc: Localization = locality.parse().map_err(to_py)?;
    let v = gauge::s7_gauge_equivalent(group_id(group)?, k, k2, loc);
    let decision = match v.decision {
        gauge::S7Decision::Equivalent => "equivalent",
        gauge::S7Decision::NotEquivalent => "not-equivalent",
        gauge::S7Decision::OutOfScope => "out-of-scope",
    };
    Ok((decision.to_string(), v.reason))
}

#[pyfunction]
fn pi_lie(group: &str, i: u32) -> PyResult<PyAbGroup> {
    tables::pi_lie(group_id(group)?, i)
        .map(PyAbGroup)
        .map_err(to_py)
}

#[pyfunction]
fn pi_sphere(n: u32, i: u32) -> PyResult<PyAbGroup> {
    tables::pi_sphere(n, i).map(PyAbGroup).map_err(to_py)
}

/// Smith-normal-form homology of `M_{l,m}` (only `m` enters the cell structure).
#[pyfunction]
fn oracle_homology(m: u64) -> PyResult<Vec<PyAbGroup>> {
    let h = oracle::homology_of(&oracle::complex_for_manifold(m)).map_err(to_py)?;
    Ok(h.into_iter().map(PyAbGroup).collect())
}

/// Homology of a chain complex in the text matrix format.
#[pyfunction]
fn complex_homology(text: &str) -> PyResult<Vec<PyAbGroup>> {
    let c = oracle::ChainComplex::parse(text).map_err(to_py)?;
    let h = oracle::homology_of(&c).map_err(to_py)?;
    Ok(h.into_iter().map(PyAbGroup).collect())
}

/// Run a CLI command; returns `(exit_code, output)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let r = cli::run(args);
    (r.exit_code, r.output())
}

#[pymodule]
#[pyo3(name = "sphere_gauge")]
fn sphere_gauge_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAbGroup>()?;
    m.add_class::<PyManifold>()?;
    m.add("OutOfScopeError", m.py().get_type::<OutOfScopeError>())?;
    m.add("UnknownError", m.py().get_type::<UnknownError>())?;
    m.add_function(wrap_pyfunction!(classify_bundles, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(pi_pointed_gauge_m0, m)?)?;
    m.add_function(wrap_pyfunction!(pi0_unpointed_gauge_m0, m)?)?;
    m.add_function(wrap_pyfunction!(pi_pointed_gauge_plocal, m)?)?;
    m.add_function(wrap_pyfunction!(pi_with_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(s7_gauge_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(pi_lie, m)?)?;
    m.add_function(wrap_pyfunction!(pi_sphere, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_homology, m)?)?;
    m.add_function(wrap_pyfunction!(complex_homology, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
