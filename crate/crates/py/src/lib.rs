//! Python bindings: cluster categories, cluster-tilting objects, the
//! endomorphism algebras and the classification report.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ctl_core::algebra::{build_end_algebra, normalize_to_module_rep, BasicAlgebra};
use ctl_core::classify::{classify as run_classify, AlgebraReport};
use ctl_core::cluster::{ar_quiver_c, mod_gamma_quiver, ClusterCategory as Category, DotOptions};
use ctl_core::selfcheck::{selfcheck as run_selfcheck, Scope};
use ctl_core::tilt::{enumerate_cluster_tilting, is_cluster_tilting, selfinjective_candidates, TiltingObject};
use ctl_core::{DynkinType, Family, OrientationPolicy, Quiver};

fn py_err(e: ctl_core::Error) -> PyErr {
    if e.is_internal() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn build_quiver(kind: &str, rank: usize, orientation: &str) -> PyResult<Quiver> {
    let family: Family = kind.parse().map_err(py_err)?;
    let policy: OrientationPolicy = orientation.parse().map_err(py_err)?;
    Quiver::new(DynkinType::new(family, rank).map_err(py_err)?, &policy).map_err(py_err)
}

/// The cluster category C(H) of an oriented Dynkin quiver.
///
///     >>> c = ClusterCategory("A", 3)
///     >>> c.orbit_lengths()
///     [6, 3]
#[pyclass(frozen)]
struct ClusterCategory {
    inner: Arc<Category>,
}

impl ClusterCategory {
    fn index(&self, label: &str) -> PyResult<usize> {
        self.inner.parse_label(label).map_err(py_err)
    }

    fn indices(&self, labels: &[String]) -> PyResult<Vec<usize>> {
        labels.iter().map(|l| self.index(l)).collect()
    }

    fn names(&self, t: &TiltingObject) -> Vec<String> {
        t.label_strings(&self.inner)
    }
}

#[pymethods]
impl ClusterCategory {
    #[new]
    #[pyo3(signature = (kind, rank, orientation="default"))]
    fn new(kind: &str, rank: usize, orientation: &str) -> PyResult<Self> {
        let q = build_quiver(kind, rank, orientation)?;
        Ok(ClusterCategory {
            inner: Category::shared(&q).map_err(py_err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn orientation(&self) -> String {
        self.inner.quiver().orientation_code()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("ClusterCategory({}, orientation={:?})", self.inner.quiver().dynkin(), self.orientation())
    }

    /// Object labels in canonical order.
    fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(ToString::to_string).collect()
    }

    fn tau(&self, label: &str) -> PyResult<String> {
        Ok(self.inner.label(self.inner.tau(self.index(label)?)).to_string())
    }

    fn tau_inv(&self, label: &str) -> PyResult<String> {
        Ok(self.inner.label(self.inner.tau_inv(self.index(label)?)).to_string())
    }

    /// dim Hom_C(x, y).
    fn hom(&self, x: &str, y: &str) -> PyResult<u32> {
        Ok(self.inner.hom(self.index(x)?, self.index(y)?))
    }

    /// dim Ext¹_C(x, y).
    fn ext(&self, x: &str, y: &str) -> PyResult<u32> {
        Ok(self.inner.ext(self.index(x)?, self.index(y)?))
    }

    fn orbits(&self) -> Vec<Vec<String>> {
        self.inner
            .orbits()
            .iter()
            .map(|o| o.iter().map(|&i| self.inner.label(i).to_string()).collect())
            .collect()
    }

    fn orbit_lengths(&self) -> Vec<usize> {
        self.inner.orbit_lengths()
    }

    fn tau_period(&self) -> usize {
        self.inner.tau_period()
    }

    /// Every cluster-tilting object, as sorted label lists.
    fn cluster_tilting(&self, py: Python<'_>) -> PyResult<Vec<Vec<String>>> {
        let inner = Arc::clone(&self.inner);
        let all = py.detach(move || enumerate_cluster_tilting(&inner)).map_err(py_err)?;
        Ok(all.iter().map(|t| self.names(t)).collect())
    }

    /// Cluster-tilting objects with τ_c² T = T.
    fn candidates(&self, py: Python<'_>) -> PyResult<Vec<Vec<String>>> {
        let inner = Arc::clone(&self.inner);
        let cands = py
            .detach(move || enumerate_cluster_tilting(&inner).map(|all| selfinjective_candidates(&inner, &all)))
            .map_err(py_err)?;
        Ok(cands.iter().map(|t| self.names(t)).collect())
    }

    fn is_cluster_tilting(&self, labels: Vec<String>) -> PyResult<bool> {
        Ok(is_cluster_tilting(&self.inner, &self.indices(&labels)?))
    }

    fn is_tau2_fixed(&self, labels: Vec<String>) -> PyResult<bool> {
        Ok(TiltingObject::new(self.indices(&labels)?).is_tau2_fixed(&self.inner))
    }

    /// End_C(T), after moving T to module summands if needed.
    fn end_algebra(&self, labels: Vec<String>) -> PyResult<Algebra> {
        let t = TiltingObject::new(self.indices(&labels)?);
        let norm = normalize_to_module_rep(&self.inner, &t).map_err(py_err)?;
        let alg = build_end_algebra(&norm.category, &norm.tilting).map_err(py_err)?;
        Ok(Algebra { inner: alg })
    }

    /// The AR quiver as DOT. `mode` is "cluster" or "mod-gamma".
    #[pyo3(signature = (marks=None, mode="cluster"))]
    fn ar_quiver_dot(&self, marks: Option<Vec<String>>, mode: &str) -> PyResult<String> {
        let marks = self.indices(&marks.unwrap_or_default())?;
        let title = format!("C({})", self.inner.quiver().dynkin());
        let q = match mode {
            "cluster" => ar_quiver_c(&self.inner, &marks),
            "mod-gamma" => mod_gamma_quiver(&self.inner, &marks),
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        }
        .map_err(py_err)?;
        Ok(q.to_dot(&title, &DotOptions::default()))
    }
}

/// A basic algebra given by structure constants.
#[pyclass(frozen)]
struct Algebra {
    inner: BasicAlgebra,
}

#[pymethods]
impl Algebra {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, vertices={})", self.inner.dim(), self.inner.vertex_count())
    }

    fn cartan(&self) -> Vec<Vec<usize>> {
        self.inner.cartan()
    }

    fn is_associative(&self) -> bool {
        self.inner.is_associative()
    }

    fn is_self_injective(&self) -> bool {
        self.inner.is_self_injective()
    }

    fn is_special_biserial(&self) -> PyResult<bool> {
        self.inner.is_special_biserial().map_err(py_err)
    }

    /// ν as a 0-based list, or None when not self-injective.
    fn nakayama_permutation(&self) -> Option<Vec<usize>> {
        self.inner.nakayama_permutation()
    }

    fn kupisch_series(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(self.inner.kupisch_series().map_err(py_err)?.map(|k| k.0))
    }

    fn loewy_length(&self) -> PyResult<usize> {
        self.inner.loewy_length().map_err(py_err)
    }

    /// The JSON algebra report.
    fn report(&self) -> PyResult<String> {
        let r = AlgebraReport::of(&self.inner).map_err(py_err)?;
        serde_json::to_string(&r).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }
}

/// Full classification report as a JSON string.
#[pyfunction]
#[pyo3(signature = (kind, rank, orientation="default"))]
fn classify(py: Python<'_>, kind: &str, rank: usize, orientation: &str) -> PyResult<String> {
    let q = build_quiver(kind, rank, orientation)?;
    let report = py.detach(move || run_classify(&q)).map_err(py_err)?;
    serde_json::to_string_pretty(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Runs the invariant suites; returns (suite, passed, detail) triples.
#[pyfunction]
#[pyo3(signature = (scope="fast"))]
fn selfcheck(py: Python<'_>, scope: &str) -> PyResult<Vec<(String, bool, String)>> {
    let scope: Scope = scope.parse().map_err(py_err)?;
    let out = py.detach(move || run_selfcheck(scope));
    Ok(out.into_iter().map(|o| (o.suite, o.passed, o.detail)).collect())
}

#[pymodule]
fn ctl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<ClusterCategory>()?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(selfcheck, m)?)?;
    Ok(())
}
