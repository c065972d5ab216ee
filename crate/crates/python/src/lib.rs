//! Python bindings: graphs, vectors, bases, cohomology, weights and the
//! verification suites. Rationals cross the boundary as `"p/q"` strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use decograph::homology::{cohomology_with, verify_cocycle_with, CohomologyReport, Differential};
use decograph::json::{graph_from_json, graph_to_json, parse_rational, rational_to_string, vector_from_json, vector_to_json, CohomologyJson};
use decograph::verify::{run_suite, SuiteOptions};
use decograph::weights::{a_space_dim as astu_dim, gl_weight as gl, ChordDiagram};
use decograph::{Canon, DecoratedGraph, GraphError, GraphVector, Parity};

fn err(e: GraphError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_parity(s: &str) -> PyResult<Parity> {
    s.parse().map_err(PyValueError::new_err)
}

fn parse_differential(s: &str) -> PyResult<Differential> {
    match s {
        "delta" => Ok(Differential::Delta),
        "underline" => Ok(Differential::Underline),
        "framed" => Ok(Differential::Framed),
        other => Err(PyValueError::new_err(format!("unknown differential `{other}`"))),
    }
}

#[pyclass(name = "Graph", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph(DecoratedGraph);

#[pymethods]
impl PyGraph {
    /// Graph from 1-based `(a, b)` pairs; `crosses` lists crossed circle vertices.
    #[new]
    #[pyo3(signature = (parity, v_ext, v_int, edges, crosses = Vec::new()))]
    fn new(parity: &str, v_ext: usize, v_int: usize, edges: Vec<(usize, usize)>, crosses: Vec<usize>) -> PyResult<Self> {
        let p = parse_parity(parity)?;
        let n = v_ext + v_int;
        let in_range = |v: usize| (1..=n).contains(&v);
        if !edges.iter().all(|&(a, b)| in_range(a) && in_range(b)) || !crosses.iter().all(|&c| in_range(c)) {
            return Err(PyValueError::new_err("vertex labels run from 1 to v_ext + v_int"));
        }
        let g = match p {
            Parity::Odd => DecoratedGraph::odd(v_ext, v_int, &edges),
            Parity::Even => DecoratedGraph::even(v_ext, v_int, &edges),
        };
        Ok(PyGraph(g.with_crosses(&crosses)))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        graph_from_json(text).map(PyGraph).map_err(err)
    }

    fn to_json(&self) -> String {
        graph_to_json(&self.0)
    }

    #[getter]
    fn parity(&self) -> &'static str {
        self.0.parity().as_str()
    }

    fn order(&self) -> i64 {
        self.0.order()
    }

    fn degree(&self) -> i64 {
        self.0.degree()
    }

    fn violations(&self) -> Vec<String> {
        self.0.validate().iter().map(|v| format!("{v:?}")).collect()
    }

    /// `(canonical graph, sign)`, or `None` when the graph is zero.
    fn canonicalize(&self) -> PyResult<Option<(PyGraph, i32)>> {
        Ok(match self.0.canonicalize().map_err(err)? {
            Canon::Zero => None,
            Canon::Graph { graph, sign } => Some((PyGraph(graph), sign)),
        })
    }

    #[pyo3(signature = (differential = "delta"))]
    fn delta(&self, differential: &str) -> PyResult<PyVector> {
        parse_differential(differential)?.apply(&self.0).map(PyVector).map_err(err)
    }

    fn to_dot(&self) -> String {
        decograph::dot::to_dot(&self.0, "graph")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Graph({})", self.0)
    }
}

#[pyclass(name = "Vector", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyVector(GraphVector);

#[pymethods]
impl PyVector {
    /// Combination of `(coefficient, graph)` pairs; coefficients are ints or `"p/q"`.
    #[new]
    fn new(parity: &str, terms: Vec<(String, PyGraph)>) -> PyResult<Self> {
        let mut v = GraphVector::zero(parse_parity(parity)?);
        for (c, g) in &terms {
            v.add_graph(&parse_rational(c).map_err(err)?, &g.0).map_err(err)?;
        }
        Ok(PyVector(v))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        vector_from_json(text).map(PyVector).map_err(err)
    }

    fn to_json(&self) -> String {
        vector_to_json(&self.0)
    }

    fn terms(&self) -> Vec<(String, PyGraph)> {
        self.0.iter().map(|(g, c)| (rational_to_string(c), PyGraph(g.clone()))).collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[pyo3(signature = (differential = "delta"))]
    fn delta(&self, differential: &str) -> PyResult<PyVector> {
        let d = parse_differential(differential)?;
        let mut out = GraphVector::zero(self.0.parity());
        for (g, c) in self.0.iter() {
            out.add_scaled(c, &d.apply(g).map_err(err)?).map_err(err)?;
        }
        Ok(PyVector(out))
    }

    #[pyo3(signature = (differential = "delta"))]
    fn is_cocycle(&self, differential: &str) -> PyResult<bool> {
        verify_cocycle_with(parse_differential(differential)?, &self.0).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Cohomology", frozen)]
struct PyCohomology(CohomologyReport);

#[pymethods]
impl PyCohomology {
    #[getter]
    fn dim_h(&self) -> usize {
        self.0.dim_h
    }

    #[getter]
    fn dim_kernel(&self) -> usize {
        self.0.dim_kernel
    }

    #[getter]
    fn rank_previous(&self) -> usize {
        self.0.rank_previous
    }

    #[getter]
    fn basis(&self) -> Vec<PyGraph> {
        self.0.basis.iter().cloned().map(PyGraph).collect()
    }

    #[getter]
    fn representatives(&self) -> Vec<PyVector> {
        self.0.representatives.iter().cloned().map(PyVector).collect()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&CohomologyJson::from(&self.0)).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// Canonical basis of one bidegree.
#[pyfunction]
#[pyo3(signature = (parity, order, degree, framed = false))]
fn basis(parity: &str, order: i64, degree: i64, framed: bool) -> PyResult<Vec<PyGraph>> {
    let d = if framed { Differential::Framed } else { Differential::Delta };
    Ok(d.basis(parse_parity(parity)?, order, degree).map_err(err)?.into_iter().map(PyGraph).collect())
}

#[pyfunction]
#[pyo3(signature = (parity, order, degree, differential = "delta"))]
fn cohomology(parity: &str, order: i64, degree: i64, differential: &str) -> PyResult<PyCohomology> {
    cohomology_with(parse_differential(differential)?, parse_parity(parity)?, order, degree)
        .map(PyCohomology)
        .map_err(err)
}

/// Coefficients of the gl(N) weight, lowest power first.
#[pyfunction]
fn gl_weight(chords: Vec<(usize, usize)>) -> PyResult<Vec<i64>> {
    if chords.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(PyValueError::new_err("chord endpoints are 1-based"));
    }
    let pairs: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let d = ChordDiagram::new(&pairs).map_err(err)?;
    Ok(gl(&d).coeffs().to_vec())
}

#[pyfunction]
fn a_space_dim(k: usize) -> PyResult<usize> {
    if k > 6 {
        return Err(PyValueError::new_err("k <= 6"));
    }
    Ok(astu_dim(k))
}

/// Verification report as JSON.
#[pyfunction]
#[pyo3(signature = (suite = "all"))]
fn verify(suite: &str) -> PyResult<String> {
    let report = run_suite(suite, &SuiteOptions::default()).map_err(err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
#[pyo3(name = "decograph")]
fn decograph_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVector>()?;
    m.add_class::<PyCohomology>()?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(gl_weight, m)?)?;
    m.add_function(wrap_pyfunction!(a_space_dim, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", decograph::json::VERSION)?;
    Ok(())
}
