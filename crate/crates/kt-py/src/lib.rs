//! Python bindings for the KT-orientation toolkit.
//!
//! Build with `cargo build --release -p kt-py`, then import the produced
//! `libkt_orient.so` as the module `kt_orient` (see python/smoke_test.py).

use kt_core::cubic;
use kt_core::families;
use kt_core::graph::Graph as CoreGraph;
use kt_core::independence;
use kt_core::io;
use kt_core::orientation::{Orientation as CoreOrientation, WitnessPair};
use kt_core::reductions;
use kt_core::solve;
use kt_core::verify;
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph with 1-based vertex ids.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: CoreGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: u32, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: CoreGraph::from_edges(n, &edges).map_err(value_err)?,
        })
    }

    /// Parses a `.g` file body.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::parse_graph(text).map_err(value_err)?,
        })
    }

    fn to_text(&self) -> String {
        io::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: u32) -> PyResult<Vec<u32>> {
        if v == 0 || v > self.inner.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: u32) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn has_triangle(&self) -> bool {
        self.inner.has_triangle()
    }

    /// Shortest cycle length, or None for forests.
    fn girth(&self) -> Option<u32> {
        self.inner.girth()
    }

    fn bridges(&self) -> Vec<(u32, u32)> {
        self.inner.bridges()
    }

    /// Two-coloring classes, or None if an odd cycle exists.
    fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        self.inner.bipartition()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// An orientation of a graph: every edge carries a direction.
#[pyclass(name = "Orientation", from_py_object)]
#[derive(Clone)]
struct PyOrientation {
    inner: CoreOrientation,
}

#[pymethods]
impl PyOrientation {
    /// Builds an orientation from a full arc list over `graph`.
    #[new]
    fn new(graph: PyGraph, arcs: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyOrientation {
            inner: CoreOrientation::from_arcs(graph.inner, &arcs).map_err(value_err)?,
        })
    }

    /// Parses a `.d` file body.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyOrientation {
            inner: io::parse_orientation(text).map_err(value_err)?,
        })
    }

    fn to_text(&self) -> String {
        io::write_orientation(&self.inner)
    }

    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph().clone(),
        }
    }

    fn arcs(&self) -> Vec<(u32, u32)> {
        self.inner.arcs().collect()
    }

    fn has_arc(&self, tail: u32, head: u32) -> bool {
        self.inner.has_arc(tail, head)
    }

    fn reverse(&self) -> PyOrientation {
        PyOrientation {
            inner: self.inner.reverse(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Orientation(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Verdict plus witness from the verifier.
#[pyclass(name = "VerifyOutcome")]
struct PyVerifyOutcome {
    #[pyo3(get)]
    is_kt: bool,
    /// ('cycle', [v...]) or ('two_paths', u, v, [path_a], [path_b]).
    #[pyo3(get)]
    witness: Option<Py<PyAny>>,
}

#[pymethods]
impl PyVerifyOutcome {
    fn __repr__(&self) -> String {
        if self.is_kt {
            "VerifyOutcome(is_kt=True)".into()
        } else {
            "VerifyOutcome(is_kt=False, witness=...)".into()
        }
    }
}

/// Checks whether an orientation is a KT orientation; on failure the
/// outcome carries a directed-cycle or two-paths witness.
#[pyfunction]
fn verify_kt(py: Python<'_>, d: &PyOrientation) -> PyResult<PyVerifyOutcome> {
    match verify::verify_kt(&d.inner) {
        verify::VerifyResult::IsKt => Ok(PyVerifyOutcome {
            is_kt: true,
            witness: None,
        }),
        verify::VerifyResult::NotKt(w) => {
            let witness: Py<PyAny> = match w {
                WitnessPair::DirectedCycle { vertices } => {
                    ("cycle", vertices).into_pyobject(py)?.unbind().into_any()
                }
                WitnessPair::TwoPaths {
                    u,
                    v,
                    path_a,
                    path_b,
                } => ("two_paths", u, v, path_a, path_b)
                    .into_pyobject(py)?
                    .unbind()
                    .into_any(),
            };
            Ok(PyVerifyOutcome {
                is_kt: false,
                witness: Some(witness),
            })
        }
    }
}

/// Complete backtracking search; returns an orientation or None. Raises
/// RuntimeError when the node budget is exceeded.
#[pyfunction]
#[pyo3(signature = (graph, budget=None))]
fn solve_exact(graph: &PyGraph, budget: Option<u64>) -> PyResult<Option<PyOrientation>> {
    match solve::solve_exact(&graph.inner, budget) {
        Ok(out) => Ok(out.found().cloned().map(|inner| PyOrientation { inner })),
        Err(e @ solve::SolveError::BudgetExceeded { .. }) => {
            Err(PyRuntimeError::new_err(e.to_string()))
        }
        Err(e) => Err(value_err(e)),
    }
}

/// Polynomial-time decision for graphs of maximum degree at most 3.
#[pyfunction]
fn solve_cubic(graph: &PyGraph) -> PyResult<Option<PyOrientation>> {
    let out = cubic::solve_cubic(&graph.inner).map_err(value_err)?;
    Ok(out.found().cloned().map(|inner| PyOrientation { inner }))
}

/// Exhaustive KT-orientation count (at most 24 edges).
#[pyfunction]
fn count_kt_orientations(graph: &PyGraph) -> PyResult<u64> {
    solve::count_kt_orientations(&graph.inner).map_err(value_err)
}

/// The 2xk grid graph.
#[pyfunction]
fn gen_ladder(k: u32) -> PyResult<PyGraph> {
    if k == 0 {
        return Err(value_err("k must be at least 1"));
    }
    Ok(PyGraph {
        inner: families::gen_ladder(k).0,
    })
}

/// A named small graph: cube, k23, k33, k33e, petersen, cubeMinusVertex,
/// cubeMinusEdge.
#[pyfunction]
fn gen_named(name: &str) -> PyResult<PyGraph> {
    let named: families::NamedGraph = name.parse().map_err(value_err)?;
    Ok(PyGraph {
        inner: families::gen_named(named),
    })
}

/// The cycle C_n.
#[pyfunction]
fn gen_cycle(n: u32) -> PyResult<PyGraph> {
    if n < 3 {
        return Err(value_err("cycles need at least 3 vertices"));
    }
    Ok(PyGraph {
        inner: families::gen_named(families::NamedGraph::Cycle(n)),
    })
}

/// A copycut family member with its constructive KT orientation.
#[pyclass(name = "Copycut")]
struct PyCopycut {
    #[pyo3(get)]
    k: u32,
    #[pyo3(get)]
    n_k: u64,
    #[pyo3(get)]
    alpha_k: u64,
    #[pyo3(get)]
    d_seq: Vec<u64>,
    #[pyo3(get)]
    branch: Vec<u32>,
    graph: CoreGraph,
    orientation: CoreOrientation,
}

#[pymethods]
impl PyCopycut {
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.graph.clone(),
        }
    }

    fn orientation(&self) -> PyOrientation {
        PyOrientation {
            inner: self.orientation.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Copycut(k={}, n={}, alpha={})",
            self.k, self.n_k, self.alpha_k
        )
    }
}

/// Generates the k-th d-copycut graph (canonical d when omitted).
#[pyfunction]
#[pyo3(signature = (k, d=None))]
fn gen_copycut(k: u32, d: Option<Vec<u64>>) -> PyResult<PyCopycut> {
    let fam = families::gen_copycut(k, d.as_deref()).map_err(value_err)?;
    Ok(PyCopycut {
        k: fam.k,
        n_k: fam.n_k,
        alpha_k: fam.alpha_k,
        d_seq: fam.d_seq,
        branch: fam.branch,
        graph: fam.graph,
        orientation: fam.orientation,
    })
}

/// Generates the k-th twincut graph; returns (graph, branch vertices).
#[pyfunction]
fn gen_twincut(k: u32) -> PyResult<(PyGraph, Vec<u32>)> {
    let fam = families::gen_twincut(k).map_err(value_err)?;
    Ok((PyGraph { inner: fam.graph }, fam.branch))
}

/// Exact rational F_k as a (numerator, denominator) pair of Python ints.
#[pyfunction]
fn f_sequence(py: Python<'_>, k: u32) -> PyResult<Py<PyAny>> {
    let f = families::f_sequence(k).map_err(value_err)?;
    let pair: (BigInt, BigInt) = (f.numer().clone(), f.denom().clone());
    Ok(pair.into_pyobject(py)?.unbind().into_any())
}

/// Floating-point F_k for asymptotic checks.
#[pyfunction]
fn f_sequence_f64(k: u32) -> PyResult<f64> {
    if k == 0 {
        return Err(value_err("k must be at least 1"));
    }
    Ok(families::f_sequence_f64(k))
}

/// Maximum independent set: returns (alpha, witness vertices).
#[pyfunction]
#[pyo3(signature = (graph, budget=None))]
fn alpha_exact(graph: &PyGraph, budget: Option<u64>) -> PyResult<(u32, Vec<u32>)> {
    match independence::alpha_exact(&graph.inner, budget) {
        Ok(res) => Ok((res.alpha, res.witness)),
        Err(e @ independence::IndependenceError::BudgetExceeded { .. }) => {
            Err(PyRuntimeError::new_err(e.to_string()))
        }
        Err(e) => Err(value_err(e)),
    }
}

#[pyfunction]
fn is_independent(graph: &PyGraph, vertices: Vec<u32>) -> PyResult<bool> {
    independence::is_independent(&graph.inner, &vertices).map_err(value_err)
}

/// A compiled NAE-3SAT reduction.
#[pyclass(name = "Reduction")]
struct PyReduction {
    inner: reductions::EncodedReduction,
}

#[pymethods]
impl PyReduction {
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn var_edges(&self) -> Vec<(u32, u32)> {
        self.inner.var_edges.clone()
    }

    #[getter]
    fn clause_cycles(&self) -> Vec<[u32; 5]> {
        self.inner.clause_cycles.clone()
    }

    /// The decoding sidecar in `var`/`clause` line format.
    fn map_text(&self) -> String {
        reductions::write_map(&self.inner)
    }

    /// Reads the truth assignment off an orientation of the reduced graph.
    fn decode(&self, d: &PyOrientation) -> PyResult<Vec<bool>> {
        reductions::decode_assignment(&self.inner, &d.inner).map_err(value_err)
    }

    /// The canonical KT orientation realizing a satisfying assignment.
    fn orientation_from_assignment(&self, assignment: Vec<bool>) -> PyResult<PyOrientation> {
        let d =
            reductions::assignment_to_orientation(&self.inner, &assignment).map_err(value_err)?;
        Ok(PyOrientation { inner: d })
    }

    fn __repr__(&self) -> String {
        format!(
            "Reduction(n_vars={}, clauses={}, graph=Graph(n={}, m={}))",
            self.inner.instance.n_vars,
            self.inner.instance.clauses.len(),
            self.inner.graph.n(),
            self.inner.graph.m()
        )
    }
}

/// Compiles a `.nae` instance text into a KT-orientation instance.
#[pyfunction]
#[pyo3(signature = (text, deg4=false))]
fn encode_nae3sat(text: &str, deg4: bool) -> PyResult<PyReduction> {
    let inst = reductions::parse_nae3sat(text).map_err(value_err)?;
    let inner = if deg4 {
        reductions::encode_deg4(&inst)
    } else {
        reductions::encode_general(&inst)
    };
    Ok(PyReduction { inner })
}

/// Exhaustive NAE-3SAT check; returns a satisfying assignment or None.
#[pyfunction]
fn nae3sat_bruteforce(text: &str) -> PyResult<Option<Vec<bool>>> {
    let inst = reductions::parse_nae3sat(text).map_err(value_err)?;
    match reductions::nae3sat_bruteforce(&inst).map_err(value_err)? {
        reductions::NaeOutcome::Satisfiable(a) => Ok(Some(a)),
        reductions::NaeOutcome::Unsatisfiable => Ok(None),
    }
}

#[pymodule]
fn kt_orient(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add_class::<PyVerifyOutcome>()?;
    m.add_class::<PyCopycut>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(verify_kt, m)?)?;
    m.add_function(wrap_pyfunction!(solve_exact, m)?)?;
    m.add_function(wrap_pyfunction!(solve_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(count_kt_orientations, m)?)?;
    m.add_function(wrap_pyfunction!(gen_ladder, m)?)?;
    m.add_function(wrap_pyfunction!(gen_named, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_copycut, m)?)?;
    m.add_function(wrap_pyfunction!(gen_twincut, m)?)?;
    m.add_function(wrap_pyfunction!(f_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(f_sequence_f64, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_exact, m)?)?;
    m.add_function(wrap_pyfunction!(is_independent, m)?)?;
    m.add_function(wrap_pyfunction!(encode_nae3sat, m)?)?;
    m.add_function(wrap_pyfunction!(nae3sat_bruteforce, m)?)?;
    Ok(())
}
