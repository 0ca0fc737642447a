//! Python bindings. Vertices and parts are 0-indexed, as in the Rust API.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use hpart::verify::{check_height_properties_with, AxiomOptions};
use hpart::{Error, HeightFunction, VertexSet};

create_exception!(
    hpart,
    HypothesisError,
    PyValueError,
    "Budgets are below the required bound."
);
create_exception!(
    hpart,
    BudgetExceededError,
    PyRuntimeError,
    "The step budget ran out."
);
create_exception!(
    hpart,
    HeightContractError,
    PyRuntimeError,
    "A height function broke one of its properties."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Hypothesis { .. } => HypothesisError::new_err(e.to_string()),
        Error::BudgetExceeded { .. } => BudgetExceededError::new_err(e.to_string()),
        Error::HeightContract { .. } => HeightContractError::new_err(e.to_string()),
        Error::Internal { .. } => PyRuntimeError::new_err(e.to_string()),
        Error::InputFormat(_) | Error::Contract(_) | Error::Size(_) => {
            PyValueError::new_err(e.to_string())
        }
    }
}

#[pyclass(name = "Graph", module = "hpart", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: hpart::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: hpart::Graph::from_edge_list(n, &edges).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self {
            inner: hpart::Graph::complete(n),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Ok(Self {
            inner: hpart::Graph::cycle(n),
        })
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self {
            inner: hpart::Graph::path(n),
        }
    }

    #[staticmethod]
    fn petersen() -> Self {
        Self {
            inner: hpart::Graph::petersen(),
        }
    }

    /// Parses DIMACS edge format (1-indexed in the text).
    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        parse_dimacs(text)
    }

    fn to_dimacs(&self) -> String {
        hpart_cli::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// Components of the subgraph induced by `vertices` (all when omitted).
    #[pyo3(signature = (vertices=None))]
    fn components(&self, vertices: Option<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
        let set = self.set(vertices)?;
        Ok(self
            .inner
            .components(&set)
            .iter()
            .map(VertexSet::to_vec)
            .collect())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "vertex {v} is out of range 0..{}",
                self.inner.n()
            )))
        }
    }

    fn set(&self, vertices: Option<Vec<usize>>) -> PyResult<VertexSet> {
        match vertices {
            None => Ok(self.inner.vertices()),
            Some(vs) => {
                for &v in &vs {
                    self.check(v)?;
                }
                Ok(vs.into_iter().collect())
            }
        }
    }
}

/// A graph with one degree budget and one named height function per part.
#[pyclass(name = "Problem", module = "hpart", frozen)]
struct PyProblem {
    inner: hpart::Problem,
}

#[pymethods]
impl PyProblem {
    /// `heights` holds one name per part (`"zero"` or `"regular"`), or a
    /// single name for every part.
    #[new]
    #[pyo3(signature = (graph, budgets, heights=None))]
    fn new(graph: &PyGraph, budgets: Vec<usize>, heights: Option<Vec<String>>) -> PyResult<Self> {
        let names = heights.unwrap_or_else(|| vec!["zero".into()]);
        let names: Vec<String> = match names.len() {
            1 => vec![names[0].clone(); budgets.len()],
            _ => names,
        };
        if names.len() != budgets.len() {
            return Err(PyValueError::new_err(format!(
                "{} height names for {} budgets",
                names.len(),
                budgets.len()
            )));
        }
        let heights = names
            .iter()
            .zip(&budgets)
            .map(|(name, &r)| HeightFunction::from_name(name, r))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        let inner = hpart::Problem::new(graph.inner.clone(), budgets, heights).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph().clone(),
        }
    }

    #[getter]
    fn budgets(&self) -> Vec<usize> {
        self.inner.budgets().to_vec()
    }

    #[getter]
    fn heights(&self) -> Vec<String> {
        self.inner
            .heights()
            .iter()
            .map(|h| h.name().to_string())
            .collect()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn main_bound(&self) -> i64 {
        self.inner.main_bound()
    }

    fn lovasz_bound(&self) -> i64 {
        self.inner.lovasz_bound()
    }

    /// The potential `(f, c, h)` of `parts`.
    fn potential(&self, parts: Vec<Vec<usize>>) -> PyResult<(i64, usize, u64)> {
        let p = self.partition(&parts)?;
        let pot = hpart::potential(&self.inner, &p);
        Ok((pot.f, pot.c, pot.h))
    }

    /// Degree and height violations of `parts`, as dictionaries.
    fn verify<'py>(
        &self,
        py: Python<'py>,
        parts: Vec<Vec<usize>>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        hpart::verify_parts(&self.inner, &parts)
            .violations
            .iter()
            .map(|v| {
                let d = PyDict::new(py);
                d.set_item("kind", v.kind.as_str())?;
                d.set_item("part", v.part)?;
                d.set_item("vertices", v.vertices.clone())?;
                d.set_item("detail", v.detail.clone())?;
                Ok(d)
            })
            .collect()
    }

    fn is_valid(&self, parts: Vec<Vec<usize>>) -> bool {
        hpart::verify_parts(&self.inner, &parts).is_ok()
    }

    /// Partition with bounded degrees and zero heights.
    #[pyo3(signature = (initial=None, step_budget=None))]
    fn partition_main(
        &self,
        py: Python<'_>,
        initial: Option<Vec<Vec<usize>>>,
        step_budget: Option<usize>,
    ) -> PyResult<Vec<Vec<usize>>> {
        self.solve(py, initial, step_budget, true)
    }

    /// Partition with bounded degrees only, under the weaker budget bound.
    #[pyo3(signature = (initial=None, step_budget=None))]
    fn partition_lovasz(
        &self,
        py: Python<'_>,
        initial: Option<Vec<Vec<usize>>>,
        step_budget: Option<usize>,
    ) -> PyResult<Vec<Vec<usize>>> {
        self.solve(py, initial, step_budget, false)
    }

    /// Run statistics of a main-lemma solve, as a dictionary.
    #[pyo3(signature = (initial=None))]
    fn solve_stats<'py>(
        &self,
        py: Python<'py>,
        initial: Option<Vec<Vec<usize>>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let mut solver = hpart::Solver::new(&self.inner);
        if let Some(parts) = initial {
            solver = solver.initial(self.partition(&parts)?);
        }
        let outcome = py.detach(|| solver.run_main()).map_err(to_py)?;
        let s = outcome.stats;
        let d = PyDict::new(py);
        d.set_item("parts", outcome.partition.to_lists())?;
        d.set_item("moves", s.moves)?;
        d.set_item("degree_fix_moves", s.degree_fix_moves)?;
        d.set_item("commits", s.commits)?;
        d.set_item("shuffle_steps", s.shuffle_steps)?;
        d.set_item("isolations", s.isolations)?;
        d.set_item("rearrangements", s.rearrangements)?;
        Ok(d)
    }

    /// A valid partition by exhaustive search, or `None`.
    fn brute_force(&self, py: Python<'_>) -> PyResult<Option<Vec<Vec<usize>>>> {
        let found = py
            .detach(|| hpart::brute_force_exists(&self.inner))
            .map_err(to_py)?;
        Ok(found.map(|p| p.to_lists()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Problem(n={}, budgets={:?})",
            self.inner.graph().n(),
            self.inner.budgets()
        )
    }
}

impl PyProblem {
    fn partition(&self, parts: &[Vec<usize>]) -> PyResult<hpart::Partition> {
        hpart::Partition::from_parts(self.inner.graph().n(), parts).map_err(to_py)
    }

    fn solve(
        &self,
        py: Python<'_>,
        initial: Option<Vec<Vec<usize>>>,
        step_budget: Option<usize>,
        main: bool,
    ) -> PyResult<Vec<Vec<usize>>> {
        let mut solver = hpart::Solver::new(&self.inner);
        if let Some(parts) = initial {
            solver = solver.initial(self.partition(&parts)?);
        }
        if let Some(budget) = step_budget {
            solver = solver.step_budget(budget);
        }
        let outcome = py
            .detach(|| {
                if main {
                    solver.run_main()
                } else {
                    solver.run_lovasz()
                }
            })
            .map_err(to_py)?;
        Ok(outcome.partition.to_lists())
    }
}

#[pyfunction]
fn parse_dimacs(text: &str) -> PyResult<PyGraph> {
    let parsed = hpart_cli::parse_graph(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyGraph {
        inner: parsed.graph,
    })
}

/// Height of the named height function on the component `vertices`.
#[pyfunction]
fn height(graph: &PyGraph, name: &str, r: usize, vertices: Vec<usize>) -> PyResult<u64> {
    let h = HeightFunction::from_name(name, r).map_err(to_py)?;
    let set = graph.set(Some(vertices))?;
    Ok(hpart::height_of_graph(&h, &graph.inner, &set))
}

/// Critical vertices of the connected subgraph induced by `vertices`.
#[pyfunction]
#[pyo3(signature = (graph, name, r, vertices=None, min_degree=0))]
fn critical_vertices(
    graph: &PyGraph,
    name: &str,
    r: usize,
    vertices: Option<Vec<usize>>,
    min_degree: usize,
) -> PyResult<Vec<usize>> {
    let h = HeightFunction::from_name(name, r).map_err(to_py)?;
    let set = graph.set(vertices)?;
    hpart::critical_vertices(&h, &graph.inner, &set, min_degree).map_err(to_py)
}

/// Checks the four height properties on every connected graph with at most
/// `n_max` vertices. Returns `(graphs_checked, failures)` where each failure
/// is `(property, n, edges, vertices)`.
#[pyfunction]
#[pyo3(signature = (name, r, n_max=6, up_to_isomorphism=false))]
#[allow(clippy::type_complexity)]
fn check_height_properties(
    py: Python<'_>,
    name: &str,
    r: usize,
    n_max: usize,
    up_to_isomorphism: bool,
) -> PyResult<(usize, Vec<(u8, usize, Vec<(usize, usize)>, Vec<usize>)>)> {
    let h = HeightFunction::from_name(name, r).map_err(to_py)?;
    let options = AxiomOptions {
        up_to_isomorphism,
        ..AxiomOptions::new(n_max)
    };
    let report = py
        .detach(|| check_height_properties_with(&h, r, &options))
        .map_err(to_py)?;
    let failures = report
        .failures
        .into_iter()
        .map(|f| {
            (
                f.property,
                f.witness.n(),
                f.witness.edges().to_vec(),
                f.vertices,
            )
        })
        .collect();
    Ok((report.graphs_checked, failures))
}

#[pymodule]
#[pyo3(name = "hpart")]
fn hpart_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyProblem>()?;
    m.add_function(wrap_pyfunction!(parse_dimacs, m)?)?;
    m.add_function(wrap_pyfunction!(height, m)?)?;
    m.add_function(wrap_pyfunction!(critical_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(check_height_properties, m)?)?;
    let py = m.py();
    m.add("HypothesisError", py.get_type::<HypothesisError>())?;
    m.add("BudgetExceededError", py.get_type::<BudgetExceededError>())?;
    m.add("HeightContractError", py.get_type::<HeightContractError>())?;
    Ok(())
}
