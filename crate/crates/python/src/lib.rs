use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fundgraph::construct::{bdh_check_forbidden, bdh_recognize, sp_recognize};
use fundgraph::fundamental::{bdh_to_sp, fundamental_graph, SpanningTree};
use fundgraph::graph::Edge;
use fundgraph::multiflow::{integral_certificates, FlowInstance};
use fundgraph::pivot::orbit;
use fundgraph::structure::{chain_graph_orbit_search, forbidden_quadruple_check, supporting_arborescence};
use fundgraph::{CanonicalForm, Error, Side};

fn err(e: Error) -> PyErr {
    match e {
        Error::Capacity(_) | Error::OrbitCap { .. } => PyOverflowError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

fn from_json<T: serde::de::DeserializeOwned>(s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(format!("malformed JSON: {e}")))
}

/// Bipartite graph with labeled vertices split into classes A and B.
#[pyclass(name = "BipartiteGraph", module = "pyfundgraph")]
struct PyBipartite {
    inner: fundgraph::BipartiteGraph,
}

#[pymethods]
impl PyBipartite {
    #[new]
    fn new(a: Vec<String>, b: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        let b: Vec<&str> = b.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = edges.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
        let inner = fundgraph::BipartiteGraph::from_labels(&a, &b, &edges).map_err(err)?;
        Ok(PyBipartite { inner })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyBipartite { inner: from_json(s)? })
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.inner)
    }

    #[getter]
    fn class_a(&self) -> Vec<String> {
        self.inner.class_a().to_vec()
    }

    #[getter]
    fn class_b(&self) -> Vec<String> {
        self.inner.class_b().to_vec()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner.edge_labels()
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Hex canonical key; equal keys mean isomorphic graphs.
    fn canonical_key(&self) -> PyResult<String> {
        Ok(self.inner.canonical_key().map_err(err)?.to_hex())
    }

    fn is_bdh(&self) -> PyResult<bool> {
        Ok(bdh_check_forbidden(&self.inner).map_err(err)?.free)
    }

    /// Defining sequence as JSON, or None for graphs that are not BDH.
    fn defining_sequence(&self) -> PyResult<Option<String>> {
        bdh_recognize(&self.inner).map_err(err)?.map(|s| to_json(&s)).transpose()
    }

    fn pivot(&self, u: &str, v: &str) -> PyResult<Self> {
        Ok(PyBipartite { inner: fundgraph::pivot::pivot(&self.inner, u, v).map_err(err)? })
    }

    #[pyo3(signature = (cap = fundgraph::pivot::DEFAULT_ORBIT_CAP))]
    fn orbit_size(&self, cap: usize) -> PyResult<usize> {
        Ok(orbit(&self.inner, cap).map_err(err)?.len())
    }

    /// Interlace polynomial, e.g. "x^2 + 2x".
    fn interlace(&self) -> PyResult<String> {
        Ok(fundgraph::poly::interlace(&self.inner).map_err(err)?.to_string())
    }

    fn gamma(&self) -> PyResult<String> {
        Ok(fundgraph::poly::gamma(&self.inner).map_err(err)?.to_string())
    }

    /// SP graph and spanning tree whose fundamental graph is this graph.
    fn to_sp(&self) -> PyResult<(PyMultigraph, Vec<String>)> {
        let (h, t) = bdh_to_sp(&self.inner).map_err(err)?;
        Ok((PyMultigraph { inner: h }, t.edges().to_vec()))
    }

    /// Supporting arborescence certificate as JSON; `cls` is "a" or "b".
    #[pyo3(signature = (cls = "a"))]
    fn arborescence(&self, cls: &str) -> PyResult<String> {
        let side = match cls {
            "a" | "A" => Side::A,
            "b" | "B" => Side::B,
            _ => return Err(PyValueError::new_err("class must be \"a\" or \"b\"")),
        };
        to_json(&supporting_arborescence(&self.inner, side).map_err(err)?)
    }

    /// Free of hole, domino, arrow and T2.
    fn is_pivot_chain(&self) -> PyResult<bool> {
        Ok(forbidden_quadruple_check(&self.inner).map_err(err)?.free)
    }

    /// Pivot word reaching a chain graph, or None.
    fn chain_word(&self) -> PyResult<Option<Vec<(String, String)>>> {
        let found = chain_graph_orbit_search(&self.inner, fundgraph::pivot::DEFAULT_ORBIT_CAP).map_err(err)?;
        Ok(found.map(|c| c.word))
    }

    fn __repr__(&self) -> String {
        format!(
            "BipartiteGraph(a={:?}, b={:?}, edges={})",
            self.inner.class_a(),
            self.inner.class_b(),
            self.inner.edge_count()
        )
    }
}

/// Multigraph on vertices 0..n with string edge ids.
#[pyclass(name = "Multigraph", module = "pyfundgraph")]
struct PyMultigraph {
    inner: fundgraph::Multigraph,
}

#[pymethods]
impl PyMultigraph {
    #[new]
    fn new(n: usize, edges: Vec<(String, usize, usize)>) -> PyResult<Self> {
        let edges = edges.into_iter().map(|(id, u, v)| Edge::new(id, u, v)).collect();
        Ok(PyMultigraph { inner: fundgraph::Multigraph::new(n, edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyMultigraph { inner: from_json(s)? })
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.inner)
    }

    fn edges(&self) -> Vec<(String, usize, usize)> {
        self.inner.edges().iter().map(|e| (e.id.clone(), e.u, e.v)).collect()
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn is_two_connected(&self) -> bool {
        self.inner.is_two_connected()
    }

    fn is_sp(&self) -> PyResult<bool> {
        Ok(sp_recognize(&self.inner).map_err(err)?.is_some())
    }

    fn fundamental_graph(&self, tree: Vec<String>) -> PyResult<PyBipartite> {
        let t = SpanningTree::new(&self.inner, &tree).map_err(err)?;
        Ok(PyBipartite { inner: fundamental_graph(&self.inner, &t).map_err(err)? })
    }

    /// Tutte polynomial, e.g. "x^2 + x + y".
    fn tutte(&self) -> PyResult<String> {
        Ok(fundgraph::poly::tutte_graph(&self.inner).map_err(err)?.to_string())
    }

    fn beta(&self) -> PyResult<String> {
        Ok(fundgraph::poly::beta(&self.inner).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!("Multigraph(n={}, edges={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// Integral multiflow and multicut certificate of a flow instance given as
/// JSON `{"graph", "tree", "capacities"}`; returns the certificate as JSON.
#[pyfunction]
fn multiflow(instance_json: &str) -> PyResult<String> {
    let inst: FlowInstance = from_json(instance_json)?;
    to_json(&integral_certificates(&inst).map_err(err)?)
}

#[pymodule]
fn pyfundgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBipartite>()?;
    m.add_class::<PyMultigraph>()?;
    m.add_function(wrap_pyfunction!(multiflow, m)?)?;
    Ok(())
}
