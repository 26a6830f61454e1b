//! Python bindings. Sets cross the boundary as lists of element names.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use roughmat::{
    verify_all, Caps, ContractionPair, DualInducedMatroid, ElementId, InducedMatroid,
    InstanceDocument, SetFamily, Subset,
};

fn core_err(e: roughmat::Error) -> PyErr {
    match e {
        roughmat::Error::Internal(m) => PyRuntimeError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A partition of a named universe into equivalence classes.
/// `(check, subject, status, witness, detail)`.
type ReportRow = (String, String, String, Option<String>, Option<String>);

#[pyclass(name = "Partition", module = "roughmat", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: roughmat::Partition,
}

impl PyPartition {
    fn element(&self, name: &str) -> PyResult<ElementId> {
        self.inner
            .universe()
            .lookup(name)
            .ok_or_else(|| PyKeyError::new_err(name.to_owned()))
    }

    fn subset(&self, names: Vec<String>) -> PyResult<Subset> {
        let ids = names
            .iter()
            .map(|n| self.element(n))
            .collect::<PyResult<Vec<_>>>()?;
        Subset::from_elements(self.inner.size(), ids).map_err(core_err)
    }

    fn names(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|e| self.inner.universe().name(e)).collect()
    }

    fn family(&self, f: &SetFamily) -> Vec<Vec<String>> {
        f.iter().map(|s| self.names(s)).collect()
    }
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(universe: Vec<String>, blocks: Vec<Vec<String>>) -> PyResult<Self> {
        let inner = InstanceDocument { universe, blocks }
            .to_partition()
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyPartition { inner })
    }

    /// Parses the TOML instance format.
    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        let inner = InstanceDocument::parse(text)
            .and_then(|d| d.to_partition())
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyPartition { inner })
    }

    fn to_toml(&self) -> String {
        InstanceDocument::from_partition(&self.inner).to_text()
    }

    fn digest(&self) -> String {
        roughmat::instance::digest(&self.inner)
    }

    #[getter]
    fn universe(&self) -> Vec<String> {
        self.names(&self.inner.universe().full())
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<String>> {
        self.inner.blocks().iter().map(|b| self.names(b)).collect()
    }

    fn equivalence_class(&self, name: &str) -> PyResult<Vec<String>> {
        let class = self
            .inner
            .equivalence_class(self.element(name)?)
            .map_err(core_err)?;
        Ok(self.names(&class))
    }

    fn lower(&self, names: Vec<String>) -> PyResult<Vec<String>> {
        let x = self.subset(names)?;
        Ok(self.names(&self.inner.lower_approximation(&x).map_err(core_err)?))
    }

    fn upper(&self, names: Vec<String>) -> PyResult<Vec<String>> {
        let x = self.subset(names)?;
        Ok(self.names(&self.inner.upper_approximation(&x).map_err(core_err)?))
    }

    /// The matroid whose independent sets contain no whole block.
    fn induced(&self) -> PyResult<PyMatroid> {
        let m = InducedMatroid::new(self.inner.clone()).map_err(core_err)?;
        Ok(PyMatroid {
            partition: self.clone(),
            matroid: m.matroid().clone(),
        })
    }

    /// The dual of the induced matroid: partial transversals of the blocks.
    fn dual(&self) -> PyResult<PyMatroid> {
        let d = self.dual_induced()?;
        Ok(PyMatroid {
            partition: self.clone(),
            matroid: d.matroid().clone(),
        })
    }

    /// Independent sets of the dual contracted by `{x}` (`by_class=False`) or by the class of `x`.
    #[pyo3(signature = (name, by_class = false))]
    fn contract(&self, name: &str, by_class: bool) -> PyResult<PyContraction> {
        let pair =
            ContractionPair::new(&self.dual_induced()?, self.element(name)?).map_err(core_err)?;
        let minor = if by_class {
            pair.by_class()
        } else {
            pair.by_point()
        };
        Ok(PyContraction {
            independents: self.family(&minor.independents_in_parent()),
            bases: self.family(&minor.bases_in_parent().map_err(core_err)?),
            circuits: self.family(&minor.circuits_in_parent()),
        })
    }

    /// Runs every check; returns `(check, subject, status, witness, detail)` rows.
    #[pyo3(signature = (cap = None))]
    fn verify(&self, cap: Option<usize>) -> PyResult<Vec<ReportRow>> {
        let caps = cap.map_or_else(Caps::default, Caps::uniform);
        let report = verify_all(&self.inner, &caps).map_err(core_err)?;
        let u = self.inner.universe();
        Ok(report
            .results
            .into_iter()
            .map(|r| {
                (
                    r.check.id().to_owned(),
                    r.subject.describe(u),
                    r.status.name().to_owned(),
                    r.violation.map(|v| v.to_string()),
                    r.detail,
                )
            })
            .collect())
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        let blocks: Vec<String> = self
            .inner
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", self.names(b).join(", ")))
            .collect();
        format!("Partition({})", blocks.join(" "))
    }
}

impl PyPartition {
    fn dual_induced(&self) -> PyResult<DualInducedMatroid> {
        InducedMatroid::new(self.inner.clone())
            .and_then(|m| m.dual())
            .map_err(core_err)
    }
}

/// An explicit matroid over the universe of a partition.
#[pyclass(name = "Matroid", module = "roughmat", frozen)]
struct PyMatroid {
    partition: PyPartition,
    matroid: roughmat::Matroid,
}

#[pymethods]
impl PyMatroid {
    fn independents(&self) -> Vec<Vec<String>> {
        self.partition.family(self.matroid.independents())
    }

    fn bases(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(self
            .partition
            .family(&self.matroid.bases().map_err(core_err)?))
    }

    fn circuits(&self) -> Vec<Vec<String>> {
        self.partition.family(&self.matroid.circuits())
    }

    fn rank(&self, names: Vec<String>) -> PyResult<usize> {
        let x = self.partition.subset(names)?;
        self.matroid.rank(&x).map_err(core_err)
    }

    fn is_independent(&self, names: Vec<String>) -> PyResult<bool> {
        Ok(self.matroid.is_independent(&self.partition.subset(names)?))
    }

    fn dual(&self) -> PyMatroid {
        PyMatroid {
            partition: self.partition.clone(),
            matroid: self.matroid.dual(),
        }
    }
}

/// Families of a contraction, listed over the original universe.
#[pyclass(name = "Contraction", module = "roughmat", frozen, get_all)]
struct PyContraction {
    independents: Vec<Vec<String>>,
    bases: Vec<Vec<String>>,
    circuits: Vec<Vec<String>>,
}

#[pymodule]
#[pyo3(name = "roughmat")]
fn roughmat_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyContraction>()?;
    Ok(())
}
