//! Python bindings: meshes, fields, remapping and clipping.

use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use curveremap::clipping::{wa_clip, Crossing};
use curveremap::demo;
use curveremap::experiments::{clip_demo as run_clip_demo, named_field, observed_order as slope};
use curveremap::geometry::{CurvedPolygon, Point2};
use curveremap::mesh::{
    exact_cell_averages, gen_deformed_square_mesh, gen_disk_mesh, read_mesh, read_mesh_str, rotate_mesh, write_mesh,
    write_mesh_string, CurvilinearMesh, DeformKind, Field,
};
use curveremap::remap::{remap as run_remap, Approach, RemapOptions, RemapReport};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// Curvilinear quadrilateral mesh with Lagrange edges.
#[pyclass(name = "Mesh", module = "curveremap_py", frozen)]
struct PyMesh(CurvilinearMesh);

#[pymethods]
impl PyMesh {
    /// `n × n` mesh of the unit square deformed by `kind`.
    #[staticmethod]
    #[pyo3(signature = (kind, n, amplitude, degree=2))]
    fn deformed(kind: &str, n: usize, amplitude: f64, degree: usize) -> PyResult<Self> {
        let kind: DeformKind = kind.parse().map_err(value_err)?;
        gen_deformed_square_mesh(n, kind, amplitude, degree).map(Self).map_err(value_err)
    }

    /// Unit-disk mesh from an `n × n` grid.
    #[staticmethod]
    #[pyo3(signature = (n, degree=2))]
    fn disk(n: usize, degree: usize) -> PyResult<Self> {
        gen_disk_mesh(n, degree).map(Self).map_err(value_err)
    }

    #[staticmethod]
    fn read(path: PathBuf) -> PyResult<Self> {
        read_mesh(&path).map(Self).map_err(value_err)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        read_mesh_str(text).map(Self).map_err(value_err)
    }

    fn write(&self, path: PathBuf) -> PyResult<()> {
        write_mesh(&self.0, &path).map_err(runtime_err)
    }

    fn to_text(&self) -> String {
        write_mesh_string(&self.0)
    }

    /// Copy rotated by `angle` radians about `center`.
    #[pyo3(signature = (angle, center=(0.0, 0.0)))]
    fn rotated(&self, angle: f64, center: (f64, f64)) -> PyResult<Self> {
        rotate_mesh(&self.0, angle, Point2::new(center.0, center.1)).map(Self).map_err(value_err)
    }

    #[getter]
    fn num_cells(&self) -> usize {
        self.0.num_cells()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn areas(&self) -> Vec<f64> {
        self.0.areas().to_vec()
    }

    #[getter]
    fn total_area(&self) -> f64 {
        self.0.total_area()
    }

    fn cell_center(&self, i: usize) -> PyResult<(f64, f64)> {
        if i >= self.0.num_cells() {
            return Err(value_err(format!("cell {i} out of range")));
        }
        let c = self.0.cell_center(i);
        Ok((c.x, c.y))
    }

    /// Exact averages of the named analytic field: sin, cone, cylinder or
    /// solid_body.
    fn averages(&self, field: &str) -> PyResult<Vec<f64>> {
        let f = named_field(field).ok_or_else(|| value_err(format!("unknown field '{field}'")))?;
        exact_cell_averages(&self.0, f.as_ref()).map(|f| f.values).map_err(runtime_err)
    }

    fn __len__(&self) -> usize {
        self.0.num_cells()
    }

    fn __repr__(&self) -> String {
        format!("Mesh(cells={}, degree={})", self.0.num_cells(), self.0.degree())
    }
}

/// Remapped averages with conservation and positivity diagnostics.
#[pyclass(name = "RemapReport", module = "curveremap_py", frozen)]
struct PyReport(RemapReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn values(&self) -> Vec<f64> {
        self.0.field.values.clone()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order
    }

    #[getter]
    fn e_area_c(&self) -> f64 {
        self.0.e_area_c
    }

    #[getter]
    fn e_cons(&self) -> f64 {
        self.0.e_cons
    }

    #[getter]
    fn source_mass(&self) -> f64 {
        self.0.source_mass
    }

    #[getter]
    fn target_mass(&self) -> f64 {
        self.0.target_mass
    }

    #[getter]
    fn min_average(&self) -> f64 {
        self.0.min_average
    }

    #[getter]
    fn max_average(&self) -> f64 {
        self.0.max_average
    }

    #[getter]
    fn limited_cells(&self) -> usize {
        self.0.limited_cells
    }

    #[getter]
    fn max_approach_diff(&self) -> Option<f64> {
        self.0.max_approach_diff
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.0.warnings.clone()
    }

    fn to_key_value(&self) -> String {
        self.0.to_key_value()
    }

    fn __repr__(&self) -> String {
        format!("RemapReport(order={}, e_cons={:.3e}, min={:.3e})", self.0.order, self.0.e_cons, self.0.min_average)
    }
}

/// Remaps source cell averages onto `target`. `approach` is A, B or both.
#[pyfunction]
#[pyo3(signature = (source, values, target, order=1, positivity=false, approach="A"))]
fn remap(
    py: Python<'_>,
    source: &PyMesh,
    values: Vec<f64>,
    target: &PyMesh,
    order: usize,
    positivity: bool,
    approach: &str,
) -> PyResult<PyReport> {
    let approach: Approach = approach.parse().map_err(value_err)?;
    if ![1, 3, 5].contains(&order) {
        return Err(value_err(format!("order must be 1, 3 or 5, got {order}")));
    }
    let opts = RemapOptions::new(order).positivity(positivity).approach(approach);
    let field = Field::new(values);
    py.detach(|| run_remap(&source.0, &field, &target.0, opts)).map(PyReport).map_err(runtime_err)
}

/// Curved polygon bounded by Lagrange spans.
#[pyclass(name = "Polygon", module = "curveremap_py", frozen)]
struct PyPolygon(CurvedPolygon);

#[pymethods]
impl PyPolygon {
    /// Quadratic quad from four corners then four edge midpoints, all
    /// counterclockwise.
    #[staticmethod]
    fn quad(points: Vec<(f64, f64)>) -> PyResult<Self> {
        let data: [(f64, f64); 8] = points.try_into().map_err(|_| value_err("expected 8 points"))?;
        let p = demo::quad(&data, 2);
        p.validate().map_err(value_err)?;
        Ok(Self(p))
    }

    #[getter]
    fn area(&self) -> f64 {
        self.0.signed_area()
    }

    #[getter]
    fn corners(&self) -> Vec<(f64, f64)> {
        self.0.corners().iter().map(|p| (p.x, p.y)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Polygon(spans={}, area={:.6})", self.0.len(), self.0.signed_area())
    }
}

/// Intersection of two curved polygons as a list of loops.
#[pyfunction]
fn clip(subject: &PyPolygon, clip: &PyPolygon) -> PyResult<Vec<PyPolygon>> {
    let r = wa_clip(&subject.0, &clip.0).map_err(runtime_err)?;
    Ok(r.loops.into_iter().map(PyPolygon).collect())
}

/// The worked clipping example: crossing points labeled "entry", "exit" or
/// None, then the areas by boundary quadrature and by triangulation.
#[pyfunction]
#[pyo3(signature = (degree=2))]
fn clip_demo(degree: usize) -> PyResult<(Vec<(f64, f64, Option<&'static str>)>, f64, f64)> {
    let d = run_clip_demo(degree).map_err(runtime_err)?;
    let label = |k: Option<Crossing>| {
        k.map(|c| match c {
            Crossing::Entry => "entry",
            Crossing::Exit => "exit",
        })
    };
    let pts = d.points().into_iter().map(|(p, k)| (p.x, p.y, label(k))).collect();
    Ok((pts, d.area_a, d.area_b))
}

/// Least-squares slope of `log error` against `log n`.
#[pyfunction]
fn observed_order(sizes: Vec<usize>, errors: Vec<f64>) -> PyResult<f64> {
    if sizes.len() != errors.len() || sizes.len() < 2 {
        return Err(value_err("need at least two sizes, one error each"));
    }
    Ok(slope(&sizes, &errors))
}

#[pymodule]
fn curveremap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMesh>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyPolygon>()?;
    m.add_function(wrap_pyfunction!(remap, m)?)?;
    m.add_function(wrap_pyfunction!(clip, m)?)?;
    m.add_function(wrap_pyfunction!(clip_demo, m)?)?;
    m.add_function(wrap_pyfunction!(observed_order, m)?)?;
    m.add("REFERENCE_AREA", demo::REFERENCE_AREA)?;
    Ok(())
}
