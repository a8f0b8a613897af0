//! Curvilinear quadrilateral meshes: data model, validation, adjacency,
//! generators, file IO and exact cell averages of analytic fields.

mod field;
mod gen;
mod io;

pub use field::{exact_cell_averages, read_field, write_field, Field};
pub use gen::{gen_deformed_square_mesh, gen_disk_mesh, rotate_mesh, structured_mesh, DeformKind};
pub use io::{read_mesh, read_mesh_str, write_mesh, write_mesh_string};

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::geometry::{Aabb, CurveSpan, CurvedPolygon, GeometryError, ParamCurve, Point2};
use crate::integrate::green_area;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("edge {edge} is referenced by {count} cells")]
    NonManifold { edge: usize, count: usize },
    #[error("invalid cells {cells:?}: {reason}")]
    Invalid { cells: Vec<usize>, reason: String },
    #[error("edge {0}: {1}")]
    Curve(usize, GeometryError),
    #[error("{0}")]
    Domain(String),
}

/// Signed reference to a mesh edge; `reversed` traverses it from its last
/// node to its first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeRef {
    pub edge: usize,
    pub reversed: bool,
}

impl EdgeRef {
    pub fn fwd(edge: usize) -> Self {
        Self { edge, reversed: false }
    }

    pub fn rev(edge: usize) -> Self {
        Self { edge, reversed: true }
    }
}

/// Cells sharing an edge and cells sharing only a vertex.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Adjacency {
    pub edge_neighbors: Vec<Vec<usize>>,
    pub vertex_neighbors: Vec<Vec<usize>>,
}

impl Adjacency {
    /// Edge and vertex neighbours of `i`, sorted.
    pub fn one_ring(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.edge_neighbors[i].iter().chain(&self.vertex_neighbors[i]).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Quadrilateral mesh whose edges are degree-`d` Lagrange curves. Edges are
/// stored once and shared by the cells on both sides.
#[derive(Clone, Debug)]
pub struct CurvilinearMesh {
    degree: usize,
    points: Vec<Point2>,
    edges: Vec<Vec<usize>>,
    cells: Vec<[EdgeRef; 4]>,
    curves: Vec<Arc<ParamCurve>>,
    adjacency: Adjacency,
    areas: Vec<f64>,
    boxes: Vec<Aabb>,
}

impl CurvilinearMesh {
    /// Assembles and validates a mesh.
    pub fn new(
        degree: usize,
        points: Vec<Point2>,
        edges: Vec<Vec<usize>>,
        cells: Vec<[EdgeRef; 4]>,
    ) -> Result<Self, MeshError> {
        let mesh = Self::assemble(degree, points, edges, cells)?;
        validate_mesh(&mesh)?;
        Ok(mesh)
    }

    fn assemble(
        degree: usize,
        points: Vec<Point2>,
        edges: Vec<Vec<usize>>,
        cells: Vec<[EdgeRef; 4]>,
    ) -> Result<Self, MeshError> {
        if degree == 0 {
            return Err(MeshError::Domain("edge degree must be at least 1".into()));
        }
        let mut curves = Vec::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            if e.len() != degree + 1 {
                return Err(MeshError::Domain(format!("edge {k} has {} nodes, expected {}", e.len(), degree + 1)));
            }
            if let Some(&bad) = e.iter().find(|&&p| p >= points.len()) {
                return Err(MeshError::Domain(format!("edge {k} references missing point {bad}")));
            }
            let nodes = e.iter().map(|&p| points[p]).collect();
            curves.push(Arc::new(ParamCurve::new(nodes).map_err(|g| MeshError::Curve(k, g))?));
        }
        for (i, c) in cells.iter().enumerate() {
            if let Some(r) = c.iter().find(|r| r.edge >= edges.len()) {
                return Err(MeshError::Domain(format!("cell {i} references missing edge {}", r.edge)));
            }
        }
        let mut mesh = Self {
            degree,
            points,
            edges,
            cells,
            curves,
            adjacency: Adjacency::default(),
            areas: Vec::new(),
            boxes: Vec::new(),
        };
        mesh.adjacency = build_adjacency(&mesh)?;
        mesh.areas = (0..mesh.cells.len()).map(|i| green_area(&mesh.cell_polygon(i))).collect();
        mesh.boxes = (0..mesh.cells.len())
            .map(|i| mesh.cells[i].iter().fold(Aabb::empty(), |b, r| b.union(&mesh.curves[r.edge].bbox())))
            .collect();
        Ok(mesh)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn cells(&self) -> &[[EdgeRef; 4]] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn curve(&self, edge: usize) -> &Arc<ParamCurve> {
        &self.curves[edge]
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    /// Cell areas by boundary integration.
    pub fn areas(&self) -> &[f64] {
        &self.areas
    }

    pub fn total_area(&self) -> f64 {
        self.areas.iter().sum()
    }

    /// Hull box of cell `i` (union of its edge hull boxes).
    pub fn cell_bbox(&self, i: usize) -> Aabb {
        self.boxes[i]
    }

    pub fn bbox(&self) -> Aabb {
        self.boxes.iter().fold(Aabb::empty(), |a, b| a.union(b))
    }

    /// Point indices of the four corners of cell `i`, counterclockwise.
    pub fn cell_vertices(&self, i: usize) -> [usize; 4] {
        self.cells[i].map(|r| self.edge_start(r))
    }

    fn edge_start(&self, r: EdgeRef) -> usize {
        let e = &self.edges[r.edge];
        if r.reversed {
            e[e.len() - 1]
        } else {
            e[0]
        }
    }

    fn edge_end(&self, r: EdgeRef) -> usize {
        let e = &self.edges[r.edge];
        if r.reversed {
            e[0]
        } else {
            e[e.len() - 1]
        }
    }

    /// The closed four-span loop of cell `i`.
    pub fn cell_polygon(&self, i: usize) -> CurvedPolygon {
        CurvedPolygon::new_unchecked(
            self.cells[i]
                .iter()
                .map(|r| CurveSpan::full(self.curves[r.edge].clone(), r.reversed))
                .collect(),
        )
    }

    /// Mean of the four corners; a cheap reference point for cell `i`.
    pub fn cell_center(&self, i: usize) -> Point2 {
        let v = self.cell_vertices(i);
        v.iter().fold(Point2::default(), |a, &k| a + self.points[k]) * 0.25
    }

    /// Edges referenced by exactly one cell, with that cell's orientation.
    pub fn boundary_edges(&self) -> Vec<EdgeRef> {
        let mut count = vec![0usize; self.edges.len()];
        let mut dir = vec![EdgeRef::fwd(0); self.edges.len()];
        for c in &self.cells {
            for r in c {
                count[r.edge] += 1;
                dir[r.edge] = *r;
            }
        }
        (0..self.edges.len()).filter(|&e| count[e] == 1).map(|e| dir[e]).collect()
    }

    /// Applies `f` to every point (topology unchanged) and re-validates.
    pub fn map_points(&self, f: impl Fn(Point2) -> Point2) -> Result<Self, MeshError> {
        let points = self.points.iter().map(|p| f(*p)).collect();
        Self::new(self.degree, points, self.edges.clone(), self.cells.clone())
    }
}

/// Edge and vertex neighbours of every cell.
pub fn build_adjacency(mesh: &CurvilinearMesh) -> Result<Adjacency, MeshError> {
    let n = mesh.cells.len();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); mesh.edges.len()];
    let mut by_point: Vec<Vec<usize>> = vec![Vec::new(); mesh.points.len()];
    for (i, c) in mesh.cells.iter().enumerate() {
        for r in c {
            by_edge[r.edge].push(i);
            by_point[mesh.edge_start(*r)].push(i);
        }
    }
    if let Some((edge, cells)) = by_edge.iter().enumerate().find(|(_, c)| c.len() > 2) {
        return Err(MeshError::NonManifold { edge, count: cells.len() });
    }
    let mut edge_neighbors = vec![BTreeSet::new(); n];
    for cells in &by_edge {
        if let [a, b] = cells[..] {
            if a != b {
                edge_neighbors[a].insert(b);
                edge_neighbors[b].insert(a);
            }
        }
    }
    let mut vertex_neighbors = vec![BTreeSet::new(); n];
    for cells in &by_point {
        for &a in cells {
            for &b in cells {
                if a != b && !edge_neighbors[a].contains(&b) {
                    vertex_neighbors[a].insert(b);
                }
            }
        }
    }
    Ok(Adjacency {
        edge_neighbors: edge_neighbors.into_iter().map(|s| s.into_iter().collect()).collect(),
        vertex_neighbors: vertex_neighbors.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}

/// Checks connectivity, orientation, simplicity of every cell and edge, and
/// that the cells partition the region bounded by the boundary edges.
pub fn validate_mesh(mesh: &CurvilinearMesh) -> Result<(), MeshError> {
    let mut open = Vec::new();
    for (i, c) in mesh.cells.iter().enumerate() {
        if (0..4).any(|k| mesh.edge_end(c[k]) != mesh.edge_start(c[(k + 1) % 4])) {
            open.push(i);
        }
    }
    if !open.is_empty() {
        return Err(MeshError::Invalid {
            cells: open,
            reason: "edges do not connect head to tail".into(),
        });
    }
    for (k, c) in mesh.curves.iter().enumerate() {
        c.validate().map_err(|g| MeshError::Curve(k, g))?;
    }
    let mut bad = Vec::new();
    let mut reason = String::new();
    for i in 0..mesh.cells.len() {
        if let Err(e) = mesh.cell_polygon(i).validate() {
            if bad.is_empty() {
                reason = e.to_string();
            }
            bad.push(i);
        }
    }
    if !bad.is_empty() {
        return Err(MeshError::Invalid { cells: bad, reason });
    }
    let boundary = CurvedPolygon::new_unchecked(
        mesh.boundary_edges()
            .into_iter()
            .map(|r| CurveSpan::full(mesh.curves[r.edge].clone(), r.reversed))
            .collect(),
    );
    let domain = green_area(&boundary);
    let total = mesh.total_area();
    if (total - domain).abs() > 1e-10 * domain.abs() {
        return Err(MeshError::Domain(format!(
            "cell areas sum to {total:.17e} but the boundary encloses {domain:.17e}"
        )));
    }
    Ok(())
}
