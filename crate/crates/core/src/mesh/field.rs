use std::fs;
use std::path::Path;

use rayon::prelude::*;

use super::{CurvilinearMesh, MeshError};
use crate::fields::AnalyticField;
use crate::geometry::Point2;
use crate::integrate::{green_integral_antiderivative, NotConverged, QuadOptions};

/// One average per cell.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Field {
    pub values: Vec<f64>,
}

impl Field {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Σ ū_i |I_i|` for the given cell areas.
    pub fn mass(&self, areas: &[f64]) -> f64 {
        self.values.iter().zip(areas).map(|(u, a)| u * a).sum()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Absolute convergence floor per unit cell area, for fields of unit scale.
/// Antiderivatives evaluated as differences of O(1) quantities carry
/// rounding noise near `1e-17` per point, and square-root behaviour near
/// level sets amplifies it, so near-zero cells cannot meet a purely
/// relative tolerance.
const ABS_FLOOR: f64 = 1e-13;

/// Exact cell averages of `f` through boundary integrals of its
/// x-antiderivative, split at the field's level sets.
pub fn exact_cell_averages(mesh: &CurvilinearMesh, f: &dyn AnalyticField) -> Result<Field, NotConverged> {
    let sets = f.level_sets();
    let values = (0..mesh.num_cells())
        .into_par_iter()
        .map(|i| {
            // level sets just outside the cell still bend the antiderivative
            // sharply, so anything within a cell diameter counts
            let b = mesh.cell_bbox(i);
            let bb = b.expanded(b.width().max(b.height()));
            let near: Vec<_> = sets.iter().filter(|s| s.meets(&bb)).map(|s| move |p: Point2| s.eval(p)).collect();
            let near: Vec<&dyn Fn(Point2) -> f64> = near.iter().map(|s| s as &dyn Fn(Point2) -> f64).collect();
            let area = mesh.areas()[i];
            let opts = QuadOptions { abs_floor: ABS_FLOOR * area, ..QuadOptions::default() };
            let integral = green_integral_antiderivative(&mesh.cell_polygon(i), |p| f.x_antiderivative(p), &near, opts)?;
            Ok(integral / area)
        })
        .collect::<Result<Vec<f64>, NotConverged>>()?;
    Ok(Field { values })
}

/// Writes `field 1 <count>` then one value per line (17 significant digits).
pub fn write_field(field: &Field, path: &Path) -> Result<(), MeshError> {
    let mut s = format!("field 1 {}\n", field.values.len());
    for v in &field.values {
        s.push_str(&format!("{v:.16e}\n"));
    }
    fs::write(path, s)?;
    Ok(())
}

pub fn read_field(path: &Path) -> Result<Field, MeshError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or(MeshError::Parse { line: 1, msg: "empty field file".into() })?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let count = match parts[..] {
        ["field", "1", n] => n.parse::<usize>().map_err(|e| MeshError::Parse { line: ln, msg: e.to_string() })?,
        _ => return Err(MeshError::Parse { line: ln, msg: format!("expected 'field 1 <count>', got '{header}'") }),
    };
    let mut values = Vec::with_capacity(count);
    for (ln, l) in lines {
        let v: f64 = l.parse().map_err(|_| MeshError::Parse { line: ln, msg: format!("bad value '{l}'") })?;
        values.push(v);
    }
    if values.len() != count {
        return Err(MeshError::Parse {
            line: text.lines().count(),
            msg: format!("expected {count} values, found {}", values.len()),
        });
    }
    Ok(Field { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{BumpField, PolyField, SinSum};
    use crate::mesh::{gen_deformed_square_mesh, DeformKind};

    #[test]
    fn constant_and_linear_averages() {
        let m = gen_deformed_square_mesh(2, DeformKind::Identity, 0.0, 1).unwrap();
        let one = exact_cell_averages(&m, &PolyField::linear(1.0, 0.0, 0.0)).unwrap();
        assert!(one.values.iter().all(|v| (v - 1.0).abs() < 1e-15));
        let x = exact_cell_averages(&m, &PolyField::linear(0.0, 1.0, 0.0)).unwrap();
        let want = [0.25, 0.75, 0.25, 0.75];
        for (v, w) in x.values.iter().zip(want) {
            assert!((v - w).abs() < 1e-15, "{v}");
        }
    }

    #[test]
    fn sin_sum_on_unit_cell() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)].map(Point2::from).to_vec();
        let edges = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
        let cells = vec![[0, 1, 2, 3].map(crate::mesh::EdgeRef::fwd)];
        let m = CurvilinearMesh::new(1, pts, edges, cells).unwrap();
        let v = exact_cell_averages(&m, &SinSum).unwrap();
        assert!((v.values[0] - 4.0 / std::f64::consts::PI).abs() < 1e-14);
    }

    #[test]
    fn cone_mass_is_exact() {
        // cone volume π R² / 3 plus the floor over the square
        let m = gen_deformed_square_mesh(16, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        let f = exact_cell_averages(&m, &BumpField::square_cone()).unwrap();
        let want = std::f64::consts::PI * 0.0625 / 3.0 + 1e-10 * m.total_area();
        assert!((f.mass(m.areas()) - want).abs() < 1e-13, "{}", f.mass(m.areas()) - want);
        let c = exact_cell_averages(&m, &BumpField::square_cylinder()).unwrap();
        let want = std::f64::consts::PI * 0.0625 * (1.0 - 1e-10) + 1e-10 * m.total_area();
        assert!((c.mass(m.areas()) - want).abs() < 1e-13, "{}", c.mass(m.areas()) - want);
    }

    #[test]
    fn field_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.txt");
        let f = Field::new(vec![1.0 / 3.0, -2.5e-300, 7.0, std::f64::consts::PI]);
        write_field(&f, &p).unwrap();
        assert_eq!(read_field(&p).unwrap(), f);
        fs::write(&p, "field 1 3\n1.0\n2.0\n").unwrap();
        assert!(matches!(read_field(&p), Err(MeshError::Parse { .. })));
    }
}
