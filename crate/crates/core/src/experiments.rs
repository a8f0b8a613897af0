//! The numerical experiments: convergence on deformed square meshes, the
//! cone and cylinder positivity tests, solid body rotation on the disk and
//! the worked clipping example. Shared by the command line, the acceptance
//! tests and the Python bindings.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;

use thiserror::Error;

use crate::clipping::{wa_clip, ClipError, ClipResult, Crossing};
use crate::demo;
use crate::fields::{AnalyticField, BumpField, SinSum};
use crate::geometry::Point2;
use crate::integrate::{green_integral, make_tri_rule, tri_integral, triangulate, CurvedTriangle, IntegrateError, NotConverged, Poly2};
use crate::mesh::{exact_cell_averages, gen_deformed_square_mesh, gen_disk_mesh, rotate_mesh, CurvilinearMesh, DeformKind, Field, MeshError};
use crate::remap::{remap_with, Approach, Overlay, RemapError, RemapOptions, RemapReport};

/// Deformation amplitudes of the generated source and target meshes.
pub const GRESHO_AMPLITUDE: f64 = 0.5;
pub const TAYLOR_GREEN_AMPLITUDE: f64 = 0.05;
/// Edge degree of all generated experiment meshes.
pub const MESH_DEGREE: usize = 2;
pub const ROTATION_STEPS: usize = 8;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Remap(#[from] RemapError),
    #[error("exact cell averages: {0}")]
    Exact(#[from] NotConverged),
    #[error(transparent)]
    Clip(#[from] ClipError),
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
}

/// The gresho-like source and taylor-green-like target mesh of size `n`.
pub fn mesh_pair(n: usize) -> Result<(CurvilinearMesh, CurvilinearMesh), MeshError> {
    Ok((
        gen_deformed_square_mesh(n, DeformKind::GreshoLike, GRESHO_AMPLITUDE, MESH_DEGREE)?,
        gen_deformed_square_mesh(n, DeformKind::TaylorGreenLike, TAYLOR_GREEN_AMPLITUDE, MESH_DEGREE)?,
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ErrorNorms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Area-weighted L¹ and L² norms and the max norm of `computed − exact`.
pub fn error_norms(areas: &[f64], computed: &[f64], exact: &[f64]) -> ErrorNorms {
    let mut e = ErrorNorms::default();
    for ((a, c), x) in areas.iter().zip(computed).zip(exact) {
        let d = (c - x).abs();
        e.l1 += d * a;
        e.l2 += d * d * a;
        e.linf = e.linf.max(d);
    }
    e.l2 = e.l2.sqrt();
    e
}

/// Least-squares slope of `−log e` against `log n`, the observed order.
pub fn observed_order(ns: &[usize], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| -e.ln()).collect();
    let m = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[derive(Clone, Debug)]
pub struct AccuracyRun {
    pub n: usize,
    pub order: usize,
    pub errors: ErrorNorms,
    pub report: RemapReport,
}

/// Remaps `sin πx + sin πy` between each mesh pair for every order and
/// measures the error against exact target averages.
pub fn accuracy(sizes: &[usize], orders: &[usize], approach: Approach) -> Result<Vec<AccuracyRun>, ExperimentError> {
    let mut runs = Vec::new();
    for &n in sizes {
        let (s, t) = mesh_pair(n)?;
        let overlay = Overlay::build(&s, &t)?;
        let f = exact_cell_averages(&s, &SinSum)?;
        let exact = exact_cell_averages(&t, &SinSum)?;
        for &order in orders {
            let report = remap_with(&s, &f, &t, &overlay, RemapOptions::new(order).approach(approach))?;
            let errors = error_norms(t.areas(), &report.field.values, &exact.values);
            runs.push(AccuracyRun { n, order, errors, report });
        }
    }
    Ok(runs)
}

/// Convergence table: one row per order and size with errors and the
/// orders observed against the previous size.
pub fn convergence_csv(runs: &[AccuracyRun]) -> String {
    let mut s = String::from("order,mesh_size,l1_error,l1_order,l2_error,l2_order,linf_error,linf_order\n");
    let mut orders: Vec<usize> = runs.iter().map(|r| r.order).collect();
    orders.sort_unstable();
    orders.dedup();
    for order in orders {
        let mut prev: Option<&AccuracyRun> = None;
        for r in runs.iter().filter(|r| r.order == order) {
            let rate = |f: fn(&ErrorNorms) -> f64| match prev {
                Some(p) => format!("{:.2}", (f(&p.errors) / f(&r.errors)).ln() / (r.n as f64 / p.n as f64).ln()),
                None => String::new(),
            };
            let e = &r.errors;
            let _ = writeln!(
                s,
                "{order},{n}x{n},{:.4e},{},{:.4e},{},{:.4e},{}",
                e.l1,
                rate(|e| e.l1),
                e.l2,
                rate(|e| e.l2),
                e.linf,
                rate(|e| e.linf),
                n = r.n
            );
            prev = Some(r);
        }
    }
    s
}

/// Conservation table: partition error and per-order conservation error
/// for each size.
pub fn conservation_csv(runs: &[AccuracyRun]) -> String {
    let mut orders: Vec<usize> = runs.iter().map(|r| r.order).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut s = String::from("mesh_size,e_area_c");
    for o in &orders {
        let _ = write!(s, ",e_cons_order{o}");
    }
    s.push('\n');
    let mut sizes: Vec<usize> = runs.iter().map(|r| r.n).collect();
    sizes.dedup();
    for n in sizes {
        let row: Vec<&AccuracyRun> = runs.iter().filter(|r| r.n == n).collect();
        let _ = write!(s, "{n}x{n},{:.4e}", row[0].report.e_area_c);
        for o in &orders {
            match row.iter().find(|r| r.order == *o) {
                Some(r) => {
                    let _ = write!(s, ",{:.4e}", r.report.e_cons);
                }
                None => s.push(','),
            }
        }
        s.push('\n');
    }
    s
}

/// Source field and remap of a bump field between the mesh pair of size `n`.
#[derive(Clone, Debug)]
pub struct BumpRun {
    pub source: Field,
    pub report: RemapReport,
}

/// Remaps `field` at `order` with and without the limiter, sharing one overlay.
pub fn bump_runs(
    field: &BumpField,
    n: usize,
    order: usize,
    approach: Approach,
) -> Result<(CurvilinearMesh, CurvilinearMesh, [BumpRun; 2]), ExperimentError> {
    let (s, t) = mesh_pair(n)?;
    let overlay = Overlay::build(&s, &t)?;
    let f = exact_cell_averages(&s, field)?;
    let run = |on: bool| -> Result<BumpRun, ExperimentError> {
        let opts = RemapOptions::new(order).positivity(on).approach(approach);
        Ok(BumpRun { source: f.clone(), report: remap_with(&s, &f, &t, &overlay, opts)? })
    };
    let runs = [run(false)?, run(true)?];
    Ok((s, t, runs))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RotationStep {
    pub step: usize,
    pub mass: f64,
    /// `|mass − initial mass| / initial mass`, cumulative.
    pub drift: f64,
    pub min_average: f64,
    pub e_cons: f64,
    pub e_area_c: f64,
    pub limited_cells: usize,
    pub warnings: usize,
}

#[derive(Clone, Debug)]
pub struct RotationRun {
    pub n: usize,
    pub order: usize,
    pub positivity: bool,
    pub mesh: CurvilinearMesh,
    pub initial: Field,
    /// Field after each step; the last one lives on the initial mesh again.
    pub fields: Vec<Field>,
    pub steps: Vec<RotationStep>,
    /// `Σ |ū_final − ū_initial| |I|` on the initial mesh.
    pub l1_difference: f64,
}

/// Rotates the disk mesh of size `n` by `π/4` per step for `steps` steps,
/// remapping the solid body field each time. Step `k` uses the initial mesh
/// rotated by `kπ/4` directly, and the initial mesh itself after a full turn.
pub fn rotation(n: usize, order: usize, positivity: bool, steps: usize, approach: Approach) -> Result<RotationRun, ExperimentError> {
    let mesh = gen_disk_mesh(n, MESH_DEGREE)?;
    let initial = exact_cell_averages(&mesh, &BumpField::solid_body())?;
    let m0 = initial.mass(mesh.areas());
    let at = |k: usize| -> Result<CurvilinearMesh, MeshError> {
        if k % 8 == 0 {
            Ok(mesh.clone())
        } else {
            rotate_mesh(&mesh, k as f64 * FRAC_PI_4, Point2::default())
        }
    };
    let mut src = mesh.clone();
    let mut field = initial.clone();
    let mut fields = Vec::with_capacity(steps);
    let mut out = Vec::with_capacity(steps);
    for k in 1..=steps {
        let dst = at(k)?;
        let overlay = Overlay::build(&src, &dst)?;
        let opts = RemapOptions::new(order).positivity(positivity).approach(approach);
        let r = remap_with(&src, &field, &dst, &overlay, opts)?;
        // the remapped averages are relative to the clipped target areas
        let mass = r.target_mass;
        out.push(RotationStep {
            step: k,
            mass,
            drift: (mass - m0).abs() / m0.abs(),
            min_average: r.min_average,
            e_cons: r.e_cons,
            e_area_c: r.e_area_c,
            limited_cells: r.limited_cells,
            warnings: r.warnings.len(),
        });
        field = r.field;
        fields.push(field.clone());
        src = dst;
    }
    let l1_difference = if steps % 8 == 0 {
        mesh.areas().iter().zip(&field.values).zip(&initial.values).map(|((a, u), v)| a * (u - v).abs()).sum()
    } else {
        f64::NAN
    };
    Ok(RotationRun { n, order, positivity, mesh, initial, fields, steps: out, l1_difference })
}

pub fn rotation_csv(run: &RotationRun) -> String {
    let mut s = String::from("step,mass,drift,min_average,e_cons,e_area_c,limited_cells,warnings\n");
    for st in &run.steps {
        let _ = writeln!(
            s,
            "{},{:.17e},{:.4e},{:.6e},{:.4e},{:.4e},{},{}",
            st.step, st.mass, st.drift, st.min_average, st.e_cons, st.e_area_c, st.limited_cells, st.warnings
        );
    }
    s
}

/// Area centroid of every cell.
pub fn cell_centroids(mesh: &CurvilinearMesh) -> Vec<Point2> {
    (0..mesh.num_cells())
        .map(|i| {
            let poly = mesh.cell_polygon(i);
            let c = mesh.cell_center(i);
            let x = Poly2::from_world(c, 1.0, 1, &[((1, 0), 1.0)]);
            let y = Poly2::from_world(c, 1.0, 1, &[((0, 1), 1.0)]);
            let a = mesh.areas()[i];
            Point2::new(green_integral(&x, &poly) / a, green_integral(&y, &poly) / a)
        })
        .collect()
}

/// `cell,x,y,average` rows for external plotting.
pub fn cell_csv(mesh: &CurvilinearMesh, field: &Field) -> String {
    let mut s = String::from("cell,x,y,average\n");
    for (i, (c, v)) in cell_centroids(mesh).iter().zip(&field.values).enumerate() {
        let _ = writeln!(s, "{i},{:.10e},{:.10e},{:.10e}", c.x, c.y, v);
    }
    s
}

/// The worked clipping example evaluated both ways.
#[derive(Clone, Debug)]
pub struct ClipDemo {
    pub degree: usize,
    pub clip: ClipResult,
    pub triangles: Vec<CurvedTriangle>,
    /// Intersection area by boundary quadrature.
    pub area_a: f64,
    /// Intersection area by curved triangulation.
    pub area_b: f64,
}

impl ClipDemo {
    /// Labeled crossing points in clipping order.
    pub fn points(&self) -> Vec<(Point2, Option<Crossing>)> {
        self.clip.intersections.iter().map(|i| (i.point, i.kind)).collect()
    }
}

pub fn clip_demo(degree: usize) -> Result<ClipDemo, ExperimentError> {
    let (p, q) = (demo::quad_p(degree), demo::quad_q(degree));
    let clip = wa_clip(&p, &q)?;
    let one = Poly2::constant(Point2::default(), 1.0, 1.0);
    let area_a = clip.loops.iter().map(|l| green_integral(&one, l)).sum();
    let mut triangles = Vec::new();
    for l in &clip.loops {
        triangles.extend(triangulate(l)?);
    }
    let mut area_b = 0.0;
    for t in &triangles {
        area_b += tri_integral(&one, t, make_tri_rule(t.rule_degree(0))?)?;
    }
    Ok(ClipDemo { degree, clip, triangles, area_a, area_b })
}

/// Exact averages of a named analytic field on `mesh`.
pub fn named_field(name: &str) -> Option<Box<dyn AnalyticField>> {
    Some(match name {
        "sin" => Box::new(SinSum),
        "cone" => Box::new(BumpField::square_cone()),
        "cylinder" => Box::new(BumpField::square_cylinder()),
        "solid_body" => Box::new(BumpField::solid_body()),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_of_a_known_difference() {
        let e = error_norms(&[0.5, 0.5], &[1.0, 3.0], &[1.0, 1.0]);
        assert_eq!(e.l1, 1.0);
        assert_eq!(e.l2, 2f64.sqrt());
        assert_eq!(e.linf, 2.0);
    }

    #[test]
    fn slope_of_exact_power_law() {
        let ns = [8, 16, 32];
        let es: Vec<f64> = ns.iter().map(|&n| 3.0 * (n as f64).powi(-3)).collect();
        assert!((observed_order(&ns, &es) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn centroids_of_unit_square_cells() {
        let m = gen_deformed_square_mesh(2, DeformKind::Identity, 0.0, 2).unwrap();
        let c = cell_centroids(&m);
        assert!(c[0].dist(Point2::new(0.25, 0.25)) < 1e-15);
        assert!(c[3].dist(Point2::new(0.75, 0.75)) < 1e-15);
    }

    #[test]
    fn clip_demo_matches_reference_area() {
        let d = clip_demo(2).unwrap();
        assert_eq!(d.points().len(), 8);
        assert!((d.area_a - demo::REFERENCE_AREA).abs() < 1e-13);
        assert!((d.area_b - demo::REFERENCE_AREA).abs() < 1e-13);
    }
}
