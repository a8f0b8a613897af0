//! The remapping pipeline: candidate pairs, clipping, reconstruction,
//! optional positivity limiting, integration over the intersections and
//! assembly of the new averages.

mod pairs;
mod report;

pub use pairs::{candidate_pairs, PairIndex};
pub use report::{RemapReport, Timings};

use std::ops::Range;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::clipping::{wa_clip, ClipError};
use crate::geometry::{CurvedPolygon, Point2};
use crate::integrate::{green_integral, make_tri_rule, triangulate, tri_quad_points, CurvedTriangle, IntegrateError, Poly2};
use crate::limiter::{positivity_limit, LimiterParams};
use crate::mesh::{CurvilinearMesh, Field};
use crate::reconstruct::{weno_reconstruct, ReconstructError, WenoConfig};

/// Clipped pieces smaller than this fraction of the smallest cell are
/// treated as measure-zero contacts.
pub const DROP_AREA_FRACTION: f64 = 1e-14;
/// Most negative clipped area tolerated before aborting.
pub const NEGATIVE_AREA_TOL: f64 = 1e-12;
/// Relative disagreement of total areas that triggers a coverage warning.
pub const DOMAIN_AREA_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RemapError {
    #[error("clipping source cell {source_cell} against target cell {target_cell}: {err}")]
    Clip { source_cell: usize, target_cell: usize, err: ClipError },
    #[error("source cell {source_cell} and target cell {target_cell} intersect with negative area {area:.3e}")]
    NegativeArea { source_cell: usize, target_cell: usize, area: f64 },
    #[error("intersection of source cell {source_cell} and target cell {target_cell}: {err}")]
    Integrate { source_cell: usize, target_cell: usize, err: IntegrateError },
    #[error(transparent)]
    Reconstruct(#[from] ReconstructError),
    #[error("field has {got} values but the source mesh has {expected} cells")]
    FieldLength { expected: usize, got: usize },
}

/// How intersection integrals are evaluated: boundary quadrature (A),
/// curved triangulation (B), or both with A kept and B as a cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Approach {
    A,
    B,
    Both,
}

impl FromStr for Approach {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "both" => Ok(Self::Both),
            _ => Err(format!("unknown approach '{s}'; expected A, B or both")),
        }
    }
}

impl std::fmt::Display for Approach {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::A => "A",
            Self::B => "B",
            Self::Both => "both",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RemapOptions {
    pub order: usize,
    pub positivity: bool,
    pub approach: Approach,
    pub limiter: LimiterParams,
}

impl RemapOptions {
    pub fn new(order: usize) -> Self {
        Self { order, positivity: false, approach: Approach::A, limiter: LimiterParams::default() }
    }

    pub fn positivity(mut self, on: bool) -> Self {
        self.positivity = on;
        self
    }

    pub fn approach(mut self, a: Approach) -> Self {
        self.approach = a;
        self
    }
}

/// One nonempty intersection of a source and a target cell.
#[derive(Clone, Debug)]
pub struct Overlap {
    pub source: usize,
    pub target: usize,
    pub loops: Vec<CurvedPolygon>,
    pub area: f64,
}

/// All intersections of two meshes. Geometry only, so it can be reused for
/// any field and order on the same mesh pair.
#[derive(Debug)]
pub struct Overlay {
    pub overlaps: Vec<Overlap>,
    by_target: Vec<Range<usize>>,
    by_source: Vec<Vec<usize>>,
    /// `Σ_i |Î_{i,ĩ}|` per target cell.
    pub clipped_areas: Vec<f64>,
    pub candidates: usize,
    pub clip_seconds: f64,
    triangles: OnceLock<Vec<Vec<CurvedTriangle>>>,
    triangulate_seconds: OnceLock<f64>,
}

impl Overlay {
    pub fn build(source: &CurvilinearMesh, target: &CurvilinearMesh) -> Result<Self, RemapError> {
        let start = Instant::now();
        let index = PairIndex::new(source);
        let min_area = source.areas().iter().chain(target.areas()).copied().fold(f64::INFINITY, f64::min);
        let drop = DROP_AREA_FRACTION * min_area;
        let per_target: Vec<Result<(usize, Vec<Overlap>), RemapError>> = (0..target.num_cells())
            .into_par_iter()
            .map(|t| {
                let tpoly = target.cell_polygon(t);
                let cands = index.query(&target.cell_bbox(t));
                let mut out = Vec::new();
                for &s in &cands {
                    let r = wa_clip(&source.cell_polygon(s), &tpoly).map_err(|err| RemapError::Clip {
                        source_cell: s,
                        target_cell: t,
                        err,
                    })?;
                    let area: f64 = r.loops.iter().map(|l| l.signed_area()).sum();
                    if area < -NEGATIVE_AREA_TOL {
                        return Err(RemapError::NegativeArea { source_cell: s, target_cell: t, area });
                    }
                    if area > drop {
                        out.push(Overlap { source: s, target: t, loops: r.loops, area });
                    }
                }
                Ok((cands.len(), out))
            })
            .collect();
        let mut overlaps = Vec::new();
        let mut by_target = Vec::with_capacity(target.num_cells());
        let mut candidates = 0;
        for r in per_target {
            let (c, o) = r?;
            candidates += c;
            let lo = overlaps.len();
            overlaps.extend(o);
            by_target.push(lo..overlaps.len());
        }
        let mut by_source = vec![Vec::new(); source.num_cells()];
        for (k, o) in overlaps.iter().enumerate() {
            by_source[o.source].push(k);
        }
        let clipped_areas = by_target.iter().map(|r| overlaps[r.clone()].iter().map(|o| o.area).sum()).collect();
        Ok(Self {
            overlaps,
            by_target,
            by_source,
            clipped_areas,
            candidates,
            clip_seconds: start.elapsed().as_secs_f64(),
            triangles: OnceLock::new(),
            triangulate_seconds: OnceLock::new(),
        })
    }

    pub fn for_target(&self, t: usize) -> &[Overlap] {
        &self.overlaps[self.by_target[t].clone()]
    }

    /// Overlap indices involving source cell `s`.
    pub fn for_source(&self, s: usize) -> &[usize] {
        &self.by_source[s]
    }

    /// Curved triangulation of every overlap, computed once.
    pub fn triangles(&self) -> Result<&[Vec<CurvedTriangle>], RemapError> {
        if let Some(t) = self.triangles.get() {
            return Ok(t);
        }
        let start = Instant::now();
        let tris = self
            .overlaps
            .par_iter()
            .map(|o| {
                let mut v = Vec::new();
                for l in &o.loops {
                    v.extend(triangulate(l).map_err(|err| RemapError::Integrate {
                        source_cell: o.source,
                        target_cell: o.target,
                        err,
                    })?);
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, RemapError>>()?;
        let _ = self.triangulate_seconds.set(start.elapsed().as_secs_f64());
        Ok(self.triangles.get_or_init(|| tris))
    }

    fn triangulate_seconds(&self) -> f64 {
        self.triangulate_seconds.get().copied().unwrap_or(0.0)
    }
}

fn tri_points(t: &CurvedTriangle, k: usize, o: &Overlap) -> Result<Vec<(Point2, f64)>, RemapError> {
    let err = |err| RemapError::Integrate { source_cell: o.source, target_cell: o.target, err };
    let rule = make_tri_rule(t.rule_degree(k)).map_err(err)?;
    tri_quad_points(t, rule).map_err(err)
}

/// Remaps `field` from `source` to `target`, building the overlay.
pub fn remap(source: &CurvilinearMesh, field: &Field, target: &CurvilinearMesh, opts: RemapOptions) -> Result<RemapReport, RemapError> {
    let overlay = Overlay::build(source, target)?;
    remap_with(source, field, target, &overlay, opts)
}

/// Remaps `field` using a precomputed overlay of the two meshes.
pub fn remap_with(
    source: &CurvilinearMesh,
    field: &Field,
    target: &CurvilinearMesh,
    overlay: &Overlay,
    opts: RemapOptions,
) -> Result<RemapReport, RemapError> {
    let total = Instant::now();
    if field.len() != source.num_cells() {
        return Err(RemapError::FieldLength { expected: source.num_cells(), got: field.len() });
    }
    let mut warnings = Vec::new();
    let (sa, ta) = (source.total_area(), target.total_area());
    if (sa - ta).abs() > DOMAIN_AREA_TOL * sa.abs().max(ta.abs()) {
        warnings.push(format!("source and target areas differ: {sa:.17e} vs {ta:.17e}"));
    }
    let cfg = WenoConfig::new(opts.order)?;
    let k = cfg.degree();

    let t0 = Instant::now();
    let recon = weno_reconstruct(source, &field.values, &cfg)?;
    warnings.extend(recon.warnings.iter().cloned());
    let reconstruct_s = t0.elapsed().as_secs_f64();

    let need_tris = opts.positivity || opts.approach != Approach::A;
    let tris = if need_tris { Some(overlay.triangles()?) } else { None };

    let t1 = Instant::now();
    let mut polys = recon.polys;
    let mut limited = 0;
    if opts.positivity {
        let eps = opts.limiter.eps;
        if let Some(bad) = field.values.iter().position(|&u| !(u >= eps)) {
            warnings.push(format!(
                "positivity requested but source cell {bad} has average {:e} below {eps:e}; limiter skipped",
                field.values[bad]
            ));
        } else {
            let tris = tris.expect("triangulated");
            let out: Vec<Result<(Poly2, bool), RemapError>> = (0..source.num_cells())
                .into_par_iter()
                .map(|s| {
                    let mut pts = Vec::new();
                    for &oi in overlay.for_source(s) {
                        for t in &tris[oi] {
                            pts.extend(tri_points(t, k, &overlay.overlaps[oi])?.into_iter().map(|(p, _)| p));
                        }
                    }
                    let (p, theta) = positivity_limit(&polys[s], field.values[s], &pts, opts.limiter)
                        .expect("average checked against the floor");
                    Ok((p, theta < 1.0))
                })
                .collect();
            for (s, r) in out.into_iter().enumerate() {
                let (p, hit) = r?;
                polys[s] = p;
                limited += hit as usize;
            }
        }
    }
    let limit_s = t1.elapsed().as_secs_f64();

    let t2 = Instant::now();
    let per_target: Vec<Result<(f64, f64), RemapError>> = (0..target.num_cells())
        .into_par_iter()
        .map(|t| {
            let mut mass = 0.0;
            let mut diff: f64 = 0.0;
            for (j, o) in overlay.for_target(t).iter().enumerate() {
                let p = &polys[o.source];
                let a = || o.loops.iter().map(|l| green_integral(p, l)).sum::<f64>();
                let b = || -> Result<f64, RemapError> {
                    let oi = overlay.by_target[t].start + j;
                    let mut s = 0.0;
                    for tri in &tris.expect("triangulated")[oi] {
                        s += tri_points(tri, k, o)?.iter().map(|(q, w)| w * p.eval(*q)).sum::<f64>();
                    }
                    Ok(s)
                };
                mass += match opts.approach {
                    Approach::A => a(),
                    Approach::B => b()?,
                    Approach::Both => {
                        let (va, vb) = (a(), b()?);
                        diff = diff.max((va - vb).abs() / va.abs().max(1.0));
                        va
                    }
                };
            }
            Ok((mass, diff))
        })
        .collect();
    let mut values = Vec::with_capacity(target.num_cells());
    let mut target_mass = 0.0;
    let mut max_diff: f64 = 0.0;
    for (t, r) in per_target.into_iter().enumerate() {
        let (mass, diff) = r?;
        let area = overlay.clipped_areas[t];
        if area > 0.0 {
            values.push(mass / area);
        } else {
            warnings.push(format!("target cell {t} is not covered by the source mesh"));
            values.push(0.0);
        }
        target_mass += mass;
        max_diff = max_diff.max(diff);
    }
    let integrate_s = t2.elapsed().as_secs_f64();

    let source_mass = field.mass(source.areas());
    let e_area_c = overlay.clipped_areas.iter().zip(target.areas()).map(|(c, d)| (c - d).abs()).sum();
    let out = Field::new(values);
    Ok(RemapReport {
        order: opts.order,
        positivity: opts.positivity,
        approach: opts.approach,
        e_area_c,
        e_cons: (target_mass - source_mass).abs(),
        source_mass,
        target_mass,
        min_average: out.min(),
        max_average: out.max(),
        candidate_pairs: overlay.candidates,
        overlap_pairs: overlay.overlaps.len(),
        limited_cells: limited,
        max_approach_diff: (opts.approach == Approach::Both).then_some(max_diff),
        timings: Timings {
            clip: overlay.clip_seconds,
            triangulate: if need_tris { overlay.triangulate_seconds() } else { 0.0 },
            reconstruct: reconstruct_s,
            limit: limit_s,
            integrate: integrate_s,
            total: total.elapsed().as_secs_f64(),
        },
        warnings,
        field: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{BumpField, SinSum};
    use crate::mesh::{exact_cell_averages, gen_deformed_square_mesh, DeformKind};

    #[test]
    fn identical_meshes_reproduce_the_field() {
        let m = gen_deformed_square_mesh(6, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        let f = exact_cell_averages(&m, &SinSum).unwrap();
        for order in [1, 3, 5] {
            let r = remap(&m, &f, &m, RemapOptions::new(order)).unwrap();
            for (a, b) in r.field.values.iter().zip(&f.values) {
                assert!((a - b).abs() < 1e-12, "{order} {a} {b}");
            }
            assert!(r.e_cons <= 1e-13 * r.source_mass.abs());
        }
    }

    #[test]
    fn constant_is_preserved_and_mass_conserved() {
        let s = gen_deformed_square_mesh(8, DeformKind::GreshoLike, 0.5, 2).unwrap();
        let t = gen_deformed_square_mesh(8, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        let overlay = Overlay::build(&s, &t).unwrap();
        let c = Field::new(vec![2.5; s.num_cells()]);
        for order in [1, 3, 5] {
            let r = remap_with(&s, &c, &t, &overlay, RemapOptions::new(order)).unwrap();
            assert!(r.field.values.iter().all(|v| (v - 2.5).abs() < 1e-12));
            assert!(r.e_area_c < 1e-10);
        }
        let f = exact_cell_averages(&s, &SinSum).unwrap();
        let r = remap_with(&s, &f, &t, &overlay, RemapOptions::new(5).approach(Approach::Both)).unwrap();
        assert!(r.e_cons <= 1e-12 * r.source_mass.abs(), "{}", r.e_cons);
        assert!(r.max_approach_diff.unwrap() <= 1e-11);
    }

    #[test]
    fn limiter_keeps_cylinder_positive() {
        let s = gen_deformed_square_mesh(12, DeformKind::GreshoLike, 0.5, 2).unwrap();
        let t = gen_deformed_square_mesh(12, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        let overlay = Overlay::build(&s, &t).unwrap();
        let f = exact_cell_averages(&s, &BumpField::square_cylinder()).unwrap();
        let on = remap_with(&s, &f, &t, &overlay, RemapOptions::new(3).positivity(true)).unwrap();
        assert!(on.min_average >= 1e-14, "{}", on.min_average);
        assert!(on.e_cons <= 1e-11 * on.source_mass);
    }

    #[test]
    fn mismatched_field_length() {
        let m = gen_deformed_square_mesh(2, DeformKind::Identity, 0.0, 1).unwrap();
        assert!(matches!(
            remap(&m, &Field::new(vec![1.0]), &m, RemapOptions::new(1)),
            Err(RemapError::FieldLength { .. })
        ));
    }
}
