use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::tri_tables::TRI_RULES;
use super::{IntegrateError, Poly2};
use crate::geometry::{CurveSpan, CurvedPolygon, Point2};

/// Symmetric rule on the reference triangle `(0,0), (1,0), (0,1)` with
/// positive weights summing to `1/2`.
#[derive(Clone, Debug)]
pub struct TriRule {
    /// Polynomial degree integrated exactly.
    pub degree: usize,
    pub points: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
    id: usize,
}

impl TriRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn rules() -> &'static [TriRule] {
    static RULES: OnceLock<Vec<TriRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        TRI_RULES
            .iter()
            .enumerate()
            .map(|(id, (deg, rows))| TriRule {
                degree: *deg,
                points: rows.iter().map(|r| (r[0], r[1])).collect(),
                weights: rows.iter().map(|r| r[2]).collect(),
                id,
            })
            .collect()
    })
}

/// Smallest tabulated rule exact to at least `exact_degree`.
pub fn make_tri_rule(exact_degree: usize) -> Result<&'static TriRule, IntegrateError> {
    let all = rules();
    all.iter()
        .find(|r| r.degree >= exact_degree.max(1))
        .ok_or(IntegrateError::RuleDegree(exact_degree, all.last().map_or(0, |r| r.degree)))
}

/// Edge of a curved triangle; straight interior edges are degree-1 spans.
pub type TriEdge = CurveSpan;

/// Triangle bounded by three spans, mapped from the reference triangle by
/// the degree-`q` isoparametric map whose boundary nodes lie on the spans
/// (`q = max(2, largest span degree)`).
#[derive(Clone, Debug)]
pub struct CurvedTriangle {
    pub edges: [TriEdge; 3],
    q: usize,
    nodes: Vec<Point2>,
}

/// Lattice points `(j, k)` with `λ = ((q - j - k), j, k) / q`.
fn lattice(q: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity((q + 1) * (q + 2) / 2);
    for k in 0..=q {
        for j in 0..=(q - k) {
            out.push((j, k));
        }
    }
    out
}

/// `P_i(z) = prod_{m < i} (q z - m) / (m + 1)` and its derivative.
fn silvester(i: usize, q: f64, z: f64) -> (f64, f64) {
    let mut v = 1.0;
    let mut d = 0.0;
    for m in 0..i {
        let f = (q * z - m as f64) / (m + 1) as f64;
        let df = q / (m + 1) as f64;
        d = d * f + v * df;
        v *= f;
    }
    (v, d)
}

/// Shape functions and their reference derivatives at one point.
fn shape(q: usize, xi: f64, eta: f64) -> Vec<(f64, f64, f64)> {
    let qf = q as f64;
    let l0 = 1.0 - xi - eta;
    lattice(q)
        .into_iter()
        .map(|(j, k)| {
            let i = q - j - k;
            let (a, da) = silvester(i, qf, l0);
            let (b, db) = silvester(j, qf, xi);
            let (c, dc) = silvester(k, qf, eta);
            (a * b * c, -da * b * c + a * db * c, -da * b * c + a * b * dc)
        })
        .collect()
}

struct MapBasis {
    // per rule point, per node
    shape: Vec<Vec<(f64, f64, f64)>>,
}

fn map_basis(q: usize, rule: &TriRule) -> Arc<MapBasis> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<MapBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("basis cache poisoned");
    guard
        .entry((q, rule.id))
        .or_insert_with(|| {
            Arc::new(MapBasis {
                shape: rule.points.iter().map(|&(x, y)| shape(q, x, y)).collect(),
            })
        })
        .clone()
}

impl CurvedTriangle {
    /// Triangle with vertices at the span starts. Consecutive spans must
    /// connect (`edges[i].end() == edges[i+1].start()` to round-off).
    pub fn new(edges: [TriEdge; 3]) -> Self {
        let q = edges.iter().map(|e| e.degree()).max().unwrap_or(1).max(2);
        let v = [edges[0].start(), edges[1].start(), edges[2].start()];
        let qf = q as f64;
        let bump = |e: usize, s: f64| -> Point2 {
            let a = v[e];
            let b = v[(e + 1) % 3];
            edges[e].point_at(s) - a.lerp(b, s)
        };
        let nodes = lattice(q)
            .into_iter()
            .map(|(j, k)| {
                let l = [(q - j - k) as f64 / qf, j as f64 / qf, k as f64 / qf];
                let mut x = v[0] * l[0] + v[1] * l[1] + v[2] * l[2];
                // edge e runs from vertex e to vertex e+1, opposite vertex e+2
                for e in 0..3 {
                    let (la, lb, lo) = (l[e], l[(e + 1) % 3], l[(e + 2) % 3]);
                    if lo < 1.0 {
                        x += bump(e, lb / (la + lb)) * (1.0 - lo);
                    }
                }
                x
            })
            .collect();
        Self { edges, q, nodes }
    }

    pub fn map_degree(&self) -> usize {
        self.q
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.edges[0].start(), self.edges[1].start(), self.edges[2].start()]
    }

    /// `(F(ξ, η), J(ξ, η))`.
    pub fn map(&self, xi: f64, eta: f64) -> (Point2, f64) {
        self.apply(&shape(self.q, xi, eta))
    }

    fn apply(&self, sh: &[(f64, f64, f64)]) -> (Point2, f64) {
        let mut p = Point2::default();
        let mut dx = Point2::default();
        let mut dy = Point2::default();
        for (n, (v, a, b)) in self.nodes.iter().zip(sh) {
            p += *n * *v;
            dx += *n * *a;
            dy += *n * *b;
        }
        (p, dx.cross(dy))
    }

    /// Smallest Jacobian over the nodes of `rule` and the triangle corners.
    pub fn min_jacobian(&self, rule: &TriRule) -> f64 {
        let mut m = f64::INFINITY;
        for &(x, y) in rule.points.iter().chain(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]) {
            m = m.min(self.map(x, y).1);
        }
        m
    }

    pub fn polygon(&self) -> CurvedPolygon {
        CurvedPolygon::new_unchecked(self.edges.to_vec())
    }

    /// Quadrature exactness needed for a degree-`k` integrand on this map.
    pub fn rule_degree(&self, k: usize) -> usize {
        k * self.q + 2 * (self.q - 1)
    }
}

/// Physical quadrature points of `rule` and their weights `ω J`.
pub fn tri_quad_points(t: &CurvedTriangle, rule: &TriRule) -> Result<Vec<(Point2, f64)>, IntegrateError> {
    let basis = map_basis(t.q, rule);
    let mut out = Vec::with_capacity(rule.len());
    for (sh, w) in basis.shape.iter().zip(&rule.weights) {
        let (p, j) = t.apply(sh);
        if !(j > 0.0) {
            return Err(IntegrateError::InvertedMapping(j));
        }
        out.push((p, w * j));
    }
    Ok(out)
}

/// `Σ ω_m f(F(ξ_m, η_m)) J(ξ_m, η_m)`.
pub fn tri_integral(f: &Poly2, t: &CurvedTriangle, rule: &TriRule) -> Result<f64, IntegrateError> {
    Ok(tri_quad_points(t, rule)?.iter().map(|(p, w)| w * f.eval(*p)).sum())
}
