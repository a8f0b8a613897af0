//! Exact polynomial integration over curved polygons: boundary (Green)
//! quadrature and curved-triangle quadrature after ear clipping.

mod gauss;
mod poly;
mod tri;
mod tri_tables;
mod triangulate;

pub use gauss::GaussRule1D;
pub use poly::{mono_index, monomials, n_terms, Poly2};
pub use tri::{make_tri_rule, tri_integral, tri_quad_points, CurvedTriangle, TriEdge, TriRule};
pub use triangulate::triangulate;

use thiserror::Error;

use crate::geometry::{CurveSpan, CurvedPolygon, Point2};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntegrateError {
    #[error("no tabulated triangle rule of degree {0} (maximum {1})")]
    RuleDegree(usize, usize),
    #[error("inverted triangle mapping: Jacobian {0:.3e} at a quadrature node")]
    InvertedMapping(f64),
    #[error("triangulation failed after {rounds} refinement rounds ({spans} spans, area {area:.6e})")]
    Triangulation { rounds: usize, spans: usize, area: f64 },
}

/// Canonical integration interval of a span: always ascending in the curve
/// parameter, with the sign of the traversal. Integrating a shared edge from
/// both sides therefore produces contributions that cancel bitwise.
fn canonical(span: &CurveSpan) -> (f64, f64, f64) {
    if span.t_start <= span.t_end {
        (span.t_start, span.t_end, 1.0)
    } else {
        (span.t_end, span.t_start, -1.0)
    }
}

/// Signed area `½∮(x y' − y x') dt`.
pub fn green_area(boundary: &CurvedPolygon) -> f64 {
    let mut total = 0.0;
    for span in boundary.spans() {
        let (a, b, sign) = canonical(span);
        // integrand degree 2d - 1
        let rule = GaussRule1D::new(span.degree());
        let s = rule.integrate(a, b, |t| {
            let (p, dp) = span.curve.eval_with_deriv(t);
            p.x * dp.y - p.y * dp.x
        });
        total += sign * s;
    }
    0.5 * total
}

/// Gauss points per span for a degree-`k` integrand on a degree-`d` curve.
/// The pulled-back integrand `f₂(x(t), y(t)) y'(t)` has degree
/// `(k + 1) d + d − 1`.
pub fn green_points(k: usize, d: usize) -> usize {
    ((k + 2) * d).div_ceil(2)
}

/// Moments `∬ X^a Y^b dx dy` for `a + b ≤ k` in the frame `(center, scale)`,
/// in [`monomials`] order.
pub fn green_moments(boundary: &CurvedPolygon, center: Point2, scale: f64, k: usize) -> Vec<f64> {
    let mut m = vec![0.0; n_terms(k)];
    let mut xp = vec![0.0; k + 2];
    let mut yp = vec![0.0; k + 1];
    for span in boundary.spans() {
        let (a, b, sign) = canonical(span);
        let rule = GaussRule1D::new(green_points(k, span.degree()));
        let len = b - a;
        for (u, w) in rule.points.iter().zip(&rule.weights) {
            let (p, dp) = span.curve.eval_with_deriv(a + len * u);
            let x = (p.x - center.x) / scale;
            let y = (p.y - center.y) / scale;
            // ∮ f₂ dy with f₂ = h X^{a+1} / (a+1) Y^b
            let wt = sign * w * len * scale * dp.y;
            xp[0] = 1.0;
            yp[0] = 1.0;
            for i in 1..=k + 1 {
                xp[i] = xp[i - 1] * x;
            }
            for i in 1..=k {
                yp[i] = yp[i - 1] * y;
            }
            for (idx, (ea, eb)) in monomials(k).enumerate() {
                m[idx] += wt * xp[ea + 1] / (ea + 1) as f64 * yp[eb];
            }
        }
    }
    m
}

/// `∬ f` over a curved polygon by boundary quadrature.
pub fn green_integral(f: &Poly2, boundary: &CurvedPolygon) -> f64 {
    let m = green_moments(boundary, f.center, f.scale, f.degree());
    f.integrate_with(&m)
}

/// Whole-cell integral; a cell is a 4-span curved polygon.
pub fn poly_integral_cell(f: &Poly2, cell: &CurvedPolygon) -> f64 {
    green_integral(f, cell)
}

/// `∬ f` for a piecewise smooth `f`, given `F` with `∂F/∂x = f`, by the
/// boundary integral `∮ F dy`. Each span is first cut where one of the
/// `level_sets` changes sign (the curves across which `F` is not smooth,
/// including square-root behaviour at the top and bottom of a disk), then
/// every piece is graded towards its ends and refined by doubling its Gauss
/// panels until two levels agree to `rel_tol` or to the roundoff of the sum.
pub fn green_integral_antiderivative(
    boundary: &CurvedPolygon,
    antiderivative: impl Fn(Point2) -> f64,
    level_sets: &[&dyn Fn(Point2) -> f64],
    opts: QuadOptions,
) -> Result<f64, NotConverged> {
    let rule = GaussRule1D::new(16);
    let graded = !level_sets.is_empty();
    let pieces: Vec<(Vec<f64>, f64, &CurveSpan)> = boundary
        .spans()
        .iter()
        .map(|span| {
            let (a, b, sign) = canonical(span);
            (breakpoints(span, a, b, level_sets), sign, span)
        })
        .collect();
    let eval = |panels: usize| -> (f64, f64) {
        let (mut total, mut l1) = (0.0, 0.0);
        for (cuts, sign, span) in &pieces {
            for w in cuts.windows(2) {
                let len = w[1] - w[0];
                let h = 1.0 / panels as f64;
                for p in 0..panels {
                    let lo = h * p as f64;
                    let (s, a) = rule.integrate_abs(lo, lo + h, |u| {
                        // t = w0 + len (3u² − 2u³) flattens endpoint singularities
                        let (t, dt) = if graded {
                            (w[0] + len * u * u * (3.0 - 2.0 * u), len * 6.0 * u * (1.0 - u))
                        } else {
                            (w[0] + len * u, len)
                        };
                        let (q, dq) = span.curve.eval_with_deriv(t);
                        antiderivative(q) * dq.y * dt
                    });
                    total += sign * s;
                    l1 += a;
                }
            }
        }
        (total, l1)
    };
    let (mut prev, _) = eval(1);
    let mut panels = 1;
    for _ in 0..opts.max_levels {
        panels *= 2;
        let (next, l1) = eval(panels);
        let tol = (opts.rel_tol * next.abs()).max(opts.abs_floor).max(64.0 * f64::EPSILON * l1);
        if (next - prev).abs() <= tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(NotConverged { levels: opts.max_levels, last: prev })
}

/// `[a, b]` cut at the sign changes of each level set along the span.
fn breakpoints(span: &CurveSpan, a: f64, b: f64, level_sets: &[&dyn Fn(Point2) -> f64]) -> Vec<f64> {
    const SAMPLES: usize = 64;
    let mut cuts = vec![a, b];
    for phi in level_sets {
        let g = |t: f64| phi(span.curve.eval(t));
        let ts: Vec<f64> = (0..=SAMPLES).map(|k| a + (b - a) * k as f64 / SAMPLES as f64).collect();
        let gs: Vec<f64> = ts.iter().map(|&t| g(t)).collect();
        for k in 0..SAMPLES {
            if gs[k] == 0.0 {
                cuts.push(ts[k]);
            } else if gs[k] * gs[k + 1] < 0.0 {
                cuts.push(bisect_root(&g, ts[k], ts[k + 1], gs[k]));
            }
        }
        // extrema of |g| between samples: refine them, then cut at the two
        // roots around a hidden dip across the level set or at a near touch
        for k in 1..SAMPLES {
            let s = gs[k].signum();
            if s == 0.0 || s * gs[k - 1] <= 0.0 || s * gs[k + 1] <= 0.0 {
                continue;
            }
            if s * gs[k] > s * gs[k - 1] || s * gs[k] > s * gs[k + 1] {
                continue;
            }
            let (mut lo, mut hi) = (ts[k - 1], ts[k + 1]);
            const INV_PHI: f64 = 0.618_033_988_749_894_9;
            for _ in 0..80 {
                let m1 = hi - INV_PHI * (hi - lo);
                let m2 = lo + INV_PHI * (hi - lo);
                if s * g(m1) < s * g(m2) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            let tm = 0.5 * (lo + hi);
            let gm = g(tm);
            if s * gm < 0.0 {
                cuts.push(bisect_root(&g, ts[k - 1], tm, gs[k - 1]));
                cuts.push(bisect_root(&g, tm, ts[k + 1], gm));
            } else {
                // a near touch still bends the integrand sharply at tm
                cuts.push(tm);
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|x, y| (*x - *y).abs() <= 1e-14 * (b - a));
    cuts
}

/// Root of `g` in `[lo, hi]` by bisection, given `g(lo) = glo` and a sign
/// change across the interval.
fn bisect_root(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut glo: f64) -> f64 {
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid);
        if gm == 0.0 {
            return mid;
        }
        if (gm < 0.0) == (glo < 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Adaptive refinement settings for non-polynomial boundary integrals.
#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub rel_tol: f64,
    /// Absolute tolerance on the change between levels.
    pub abs_floor: f64,
    pub max_levels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            abs_floor: 0.0,
            max_levels: 10,
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
#[error("adaptive boundary quadrature did not converge after {levels} levels (last value {last:.6e})")]
pub struct NotConverged {
    pub levels: usize,
    pub last: f64,
}
