use crate::geometry::{closest_on_span, split_bezier, Aabb, CurveSpan, Point2, SNAP_TOL};

/// Newton residual accepted as a root.
pub const NEWTON_TOL: f64 = 1e-12;
/// Roots closer than this in both span parameters are one root.
pub const DEDUP_TOL: f64 = 1e-8;
/// `|unit tangent_a × unit tangent_b|` above which a root is transversal.
pub const TRANSVERSAL_TOL: f64 = 1e-8;

/// A solution of `a(u) = b(v)` in local span parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpanRoot {
    pub u: f64,
    pub v: f64,
    pub point: Point2,
    pub transversal: bool,
}

/// How two spans touch.
#[derive(Clone, Debug, PartialEq)]
pub enum Contact {
    /// The spans share a piece of boundary between the listed points
    /// (sorted by `u`).
    Overlap(Vec<SpanRoot>),
    /// Isolated contact points: transversal crossings, tangencies and
    /// endpoints of one span lying on the other.
    Points(Vec<SpanRoot>),
}

fn unit_cross(a: Point2, b: Point2) -> f64 {
    let n = a.norm() * b.norm();
    if n == 0.0 {
        0.0
    } else {
        a.cross(b) / n
    }
}

fn make_root(a: &CurveSpan, b: &CurveSpan, u: f64, v: f64, point: Point2) -> SpanRoot {
    let transversal = unit_cross(a.tangent_at(u), b.tangent_at(v)).abs() > TRANSVERSAL_TOL;
    SpanRoot { u, v, point, transversal }
}

/// Newton iteration on `a(u) - b(v) = 0` from `(u, v)`.
fn newton(a: &CurveSpan, b: &CurveSpan, mut u: f64, mut v: f64) -> Option<(f64, f64)> {
    let da_dt = a.t_end - a.t_start;
    let db_dt = b.t_end - b.t_start;
    let mut last_step = f64::INFINITY;
    for _ in 0..80 {
        let (pa, ta) = a.curve.eval_with_deriv(a.param(u));
        let (pb, tb) = b.curve.eval_with_deriv(b.param(v));
        let ta = ta * da_dt;
        let tb = tb * db_dt;
        let f = pa - pb;
        // [ta, -tb] (du, dv)^T = -f
        let det = -ta.cross(tb);
        if det.abs() <= 1e-14 * ta.norm() * tb.norm() || det == 0.0 {
            return None;
        }
        let du = (-f.x * -tb.y + tb.x * -f.y) / det;
        let dv = (ta.x * -f.y + f.x * ta.y) / det;
        u += du;
        v += dv;
        if !(-0.5..=1.5).contains(&u) || !(-0.5..=1.5).contains(&v) {
            return None;
        }
        let step = du.abs().max(dv.abs());
        if step < 1e-15 || (step >= last_step && step < 1e-12) {
            break;
        }
        last_step = step;
    }
    let r = a.point_at(u).dist(b.point_at(v));
    let lim = 1e-9;
    if r <= NEWTON_TOL && (-lim..=1.0 + lim).contains(&u) && (-lim..=1.0 + lim).contains(&v) {
        Some((u.clamp(0.0, 1.0), v.clamp(0.0, 1.0)))
    } else {
        None
    }
}

fn flatness(ctrl: &[Point2]) -> f64 {
    let a = ctrl[0];
    let b = ctrl[ctrl.len() - 1];
    let d = b - a;
    let len = d.norm();
    ctrl[1..ctrl.len() - 1]
        .iter()
        .map(|p| if len > 0.0 { (d.cross(*p - a) / len).abs() } else { p.dist(a) })
        .fold(0.0, f64::max)
}

/// Seeds from recursive subdivision of both Bézier nets: parameters where
/// the chords of overlapping flat sub-pieces meet.
fn subdivision_seeds(
    ca: &[Point2],
    (a0, a1): (f64, f64),
    cb: &[Point2],
    (b0, b1): (f64, f64),
    depth: usize,
    out: &mut Vec<(f64, f64)>,
) {
    if out.len() > 256 {
        return;
    }
    let ba = Aabb::from_points(ca).expanded(SNAP_TOL);
    let bb = Aabb::from_points(cb).expanded(SNAP_TOL);
    if !ba.overlaps(&bb) {
        return;
    }
    let size = ba.diagonal().max(bb.diagonal());
    let flat = flatness(ca) <= 1e-3 * size && flatness(cb) <= 1e-3 * size;
    if flat || depth >= 6 {
        let (p, q) = (ca[0], ca[ca.len() - 1]);
        let (r, s) = (cb[0], cb[cb.len() - 1]);
        let d = (q - p).cross(s - r);
        let (mut x, mut y) = (0.5, 0.5);
        if d != 0.0 {
            x = ((r - p).cross(s - r) / d).clamp(0.0, 1.0);
            y = ((r - p).cross(q - p) / d).clamp(0.0, 1.0);
        }
        out.push((a0 + x * (a1 - a0), b0 + y * (b1 - b0)));
        return;
    }
    let (al, ar) = split_bezier(ca, 0.5);
    let (bl, br) = split_bezier(cb, 0.5);
    let am = 0.5 * (a0 + a1);
    let bm = 0.5 * (b0 + b1);
    subdivision_seeds(&al, (a0, am), &bl, (b0, bm), depth + 1, out);
    subdivision_seeds(&al, (a0, am), &br, (bm, b1), depth + 1, out);
    subdivision_seeds(&ar, (am, a1), &bl, (b0, bm), depth + 1, out);
    subdivision_seeds(&ar, (am, a1), &br, (bm, b1), depth + 1, out);
}

fn push_unique(roots: &mut Vec<SpanRoot>, r: SpanRoot) {
    let dup = roots
        .iter()
        .any(|q| ((q.u - r.u).abs() <= DEDUP_TOL && (q.v - r.v).abs() <= DEDUP_TOL) || q.point.dist(r.point) <= SNAP_TOL);
    if !dup {
        roots.push(r);
    }
}

/// All solutions of `a(u) = b(v)` with `u, v ∈ [0, 1]`, found by Newton
/// iteration from a uniform seed grid of `(d_a d_b + 2)²` points plus
/// subdivision seeds. Overlapping spans have no isolated roots; use
/// [`span_contacts`] for those.
pub fn span_roots(a: &CurveSpan, b: &CurveSpan) -> Vec<SpanRoot> {
    let mut roots = Vec::new();
    if !a.bbox().expanded(SNAP_TOL).overlaps(&b.bbox().expanded(SNAP_TOL)) {
        return roots;
    }
    let g = a.degree() * b.degree() + 2;
    let mut seeds: Vec<(f64, f64)> = Vec::with_capacity(g * g);
    for i in 0..g {
        for j in 0..g {
            seeds.push(((i as f64 + 0.5) / g as f64, (j as f64 + 0.5) / g as f64));
        }
    }
    subdivision_seeds(&a.bezier(), (0.0, 1.0), &b.bezier(), (0.0, 1.0), 0, &mut seeds);
    for (u0, v0) in seeds {
        if let Some((u, v)) = newton(a, b, u0, v0) {
            let p = a.point_at(u);
            push_unique(&mut roots, make_root(a, b, u, v, p));
        }
    }
    roots.sort_by(|x, y| x.u.total_cmp(&y.u));
    roots
}

/// Contact points of two spans, detecting shared boundary pieces first.
pub fn span_contacts(a: &CurveSpan, b: &CurveSpan) -> Contact {
    if !a.bbox().expanded(SNAP_TOL).overlaps(&b.bbox().expanded(SNAP_TOL)) {
        return Contact::Points(Vec::new());
    }
    // endpoints of either span lying on the other
    let mut ends: Vec<SpanRoot> = Vec::new();
    for (u, p) in [(0.0, a.start()), (1.0, a.end())] {
        let (v, q) = closest_on_span(b, p);
        if q.dist(p) <= SNAP_TOL {
            push_unique(&mut ends, make_root(a, b, u, v, p));
        }
    }
    for (v, q) in [(0.0, b.start()), (1.0, b.end())] {
        let (u, p) = closest_on_span(a, q);
        if q.dist(p) <= SNAP_TOL {
            push_unique(&mut ends, make_root(a, b, u, v, q));
        }
    }
    ends.sort_by(|x, y| x.u.total_cmp(&y.u));
    if ends.len() >= 2 {
        let (u0, u1) = (ends[0].u, ends[ends.len() - 1].u);
        let on_other = (1..8).all(|k| {
            let p = a.point_at(u0 + (u1 - u0) * k as f64 / 8.0);
            closest_on_span(b, p).1.dist(p) <= 10.0 * SNAP_TOL
        });
        if on_other && u1 - u0 > 0.0 {
            return Contact::Overlap(ends);
        }
    }
    let mut pts = ends;
    for r in span_roots(a, b) {
        push_unique(&mut pts, r);
    }
    pts.sort_by(|x, y| x.u.total_cmp(&y.u));
    Contact::Points(pts)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::geometry::ParamCurve;

    fn line(a: (f64, f64), b: (f64, f64)) -> CurveSpan {
        CurveSpan::full(Arc::new(ParamCurve::line(a.into(), b.into())), false)
    }

    #[test]
    fn crossing_diagonals() {
        let r = span_roots(&line((0.0, 0.0), (1.0, 1.0)), &line((0.0, 1.0), (1.0, 0.0)));
        assert_eq!(r.len(), 1);
        assert!((r[0].u - 0.5).abs() < 1e-15 && (r[0].v - 0.5).abs() < 1e-15);
        assert!(r[0].transversal);
    }

    #[test]
    fn disjoint_spans() {
        assert!(span_roots(&line((0.0, 0.0), (1.0, 0.0)), &line((0.0, 1.0), (1.0, 1.0))).is_empty());
    }

    #[test]
    fn parabola_and_line_two_roots() {
        let c = CurveSpan::full(
            Arc::new(ParamCurve::new(vec![(0.0, 0.0).into(), (0.5, 1.0).into(), (1.0, 0.0).into()]).unwrap()),
            false,
        );
        let r = span_roots(&c, &line((0.0, 0.25), (1.0, 0.25)));
        assert_eq!(r.len(), 2);
        for root in &r {
            assert!((root.point.y - 0.25).abs() < 1e-13);
        }
    }

    #[test]
    fn collinear_overlap_detected() {
        match span_contacts(&line((0.0, 0.0), (2.0, 0.0)), &line((3.0, 0.0), (1.0, 0.0))) {
            Contact::Overlap(p) => {
                assert_eq!(p.len(), 2);
                assert!((p[0].u - 0.5).abs() < 1e-12 && (p[1].u - 1.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn endpoint_touch_is_reported() {
        match span_contacts(&line((0.0, 0.0), (2.0, 0.0)), &line((1.0, 0.0), (1.0, 1.0))) {
            Contact::Points(p) => {
                assert_eq!(p.len(), 1);
                assert!((p[0].u - 0.5).abs() < 1e-12 && p[0].v == 0.0);
            }
            other => panic!("{other:?}"),
        }
    }
}
