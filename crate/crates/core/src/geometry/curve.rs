use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use super::{Aabb, GeometryError, Point2};

/// A degree-`d` Lagrange curve on `t ∈ [0, 1]` interpolating `d + 1` nodes at
/// the uniform parameters `t_j = j / d`.
///
/// The Bézier control points of the same polynomial are kept alongside the
/// nodes; they give hull boxes and Bernstein coefficients for root isolation.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamCurve {
    nodes: Vec<Point2>,
    bezier: Vec<Point2>,
}

impl ParamCurve {
    pub fn new(nodes: Vec<Point2>) -> Result<Self, GeometryError> {
        if nodes.len() < 2 {
            return Err(GeometryError::TooFewNodes(nodes.len()));
        }
        if let Some(i) = nodes.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite(i));
        }
        let bezier = lagrange_to_bezier(&nodes);
        Ok(Self { nodes, bezier })
    }

    /// Straight segment as a degree-1 curve.
    pub fn line(a: Point2, b: Point2) -> Self {
        Self {
            nodes: vec![a, b],
            bezier: vec![a, b],
        }
    }

    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Point2] {
        &self.nodes
    }

    pub fn bezier(&self) -> &[Point2] {
        &self.bezier
    }

    pub fn start(&self) -> Point2 {
        self.nodes[0]
    }

    pub fn end(&self) -> Point2 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Lagrange interpolant at `t`. Valid for any finite `t`, including
    /// parameters outside `[0, 1]`.
    pub fn eval(&self, t: f64) -> Point2 {
        let d = self.degree();
        let df = d as f64;
        let mut out = Point2::default();
        for (j, pj) in self.nodes.iter().enumerate() {
            let mut l = 1.0;
            for m in 0..=d {
                if m != j {
                    l *= (t * df - m as f64) / (j as f64 - m as f64);
                }
            }
            out += *pj * l;
        }
        out
    }

    /// Exact derivative `(x'(t), y'(t))` of the interpolant.
    pub fn deriv(&self, t: f64) -> Point2 {
        self.eval_with_deriv(t).1
    }

    pub fn eval_with_deriv(&self, t: f64) -> (Point2, Point2) {
        let d = self.degree();
        let df = d as f64;
        let s = t * df;
        let mut p = Point2::default();
        let mut dp = Point2::default();
        for (j, pj) in self.nodes.iter().enumerate() {
            // L_j(s) = prod_{m != j} (s - m) / (j - m), ds/dt = d
            let mut denom = 1.0;
            for m in 0..=d {
                if m != j {
                    denom *= j as f64 - m as f64;
                }
            }
            let mut val = 1.0;
            let mut der = 0.0;
            for m in 0..=d {
                if m == j {
                    continue;
                }
                let f = s - m as f64;
                der = der * f + val;
                val *= f;
            }
            p += *pj * (val / denom);
            dp += *pj * (der * df / denom);
        }
        (p, dp)
    }

    /// Box containing the image of `[0, 1]` (hull of the Bézier control points).
    pub fn bbox(&self) -> Aabb {
        Aabb::from_points(&self.bezier)
    }

    /// Bézier control points of the restriction to `[a, b]` re-parameterised
    /// onto `[0, 1]`. `a > b` yields the reversed piece.
    pub fn bezier_sub(&self, a: f64, b: f64) -> Vec<Point2> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let mut ctrl = self.bezier.clone();
        if hi < 1.0 {
            ctrl = split_bezier(&ctrl, hi).0;
        }
        if lo > 0.0 {
            let u = if hi > 0.0 { lo / hi } else { 0.0 };
            ctrl = split_bezier(&ctrl, u).1;
        }
        if a > b {
            ctrl.reverse();
        }
        ctrl
    }

    /// Sampling-based self-intersection check over `[0, 1]`.
    pub fn validate(&self) -> Result<(), GeometryError> {
        if self.degree() == 1 {
            return Ok(());
        }
        if monotone_along_chord(self.bezier()) {
            return Ok(());
        }
        let n = 16 * self.degree();
        let pts: Vec<Point2> = (0..=n).map(|k| self.eval(k as f64 / n as f64)).collect();
        for i in 0..n {
            for j in (i + 2)..n {
                if segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1]) {
                    return Err(GeometryError::SelfIntersectingCurve(i as f64 / n as f64));
                }
            }
        }
        Ok(())
    }

    pub fn transformed(&self, f: impl Fn(Point2) -> Point2) -> ParamCurve {
        ParamCurve::new(self.nodes.iter().map(|p| f(*p)).collect()).expect("finite transform")
    }
}

/// True if the Bézier curve advances along its chord everywhere, so it is a
/// graph over the chord and cannot cross itself.
pub(crate) fn monotone_along_chord(ctrl: &[Point2]) -> bool {
    let chord = ctrl[ctrl.len() - 1] - ctrl[0];
    ctrl.windows(2).all(|w| (w[1] - w[0]).dot(chord) > 0.0)
}

/// Proper crossing test for two closed segments (touching counts).
pub(crate) fn segments_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    let on = |p: Point2, q: Point2, r: Point2, o: f64| {
        o == 0.0 && r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
    };
    on(a, b, c, d1) || on(a, b, d, d2) || on(c, d, a, d3) || on(c, d, b, d4)
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r
}

fn lagrange_to_bezier(nodes: &[Point2]) -> Vec<Point2> {
    let d = nodes.len() - 1;
    if d == 1 {
        return nodes.to_vec();
    }
    let a = DMatrix::from_fn(d + 1, d + 1, |j, k| {
        let t = j as f64 / d as f64;
        binomial(d, k) * t.powi(k as i32) * (1.0 - t).powi((d - k) as i32)
    });
    let lu = a.lu();
    let bx = lu
        .solve(&DVector::from_iterator(d + 1, nodes.iter().map(|p| p.x)))
        .expect("Bernstein collocation matrix is nonsingular");
    let by = lu
        .solve(&DVector::from_iterator(d + 1, nodes.iter().map(|p| p.y)))
        .expect("Bernstein collocation matrix is nonsingular");
    let mut out: Vec<Point2> = (0..=d).map(|k| Point2::new(bx[k], by[k])).collect();
    // end control points coincide with the end nodes
    out[0] = nodes[0];
    out[d] = nodes[d];
    out
}

/// de Casteljau split at `t`.
pub(crate) fn split_bezier(ctrl: &[Point2], t: f64) -> (Vec<Point2>, Vec<Point2>) {
    let n = ctrl.len();
    let mut work = ctrl.to_vec();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    left.push(work[0]);
    right.push(work[n - 1]);
    for level in 1..n {
        for i in 0..(n - level) {
            work[i] = work[i].lerp(work[i + 1], t);
        }
        left.push(work[0]);
        right.push(work[n - 1 - level]);
    }
    right.reverse();
    (left, right)
}

/// A directed piece of a shared curve: parameters run from `t_start` to
/// `t_end`, which may decrease (reversed traversal).
#[derive(Clone, Debug)]
pub struct CurveSpan {
    pub curve: Arc<ParamCurve>,
    pub t_start: f64,
    pub t_end: f64,
}

impl CurveSpan {
    pub fn new(curve: Arc<ParamCurve>, t_start: f64, t_end: f64) -> Result<Self, GeometryError> {
        if t_start == t_end || !t_start.is_finite() || !t_end.is_finite() {
            return Err(GeometryError::EmptySpan(t_start, t_end));
        }
        Ok(Self { curve, t_start, t_end })
    }

    /// Whole curve, forward or backward.
    pub fn full(curve: Arc<ParamCurve>, reversed: bool) -> Self {
        let (t_start, t_end) = if reversed { (1.0, 0.0) } else { (0.0, 1.0) };
        Self { curve, t_start, t_end }
    }

    pub fn reversed(&self) -> bool {
        self.t_end < self.t_start
    }

    pub fn param(&self, u: f64) -> f64 {
        self.t_start + u * (self.t_end - self.t_start)
    }

    pub fn point_at(&self, u: f64) -> Point2 {
        self.curve.eval(self.param(u))
    }

    /// Derivative with respect to the local parameter `u ∈ [0, 1]`.
    pub fn tangent_at(&self, u: f64) -> Point2 {
        self.curve.deriv(self.param(u)) * (self.t_end - self.t_start)
    }

    pub fn start(&self) -> Point2 {
        self.curve.eval(self.t_start)
    }

    pub fn end(&self) -> Point2 {
        self.curve.eval(self.t_end)
    }

    pub fn degree(&self) -> usize {
        self.curve.degree()
    }

    pub fn is_straight(&self) -> bool {
        self.curve.degree() == 1
    }

    /// Bézier control points of this piece in its local parameter.
    pub fn bezier(&self) -> Vec<Point2> {
        self.curve.bezier_sub(self.t_start, self.t_end)
    }

    pub fn bbox(&self) -> Aabb {
        if self.t_start.min(self.t_end) <= 0.0 && self.t_start.max(self.t_end) >= 1.0 {
            self.curve.bbox()
        } else {
            Aabb::from_points(&self.bezier())
        }
    }

    pub fn reverse(&self) -> CurveSpan {
        CurveSpan {
            curve: self.curve.clone(),
            t_start: self.t_end,
            t_end: self.t_start,
        }
    }

    /// Sub-piece between local parameters `u0` and `u1`.
    pub fn sub(&self, u0: f64, u1: f64) -> CurveSpan {
        CurveSpan {
            curve: self.curve.clone(),
            t_start: self.param(u0),
            t_end: self.param(u1),
        }
    }

    pub fn same_curve(&self, o: &CurveSpan) -> bool {
        Arc::ptr_eq(&self.curve, &o.curve)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad_p_edge() -> ParamCurve {
        ParamCurve::new(vec![Point2::new(-1.5, -2.0), Point2::new(0.1, -0.1), Point2::new(1.0, -1.0)]).unwrap()
    }

    #[test]
    fn eval_reproduces_nodes_and_midpoint() {
        let c = quad_p_edge();
        assert_eq!(c.eval(0.5), Point2::new(0.1, -0.1));
        assert_eq!(c.eval(0.0), Point2::new(-1.5, -2.0));
        assert_eq!(c.eval(1.0), Point2::new(1.0, -1.0));
    }

    #[test]
    fn linear_eval_and_deriv() {
        let c = ParamCurve::new(vec![Point2::new(0.0, 0.0), Point2::new(2.0, 4.0)]).unwrap();
        assert_eq!(c.eval(0.25), Point2::new(0.5, 1.0));
        for t in [0.0, 0.3, 1.7] {
            let d = c.deriv(t);
            assert!((d.x - 2.0).abs() < 1e-15 && (d.y - 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn quadratic_blend_matches_explicit_formula() {
        let c = quad_p_edge();
        let [p1, p5, p2] = [c.nodes()[0], c.nodes()[1], c.nodes()[2]];
        for k in 0..=20 {
            let t = k as f64 / 20.0;
            let expect = p1 * ((1.0 - 2.0 * t) * (1.0 - t)) + p5 * (4.0 * t * (1.0 - t)) + p2 * ((2.0 * t - 1.0) * t);
            assert!(c.eval(t).dist(expect) < 1e-14);
            let dexp = p1 * (4.0 * t - 3.0) + p5 * (4.0 - 8.0 * t) + p2 * (4.0 * t - 1.0);
            assert!(c.deriv(t).dist(dexp) < 1e-13);
        }
    }

    #[test]
    fn bezier_middle_point_and_bbox() {
        let c = ParamCurve::new(vec![Point2::new(0.0, 0.0), Point2::new(0.5, 1.0), Point2::new(1.0, 0.0)]).unwrap();
        assert!(c.bezier()[1].dist(Point2::new(0.5, 2.0)) < 1e-14);
        let b = c.bbox();
        assert!((b.max.y - 2.0).abs() < 1e-14 && b.min.y == 0.0 && b.min.x == 0.0 && b.max.x == 1.0);
    }

    #[test]
    fn line_bbox() {
        let c = ParamCurve::line(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0));
        let b = c.bbox();
        assert_eq!((b.min, b.max), (Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)));
    }

    #[test]
    fn sub_bezier_matches_restriction() {
        let c = ParamCurve::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.3, 0.7),
            Point2::new(0.8, -0.2),
            Point2::new(1.0, 0.5),
        ])
        .unwrap();
        for (a, b) in [(0.2, 0.7), (0.9, 0.1), (0.0, 0.4), (0.6, 1.0)] {
            let ctrl = c.bezier_sub(a, b);
            for k in 0..=10 {
                let u = k as f64 / 10.0;
                let mut w = ctrl.clone();
                for l in 1..w.len() {
                    for i in 0..(w.len() - l) {
                        w[i] = w[i].lerp(w[i + 1], u);
                    }
                }
                assert!(w[0].dist(c.eval(a + u * (b - a))) < 1e-13);
            }
        }
    }

    #[test]
    fn self_intersecting_curve_is_rejected() {
        // cubic loop
        let c = ParamCurve::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(-1.0, 1.0),
            Point2::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(c.validate().is_err());
        assert!(quad_p_edge().validate().is_ok());
    }

    #[test]
    fn rejects_bad_nodes() {
        assert!(ParamCurve::new(vec![Point2::new(0.0, 0.0)]).is_err());
        assert!(ParamCurve::new(vec![Point2::new(0.0, 0.0), Point2::new(f64::NAN, 0.0)]).is_err());
    }
}
