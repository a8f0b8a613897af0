use super::curve::{monotone_along_chord, segments_cross, CurveSpan};
use super::roots::bernstein_roots;
use super::{Aabb, GeometryError, Point2, SNAP_TOL};

/// Result of a point-in-polygon query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Outside,
    Boundary,
}

/// Closest boundary point of a polygon to a query point.
#[derive(Clone, Copy, Debug)]
pub struct BoundaryHit {
    pub span: usize,
    /// Local parameter on the span.
    pub u: f64,
    pub point: Point2,
    pub dist: f64,
}

/// Closed loop of curve spans. Cells and clip results are both represented
/// this way; a valid polygon is counterclockwise and simple.
#[derive(Clone, Debug)]
pub struct CurvedPolygon {
    spans: Vec<CurveSpan>,
}

// Ray directions tried in order; the first is the horizontal ray.
const RAY_ANGLES: [f64; 8] = [0.0, 0.613, 2.399, 4.011, 1.287, 5.471, 3.331, 0.197];

impl CurvedPolygon {
    /// Builds a loop, checking closure within [`SNAP_TOL`] and positive area.
    pub fn new(spans: Vec<CurveSpan>) -> Result<Self, GeometryError> {
        let poly = Self::new_unchecked(spans);
        poly.check_closed()?;
        let a = poly.signed_area();
        if !(a > 0.0) {
            return Err(GeometryError::NotCounterClockwise(a));
        }
        Ok(poly)
    }

    pub fn new_unchecked(spans: Vec<CurveSpan>) -> Self {
        Self { spans }
    }

    pub fn spans(&self) -> &[CurveSpan] {
        &self.spans
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn into_spans(self) -> Vec<CurveSpan> {
        self.spans
    }

    /// Largest curve degree among the spans.
    pub fn max_degree(&self) -> usize {
        self.spans.iter().map(|s| s.degree()).max().unwrap_or(1)
    }

    pub fn signed_area(&self) -> f64 {
        crate::integrate::green_area(self)
    }

    pub fn bbox(&self) -> Aabb {
        self.spans.iter().fold(Aabb::empty(), |b, s| b.union(&s.bbox()))
    }

    pub fn corners(&self) -> Vec<Point2> {
        self.spans.iter().map(|s| s.start()).collect()
    }

    fn check_closed(&self) -> Result<(), GeometryError> {
        if self.spans.is_empty() {
            return Err(GeometryError::Empty);
        }
        let n = self.spans.len();
        for i in 0..n {
            let gap = self.spans[i].end().dist(self.spans[(i + 1) % n].start());
            if gap > SNAP_TOL {
                return Err(GeometryError::NotClosed { span: i, gap });
            }
        }
        Ok(())
    }

    /// Closure, orientation and a sampling-based simplicity check.
    pub fn validate(&self) -> Result<(), GeometryError> {
        self.check_closed()?;
        let a = self.signed_area();
        if !(a > 0.0) {
            return Err(GeometryError::NotCounterClockwise(a));
        }
        let n = self.spans.len();
        let per = 16;
        let polylines: Vec<Vec<Point2>> = self
            .spans
            .iter()
            .map(|s| (0..=per).map(|k| s.point_at(k as f64 / per as f64)).collect())
            .collect();
        let boxes: Vec<Aabb> = polylines.iter().map(|p| Aabb::from_points(p)).collect();
        for i in 0..n {
            for j in i..n {
                if !boxes[i].overlaps(&boxes[j]) || (i == j && monotone_along_chord(&self.spans[i].bezier())) {
                    continue;
                }
                let adjacent_next = j == i + 1 || (i == 0 && j == n - 1);
                for a in 0..per {
                    for b in 0..per {
                        if i == j && b <= a + 1 {
                            continue;
                        }
                        // shared corner between consecutive spans
                        if adjacent_next && j == i + 1 && a == per - 1 && b == 0 {
                            continue;
                        }
                        if adjacent_next && i == 0 && j == n - 1 && a == 0 && b == per - 1 {
                            continue;
                        }
                        if n == 2 && ((a == per - 1 && b == 0) || (a == 0 && b == per - 1)) {
                            continue;
                        }
                        let (p, q) = (polylines[i][a], polylines[i][a + 1]);
                        let (r, s) = (polylines[j][b], polylines[j][b + 1]);
                        if segments_cross(p, q, r, s) {
                            return Err(GeometryError::SelfIntersectingPolygon(i, j));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Closest point on span `i` to `p` (sampling followed by Gauss–Newton).
    pub fn closest_on_span(&self, i: usize, p: Point2) -> BoundaryHit {
        let (u, point) = closest_on_span(&self.spans[i], p);
        BoundaryHit {
            span: i,
            u,
            point,
            dist: point.dist(p),
        }
    }

    /// Closest boundary point over all spans.
    pub fn closest_boundary(&self, p: Point2) -> BoundaryHit {
        let mut best: Option<BoundaryHit> = None;
        for i in 0..self.spans.len() {
            let h = self.closest_on_span(i, p);
            if best.is_none_or(|b| h.dist < b.dist) {
                best = Some(h);
            }
        }
        best.expect("polygon has spans")
    }

    /// Spans within `tol` of `p`, if any.
    pub fn boundary_hit(&self, p: Point2, tol: f64) -> Option<BoundaryHit> {
        let mut best: Option<BoundaryHit> = None;
        for (i, s) in self.spans.iter().enumerate() {
            if !s.bbox().expanded(tol).contains(p) {
                continue;
            }
            let h = self.closest_on_span(i, p);
            if h.dist <= tol && best.is_none_or(|b| h.dist < b.dist) {
                best = Some(h);
            }
        }
        best
    }

    /// Crossing-number point location with a ray-angle fallback for
    /// tangential or vertex-grazing rays.
    pub fn locate(&self, p: Point2) -> Location {
        if !self.bbox().expanded(SNAP_TOL).contains(p) {
            return Location::Outside;
        }
        if self.boundary_hit(p, SNAP_TOL).is_some() {
            return Location::Boundary;
        }
        'angles: for &angle in &RAY_ANGLES {
            let (s, c) = angle.sin_cos();
            let dir = Point2::new(c, s);
            let nrm = Point2::new(-s, c);
            let mut count = 0usize;
            for span in &self.spans {
                let ctrl = span.bezier();
                let g: Vec<f64> = ctrl.iter().map(|q| nrm.dot(*q - p)).collect();
                if g.iter().all(|&v| v > 0.0) || g.iter().all(|&v| v < 0.0) {
                    continue;
                }
                // all of the span behind the ray origin
                if ctrl.iter().all(|q| dir.dot(*q - p) < 0.0) {
                    continue;
                }
                let Ok(roots) = bernstein_roots(&g) else {
                    continue 'angles;
                };
                for u in roots {
                    if !(1e-9..=1.0 - 1e-9).contains(&u) {
                        continue 'angles;
                    }
                    let tan = span.tangent_at(u);
                    if nrm.dot(tan).abs() <= 1e-9 * tan.norm() {
                        continue 'angles;
                    }
                    if dir.dot(span.point_at(u) - p) > 0.0 {
                        count += 1;
                    }
                }
            }
            return if count % 2 == 1 { Location::Inside } else { Location::Outside };
        }
        if self.winding_number_sampled(p, 256) != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// Winding number of `p` with respect to a dense polygonal approximation.
    pub fn winding_number_sampled(&self, p: Point2, per_span: usize) -> i32 {
        let pts = self.sample_boundary(per_span);
        winding_number(&pts, p)
    }

    /// `per_span` points per span (start included, end excluded).
    pub fn sample_boundary(&self, per_span: usize) -> Vec<Point2> {
        let mut out = Vec::with_capacity(per_span * self.spans.len());
        for s in &self.spans {
            for k in 0..per_span {
                out.push(s.point_at(k as f64 / per_span as f64));
            }
        }
        out
    }

    /// A point strictly inside the polygon, preferring the average of the
    /// span midpoints.
    pub fn interior_point(&self) -> Option<Point2> {
        let n = self.spans.len() as f64;
        let avg = self.spans.iter().fold(Point2::default(), |a, s| a + s.point_at(0.5)) * (1.0 / n);
        if self.locate(avg) == Location::Inside {
            return Some(avg);
        }
        let b = self.bbox();
        for level in 1..8 {
            let m = 1 << level;
            for i in 0..m {
                for j in 0..m {
                    let q = Point2::new(
                        b.min.x + b.width() * (i as f64 + 0.5) / m as f64,
                        b.min.y + b.height() * (j as f64 + 0.5) / m as f64,
                    );
                    if self.locate(q) == Location::Inside {
                        return Some(q);
                    }
                }
            }
        }
        None
    }

    pub fn reversed(&self) -> CurvedPolygon {
        CurvedPolygon {
            spans: self.spans.iter().rev().map(|s| s.reverse()).collect(),
        }
    }
}

pub(crate) fn closest_on_span(span: &CurveSpan, p: Point2) -> (f64, Point2) {
    let n = 8 * span.degree() + 1;
    let mut best_u = 0.0;
    let mut best_d = f64::INFINITY;
    for k in 0..=n {
        let u = k as f64 / n as f64;
        let d = span.point_at(u).dist(p);
        if d < best_d {
            best_d = d;
            best_u = u;
        }
    }
    let mut u = best_u;
    for _ in 0..30 {
        let t = span.param(u);
        let (c, dc) = span.curve.eval_with_deriv(t);
        let du_dt = span.t_end - span.t_start;
        let tan = dc * du_dt;
        let tt = tan.dot(tan);
        if tt == 0.0 {
            break;
        }
        let step = (c - p).dot(tan) / tt;
        let nu = (u - step).clamp(0.0, 1.0);
        let done = (nu - u).abs() < 1e-15;
        u = nu;
        if done {
            break;
        }
    }
    let q = span.point_at(u);
    if q.dist(p) <= best_d {
        (u, q)
    } else {
        (best_u, span.point_at(best_u))
    }
}

pub(crate) fn winding_number(pts: &[Point2], p: Point2) -> i32 {
    let n = pts.len();
    let mut w = 0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && (b - a).cross(p - a) > 0.0 {
                w += 1;
            }
        } else if b.y <= p.y && (b - a).cross(p - a) < 0.0 {
            w -= 1;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::geometry::ParamCurve;

    pub(crate) fn straight_polygon(pts: &[(f64, f64)]) -> CurvedPolygon {
        let n = pts.len();
        let spans = (0..n)
            .map(|i| {
                let a = Point2::from(pts[i]);
                let b = Point2::from(pts[(i + 1) % n]);
                CurveSpan::full(Arc::new(ParamCurve::line(a, b)), false)
            })
            .collect();
        CurvedPolygon::new(spans).unwrap()
    }

    #[test]
    fn unit_square_locations() {
        let sq = straight_polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(sq.locate(Point2::new(0.5, 0.5)), Location::Inside);
        assert_eq!(sq.locate(Point2::new(2.0, 2.0)), Location::Outside);
        assert_eq!(sq.locate(Point2::new(1.0, 0.3)), Location::Boundary);
        assert_eq!(sq.locate(Point2::new(0.0, 0.0)), Location::Boundary);
        // horizontal ray through a vertex
        assert_eq!(sq.locate(Point2::new(-0.5, 1.0 - 1e-3)), Location::Outside);
        assert_eq!(sq.locate(Point2::new(0.5, 1.0 - 1e-3)), Location::Inside);
    }

    #[test]
    fn clockwise_is_rejected() {
        let n = 4;
        let pts = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)];
        let spans = (0..n)
            .map(|i| {
                CurveSpan::full(
                    Arc::new(ParamCurve::line(Point2::from(pts[i]), Point2::from(pts[(i + 1) % n]))),
                    false,
                )
            })
            .collect();
        assert!(matches!(CurvedPolygon::new(spans), Err(GeometryError::NotCounterClockwise(_))));
    }

    #[test]
    fn self_intersecting_bowtie_fails_validation() {
        let n = 4;
        let pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)];
        let spans: Vec<_> = (0..n)
            .map(|i| {
                CurveSpan::full(
                    Arc::new(ParamCurve::line(Point2::from(pts[i]), Point2::from(pts[(i + 1) % n]))),
                    false,
                )
            })
            .collect();
        let p = CurvedPolygon::new_unchecked(spans);
        assert!(p.validate().is_err());
    }
}
