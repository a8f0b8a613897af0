use std::sync::Arc;

use super::tri::{make_tri_rule, CurvedTriangle, TriRule};
use super::{green_area, IntegrateError};
use crate::clipping::span_roots;
use crate::geometry::{CurveSpan, CurvedPolygon, Location, ParamCurve, Point2, SNAP_TOL};

const MAX_ROUNDS: usize = 8;

/// Points at which a candidate triangle's Jacobian must be positive.
fn jacobian_rule() -> &'static TriRule {
    make_tri_rule(20).expect("tabulated")
}

fn valid_jacobian(t: &CurvedTriangle) -> bool {
    if t.min_jacobian(jacobian_rule()) <= 0.0 {
        return false;
    }
    // edge samples
    (1..8).all(|k| {
        let s = k as f64 / 8.0;
        t.map(s, 0.0).1 > 0.0 && t.map(1.0 - s, s).1 > 0.0 && t.map(0.0, s).1 > 0.0
    })
}

/// Splits a curved polygon into curved triangles by ear clipping, falling
/// back to a fan about the centroid. Interior edges are straight chords;
/// boundary edges keep the original curves.
pub fn triangulate(poly: &CurvedPolygon) -> Result<Vec<CurvedTriangle>, IntegrateError> {
    if poly.len() == 3 {
        let t = CurvedTriangle::new([poly.spans()[0].clone(), poly.spans()[1].clone(), poly.spans()[2].clone()]);
        if valid_jacobian(&t) {
            return Ok(vec![t]);
        }
    }
    let mut ring: Vec<CurveSpan> = Vec::new();
    for s in poly.spans() {
        if s.is_straight() {
            ring.push(s.clone());
        } else {
            ring.push(s.sub(0.0, 0.5));
            ring.push(s.sub(0.5, 1.0));
        }
    }
    ear_clip(ring.clone()).or_else(|| fan(ring)).ok_or(IntegrateError::Triangulation {
        rounds: MAX_ROUNDS,
        spans: poly.len(),
        area: poly.signed_area(),
    })
}

fn bisect_curved(ring: Vec<CurveSpan>) -> Vec<CurveSpan> {
    ring.into_iter()
        .flat_map(|s| {
            if s.is_straight() {
                vec![s]
            } else {
                vec![s.sub(0.0, 0.5), s.sub(0.5, 1.0)]
            }
        })
        .collect()
}

fn chord(a: Point2, b: Point2) -> CurveSpan {
    CurveSpan::full(Arc::new(ParamCurve::line(a, b)), false)
}

fn quality(v: [Point2; 3], area: f64) -> f64 {
    let l2 = (v[1] - v[0]).dot(v[1] - v[0]) + (v[2] - v[1]).dot(v[2] - v[1]) + (v[0] - v[2]).dot(v[0] - v[2]);
    4.0 * 3f64.sqrt() * area / l2
}

/// True if the chord `c` meets edge `e` anywhere other than at the allowed
/// shared endpoints.
fn chord_hits(c: &CurveSpan, e: &CurveSpan, allow: &[Point2]) -> bool {
    let (a, b) = (c.start(), c.end());
    let d = b - a;
    let len = d.norm();
    let ctrl = e.bezier();
    let tol = 1e3 * SNAP_TOL;
    // the hull of the edge lies strictly on one side of the chord line or
    // beyond one of its ends
    let side: Vec<f64> = ctrl.iter().map(|q| d.cross(*q - a) / len).collect();
    if side.iter().all(|&s| s > tol) || side.iter().all(|&s| s < -tol) {
        return false;
    }
    let along: Vec<f64> = ctrl.iter().map(|q| d.dot(*q - a) / len).collect();
    if along.iter().all(|&s| s < -tol) || along.iter().all(|&s| s > len + tol) {
        return false;
    }
    span_roots(c, e).iter().any(|r| !allow.iter().any(|p| p.dist(r.point) <= tol))
}

fn ear_clip(mut ring: Vec<CurveSpan>) -> Option<Vec<CurvedTriangle>> {
    let mut out = Vec::new();
    let total = CurvedPolygon::new_unchecked(ring.clone()).signed_area();
    let min_area = 1e-14 * total.abs();
    let mut rounds = 0;
    loop {
        if ring.len() == 3 {
            if let Some(t) = final_triangle(&ring, min_area) {
                out.push(t);
                return Some(out);
            }
        } else if let Some((i, tri)) = best_ear(&ring, min_area) {
            out.push(tri);
            ring = clip_ear(ring, i);
            continue;
        }
        // stuck: bisect the curved edges of what is left and carry on
        if rounds == MAX_ROUNDS || ring.iter().all(|s| s.is_straight()) {
            return None;
        }
        rounds += 1;
        ring = bisect_curved(ring);
    }
}

/// Triangles joining every span to the centroid of the sampled boundary.
/// Ear clipping can strand a lens between a chord and a nearly straight
/// curve, which no triangle on boundary vertices alone can cover.
fn fan(mut ring: Vec<CurveSpan>) -> Option<Vec<CurvedTriangle>> {
    let mut pts = Vec::new();
    for s in &ring {
        pts.extend((0..8).map(|k| s.point_at(k as f64 / 8.0)));
    }
    let (mut a, mut cx, mut cy) = (0.0, 0.0, 0.0);
    for (k, p) in pts.iter().enumerate() {
        let q = pts[(k + 1) % pts.len()];
        let w = p.cross(q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if !(a > 0.0) {
        return None;
    }
    let c = Point2::new(cx / (3.0 * a), cy / (3.0 * a));
    for _ in 0..=MAX_ROUNDS / 2 {
        let tris: Option<Vec<CurvedTriangle>> = ring
            .iter()
            .map(|s| {
                let t = CurvedTriangle::new([chord(c, s.start()), s.clone(), chord(s.end(), c)]);
                valid_jacobian(&t).then_some(t)
            })
            .collect();
        if tris.is_some() || ring.iter().all(|s| s.is_straight()) {
            return tris;
        }
        ring = bisect_curved(ring);
    }
    None
}

fn clip_ear(mut ring: Vec<CurveSpan>, i: usize) -> Vec<CurveSpan> {
    let m = ring.len();
    let prev = (i + m - 1) % m;
    let (a, c) = (ring[prev].start(), ring[i].end());
    ring[prev] = chord(a, c);
    ring.remove(i);
    ring
}

fn best_ear(ring: &[CurveSpan], min_area: f64) -> Option<(usize, CurvedTriangle)> {
    let m = ring.len();
    let current = CurvedPolygon::new_unchecked(ring.to_vec());
    let mut cands: Vec<(f64, usize, CurvedTriangle)> = Vec::new();
    for i in 0..m {
        let prev = &ring[(i + m - 1) % m];
        let cur = &ring[i];
        let (a, c) = (prev.start(), cur.end());
        if a.dist(c) <= SNAP_TOL {
            continue;
        }
        let tri = CurvedTriangle::new([prev.clone(), cur.clone(), chord(c, a)]);
        let area = green_area(&tri.polygon());
        if area <= min_area {
            continue;
        }
        cands.push((quality(tri.vertices(), area), i, tri));
    }
    cands.sort_by(|x, y| y.0.total_cmp(&x.0));
    cands
        .into_iter()
        .find(|(_, i, tri)| {
            // with four spans left the remainder is the last triangle, so
            // pick the diagonal that leaves a valid one (a vertex where two
            // pieces of one smooth curve meet cannot be a triangle corner)
            ear_is_valid(ring, &current, *i, tri)
                && (m != 4 || final_triangle(&clip_ear(ring.to_vec(), *i), min_area).is_some())
        })
        .map(|(_, i, tri)| (i, tri))
}

fn final_triangle(ring: &[CurveSpan], min_area: f64) -> Option<CurvedTriangle> {
    let last = CurvedTriangle::new([ring[0].clone(), ring[1].clone(), ring[2].clone()]);
    if green_area(&last.polygon()) <= min_area || !valid_jacobian(&last) {
        return None;
    }
    let (c0, c1, c2) = (&ring[0], &ring[1], &ring[2]);
    for (x, y, shared) in [(c0, c1, c1.start()), (c1, c2, c2.start()), (c2, c0, c0.start())] {
        if (!x.is_straight() || !y.is_straight()) && chord_hits(x, y, &[shared]) {
            return None;
        }
    }
    Some(last)
}

fn ear_is_valid(ring: &[CurveSpan], current: &CurvedPolygon, i: usize, tri: &CurvedTriangle) -> bool {
    let m = ring.len();
    let ip = (i + m - 1) % m;
    let inext = (i + 1) % m;
    let a = ring[ip].start();
    let b = ring[i].start();
    let c = ring[i].end();
    let ch = &tri.edges[2];
    // chord midpoint must lie inside the remaining polygon
    if current.locate(ch.point_at(0.5)) != Location::Inside {
        return false;
    }
    let shape = tri.polygon();
    let cb = ch.bbox().expanded(SNAP_TOL);
    for (j, e) in ring.iter().enumerate() {
        if j == ip || j == i {
            if !e.is_straight() && chord_hits(ch, e, &[a, c]) {
                return false;
            }
            continue;
        }
        // no other vertex or boundary sample inside the ear
        for u in [0.0, 0.5] {
            let p = e.point_at(u);
            if j == inext && u == 0.0 {
                continue;
            }
            if p.dist(a) <= SNAP_TOL || p.dist(b) <= SNAP_TOL || p.dist(c) <= SNAP_TOL {
                return false;
            }
            if shape.locate(p) != Location::Outside {
                return false;
            }
        }
        if e.bbox().overlaps(&cb) && chord_hits(ch, e, &[a, c]) {
            return false;
        }
    }
    valid_jacobian(tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrate::tests::straight_polygon;
    use crate::integrate::{green_integral, tri_integral, Poly2};

    #[test]
    fn square_gives_two_halves() {
        let sq = straight_polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let t = triangulate(&sq).unwrap();
        assert_eq!(t.len(), 2);
        for tri in &t {
            assert!((green_area(&tri.polygon()) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn concave_polygon_tiles() {
        let p = straight_polygon(&[(0.0, 0.0), (3.0, 0.0), (3.0, 3.0), (2.0, 3.0), (2.0, 1.0), (1.0, 1.0), (1.0, 3.0), (0.0, 3.0)]);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 6);
        let s: f64 = t.iter().map(|x| green_area(&x.polygon())).sum();
        assert!((s - 7.0).abs() < 1e-13);
    }

    #[test]
    fn curved_triangle_returned_whole() {
        let c = Arc::new(ParamCurve::new(vec![(1.0, 0.0).into(), (0.6, 0.6).into(), (0.0, 1.0).into()]).unwrap());
        let p = CurvedPolygon::new(vec![
            chord((0.0, 0.0).into(), (1.0, 0.0).into()),
            CurveSpan::full(c, false),
            chord((0.0, 1.0).into(), (0.0, 0.0).into()),
        ])
        .unwrap();
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn deep_bulge_needs_refinement_and_integrates() {
        // a thin sliver bounded by a strongly curved edge
        let c = Arc::new(ParamCurve::new(vec![(1.0, 0.0).into(), (0.5, 0.45).into(), (0.0, 0.0).into()]).unwrap());
        let p = CurvedPolygon::new(vec![
            chord((0.0, 0.0).into(), (0.5, -0.05).into()),
            chord((0.5, -0.05).into(), (1.0, 0.0).into()),
            CurveSpan::full(c, false),
        ])
        .unwrap();
        let t = triangulate(&p).unwrap();
        let f = Poly2::from_world(Point2::new(0.5, 0.2), 0.5, 4, &[((2, 2), 1.0), ((0, 1), 1.0)]);
        let a: f64 = t
            .iter()
            .map(|tri| tri_integral(&f, tri, make_tri_rule(tri.rule_degree(4)).unwrap()).unwrap())
            .sum();
        let b = green_integral(&f, &p);
        assert!((a - b).abs() < 1e-13 * b.abs().max(1.0), "{a} {b}");
    }

    #[test]
    fn clipped_sliver_with_nearly_straight_edges() {
        // an overlap piece from a rotated disk mesh; greedy ears strand a lens
        let b = [
            [(0.5581233959730888, -0.7565824153997703), (0.5736665047828694, -0.7494680985978948), (0.58920961359265, -0.7418173419043264)],
            [(0.58920961359265, -0.7418173419043264), (0.5926081297575503, -0.734910992924972), (0.5959102811428921, -0.7280046439456176)],
            [(0.5959102811428921, -0.7280046439456175), (0.59502596349978, -0.7272495265592), (0.5941419558502821, -0.7264940991791685)],
            [(0.5941419558502821, -0.7264940991791685), (0.5762988715281518, -0.7417390506892598), (0.5577962877769428, -0.7563245027702721)],
            [(0.5577962877769428, -0.7563245027702721), (0.55795983440014, -0.7564534665598969), (0.5581233959730887, -0.7565824153997701)],
        ];
        let spans: Vec<CurveSpan> = b
            .iter()
            .map(|c| {
                let p: Vec<Point2> = c.iter().map(|&q| q.into()).collect();
                let mid = (p[0] + p[1] * 2.0 + p[2]) * 0.25;
                CurveSpan::full(Arc::new(ParamCurve::new(vec![p[0], mid, p[2]]).unwrap()), false)
            })
            .collect();
        let poly = CurvedPolygon::new_unchecked(spans);
        let t = triangulate(&poly).unwrap();
        let s: f64 = t.iter().map(|x| green_area(&x.polygon())).sum();
        assert!((s - green_area(&poly)).abs() < 1e-15, "{s}");
    }
}
