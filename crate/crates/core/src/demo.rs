//! The two curved quadrilaterals of the worked clipping example, with
//! quadratic edges or a cubic variant.

use std::sync::Arc;

use crate::geometry::{CurveSpan, CurvedPolygon, ParamCurve, Point2};

/// Corners `1..4` then edge midpoints `5..8` (edge `k → k+1`).
pub const QUAD_P: [(f64, f64); 8] = [
    (-1.5, -2.0),
    (1.0, -1.0),
    (1.0, 1.0),
    (-1.0, 1.0),
    (0.1, -0.1),
    (1.4, 0.0),
    (0.0, 0.9),
    (-0.8, 0.0),
];

pub const QUAD_Q: [(f64, f64); 8] = [
    (-1.0, -2.0),
    (1.0, -2.0),
    (1.0, 0.1),
    (-0.875, 0.2),
    (-0.7, -0.55),
    (1.4, -1.0),
    (0.0, -0.25),
    (-1.4, -1.0),
];

/// Intersection points of the quadratic example and the subject's
/// crossing type (`true` = entry), as published.
pub const REFERENCE_POINTS: [(f64, f64, bool); 8] = [
    (-1.05713663, -1.29598616, false),
    (-0.51624632, -0.58935822, true),
    (-0.13487741, -0.23429411, false),
    (0.57041875, -0.14211494, true),
    (-1.27097304, -1.62405364, true),
    (1.30701824, -0.48213526, false),
    (-0.78370680, 0.11026931, true),
    (-1.30299176, -1.55541394, false),
];

/// Published intersection area of the quadratic example.
pub const REFERENCE_AREA: f64 = 0.7234537303590143;

/// Amplitude of the normal offset that turns each quadratic edge into a
/// genuinely cubic one.
const CUBIC_BEND: f64 = 0.06;

/// Builds one of the example cells. With `degree == 3` each edge is the
/// cubic through the quadratic edge's points at `t = 0, 1/3, 2/3, 1`, with
/// the two interior nodes pushed off by `±CUBIC_BEND` along the chord normal.
pub fn quad(data: &[(f64, f64); 8], degree: usize) -> CurvedPolygon {
    assert!(degree == 2 || degree == 3, "example cells are quadratic or cubic");
    let spans = (0..4)
        .map(|k| {
            let a = Point2::from(data[k]);
            let b = Point2::from(data[(k + 1) % 4]);
            let m = Point2::from(data[4 + k]);
            let quadratic = ParamCurve::new(vec![a, m, b]).expect("finite");
            let curve = if degree == 2 {
                quadratic
            } else {
                let d = b - a;
                let n = Point2::new(-d.y, d.x).normalized() * CUBIC_BEND;
                ParamCurve::new(vec![a, quadratic.eval(1.0 / 3.0) + n, quadratic.eval(2.0 / 3.0) - n, b])
                    .expect("finite")
            };
            CurveSpan::full(Arc::new(curve), false)
        })
        .collect();
    CurvedPolygon::new(spans).expect("example cell is counterclockwise")
}

pub fn quad_p(degree: usize) -> CurvedPolygon {
    quad(&QUAD_P, degree)
}

pub fn quad_q(degree: usize) -> CurvedPolygon {
    quad(&QUAD_Q, degree)
}
