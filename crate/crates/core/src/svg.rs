//! Minimal SVG output for curved polygons. Curves are drawn as polylines.

use std::fmt::Write as _;

use crate::geometry::{Aabb, CurvedPolygon, Point2};

/// Polyline samples per curve span.
pub const SAMPLES_PER_SPAN: usize = 64;

const WIDTH: f64 = 600.0;
const MARGIN: f64 = 20.0;

#[derive(Clone, Debug)]
pub struct Layer {
    pub polygons: Vec<CurvedPolygon>,
    pub stroke: String,
    pub fill: String,
}

impl Layer {
    pub fn new(polygons: Vec<CurvedPolygon>, stroke: &str, fill: &str) -> Self {
        Self { polygons, stroke: stroke.into(), fill: fill.into() }
    }
}

pub struct Scene {
    pub layers: Vec<Layer>,
    pub markers: Vec<(Point2, String)>,
}

impl Scene {
    pub fn new() -> Self {
        Self { layers: Vec::new(), markers: Vec::new() }
    }

    fn bbox(&self) -> Aabb {
        let mut b = Aabb::empty();
        for l in &self.layers {
            for p in &l.polygons {
                for s in p.spans() {
                    b = b.union(&s.bbox());
                }
            }
        }
        for (p, _) in &self.markers {
            b.include(*p);
        }
        b
    }

    pub fn render(&self) -> String {
        let b = self.bbox();
        let span = b.width().max(b.height()).max(f64::MIN_POSITIVE);
        let k = (WIDTH - 2.0 * MARGIN) / span;
        let h = b.height() * k + 2.0 * MARGIN;
        let w = b.width() * k + 2.0 * MARGIN;
        // y flipped so the picture has the usual orientation
        let map = |p: Point2| ((p.x - b.min.x) * k + MARGIN, (b.max.y - p.y) * k + MARGIN);
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#);
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        for l in &self.layers {
            for p in &l.polygons {
                let mut d = String::new();
                for (j, sp) in p.spans().iter().enumerate() {
                    for i in 0..=SAMPLES_PER_SPAN {
                        if j > 0 && i == 0 {
                            continue;
                        }
                        let (x, y) = map(sp.point_at(i as f64 / SAMPLES_PER_SPAN as f64));
                        let _ = write!(d, "{}{x:.3},{y:.3} ", if d.is_empty() { "M" } else { "L" });
                    }
                }
                d.push('Z');
                let _ = writeln!(s, r#"<path d="{d}" stroke="{}" fill="{}" stroke-width="1.5"/>"#, l.stroke, l.fill);
            }
        }
        for (p, color) in &self.markers {
            let (x, y) = map(*p);
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{color}"/>"#);
        }
        s.push_str("</svg>\n");
        s
    }
}

impl Default for Scene {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;

    #[test]
    fn renders_one_path_per_polygon() {
        let mut sc = Scene::new();
        sc.layers.push(Layer::new(vec![demo::quad_p(2), demo::quad_q(2)], "black", "none"));
        sc.markers.push((Point2::new(0.0, 0.0), "blue".into()));
        let s = sc.render();
        assert_eq!(s.matches("<path").count(), 2);
        assert_eq!(s.matches("<circle").count(), 1);
        assert!(s.ends_with("</svg>\n"));
    }
}
