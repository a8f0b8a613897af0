use std::f64::consts::PI;
use std::str::FromStr;

use super::{CurvilinearMesh, EdgeRef, MeshError};
use crate::geometry::Point2;

/// Smooth deformations of the unit square used to build test meshes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformKind {
    Identity,
    /// `(x + a sin πx sin 2πy, y − a sin 2πx sin πy)`.
    TaylorGreenLike,
    /// Rotation about `(½, ½)` by `a (1 − 4r²)⁴` for `r < ½`.
    GreshoLike,
}

impl FromStr for DeformKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => Ok(Self::Identity),
            "taylor_green_like" => Ok(Self::TaylorGreenLike),
            "gresho_like" => Ok(Self::GreshoLike),
            _ => Err(format!("unknown mesh kind '{s}'")),
        }
    }
}

/// `sin(πx)` with exact zeros at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        0.0
    } else if r == 0.5 {
        1.0
    } else if r == 1.5 {
        -1.0
    } else {
        (PI * r).sin()
    }
}

impl DeformKind {
    pub fn map(self, a: f64, p: Point2) -> Point2 {
        match self {
            Self::Identity => p,
            Self::TaylorGreenLike => Point2::new(
                p.x + a * sin_pi(p.x) * sin_pi(2.0 * p.y),
                p.y - a * sin_pi(2.0 * p.x) * sin_pi(p.y),
            ),
            Self::GreshoLike => {
                let c = Point2::new(0.5, 0.5);
                let d = p - c;
                let r2 = d.dot(d);
                if r2 >= 0.25 {
                    p
                } else {
                    let g = (1.0 - 4.0 * r2).powi(4);
                    p.rotate(a * g, c)
                }
            }
        }
    }
}

/// `n × n` grid on `[x0, x1] × [y0, y1]` pushed through `map`; every edge is
/// the degree-`d` interpolant of the mapped straight grid edge.
pub fn structured_mesh(
    n: usize,
    d: usize,
    (x0, x1, y0, y1): (f64, f64, f64, f64),
    map: impl Fn(Point2) -> Point2,
) -> Result<CurvilinearMesh, MeshError> {
    if n < 2 {
        return Err(MeshError::Domain(format!("mesh size must be at least 2, got {n}")));
    }
    if d == 0 {
        return Err(MeshError::Domain("edge degree must be at least 1".into()));
    }
    let nf = n as f64;
    let xs = |i: f64| x0 + (x1 - x0) * i / nf;
    let ys = |j: f64| y0 + (y1 - y0) * j / nf;
    let vid = |i: usize, j: usize| j * (n + 1) + i;
    let mut points: Vec<Point2> = Vec::new();
    for j in 0..=n {
        for i in 0..=n {
            points.push(map(Point2::new(xs(i as f64), ys(j as f64))));
        }
    }
    let mut edges = Vec::with_capacity(2 * n * (n + 1));
    let mut add_edge = |points: &mut Vec<Point2>, a: usize, b: usize, at: &dyn Fn(f64) -> Point2| {
        let mut e = vec![a];
        for k in 1..d {
            points.push(map(at(k as f64 / d as f64)));
            e.push(points.len() - 1);
        }
        e.push(b);
        edges.push(e);
    };
    // horizontal edges h(i, j) = j n + i
    for j in 0..=n {
        for i in 0..n {
            let at = |t: f64| Point2::new(xs(i as f64 + t), ys(j as f64));
            add_edge(&mut points, vid(i, j), vid(i + 1, j), &at);
        }
    }
    // vertical edges v(i, j) = n (n + 1) + i n + j
    for i in 0..=n {
        for j in 0..n {
            let at = |t: f64| Point2::new(xs(i as f64), ys(j as f64 + t));
            add_edge(&mut points, vid(i, j), vid(i, j + 1), &at);
        }
    }
    let h = |i: usize, j: usize| j * n + i;
    let v = |i: usize, j: usize| n * (n + 1) + i * n + j;
    let mut cells = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            cells.push([EdgeRef::fwd(h(i, j)), EdgeRef::fwd(v(i + 1, j)), EdgeRef::rev(h(i, j + 1)), EdgeRef::rev(v(i, j))]);
        }
    }
    CurvilinearMesh::new(d, points, edges, cells)
}

/// Deformed `n × n` mesh of the unit square with degree-`d` edges.
pub fn gen_deformed_square_mesh(n: usize, kind: DeformKind, amplitude: f64, d: usize) -> Result<CurvilinearMesh, MeshError> {
    if !(amplitude.is_finite() && amplitude >= 0.0) {
        return Err(MeshError::Domain(format!("amplitude must be finite and non-negative, got {amplitude}")));
    }
    structured_mesh(n, d, (0.0, 1.0, 0.0, 1.0), |p| kind.map(amplitude, p))
}

/// Unit-disk mesh: the `n × n` grid on `[-1, 1]²` mapped by
/// `(x √(1 − y²/2), y √(1 − x²/2))` after warping each coordinate by
/// `s → √2 sin(πs/4)`. The warp spaces the boundary nodes uniformly in
/// angle, so for even `n` a rotation by `π/4` maps the discrete boundary
/// onto itself.
pub fn gen_disk_mesh(n: usize, d: usize) -> Result<CurvilinearMesh, MeshError> {
    structured_mesh(n, d, (-1.0, 1.0, -1.0, 1.0), |p| {
        let w = |s: f64| std::f64::consts::SQRT_2 * (std::f64::consts::FRAC_PI_4 * s).sin();
        let (x, y) = (w(p.x), w(p.y));
        Point2::new(x * (1.0 - 0.5 * y * y).sqrt(), y * (1.0 - 0.5 * x * x).sqrt())
    })
}

/// Rigid rotation of every point about `center`.
pub fn rotate_mesh(mesh: &CurvilinearMesh, angle: f64, center: Point2) -> Result<CurvilinearMesh, MeshError> {
    mesh.map_points(|p| p.rotate(angle, center))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -4..=4 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert_eq!(sin_pi(0.5), 1.0);
        assert!((sin_pi(0.25) - (PI / 4.0).sin()).abs() < 1e-16);
    }

    #[test]
    fn deformations_fix_the_square_boundary() {
        for kind in [DeformKind::TaylorGreenLike, DeformKind::GreshoLike] {
            for k in 0..=16 {
                let s = k as f64 / 16.0;
                for p in [Point2::new(s, 0.0), Point2::new(s, 1.0), Point2::new(0.0, s), Point2::new(1.0, s)] {
                    assert_eq!(kind.map(0.3, p), p);
                }
            }
        }
    }

    #[test]
    fn identity_and_taylor_green_areas() {
        let m = gen_deformed_square_mesh(4, DeformKind::Identity, 0.0, 2).unwrap();
        assert_eq!(m.num_cells(), 16);
        let tg = gen_deformed_square_mesh(32, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        assert!((tg.total_area() - 1.0).abs() < 1e-10);
        let g = gen_deformed_square_mesh(16, DeformKind::GreshoLike, 0.5, 3).unwrap();
        assert!((g.total_area() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn disk_boundary_on_circle_and_area() {
        let m = gen_disk_mesh(30, 2).unwrap();
        let rel = (m.total_area() - PI).abs() / PI;
        assert!(rel <= 1e-4, "{rel}");
        for r in m.boundary_edges() {
            for p in [m.curve(r.edge).start(), m.curve(r.edge).end()] {
                assert!((p.norm() - 1.0).abs() < 1e-14);
            }
        }
        let r = rotate_mesh(&m, PI / 4.0, Point2::default()).unwrap();
        assert!((r.total_area() - m.total_area()).abs() < 1e-12 * m.total_area());
    }

    #[test]
    fn full_turn_returns_points() {
        let m = gen_disk_mesh(6, 2).unwrap();
        let r = rotate_mesh(&m, 2.0 * PI, Point2::default()).unwrap();
        for (a, b) in m.points().iter().zip(r.points()) {
            assert!(a.dist(*b) < 1e-12);
        }
    }
}
