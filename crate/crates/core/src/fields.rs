//! Analytic test fields with closed-form or quadrature x-antiderivatives, so
//! that exact cell averages reduce to boundary integrals.

use std::f64::consts::PI;

use crate::geometry::{Aabb, Point2};
use crate::integrate::{GaussRule1D, Poly2};

/// Base level added to the non-negative test fields.
pub const FLOOR: f64 = 1e-10;

/// A curve across which a field's x-antiderivative is not smooth.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LevelSet {
    Circle(Point2, f64),
    Horizontal(f64),
    Vertical(f64),
}

impl LevelSet {
    pub fn eval(&self, p: Point2) -> f64 {
        match *self {
            Self::Circle(c, r) => (p.x - c.x).powi(2) + (p.y - c.y).powi(2) - r * r,
            Self::Horizontal(y) => p.y - y,
            Self::Vertical(x) => p.x - x,
        }
    }

    /// True if the zero set passes through the box.
    pub fn meets(&self, b: &Aabb) -> bool {
        match *self {
            Self::Circle(c, r) => {
                let near = Point2::new(c.x.clamp(b.min.x, b.max.x), c.y.clamp(b.min.y, b.max.y));
                let far = Point2::new(
                    if c.x - b.min.x > b.max.x - c.x { b.min.x } else { b.max.x },
                    if c.y - b.min.y > b.max.y - c.y { b.min.y } else { b.max.y },
                );
                c.dist(near) <= r && c.dist(far) >= r
            }
            Self::Horizontal(y) => b.min.y <= y && y <= b.max.y,
            Self::Vertical(x) => b.min.x <= x && x <= b.max.x,
        }
    }
}

pub trait AnalyticField: Sync {
    fn value(&self, p: Point2) -> f64;
    /// Some `F` with `∂F/∂x = value`.
    fn x_antiderivative(&self, p: Point2) -> f64;
    fn level_sets(&self) -> Vec<LevelSet> {
        Vec::new()
    }
}

/// `sin(πx) + sin(πy)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SinSum;

impl AnalyticField for SinSum {
    fn value(&self, p: Point2) -> f64 {
        (PI * p.x).sin() + (PI * p.y).sin()
    }

    fn x_antiderivative(&self, p: Point2) -> f64 {
        -(PI * p.x).cos() / PI + p.x * (PI * p.y).sin()
    }
}

/// A polynomial field.
#[derive(Clone, Debug)]
pub struct PolyField {
    f: Poly2,
    fx: Poly2,
}

impl PolyField {
    pub fn new(f: Poly2) -> Self {
        let k = f.degree();
        let mut fx = Poly2::zero(f.center, f.scale, k + 1);
        for (a, b) in crate::integrate::monomials(k) {
            let c = f.coeff(a, b);
            if c != 0.0 {
                fx.coeffs_mut()[crate::integrate::mono_index(a + 1, b)] = c * f.scale / (a + 1) as f64;
            }
        }
        Self { f, fx }
    }

    pub fn linear(c: f64, cx: f64, cy: f64) -> Self {
        Self::new(Poly2::from_world(Point2::default(), 1.0, 1, &[((0, 0), c), ((1, 0), cx), ((0, 1), cy)]))
    }
}

impl AnalyticField for PolyField {
    fn value(&self, p: Point2) -> f64 {
        self.f.eval(p)
    }

    fn x_antiderivative(&self, p: Point2) -> f64 {
        self.fx.eval(p)
    }
}

/// Radial profiles `g(r)`, `r = |p − c| / R`, supported in `r ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Profile {
    /// `1 − r`.
    Cone,
    /// `¼ (1 + cos πr)`.
    Hump,
    /// `1`.
    Cylinder,
    /// `1`, except `0` below the center within `half_width` of the vertical
    /// through it.
    SlottedCylinder { half_width: f64 },
}

/// One compactly supported bump.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bump {
    pub center: Point2,
    pub radius: f64,
    pub height: f64,
    pub profile: Profile,
}

impl Bump {
    pub fn value(&self, p: Point2) -> f64 {
        self.height * self.shape(p)
    }

    fn shape(&self, p: Point2) -> f64 {
        let d = p - self.center;
        let r = d.norm() / self.radius;
        match self.profile {
            Profile::Cone if r < 1.0 => 1.0 - r,
            Profile::Hump if r <= 1.0 => 0.25 * (1.0 + (PI * r).cos()),
            Profile::Cylinder if r <= 1.0 => 1.0,
            Profile::SlottedCylinder { half_width } if r <= 1.0 => {
                if d.y < 0.0 && d.x.abs() < half_width {
                    0.0
                } else {
                    1.0
                }
            }
            _ => 0.0,
        }
    }

    /// `∫` of the bump along the horizontal line through `p`, from the left
    /// edge of the support to `p`.
    pub fn x_antiderivative(&self, p: Point2) -> f64 {
        self.height * self.shape_antiderivative(p)
    }

    fn shape_antiderivative(&self, p: Point2) -> f64 {
        let big_r = self.radius;
        let (x, y) = (p.x - self.center.x, p.y - self.center.y);
        if y.abs() >= big_r {
            return 0.0;
        }
        let w = (big_r * big_r - y * y).sqrt();
        let xc = x.clamp(-w, w);
        match self.profile {
            Profile::Cone => {
                // ∫ √(s² + y²) ds = ½ (s √(s² + y²) + y² asinh(s / |y|))
                let h = |s: f64| {
                    let rho = (s * s + y * y).sqrt();
                    let log = if y == 0.0 { 0.0 } else { y * y * (s / y.abs()).asinh() };
                    0.5 * (s * rho + log)
                };
                (xc + w) - (h(xc) - h(-w)) / big_r
            }
            Profile::Hump => {
                let rule = GaussRule1D::new(24);
                rule.integrate(-w, xc, |s| 0.25 * (1.0 + (PI * (s * s + y * y).sqrt() / big_r).cos()))
            }
            Profile::Cylinder => xc + w,
            Profile::SlottedCylinder { half_width } => {
                let mut v = xc + w;
                if y < 0.0 {
                    let m = half_width.min(w);
                    v -= x.clamp(-m, m) + m;
                }
                v
            }
        }
    }

    pub fn level_sets(&self) -> Vec<LevelSet> {
        let c = self.center;
        let r = self.radius;
        let mut v = vec![LevelSet::Circle(c, r), LevelSet::Horizontal(c.y + r), LevelSet::Horizontal(c.y - r)];
        match self.profile {
            Profile::Cone => v.push(LevelSet::Horizontal(c.y)),
            Profile::SlottedCylinder { half_width } => {
                v.push(LevelSet::Horizontal(c.y));
                v.push(LevelSet::Vertical(c.x - half_width));
                v.push(LevelSet::Vertical(c.x + half_width));
                if half_width < r {
                    v.push(LevelSet::Horizontal(c.y - (r * r - half_width * half_width).sqrt()));
                }
            }
            _ => {}
        }
        v
    }
}

/// `base + Σ bumps`.
#[derive(Clone, Debug, PartialEq)]
pub struct BumpField {
    pub bumps: Vec<Bump>,
    pub base: f64,
}

impl BumpField {
    /// Cone of radius ¼ about `(½, ½)` on the unit square.
    pub fn square_cone() -> Self {
        Self {
            bumps: vec![Bump { center: Point2::new(0.5, 0.5), radius: 0.25, height: 1.0, profile: Profile::Cone }],
            base: FLOOR,
        }
    }

    /// Cylinder of radius ¼ about `(½, ½)` on the unit square: `1` inside,
    /// the floor outside.
    pub fn square_cylinder() -> Self {
        Self {
            bumps: vec![Bump { center: Point2::new(0.5, 0.5), radius: 0.25, height: 1.0 - FLOOR, profile: Profile::Cylinder }],
            base: FLOOR,
        }
    }

    /// Cone, hump and slotted cylinder of radius 0.35 on the unit disk.
    pub fn solid_body() -> Self {
        let r = 0.35;
        let s3 = 3f64.sqrt() / 4.0;
        Self {
            bumps: vec![
                Bump { center: Point2::new(-0.25, s3), radius: r, height: 1.0, profile: Profile::Cone },
                Bump { center: Point2::new(-0.25, -s3), radius: r, height: 1.0, profile: Profile::Hump },
                Bump {
                    center: Point2::new(0.5, 0.0),
                    radius: r,
                    height: 1.0,
                    profile: Profile::SlottedCylinder { half_width: r / 4.0 },
                },
            ],
            base: FLOOR,
        }
    }
}

impl AnalyticField for BumpField {
    fn value(&self, p: Point2) -> f64 {
        self.base + self.bumps.iter().map(|b| b.value(p)).sum::<f64>()
    }

    fn x_antiderivative(&self, p: Point2) -> f64 {
        self.base * p.x + self.bumps.iter().map(|b| b.x_antiderivative(p)).sum::<f64>()
    }

    fn level_sets(&self) -> Vec<LevelSet> {
        self.bumps.iter().flat_map(|b| b.level_sets()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_antiderivative(f: &dyn AnalyticField, p: Point2) {
        // Gauss over [x0, x] in pieces split at the support boundary
        let x0 = p.x - 1.5;
        let rule = GaussRule1D::new(20);
        let n = 2000;
        let h = (p.x - x0) / n as f64;
        let num: f64 = (0..n)
            .map(|k| {
                let a = x0 + h * k as f64;
                rule.integrate(a, a + h, |x| f.value(Point2::new(x, p.y)))
            })
            .sum();
        let exact = f.x_antiderivative(p) - f.x_antiderivative(Point2::new(x0, p.y));
        assert!((num - exact).abs() < 2e-6, "{p:?} {num} {exact}");
    }

    #[test]
    fn bump_antiderivatives_match_quadrature() {
        let f = BumpField::solid_body();
        let smooth = BumpField { bumps: f.bumps[..2].to_vec(), base: FLOOR };
        for p in [(0.0, 0.7), (-0.1, 0.5), (0.0, -0.6), (-0.25, 3f64.sqrt() / 4.0), (0.3, -0.9)] {
            check_antiderivative(&smooth, Point2::from(p));
        }
        let c = BumpField::square_cone();
        for p in [(0.6, 0.5), (0.55, 0.4), (1.0, 0.7)] {
            check_antiderivative(&c, Point2::from(p));
        }
    }

    #[test]
    fn slotted_cylinder_chords() {
        let b = BumpField::solid_body().bumps[2];
        let (r, m) = (0.35f64, 0.35 / 4.0);
        let w = (r * r - 0.09f64).sqrt();
        // right of the disk, below the center: chord minus the slot
        assert!((b.x_antiderivative(Point2::new(0.9, -0.3)) - (2.0 * w - 2.0 * m)).abs() < 1e-15);
        // above the center there is no slot
        assert!((b.x_antiderivative(Point2::new(0.9, 0.3)) - 2.0 * w).abs() < 1e-15);
        // inside the slot
        assert!((b.x_antiderivative(Point2::new(0.5, -0.3)) - (w - m)).abs() < 1e-15);
        assert_eq!(b.x_antiderivative(Point2::new(0.0, -0.3)), 0.0);
    }

    #[test]
    fn solid_body_values() {
        let f = BumpField::solid_body();
        let s3 = 3f64.sqrt() / 4.0;
        assert!((f.value(Point2::new(-0.25, s3)) - (1.0 + FLOOR)).abs() < 1e-15);
        assert!((f.value(Point2::new(-0.25, -s3)) - (0.5 + FLOOR)).abs() < 1e-15);
        assert_eq!(f.value(Point2::new(0.5, -0.1)), FLOOR);
        assert_eq!(f.value(Point2::new(0.5, 0.1)), 1.0 + FLOOR);
        assert_eq!(f.value(Point2::new(0.0, 0.0)), FLOOR);
    }

    #[test]
    fn poly_field_antiderivative() {
        let p = Poly2::from_world(Point2::new(0.3, 0.2), 0.5, 2, &[((2, 0), 1.0), ((1, 1), -2.0), ((0, 0), 3.0)]);
        let f = PolyField::new(p);
        let q = Point2::new(0.9, -0.4);
        let x = q.x;
        let want = x * x * x / 3.0 - x * x * q.y + 3.0 * x;
        let got = f.x_antiderivative(q) - f.x_antiderivative(Point2::new(0.0, q.y));
        assert!((got - want).abs() < 1e-14);
    }
}
