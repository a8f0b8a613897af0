//! Randomized property suites shared by the property and acceptance
//! targets. Each suite runs `CASES` cases through a proptest runner.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use curveremap::clipping::wa_clip;
use curveremap::demo;
use curveremap::geometry::{CurvedPolygon, Point2};
use curveremap::integrate::{green_area, green_integral, make_tri_rule, monomials, n_terms, tri_integral, triangulate, Poly2};
use curveremap::limiter::{positivity_limit, LimiterParams, LIMITER_EPS};
use curveremap::mesh::{gen_deformed_square_mesh, CurvilinearMesh, DeformKind};
use curveremap::reconstruct::{cell_frame, constrained_lsq_fit, ring, weno_reconstruct, WenoConfig};

pub const CASES: u32 = 64;

pub type Suite = fn() -> Result<(), String>;

/// Name and runner of every suite.
pub const SUITES: [(&str, Suite); 7] = [
    ("quadrature: triangle rules integrate monomials", tri_rules_integrate_monomials),
    ("quadrature: boundary integral equals triangle sum", green_matches_triangulation),
    ("reconstruction: candidate fits reproduce their degree", candidate_fits_reproduce_their_degree),
    ("reconstruction: every cell keeps its average", weno_conserves_every_cell),
    ("limiter: average kept and floor reached", limiter_keeps_average_and_floor),
    ("clipping: symmetric and bounded", clip_is_symmetric_and_bounded),
    ("clipping: pieces partition a target", clip_pieces_partition_a_target),
];

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Curved quad around `c` with half-width `r`: corner offsets `jit` and
/// edge bulges `bend`, both relative to `r`.
pub fn quad(c: (f64, f64), r: f64, jit: [f64; 8], bend: [f64; 4]) -> CurvedPolygon {
    let corners = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)];
    let mut data = [(0.0, 0.0); 8];
    for k in 0..4 {
        data[k] = (c.0 + r * (corners[k].0 + jit[2 * k]), c.1 + r * (corners[k].1 + jit[2 * k + 1]));
    }
    for k in 0..4 {
        let (a, b) = (data[k], data[(k + 1) % 4]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        // outward normal of a counterclockwise edge is (dy, -dx)
        data[4 + k] = ((a.0 + b.0) / 2.0 + bend[k] * dy, (a.1 + b.1) / 2.0 - bend[k] * dx);
    }
    demo::quad(&data, 2)
}

fn arb_quad(center: std::ops::Range<f64>, radius: std::ops::Range<f64>) -> impl Strategy<Value = CurvedPolygon> {
    (
        center.clone(),
        center,
        radius,
        prop::array::uniform8(-0.25..0.25f64),
        prop::array::uniform4(-0.15..0.15f64),
    )
        .prop_map(|(x, y, r, jit, bend)| quad((x, y), r, jit, bend))
}

fn arb_mesh() -> impl Strategy<Value = CurvilinearMesh> {
    (5usize..8, 0.0..0.06f64, any::<bool>()).prop_map(|(n, a, tg)| {
        let kind = if tg { DeformKind::TaylorGreenLike } else { DeformKind::GreshoLike };
        let a = if tg { a } else { 8.0 * a };
        gen_deformed_square_mesh(n, kind, a, 2).unwrap()
    })
}

fn averages_of(mesh: &CurvilinearMesh, f: &Poly2) -> Vec<f64> {
    (0..mesh.num_cells()).map(|i| green_integral(f, &mesh.cell_polygon(i)) / mesh.areas()[i]).collect()
}

/// A cell at least two rings away from the boundary.
fn interior_cell(mesh: &CurvilinearMesh, pick: usize) -> usize {
    let n = (mesh.num_cells() as f64).sqrt() as usize;
    let inner = n - 4;
    let (i, j) = (2 + pick % inner, 2 + (pick / inner) % inner);
    j * n + i
}

fn report(r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn tri_rules_integrate_monomials() -> Result<(), String> {
    report(runner().run(&(1usize..=20, 0usize..1000), |(strength, pick)| {
        let rule = make_tri_rule(strength).unwrap();
        let monos: Vec<(usize, usize)> = monomials(rule.degree).collect();
        let (a, b) = monos[pick % monos.len()];
        let got: f64 = rule.points.iter().zip(&rule.weights).map(|(&(x, y), w)| w * x.powi(a as i32) * y.powi(b as i32)).sum();
        let want = factorial(a) * factorial(b) / factorial(a + b + 2);
        prop_assert!((got - want).abs() <= 1e-13 * want, "x^{} y^{}: {} vs {}", a, b, got, want);
        prop_assert!(rule.weights.iter().all(|&w| w > 0.0));
        Ok(())
    }))
}

pub fn green_matches_triangulation() -> Result<(), String> {
    let s = (arb_quad(-1.0..1.0, 0.2..1.0), 0usize..=4, prop::collection::vec(-1.0..1.0f64, 15));
    report(runner().run(&s, |(poly, k, seed)| {
        let f = Poly2::from_coeffs(Point2::new(0.1, -0.2), 0.7, k, seed[..n_terms(k)].to_vec());
        let tris = triangulate(&poly).unwrap();
        let sum: f64 = tris.iter().map(|t| tri_integral(&f, t, make_tri_rule(t.rule_degree(k)).unwrap()).unwrap()).sum();
        let g = green_integral(&f, &poly);
        prop_assert!((sum - g).abs() <= 1e-11 * g.abs().max(green_area(&poly)), "{} vs {}", sum, g);
        Ok(())
    }))
}

pub fn candidate_fits_reproduce_their_degree() -> Result<(), String> {
    let s = (arb_mesh(), 0usize..100, 1usize..=2, prop::collection::vec(-2.0..2.0f64, 6));
    report(runner().run(&s, |(mesh, pick, k, c)| {
        let f = Poly2::from_coeffs(Point2::new(0.5, 0.5), 0.5, k, c[..n_terms(k)].to_vec());
        let avgs = averages_of(&mesh, &f);
        let i = interior_cell(&mesh, pick);
        let (q, deg) = constrained_lsq_fit(&mesh, &avgs, &ring(&mesh, i, k), k);
        prop_assert_eq!(deg, k);
        let (centre, h) = cell_frame(&mesh, i);
        for (dx, dy) in [(0.0, 0.0), (0.3, -0.2), (-0.4, 0.4)] {
            let p = Point2::new(centre.x + dx * h, centre.y + dy * h);
            prop_assert!((q.eval(p) - f.eval(p)).abs() <= 1e-10, "{} vs {}", q.eval(p), f.eval(p));
        }
        Ok(())
    }))
}

pub fn weno_conserves_every_cell() -> Result<(), String> {
    let s = (arb_mesh(), prop::sample::select(vec![3usize, 5]), prop::collection::vec(-1.0..1.0f64, 64));
    report(runner().run(&s, |(mesh, order, vals)| {
        let avgs: Vec<f64> = (0..mesh.num_cells()).map(|i| vals[i % vals.len()] + 0.01 * i as f64).collect();
        let r = weno_reconstruct(&mesh, &avgs, &WenoConfig::new(order).unwrap()).unwrap();
        for i in 0..mesh.num_cells() {
            let a = mesh.areas()[i];
            let m = green_integral(&r.polys[i], &mesh.cell_polygon(i));
            prop_assert!((m - avgs[i] * a).abs() <= 1e-12 * avgs[i].abs().max(1.0) * a, "cell {}: {} vs {}", i, m, avgs[i] * a);
            let w = &r.weights[i];
            prop_assert!(w.iter().all(|&x| x >= 0.0));
            prop_assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-15);
        }
        Ok(())
    }))
}

pub fn limiter_keeps_average_and_floor() -> Result<(), String> {
    let s = (
        1usize..=4,
        prop::collection::vec(-1.0..1.0f64, 15),
        0.0..3.0f64,
        prop::collection::vec((0.0..1.0f64, 0.0..1.0f64), 1..40),
    );
    let cell = quad((0.5, 0.5), 0.5, [0.0; 8], [0.0; 4]);
    let area = green_area(&cell);
    report(runner().run(&s, |(k, seed, lift, pts)| {
        let mut p = Poly2::from_coeffs(Point2::new(0.5, 0.5), 0.5, k, seed[..n_terms(k)].to_vec());
        // shift so the average sits somewhere in [ε, 3 + ε]
        let avg0 = green_integral(&p, &cell) / area;
        p.coeffs_mut()[0] += LIMITER_EPS + lift - avg0;
        let avg = green_integral(&p, &cell) / area;
        prop_assume!(avg >= LIMITER_EPS);
        let points: Vec<Point2> = pts.iter().map(|&(x, y)| Point2::new(x, y)).collect();
        let (q, theta) = positivity_limit(&p, avg, &points, LimiterParams::default()).unwrap();
        prop_assert!((0.0..=1.0).contains(&theta));
        let avg_q = green_integral(&q, &cell) / area;
        prop_assert!((avg_q - avg).abs() <= 1e-13 * avg.abs().max(1.0), "{} vs {}", avg_q, avg);
        for x in &points {
            prop_assert!(q.eval(*x) >= LIMITER_EPS - 1e-16);
        }
        // a compliant polynomial comes back unchanged
        let (again, t2) = positivity_limit(&q, avg, &points, LimiterParams::default()).unwrap();
        prop_assert_eq!(t2, 1.0);
        prop_assert_eq!(again, q);
        Ok(())
    }))
}

pub fn clip_is_symmetric_and_bounded() -> Result<(), String> {
    let s = (arb_quad(-0.3..0.3, 0.3..0.8), arb_quad(-0.3..0.3, 0.3..0.8));
    report(runner().run(&s, |(a, b)| {
        let ab = wa_clip(&a, &b).unwrap();
        let ba = wa_clip(&b, &a).unwrap();
        let (sa, sb) = (a.signed_area(), b.signed_area());
        prop_assert!((ab.area() - ba.area()).abs() <= 1e-12 * sa.min(sb), "{} vs {}", ab.area(), ba.area());
        prop_assert!(ab.area() >= 0.0 && ab.area() <= sa.min(sb) + 1e-12);
        for l in ab.loops.iter().chain(&ba.loops) {
            prop_assert!(l.validate().is_ok());
        }
        Ok(())
    }))
}

pub fn clip_pieces_partition_a_target() -> Result<(), String> {
    report(runner().run(&(arb_mesh(), arb_quad(0.3..0.7, 0.05..0.25)), |(mesh, target)| {
        let mut sum = 0.0;
        for i in 0..mesh.num_cells() {
            let r = wa_clip(&mesh.cell_polygon(i), &target).unwrap();
            for l in &r.loops {
                prop_assert!(l.validate().is_ok());
            }
            sum += r.area();
        }
        let area = green_area(&target);
        prop_assert!((sum - area).abs() <= 1e-10 * area, "{} vs {}", sum, area);
        Ok(())
    }))
}
