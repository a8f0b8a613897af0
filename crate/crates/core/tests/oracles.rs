//! Brute-force and cross-method checks on small mesh pairs.

use std::f64::consts::FRAC_PI_4;

use curveremap::clipping::wa_clip;
use curveremap::fields::{BumpField, SinSum};
use curveremap::geometry::Point2;
use curveremap::integrate::{green_integral, make_tri_rule, monomials, tri_integral};
use curveremap::mesh::{
    exact_cell_averages, gen_deformed_square_mesh, gen_disk_mesh, read_mesh_str, rotate_mesh, write_mesh_string, DeformKind,
};
use curveremap::reconstruct::{weno_reconstruct, world_monomial, WenoConfig};
use curveremap::remap::{candidate_pairs, remap_with, Approach, Overlay, RemapOptions};

fn pair(n: usize) -> (curveremap::mesh::CurvilinearMesh, curveremap::mesh::CurvilinearMesh) {
    (
        gen_deformed_square_mesh(n, DeformKind::GreshoLike, 0.5, 2).unwrap(),
        gen_deformed_square_mesh(n, DeformKind::TaylorGreenLike, 0.05, 2).unwrap(),
    )
}

#[test]
fn candidates_cover_every_overlapping_pair() {
    let (s, t) = pair(6);
    let cands = candidate_pairs(&s, &t);
    for i in 0..s.num_cells() {
        for j in 0..t.num_cells() {
            let a = wa_clip(&s.cell_polygon(i), &t.cell_polygon(j)).unwrap().area();
            if a > 0.0 {
                assert!(cands.contains(&(i, j)), "pair ({i}, {j}) with area {a:e} missing");
            }
        }
    }
}

#[test]
fn approaches_agree_on_every_piece() {
    let (s, t) = pair(6);
    let ov = Overlay::build(&s, &t).unwrap();
    let tris = ov.triangles().unwrap();
    for (o, ts) in ov.overlaps.iter().zip(tris) {
        let c = t.cell_center(o.target);
        let h = t.areas()[o.target].sqrt();
        for (a, b) in monomials(4) {
            let f = world_monomial(c, h, a, b);
            let ga: f64 = o.loops.iter().map(|l| green_integral(&f, l)).sum();
            let gb: f64 = ts.iter().map(|tr| tri_integral(&f, tr, make_tri_rule(tr.rule_degree(4)).unwrap()).unwrap()).sum();
            assert!((ga - gb).abs() <= 1e-12 * ga.abs().max(1.0), "{} {}: x^{a} y^{b} {ga} {gb}", o.source, o.target);
        }
    }
}

#[test]
fn approach_b_matches_a_in_a_full_remap() {
    let (s, t) = pair(8);
    let ov = Overlay::build(&s, &t).unwrap();
    let f = exact_cell_averages(&s, &SinSum).unwrap();
    for order in [1, 3, 5] {
        let r = remap_with(&s, &f, &t, &ov, RemapOptions::new(order).approach(Approach::Both)).unwrap();
        assert!(r.max_approach_diff.unwrap() <= 1e-11, "{order}");
    }
}

#[test]
fn rotated_disk_boundary_coincides_for_even_sizes() {
    for n in [8, 12] {
        let m = gen_disk_mesh(n, 2).unwrap();
        let r = rotate_mesh(&m, FRAC_PI_4, Point2::default()).unwrap();
        let ov = Overlay::build(&m, &r).unwrap();
        let e: f64 = ov.clipped_areas.iter().zip(r.areas()).map(|(c, d)| (c - d).abs()).sum();
        assert!(e <= 1e-12, "n = {n}: {e:e}");
    }
    // odd sizes shift the boundary nodes by half an edge
    let m = gen_disk_mesh(9, 2).unwrap();
    let r = rotate_mesh(&m, FRAC_PI_4, Point2::default()).unwrap();
    let ov = Overlay::build(&m, &r).unwrap();
    let e: f64 = ov.clipped_areas.iter().zip(r.areas()).map(|(c, d)| (c - d).abs()).sum();
    assert!(e > 1e-8);
}

#[test]
fn mesh_text_round_trip_is_exact() {
    let m = gen_disk_mesh(5, 3).unwrap();
    let back = read_mesh_str(&write_mesh_string(&m)).unwrap();
    assert_eq!(back.points(), m.points());
    assert_eq!(back.edges(), m.edges());
    assert_eq!(back.cells(), m.cells());
}

#[test]
fn rotation_preserves_distances() {
    let m = gen_disk_mesh(6, 2).unwrap();
    let r = rotate_mesh(&m, 0.7, Point2::new(0.1, -0.3)).unwrap();
    let (p, q) = (m.points(), r.points());
    for i in (0..p.len()).step_by(7) {
        for j in (0..p.len()).step_by(5) {
            let (a, b) = (p[i].dist(p[j]), q[i].dist(q[j]));
            assert!((a - b).abs() <= 1e-12 * a.max(1.0));
        }
    }
}

#[test]
fn constant_candidate_gains_weight_across_the_cylinder_jump() {
    let m = gen_deformed_square_mesh(32, DeformKind::GreshoLike, 0.5, 2).unwrap();
    let f = exact_cell_averages(&m, &BumpField::square_cylinder()).unwrap();
    for order in [3, 5] {
        let cfg = WenoConfig::new(order).unwrap();
        let g0 = cfg.gammas[0];
        let r = weno_reconstruct(&m, &f.values, &cfg).unwrap();
        let mut jump = Vec::new();
        let mut smooth = Vec::new();
        for (i, &u) in f.values.iter().enumerate() {
            let w0 = r.weights[i][0];
            if u > 1e-3 && u < 1.0 - 1e-3 {
                jump.push(w0);
            } else if u > 0.5 && m.adjacency().one_ring(i).iter().all(|&j| f.values[j] > 1.0 - 1e-12) {
                smooth.push(w0);
            }
        }
        assert!(!jump.is_empty() && !smooth.is_empty());
        assert!(jump.iter().all(|&w| w > g0), "order {order}");
        let median = |v: &mut Vec<f64>| {
            v.sort_by(f64::total_cmp);
            v[v.len() / 2]
        };
        let (mj, ms) = (median(&mut jump), median(&mut smooth));
        eprintln!("order {order}: straddling median {mj:.4}, flat median {ms:.4}, γ0 {g0:.4}");
        assert!(mj >= 3.0 * ms, "order {order}: {mj} vs {ms}");
    }
}
