//! Multi-resolution WENO reconstruction of one polynomial per cell from cell
//! averages, at orders 1, 3 and 5.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::Point2;
use crate::integrate::{green_moments, n_terms, Poly2};
use crate::mesh::CurvilinearMesh;

/// Linear weights of the order-3 scheme.
pub const GAMMA3: [f64; 2] = [1.0 / 101.0, 100.0 / 101.0];
/// Linear weights of the order-5 scheme.
pub const GAMMA5: [f64; 3] = [1.0 / 111.0, 10.0 / 111.0, 100.0 / 111.0];
pub const WENO_EPS: f64 = 1e-4;

/// Largest condition number of the column-equilibrated fit matrix for
/// which a least-squares system counts as full rank.
pub const MAX_CONDITION: f64 = 1e4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReconstructError {
    #[error("unsupported order {0}; expected 1, 3 or 5")]
    Order(usize),
    #[error("linear weights must be positive and sum to 1")]
    Weights,
    #[error("{expected} cells but {got} averages")]
    Length { expected: usize, got: usize },
}

/// Nested cell sets `S₀ = {i} ⊂ S₁ ⊂ S₂`; the cell itself comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stencil {
    pub levels: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WenoConfig {
    pub order: usize,
    pub gammas: Vec<f64>,
    pub epsilon: f64,
}

impl WenoConfig {
    pub fn new(order: usize) -> Result<Self, ReconstructError> {
        let gammas = match order {
            1 => vec![1.0],
            3 => GAMMA3.to_vec(),
            5 => GAMMA5.to_vec(),
            _ => return Err(ReconstructError::Order(order)),
        };
        Ok(Self { order, gammas, epsilon: WENO_EPS })
    }

    pub fn with_gammas(order: usize, gammas: Vec<f64>) -> Result<Self, ReconstructError> {
        let mut c = Self::new(order)?;
        if gammas.len() != c.gammas.len() || gammas.iter().any(|&g| g <= 0.0) || (gammas.iter().sum::<f64>() - 1.0).abs() > 1e-14 {
            return Err(ReconstructError::Weights);
        }
        c.gammas = gammas;
        Ok(c)
    }

    /// Polynomial degree of the reconstruction.
    pub fn degree(&self) -> usize {
        self.order - 1
    }
}

/// Per-cell polynomials plus the nonlinear weights that produced them.
#[derive(Clone, Debug)]
pub struct ReconField {
    pub polys: Vec<Poly2>,
    pub weights: Vec<Vec<f64>>,
    /// Degree actually reached by each candidate fit (`q₁`, `q₂`).
    pub fit_degrees: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
    pub config: WenoConfig,
}

/// Least ratio of neighbour cells to free coefficients for a fit on a
/// widened ring to be tried.
pub const MIN_ROW_RATIO: f64 = 1.5;
/// Extra rings tried before a rank-deficient fit gives up degree.
pub const EXTRA_RINGS: usize = 2;

/// The cell's own frame: corner mean and the square root of its area.
pub fn cell_frame(mesh: &CurvilinearMesh, i: usize) -> (Point2, f64) {
    (mesh.cell_center(i), mesh.areas()[i].sqrt())
}

pub fn build_stencil(mesh: &CurvilinearMesh, i: usize, order: usize) -> Stencil {
    let levels = match order {
        1 => vec![vec![i]],
        3 => vec![vec![i], ring(mesh, i, 1)],
        _ => vec![vec![i], ring(mesh, i, 1), ring(mesh, i, 2)],
    };
    Stencil { levels }
}

/// Cells within `r` vertex-neighbour steps of `i`: `i` first, the rest
/// ascending.
pub fn ring(mesh: &CurvilinearMesh, i: usize, r: usize) -> Vec<usize> {
    let adj = mesh.adjacency();
    let mut seen = vec![i];
    let mut front = vec![i];
    for _ in 0..r {
        let mut next = Vec::new();
        for &j in &front {
            for k in adj.one_ring(j) {
                if !seen.contains(&k) {
                    seen.push(k);
                    next.push(k);
                }
            }
        }
        front = next;
    }
    seen[1..].sort_unstable();
    seen
}

/// Degree-`k` polynomial in the frame of `cells[0]` whose integral over
/// `cells[0]` reproduces its average exactly and whose integrals over the
/// other cells match theirs in the least-squares sense. `moments[j]` holds
/// the moments of `cells[j]` up to at least degree `k`. Returns `None` when
/// the system is rank deficient.
pub fn fit_degree(
    frame: (Point2, f64),
    areas: &[f64],
    averages: &[f64],
    moments: &[Vec<f64>],
    k: usize,
) -> Option<Poly2> {
    let (center, scale) = frame;
    let ai = areas[0];
    let ui = averages[0];
    if k == 0 {
        return Some(Poly2::constant(center, scale, ui));
    }
    let nu = n_terms(k) - 1;
    let rows = areas.len() - 1;
    if rows < nu {
        return None;
    }
    let mi = &moments[0];
    let mut a = DMatrix::<f64>::zeros(rows, nu);
    let mut b = DVector::<f64>::zeros(rows);
    for r in 0..rows {
        let (aj, mj) = (areas[r + 1], &moments[r + 1]);
        for m in 0..nu {
            a[(r, m)] = (mj[m + 1] - aj * mi[m + 1] / ai) / ai;
        }
        b[r] = (averages[r + 1] - ui) * aj / ai;
    }
    // column equilibration
    let norms: Vec<f64> = (0..nu).map(|m| a.column(m).norm()).collect();
    let top = norms.iter().copied().fold(0.0, f64::max);
    if top == 0.0 || norms.iter().any(|&n| n <= 1e-14 * top) {
        return None;
    }
    for (m, n) in norms.iter().enumerate() {
        a.column_mut(m).scale_mut(1.0 / n);
    }
    let sv = a.singular_values();
    if !(sv.max() <= MAX_CONDITION * sv.min()) {
        return None;
    }
    let normal = a.transpose() * &a;
    let rhs = a.transpose() * &b;
    let chol = normal.cholesky()?;
    let c = chol.solve(&rhs);
    let mut coeffs = vec![0.0; nu + 1];
    let mut mean = 0.0;
    for m in 0..nu {
        coeffs[m + 1] = c[m] / norms[m];
        mean += coeffs[m + 1] * mi[m + 1];
    }
    coeffs[0] = ui - mean / ai;
    let p = Poly2::from_coeffs(center, scale, k, coeffs);
    p.is_finite().then_some(p)
}

/// Constrained least-squares fit on a stencil level, lowering the degree
/// until the system is solvable. Returns the polynomial and its degree.
pub fn constrained_lsq_fit(mesh: &CurvilinearMesh, averages: &[f64], cells: &[usize], k: usize) -> (Poly2, usize) {
    let frame = cell_frame(mesh, cells[0]);
    let moments: Vec<Vec<f64>> = cells.iter().map(|&j| green_moments(&mesh.cell_polygon(j), frame.0, frame.1, k)).collect();
    let areas: Vec<f64> = cells.iter().map(|&j| mesh.areas()[j]).collect();
    let avgs: Vec<f64> = cells.iter().map(|&j| averages[j]).collect();
    fit_reducing(frame, &areas, &avgs, &moments, k)
}

fn fit_reducing(frame: (Point2, f64), areas: &[f64], averages: &[f64], moments: &[Vec<f64>], k: usize) -> (Poly2, usize) {
    for deg in (0..=k).rev() {
        if let Some(p) = fit_degree(frame, areas, averages, moments, deg) {
            return (p, deg);
        }
    }
    unreachable!("the degree-0 fit always exists")
}

/// `Σ_{1 ≤ |l| ≤ deg p} |I|^{|l| − 1} ∬_I (∂^l p)²` with cell moments
/// `moments` (in `p`'s frame, up to degree `2 deg p − 2`).
pub fn smoothness_with(p: &Poly2, area: f64, moments: &[f64]) -> f64 {
    let k = p.degree();
    let mut beta = 0.0;
    for s in 1..=k {
        let w = area.powi(s as i32 - 1) / p.scale.powi(2 * s as i32);
        for dy in 0..=s {
            let d = p.derivative_local(s - dy, dy);
            beta += w * d.mul(&d).integrate_with(moments);
        }
    }
    beta
}

/// Smoothness indicator of `p` over cell `i`.
pub fn smoothness(mesh: &CurvilinearMesh, p: &Poly2, i: usize) -> f64 {
    let k = p.degree();
    if k == 0 {
        return 0.0;
    }
    let m = green_moments(&mesh.cell_polygon(i), p.center, p.scale, 2 * k - 2);
    smoothness_with(p, mesh.areas()[i], &m)
}

/// `min_{j ∈ S₁ \ {i}} (ū_i − ū_j)²`; zero for an empty neighbourhood.
pub fn beta0(mesh: &CurvilinearMesh, averages: &[f64], i: usize) -> f64 {
    mesh.adjacency().one_ring(i).iter().map(|&j| (averages[i] - averages[j]).powi(2)).reduce(f64::min).unwrap_or(0.0)
}

fn nonlinear_weights(gammas: &[f64], betas: &[f64], tau: f64, eps: f64) -> Vec<f64> {
    let w: Vec<f64> = gammas.iter().zip(betas).map(|(g, b)| g * (1.0 + tau / (b + eps))).collect();
    let s: f64 = w.iter().sum();
    w.iter().map(|x| x / s).collect()
}

struct CellRecon {
    poly: Poly2,
    weights: Vec<f64>,
    fit_degrees: Vec<usize>,
    warning: Option<String>,
}

fn reconstruct_cell(mesh: &CurvilinearMesh, averages: &[f64], i: usize, cfg: &WenoConfig) -> CellRecon {
    let frame = cell_frame(mesh, i);
    let ui = averages[i];
    let p0 = Poly2::constant(frame.0, frame.1, ui);
    if cfg.order == 1 {
        return CellRecon { poly: p0, weights: vec![1.0], fit_degrees: vec![], warning: None };
    }
    let kmax = cfg.degree();
    let own = green_moments(&mesh.cell_polygon(i), frame.0, frame.1, 2 * kmax - 2);
    let area = mesh.areas()[i];
    let mut cache: HashMap<usize, Vec<f64>> = HashMap::new();
    // Fits degree `k` on the `r`-ring, widening the ring while the system is
    // rank deficient (one-sided boundary stencils) and only then lowering
    // the degree on the original ring. Returns the fit, its degree and the
    // ring actually used.
    let mut fit = |r: usize, k: usize| -> (Poly2, usize, usize, usize) {
        let mut data = |cells: &[usize]| -> (Vec<f64>, Vec<f64>, Vec<Vec<f64>>) {
            let m = cells
                .iter()
                .map(|&j| cache.entry(j).or_insert_with(|| green_moments(&mesh.cell_polygon(j), frame.0, frame.1, kmax)).clone())
                .collect();
            (cells.iter().map(|&j| mesh.areas()[j]).collect(), cells.iter().map(|&j| averages[j]).collect(), m)
        };
        let mut prev = 0;
        for rr in r..=r + EXTRA_RINGS {
            let cells = ring(mesh, i, rr);
            if cells.len() == prev {
                break;
            }
            prev = cells.len();
            if ((cells.len() - 1) as f64) < MIN_ROW_RATIO * (n_terms(k) - 1) as f64 {
                continue;
            }
            let (a, u, m) = data(&cells);
            if let Some(p) = fit_degree(frame, &a, &u, &m, k) {
                return (p, k, rr, cells.len());
            }
        }
        let cells = ring(mesh, i, r);
        let (a, u, m) = data(&cells);
        let (p, deg) = fit_reducing(frame, &a, &u, &m, k);
        (p, deg, r, cells.len())
    };
    let (q1, k1, r1, n1) = fit(1, 2);
    let mut warning = None;
    if k1 < 2 {
        warning = Some(format!("cell {i}: quadratic fit on {n1} cells reduced to degree {k1}"));
    }
    let b0 = beta0(mesh, averages, i);
    let eps = cfg.epsilon;
    if cfg.order == 3 {
        let (g0, g1) = (cfg.gammas[0], cfg.gammas[1]);
        let p1 = q1.combine(1.0 / g1, &p0, -g0 / g1);
        let b1 = smoothness_with(&p1, area, &own);
        let tau = (b0 - b1).powi(2) / 4.0;
        let w = nonlinear_weights(&cfg.gammas, &[b0, b1], tau, eps);
        let poly = p0.combine(w[0], &p1, w[1]);
        return CellRecon { poly, weights: w, fit_degrees: vec![k1], warning };
    }
    // the outer level always strictly contains the inner one
    let (q2, k2, _, n2) = fit(r1 + 1, 4);
    if k2 < 4 {
        let msg = format!("cell {i}: quartic fit on {n2} cells reduced to degree {k2}");
        warning = Some(match warning {
            Some(w) => format!("{w}; {msg}"),
            None => msg,
        });
    }
    let g = &cfg.gammas;
    // the first level reuses the two-level weights, renormalized
    let (h0, h1) = (g[0] / (g[0] + g[1]), g[1] / (g[0] + g[1]));
    let p1 = q1.combine(1.0 / h1, &p0, -h0 / h1);
    let p2 = q2.combine(1.0 / g[2], &p0, -g[0] / g[2]).add(&p1.scaled(-g[1] / g[2]));
    let b1 = smoothness_with(&p1, area, &own);
    let b2 = smoothness_with(&p2, area, &own);
    let tau = (((b2 - b0).abs() + (b2 - b1).abs()) / 2.0).powi(2);
    let w = nonlinear_weights(g, &[b0, b1, b2], tau, eps);
    let poly = p0.scaled(w[0]).add(&p1.scaled(w[1])).add(&p2.scaled(w[2]));
    CellRecon { poly, weights: w, fit_degrees: vec![k1, k2], warning }
}

/// WENO reconstruction of every cell.
pub fn weno_reconstruct(mesh: &CurvilinearMesh, averages: &[f64], config: &WenoConfig) -> Result<ReconField, ReconstructError> {
    if averages.len() != mesh.num_cells() {
        return Err(ReconstructError::Length { expected: mesh.num_cells(), got: averages.len() });
    }
    let cells: Vec<CellRecon> = (0..mesh.num_cells()).into_par_iter().map(|i| reconstruct_cell(mesh, averages, i, config)).collect();
    let mut out = ReconField {
        polys: Vec::with_capacity(cells.len()),
        weights: Vec::with_capacity(cells.len()),
        fit_degrees: Vec::with_capacity(cells.len()),
        warnings: Vec::new(),
        config: config.clone(),
    };
    for c in cells {
        out.polys.push(c.poly);
        out.weights.push(c.weights);
        out.fit_degrees.push(c.fit_degrees);
        out.warnings.extend(c.warning);
    }
    Ok(out)
}

/// World-coordinate monomial `x^a y^b` as a field helper for tests and
/// diagnostics.
pub fn world_monomial(center: Point2, scale: f64, a: usize, b: usize) -> Poly2 {
    Poly2::from_world(center, scale, a + b, &[((a, b), 1.0)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{BumpField, PolyField};
    use crate::integrate::green_integral;
    use crate::mesh::{exact_cell_averages, gen_deformed_square_mesh, DeformKind};

    fn interior(n: usize, k: usize) -> impl Iterator<Item = usize> {
        (0..n * n).filter(move |c| {
            let (i, j) = (c % n, c / n);
            i >= k && j >= k && i + k < n && j + k < n
        })
    }

    #[test]
    fn stencil_sizes() {
        let m = gen_deformed_square_mesh(6, DeformKind::Identity, 0.0, 1).unwrap();
        let s = build_stencil(&m, 2 * 6 + 2, 5);
        assert_eq!(s.levels[0], vec![14]);
        assert_eq!(s.levels[1].len(), 9);
        assert_eq!(s.levels[2].len(), 25);
        assert_eq!(build_stencil(&m, 0, 3).levels[1].len(), 4);
    }

    #[test]
    fn constant_field_collapses_to_linear_weights() {
        let m = gen_deformed_square_mesh(6, DeformKind::TaylorGreenLike, 0.05, 2).unwrap();
        let avg = vec![3.5; m.num_cells()];
        for order in [1, 3, 5] {
            let cfg = WenoConfig::new(order).unwrap();
            let r = weno_reconstruct(&m, &avg, &cfg).unwrap();
            for (p, w) in r.polys.iter().zip(&r.weights) {
                assert!((p.coeffs()[0] - 3.5).abs() < 1e-12);
                assert!(p.coeffs()[1..].iter().all(|c| c.abs() < 1e-12));
                for (a, b) in w.iter().zip(&cfg.gammas) {
                    assert!((a - b).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn quadratic_fit_reproduces_quadratics() {
        let m = gen_deformed_square_mesh(8, DeformKind::Identity, 0.0, 1).unwrap();
        let f = PolyField::new(Poly2::from_world(Point2::default(), 1.0, 2, &[((2, 0), 1.0)]));
        let avg = exact_cell_averages(&m, &f).unwrap().values;
        for i in interior(8, 1) {
            let st = build_stencil(&m, i, 3);
            let (q, k) = constrained_lsq_fit(&m, &avg, &st.levels[1], 2);
            assert_eq!(k, 2);
            let c = m.cell_center(i);
            assert!((q.eval(c) - c.x * c.x).abs() < 1e-10);
        }
    }

    #[test]
    fn conservation_constraint_holds() {
        let m = gen_deformed_square_mesh(8, DeformKind::GreshoLike, 0.5, 2).unwrap();
        let avg = exact_cell_averages(&m, &BumpField::square_cylinder()).unwrap().values;
        for order in [3, 5] {
            let r = weno_reconstruct(&m, &avg, &WenoConfig::new(order).unwrap()).unwrap();
            for i in 0..m.num_cells() {
                let got = green_integral(&r.polys[i], &m.cell_polygon(i));
                let want = avg[i] * m.areas()[i];
                assert!((got - want).abs() <= 1e-12 * want.abs().max(m.areas()[i]), "{order} {i} {got} {want}");
            }
        }
    }

    #[test]
    fn smoothness_examples() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let cell = crate::integrate::tests::straight_polygon(&pts);
        let c = Point2::new(0.5, 0.5);
        let x = world_monomial(c, 0.5, 1, 0);
        let m = green_moments(&cell, c, 0.5, 2);
        assert!((smoothness_with(&x, 1.0, &m) - 1.0).abs() < 1e-14);
        // x² on [0,1]²: ∬ (2x)² + |I| ∬ 4 = 4/3 + 4
        let x2 = world_monomial(c, 0.5, 2, 0);
        assert!((smoothness_with(&x2, 1.0, &m) - (4.0 / 3.0 + 4.0)).abs() < 1e-13);
    }

    #[test]
    fn beta0_examples() {
        let m = gen_deformed_square_mesh(2, DeformKind::Identity, 0.0, 1).unwrap();
        let avg = [1.0, 0.9, 1.2, 1.05];
        assert!((beta0(&m, &avg, 0) - 0.0025).abs() < 1e-15);
        assert_eq!(beta0(&m, &[2.0; 4], 1), 0.0);
    }
}
