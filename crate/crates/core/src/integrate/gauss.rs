use std::sync::OnceLock;

/// Gauss–Legendre rule mapped to `[0, 1]`.
#[derive(Clone, Debug)]
pub struct GaussRule1D {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

const MAX_POINTS: usize = 64;

impl GaussRule1D {
    /// The `n`-point rule, exact for polynomials up to degree `2n - 1`.
    pub fn new(n: usize) -> &'static GaussRule1D {
        static TABLE: OnceLock<Vec<GaussRule1D>> = OnceLock::new();
        let table = TABLE.get_or_init(|| (1..=MAX_POINTS).map(compute).collect());
        assert!((1..=MAX_POINTS).contains(&n), "Gauss rule size {n} out of range");
        &table[n - 1]
    }

    /// Smallest rule exact for polynomials of degree `degree`.
    pub fn exact_for(degree: usize) -> &'static GaussRule1D {
        Self::new(degree / 2 + 1)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `∫_a^b f` with the rule mapped onto `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let h = b - a;
        let mut s = 0.0;
        for (x, w) in self.points.iter().zip(&self.weights) {
            s += w * f(a + h * x);
        }
        s * h
    }

    /// The integral together with the sum of absolute terms.
    pub fn integrate_abs(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> (f64, f64) {
        let h = b - a;
        let (mut s, mut l1) = (0.0, 0.0);
        for (x, w) in self.points.iter().zip(&self.weights) {
            let v = w * f(a + h * x);
            s += v;
            l1 += v.abs();
        }
        (s * h, l1 * h.abs())
    }
}

fn compute(n: usize) -> GaussRule1D {
    let mut points = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Newton on P_n starting from the Chebyshev-like guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        points[i] = 0.5 * (1.0 - x);
        points[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    if n % 2 == 1 {
        points[n / 2] = 0.5;
    }
    GaussRule1D { points, weights }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_positive_and_monomials_exact() {
        for n in 1..=20 {
            let r = GaussRule1D::new(n);
            assert!(r.weights.iter().all(|&w| w > 0.0));
            for p in 0..(2 * n) {
                let v = r.integrate(0.0, 1.0, |x| x.powi(p as i32));
                assert!((v - 1.0 / (p as f64 + 1.0)).abs() < 1e-14, "n={n} p={p} v={v}");
            }
        }
    }
}
