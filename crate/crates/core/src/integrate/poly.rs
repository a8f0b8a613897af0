use crate::geometry::Point2;

/// Number of monomials of total degree `<= k`.
pub fn n_terms(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

/// Index of `X^a Y^b` in graded order: degree `s = a + b` blocks, `b`
/// increasing inside a block.
pub fn mono_index(a: usize, b: usize) -> usize {
    let s = a + b;
    s * (s + 1) / 2 + b
}

/// Exponent pairs `(a, b)` in storage order.
pub fn monomials(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=k).flat_map(|s| (0..=s).map(move |b| (s - b, b)))
}

/// Bivariate polynomial in the centered, scaled coordinates
/// `X = (x - cx) / h`, `Y = (y - cy) / h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly2 {
    pub center: Point2,
    pub scale: f64,
    degree: usize,
    coeffs: Vec<f64>,
}

impl Poly2 {
    pub fn zero(center: Point2, scale: f64, degree: usize) -> Self {
        Self {
            center,
            scale,
            degree,
            coeffs: vec![0.0; n_terms(degree)],
        }
    }

    pub fn constant(center: Point2, scale: f64, value: f64) -> Self {
        Self {
            center,
            scale,
            degree: 0,
            coeffs: vec![value],
        }
    }

    pub fn from_coeffs(center: Point2, scale: f64, degree: usize, coeffs: Vec<f64>) -> Self {
        assert_eq!(coeffs.len(), n_terms(degree), "coefficient count does not match degree");
        Self {
            center,
            scale,
            degree,
            coeffs,
        }
    }

    /// Polynomial in world coordinates `sum c_ab x^a y^b` re-expressed in
    /// the frame `(center, scale)`.
    pub fn from_world(center: Point2, scale: f64, degree: usize, world: &[((usize, usize), f64)]) -> Self {
        let mut p = Poly2::zero(center, scale, degree);
        // x = cx + h X, y = cy + h Y
        let x = Poly2::from_coeffs(center, scale, 1, vec![center.x, scale, 0.0]);
        let y = Poly2::from_coeffs(center, scale, 1, vec![center.y, 0.0, scale]);
        for &((a, b), c) in world {
            let mut term = Poly2::constant(center, scale, c);
            for _ in 0..a {
                term = term.mul(&x);
            }
            for _ in 0..b {
                term = term.mul(&y);
            }
            p = p.add(&term);
        }
        p.truncate(degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn coeff(&self, a: usize, b: usize) -> f64 {
        if a + b > self.degree {
            0.0
        } else {
            self.coeffs[mono_index(a, b)]
        }
    }

    pub fn local(&self, p: Point2) -> (f64, f64) {
        ((p.x - self.center.x) / self.scale, (p.y - self.center.y) / self.scale)
    }

    pub fn eval(&self, p: Point2) -> f64 {
        let (x, y) = self.local(p);
        self.eval_local(x, y)
    }

    pub fn eval_local(&self, x: f64, y: f64) -> f64 {
        let k = self.degree;
        let mut xp = [1.0f64; 16];
        let mut yp = [1.0f64; 16];
        for i in 1..=k {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        monomials(k).zip(&self.coeffs).map(|((a, b), c)| c * xp[a] * yp[b]).sum()
    }

    fn same_frame(&self, o: &Poly2) {
        debug_assert!(
            self.center == o.center && self.scale == o.scale,
            "polynomials live in different frames"
        );
    }

    pub fn add(&self, o: &Poly2) -> Poly2 {
        self.same_frame(o);
        let k = self.degree.max(o.degree);
        let mut out = Poly2::zero(self.center, self.scale, k);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            out.coeffs[i] += c;
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Poly2 {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|c| *c *= s);
        out
    }

    /// `a * self + b * o`
    pub fn combine(&self, a: f64, o: &Poly2, b: f64) -> Poly2 {
        self.scaled(a).add(&o.scaled(b))
    }

    pub fn mul(&self, o: &Poly2) -> Poly2 {
        self.same_frame(o);
        let k = self.degree + o.degree;
        let mut out = Poly2::zero(self.center, self.scale, k);
        for ((a1, b1), c1) in monomials(self.degree).zip(&self.coeffs) {
            if *c1 == 0.0 {
                continue;
            }
            for ((a2, b2), c2) in monomials(o.degree).zip(&o.coeffs) {
                out.coeffs[mono_index(a1 + a2, b1 + b2)] += c1 * c2;
            }
        }
        out
    }

    /// Partial derivative `d^(dx+dy) / dX^dx dY^dy` in the local variables.
    pub fn derivative_local(&self, dx: usize, dy: usize) -> Poly2 {
        if dx + dy > self.degree {
            return Poly2::constant(self.center, self.scale, 0.0);
        }
        let k = self.degree - dx - dy;
        let mut out = Poly2::zero(self.center, self.scale, k);
        for ((a, b), c) in monomials(self.degree).zip(&self.coeffs) {
            if a < dx || b < dy {
                continue;
            }
            let mut f = *c;
            for i in 0..dx {
                f *= (a - i) as f64;
            }
            for i in 0..dy {
                f *= (b - i) as f64;
            }
            out.coeffs[mono_index(a - dx, b - dy)] += f;
        }
        out
    }

    /// Drops terms above degree `k` (or pads with zeros).
    pub fn truncate(&self, k: usize) -> Poly2 {
        let mut out = Poly2::zero(self.center, self.scale, k);
        for ((a, b), c) in monomials(self.degree).zip(&self.coeffs) {
            if a + b <= k {
                out.coeffs[mono_index(a, b)] = *c;
            }
        }
        out
    }

    /// Integral against precomputed moments `m[idx(a, b)] = ∬ X^a Y^b`.
    pub fn integrate_with(&self, moments: &[f64]) -> f64 {
        self.coeffs.iter().zip(moments).map(|(c, m)| c * m).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_layout() {
        let v: Vec<_> = monomials(2).collect();
        assert_eq!(v, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        for (i, (a, b)) in monomials(5).enumerate() {
            assert_eq!(mono_index(a, b), i);
        }
    }

    #[test]
    fn world_conversion_and_eval() {
        let c = Point2::new(0.3, -0.2);
        let p = Poly2::from_world(c, 0.5, 3, &[((2, 1), 1.5), ((0, 0), -1.0), ((1, 0), 2.0)]);
        let q = Point2::new(0.7, 0.4);
        let expect = 1.5 * q.x * q.x * q.y - 1.0 + 2.0 * q.x;
        assert!((p.eval(q) - expect).abs() < 1e-14);
    }

    #[test]
    fn derivative_and_product() {
        let c = Point2::new(0.0, 0.0);
        let p = Poly2::from_world(c, 1.0, 2, &[((2, 0), 1.0), ((1, 1), 3.0)]);
        let dx = p.derivative_local(1, 0);
        // 2x + 3y
        assert_eq!(dx.coeff(1, 0), 2.0);
        assert_eq!(dx.coeff(0, 1), 3.0);
        let sq = dx.mul(&dx);
        assert_eq!(sq.coeff(2, 0), 4.0);
        assert_eq!(sq.coeff(1, 1), 12.0);
        assert_eq!(sq.coeff(0, 2), 9.0);
    }
}
