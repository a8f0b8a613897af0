//! Positivity-preserving compression of a cell polynomial towards its average.

use thiserror::Error;

use crate::geometry::Point2;
use crate::integrate::Poly2;

pub const LIMITER_EPS: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimiterParams {
    pub eps: f64,
}

impl Default for LimiterParams {
    fn default() -> Self {
        Self { eps: LIMITER_EPS }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
#[error("cell average {average:e} is below the positivity floor {eps:e}")]
pub struct BelowFloor {
    pub average: f64,
    pub eps: f64,
}

/// Returns `θ p + (1 − θ) ū` with `θ = min(1, |ū − ε| / |ū − m|)`, `m` the
/// minimum of `p` over `points`, together with `θ`. Every returned value at
/// `points` is at least `ε`.
pub fn positivity_limit(p: &Poly2, average: f64, points: &[Point2], params: LimiterParams) -> Result<(Poly2, f64), BelowFloor> {
    let eps = params.eps;
    if !(average >= eps) {
        return Err(BelowFloor { average, eps });
    }
    let m = points.iter().map(|q| p.eval(*q)).fold(f64::INFINITY, f64::min);
    if m >= eps {
        return Ok((p.clone(), 1.0));
    }
    let mut theta = ((average - eps).abs() / (average - m).abs()).min(1.0);
    // rounding at the scale of the average can leave the minimum a few ulps
    // under the floor, so shrink θ until the evaluated values comply
    let mut step = 4.0 * f64::EPSILON;
    loop {
        let out = compress(p, average, theta);
        if theta == 0.0 || points.iter().all(|q| out.eval(*q) >= eps) {
            return Ok((out, theta));
        }
        theta = if step >= 1.0 { 0.0 } else { theta * (1.0 - step) };
        step *= 16.0;
    }
}

fn compress(p: &Poly2, average: f64, theta: f64) -> Poly2 {
    let mut out = p.scaled(theta);
    out.coeffs_mut()[0] += (1.0 - theta) * average;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line() -> Poly2 {
        // 1 + 2 (x − ½) in the frame centered at ½
        Poly2::from_coeffs(Point2::new(0.5, 0.0), 1.0, 1, vec![1.0, 2.0, 0.0])
    }

    #[test]
    fn compliant_polynomial_is_untouched() {
        let p = Poly2::constant(Point2::default(), 1.0, 5.0);
        let (q, t) = positivity_limit(&p, 5.0, &[Point2::new(0.3, 0.1)], LimiterParams::default()).unwrap();
        assert_eq!(t, 1.0);
        assert_eq!(q, p);
    }

    #[test]
    fn average_at_floor_flattens() {
        let (q, t) = positivity_limit(&line(), LIMITER_EPS, &[Point2::new(0.0, 0.0)], LimiterParams::default()).unwrap();
        assert_eq!(t, 0.0);
        assert_eq!(q.eval(Point2::new(0.9, 0.0)), LIMITER_EPS);
    }

    #[test]
    fn line_touching_zero() {
        let (q, t) = positivity_limit(&line(), 1.0, &[Point2::new(0.0, 0.0)], LimiterParams::default()).unwrap();
        assert!((t - (1.0 - 1e-14)).abs() < 1e-15);
        assert!(q.eval(Point2::new(0.0, 0.0)) >= LIMITER_EPS);
    }

    #[test]
    fn below_floor_is_an_error() {
        assert!(positivity_limit(&line(), 0.0, &[], LimiterParams::default()).is_err());
        assert!(positivity_limit(&line(), f64::NAN, &[], LimiterParams::default()).is_err());
    }
}
