//! Real-root isolation for polynomials in Bernstein form on `[0, 1]`.

/// Returned when a root cannot be isolated as a simple crossing (multiple
/// root, or a root sitting on an interval end or subdivision point).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Degenerate;

const MAX_DEPTH: usize = 48;

pub(crate) fn bernstein_eval(c: &[f64], u: f64) -> f64 {
    let mut w = c.to_vec();
    let n = w.len();
    for l in 1..n {
        for i in 0..(n - l) {
            w[i] += u * (w[i + 1] - w[i]);
        }
    }
    w[0]
}

fn split(c: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = c.len();
    let mut w = c.to_vec();
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    left.push(w[0]);
    right.push(w[n - 1]);
    for level in 1..n {
        for i in 0..(n - level) {
            w[i] = 0.5 * (w[i] + w[i + 1]);
        }
        left.push(w[0]);
        right.push(w[n - 1 - level]);
    }
    right.reverse();
    (left, right)
}

fn sign_changes(c: &[f64]) -> usize {
    let mut prev = 0.0f64;
    let mut count = 0;
    for &v in c {
        if v == 0.0 {
            continue;
        }
        if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            count += 1;
        }
        prev = v;
    }
    count
}

/// All simple roots in the open interval `(0, 1)`, ascending.
pub(crate) fn bernstein_roots(c: &[f64]) -> Result<Vec<f64>, Degenerate> {
    if c[0] == 0.0 || c[c.len() - 1] == 0.0 {
        return Err(Degenerate);
    }
    let mut out = Vec::new();
    isolate(c, 0.0, 1.0, 0, &mut out)?;
    Ok(out)
}

fn isolate(c: &[f64], a: f64, b: f64, depth: usize, out: &mut Vec<f64>) -> Result<(), Degenerate> {
    if c.iter().all(|&v| v > 0.0) || c.iter().all(|&v| v < 0.0) {
        return Ok(());
    }
    let v = sign_changes(c);
    let first = c[0];
    let last = c[c.len() - 1];
    if v == 0 {
        return Ok(());
    }
    if v == 1 && first != 0.0 && last != 0.0 {
        out.push(a + (b - a) * bisect(c));
        return Ok(());
    }
    if depth >= MAX_DEPTH {
        return Err(Degenerate);
    }
    let (l, r) = split(c);
    if l[l.len() - 1] == 0.0 {
        return Err(Degenerate);
    }
    let m = 0.5 * (a + b);
    isolate(&l, a, m, depth + 1, out)?;
    isolate(&r, m, b, depth + 1, out)
}

/// Root of a polynomial with exactly one sign change on `[0, 1]`.
fn bisect(c: &[f64]) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let flo = c[0];
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = bernstein_eval(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_with_two_roots() {
        // (u - 0.25)(u - 0.75) = u^2 - u + 0.1875 in Bernstein form
        let c = [0.1875, 0.1875 - 0.5, 0.1875 - 1.0 + 1.0];
        let r = bernstein_roots(&c).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] - 0.25).abs() < 1e-14 && (r[1] - 0.75).abs() < 1e-14);
    }

    #[test]
    fn no_roots_and_double_root() {
        assert!(bernstein_roots(&[1.0, 0.5, 2.0]).unwrap().is_empty());
        // (u - 0.3)^2 touches zero: either degenerate or an even root count
        let c = [0.09, 0.09 - 0.3, 0.49];
        assert!(bernstein_roots(&c).map_or(true, |r| r.len() % 2 == 0));
    }
}
