//! Contraction checks for linear maps.

#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::{check_dim, eigenvalues};
use crate::matrix::{vec_max_norm, CMatrix, C64};
use crate::Tolerance;

/// Largest eigenvalue modulus.
pub fn spectral_radius(k: &CMatrix, tol: &Tolerance) -> Option<f64> {
    let ev = eigenvalues(k, tol).ok()?;
    Some(ev.iter().map(|(l, _)| l.norm()).fold(0.0, f64::max))
}

/// K is invertible and every eigenvalue modulus is below `1 − residual_eps`.
pub fn is_linear_contraction(k: &CMatrix, tol: &Tolerance) -> bool {
    if check_dim(k).is_err() || k.is_numerically_singular() {
        return false;
    }
    match eigenvalues(k, tol) {
        Ok(ev) => ev
            .iter()
            .all(|(l, _)| l.norm() > tol.residual_eps && l.norm() < 1.0 - tol.residual_eps),
        Err(_) => false,
    }
}

/// Iterates `x ← Kx` and reports whether `‖K^ν x‖` drops below
/// `residual_eps` for some ν ≤ `max_iter`.
pub fn orbit_converges(k: &CMatrix, x: &[C64], max_iter: usize, tol: &Tolerance) -> bool {
    orbit_residual(k, x, max_iter, tol.residual_eps).0
}

/// Same as [`orbit_converges`], also returning the last norm reached.
pub fn orbit_residual(k: &CMatrix, x: &[C64], max_iter: usize, eps: f64) -> (bool, f64) {
    if x.len() != k.dim() {
        return (false, f64::INFINITY);
    }
    let mut v = x.to_vec();
    let mut norm = vec_max_norm(&v);
    for _ in 0..max_iter {
        if norm < eps {
            return (true, norm);
        }
        v = k.mul_vec(&v);
        norm = vec_max_norm(&v);
        if !norm.is_finite() {
            return (false, norm);
        }
    }
    (norm < eps, norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    fn d(a: f64, b: f64) -> CMatrix {
        CMatrix::diag(&[c64(a, 0.0), c64(b, 0.0)])
    }

    #[test]
    fn contraction_examples() {
        let tol = Tolerance::default();
        assert!(is_linear_contraction(&d(0.5, 1.0 / 3.0), &tol));
        assert!(!is_linear_contraction(&d(0.5, 2.0), &tol));
        assert!(!is_linear_contraction(&d(0.5, 0.0), &tol));
        assert!(!is_linear_contraction(&d(0.5, 1.0), &tol));
    }

    #[test]
    fn orbit_examples() {
        let tol = Tolerance::default();
        let one = [c64(1.0, 0.0), c64(1.0, 0.0)];
        assert!(orbit_converges(&CMatrix::scalar(2, c64(0.5, 0.0)), &one, 60, &tol));
        assert!(!orbit_converges(&d(2.0, 2.0), &one, 60, &tol));
        assert!(!orbit_converges(
            &d(2.0, 2.0),
            &[c64(0.0, 0.0), c64(1e-3, 0.0)],
            500,
            &tol
        ));
    }

    #[test]
    fn transient_growth_before_decay() {
        let tol = Tolerance::default();
        let k = CMatrix::from_real(&[&[0.9, 10.0], &[0.0, 0.9]]).unwrap();
        let x = [c64(0.0, 0.0), c64(1.0, 0.0)];
        // K^ν x = (10ν·0.9^{ν−1}, 0.9^ν): peaks near ν = 9.5 at ≈ 38.7
        let mut v = x.to_vec();
        let mut peak: f64 = 0.0;
        for _ in 0..20 {
            v = k.mul_vec(&v);
            peak = peak.max(vec_max_norm(&v));
        }
        assert!(peak > 38.0);
        assert!(!orbit_converges(&k, &x, 200, &tol));
        assert!(orbit_converges(&k, &x, 400, &tol));
        assert!(is_linear_contraction(&k, &tol));
    }
}
