//! m-th roots that commute with everything commuting with the input.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::decompose::{root_decomposition, RootDecomposition};
use super::eigen::check_dim;
use crate::matrix::{c64, CMatrix, C64};
use crate::{Error, Result, Tolerance};

/// Principal m-th root: argument taken in (−π, π], divided by m.
pub fn principal_root(lambda: C64, m: u32) -> C64 {
    let mut arg = lambda.im.atan2(lambda.re);
    if arg <= -PI {
        arg = PI;
    }
    // atan2(-0.0, x<0) = -π; the principal argument of a negative real is +π
    if lambda.im == 0.0 && lambda.re < 0.0 {
        arg = PI;
    }
    let r = lambda.norm().powf(1.0 / m as f64);
    C64::from_polar(r, arg / m as f64)
}

/// Coefficients a_0..a_{terms-1} of the binomial series
/// `(λ + x)^{1/m} = Σ a_j x^j` on the principal branch.
pub fn binomial_root_coefficients(lambda: C64, m: u32, terms: usize) -> Vec<C64> {
    let alpha = 1.0 / m as f64;
    let root = principal_root(lambda, m);
    let inv = lambda.inv();
    let mut out = Vec::with_capacity(terms);
    let mut binom = 1.0;
    let mut pow = c64(1.0, 0.0);
    for j in 0..terms {
        out.push(root * pow * binom);
        binom *= (alpha - j as f64) / (j as f64 + 1.0);
        pow *= inv;
    }
    out
}

/// `(λE + N)^{1/m}` as the truncated binomial series `a_0 E + a_1 N + …`.
///
/// The series stops at the nilpotency index of `N`, so the result is a
/// polynomial in `N`.
pub fn nilpotent_mth_root(lambda: C64, nil: &CMatrix, m: u32, tol: &Tolerance) -> Result<CMatrix> {
    check_dim(nil)?;
    if m == 0 {
        return Err(Error::ContractViolation("root order m must be at least 1".into()));
    }
    if lambda.norm() == 0.0 || !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::SingularEigenvalue);
    }
    let n = nil.dim();
    let index = nilpotency_index(nil, tol.residual_eps)
        .ok_or_else(|| Error::ContractViolation(format!("N is not nilpotent: ‖N^{n}‖ exceeds the residual bound")))?;
    if m == 1 {
        return Ok(&CMatrix::scalar(n, lambda) + nil);
    }
    let coeffs = binomial_root_coefficients(lambda, m, index.max(1));
    Ok(nil.polynomial(&coeffs))
}

/// Smallest j ≥ 1 with `‖N^j‖ ≤ eps · max(1, ‖N‖)^j`, if any j ≤ n works.
fn nilpotency_index(nil: &CMatrix, eps: f64) -> Option<usize> {
    let n = nil.dim();
    let scale = nil.max_norm().max(1.0);
    let mut pow = nil.clone();
    for j in 1..=n {
        if pow.max_norm() <= eps * scale.powi(j as i32) {
            return Some(j);
        }
        pow = &pow * nil;
    }
    None
}

/// K̂ with K̂^m = K that commutes with every matrix commuting with K.
///
/// K̂ is assembled block by block over the root decomposition of K and is a
/// polynomial in K. `m = 1` returns K unchanged.
pub fn commutant_preserving_root(k: &CMatrix, m: u32, tol: &Tolerance) -> Result<CMatrix> {
    if m == 0 {
        return Err(Error::ContractViolation("root order m must be at least 1".into()));
    }
    check_dim(k)?;
    if m == 1 {
        if k.is_numerically_singular() {
            return Err(Error::SingularInput);
        }
        return Ok(k.clone());
    }
    let dec = root_decomposition(k, tol)?;
    root_from_decomposition(&dec, m, tol)
}

/// `Σ_i S_i P_i` where `S_i` is the m-th root of `λ_i E + N_i`.
pub fn root_from_decomposition(dec: &RootDecomposition, m: u32, tol: &Tolerance) -> Result<CMatrix> {
    let mut out = CMatrix::zeros(dec.dim());
    for ((&lambda, p), nil) in dec.eigenvalues().iter().zip(dec.projectors()).zip(dec.nilpotents()) {
        let block = &nilpotent_mth_root(lambda, nil, m, tol)? * p;
        out = &out + &block;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn principal_branch_of_negative_reals() {
        let r = principal_root(c64(-4.0, -0.0), 2);
        assert!((r - c64(0.0, 2.0)).norm() < 1e-15);
        let r = principal_root(c64(-8.0, 0.0), 3);
        assert!((r - C64::from_polar(2.0, PI / 3.0)).norm() < 1e-14);
    }

    #[test]
    fn scalar_case() {
        let r = nilpotent_mth_root(c64(4.0, 0.0), &CMatrix::zeros(2), 2, &tol()).unwrap();
        assert!(r.approx_eq(&CMatrix::scalar(2, c64(2.0, 0.0)), 1e-15));
    }

    #[test]
    fn jordan_square_root() {
        let nil = CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let r = nilpotent_mth_root(c64(4.0, 0.0), &nil, 2, &tol()).unwrap();
        let expected = CMatrix::from_real(&[&[2.0, 0.25], &[0.0, 2.0]]).unwrap();
        assert!(r.approx_eq(&expected, 1e-15));
        let target = CMatrix::from_real(&[&[4.0, 1.0], &[0.0, 4.0]]).unwrap();
        assert!(r.powu(2).approx_eq(&target, 1e-15));
    }

    #[test]
    fn order_one_is_identity_of_the_operation() {
        let nil = CMatrix::from_real(&[&[0.0, 3.0, 1.0], &[0.0, 0.0, -2.0], &[0.0, 0.0, 0.0]]).unwrap();
        let r = nilpotent_mth_root(c64(1.0, 0.0), &nil, 1, &tol()).unwrap();
        assert_eq!(r, &CMatrix::identity(3) + &nil);
    }

    #[test]
    fn zero_eigenvalue_and_non_nilpotent_are_errors() {
        let nil = CMatrix::zeros(2);
        assert_eq!(
            nilpotent_mth_root(c64(0.0, 0.0), &nil, 2, &tol()),
            Err(Error::SingularEigenvalue)
        );
        let not_nil = CMatrix::diag(&[c64(1.0, 0.0), c64(0.0, 0.0)]);
        assert!(matches!(
            nilpotent_mth_root(c64(1.0, 0.0), &not_nil, 2, &tol()),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn diagonal_root() {
        let k = CMatrix::diag(&[c64(4.0, 0.0), c64(9.0, 0.0)]);
        let r = commutant_preserving_root(&k, 2, &tol()).unwrap();
        assert!(r.approx_eq(&CMatrix::diag(&[c64(2.0, 0.0), c64(3.0, 0.0)]), 1e-14));
    }

    #[test]
    fn jordan_root_commutes_with_commutant() {
        let k = CMatrix::from_real(&[&[4.0, 1.0], &[0.0, 4.0]]).unwrap();
        let r = commutant_preserving_root(&k, 2, &tol()).unwrap();
        let expected = CMatrix::from_real(&[&[2.0, 0.25], &[0.0, 2.0]]).unwrap();
        assert!(r.approx_eq(&expected, 1e-14));
        let a = CMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(a.commutator(&k).unwrap().max_norm() < 1e-15);
        assert!(a.commutator(&r).unwrap().max_norm() < 1e-14);
    }

    #[test]
    fn scalar_matrix_cube_root() {
        for n in 1..=5 {
            let k = CMatrix::scalar(n, c64(0.5, 0.0));
            let r = commutant_preserving_root(&k, 3, &tol()).unwrap();
            assert!(r.approx_eq(&CMatrix::scalar(n, c64(0.5f64.powf(1.0 / 3.0), 0.0)), 1e-14));
        }
    }

    #[test]
    fn order_one_returns_input() {
        let k = CMatrix::from_real(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        assert_eq!(commutant_preserving_root(&k, 1, &tol()).unwrap(), k);
        let singular = CMatrix::from_real(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert_eq!(
            commutant_preserving_root(&singular, 1, &tol()),
            Err(Error::SingularInput)
        );
        assert_eq!(
            commutant_preserving_root(&singular, 2, &tol()),
            Err(Error::SingularInput)
        );
    }
}
