//! Dense complex matrix algebra at desk scale (n ≤ 8).

mod decompose;
mod dynamics;
mod eigen;
mod root;

pub use decompose::{root_decomposition, DecompositionResiduals, RootDecomposition};
pub use dynamics::{is_linear_contraction, orbit_converges, orbit_residual, spectral_radius};
pub use eigen::{eigenvalues, MAX_DIM};
pub use root::{
    binomial_root_coefficients, commutant_preserving_root, nilpotent_mth_root, principal_root, root_from_decomposition,
};

use crate::matrix::CMatrix;
use crate::{Result, Tolerance};

/// `‖AB − BA‖ ≤ residual_eps` in the max-entry norm.
pub fn commute_check(a: &CMatrix, b: &CMatrix, tol: &Tolerance) -> Result<bool> {
    Ok(a.commutator(b)?.max_norm() <= tol.residual_eps)
}

/// Whether A preserves every root subspace of the decomposition, tested as
/// `A P_i = P_i A` for each projector.
pub fn invariance_check(a: &CMatrix, dec: &RootDecomposition, tol: &Tolerance) -> Result<bool> {
    for p in dec.projectors() {
        if a.commutator(p)?.max_norm() > tol.residual_eps {
            return Ok(false);
        }
    }
    Ok(true)
}
