//! Passing from a linear extension of H by ℤ to a finite matrix group with
//! the same minimal abelian index.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::closure::{matrix_closure, Enumerated};
use super::extension::{CentralExtensionZ, ExtElement};
use super::finite::{FiniteGroup, GroupHom, Subgroup};
use super::lattice::{center, minimal_abelian_index, AbelianIndex};
use super::quotient::quotient;
use super::transfer::kernel_and_z_quotient;
use crate::hopf::Certificate;
use crate::matrix::CMatrix;
use crate::spectra::commutant_preserving_root;
use crate::{Error, Result, Tolerance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

/// Compares the minimal abelian index of H and H/N for a central N that
/// meets the kernel of a homomorphism ψ into an abelian group trivially.
pub fn index_preservation_check(
    h: &FiniteGroup,
    n: &Subgroup,
    psi: &GroupHom,
    psi_target: &FiniteGroup,
) -> Result<IndexCheck> {
    if n.parent_order() != h.order() || psi.source_order() != h.order() || psi.target_order() != psi_target.order() {
        return Err(Error::Shape("subgroup or homomorphism does not match the group".into()));
    }
    if !n.is_subset_of(&center(h)) {
        return Err(Error::HypothesisViolation("N is not central".into()));
    }
    if !psi_target.is_abelian() {
        return Err(Error::HypothesisViolation("target of ψ is not abelian".into()));
    }
    if !n.intersection(&psi.kernel(psi_target)).is_trivial() {
        return Err(Error::HypothesisViolation("N meets ker ψ nontrivially".into()));
    }
    let lhs = minimal_abelian_index(h)?.index;
    let (hq, _) = quotient(h, n)?;
    let rhs = minimal_abelian_index(&hq)?.index;
    Ok(IndexCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// Output of [`reduce_to_finite`].
#[derive(Clone, Debug)]
pub struct FiniteReduction {
    /// Root order m = ρ̄(K).
    pub m: u32,
    /// K̂ with K̂^m = K.
    pub root: CMatrix,
    /// φ(A) = A·K̂^{−ρ̄(A)} for each input generator.
    pub images: Vec<CMatrix>,
    /// H′ = φ(M).
    pub finite: Enumerated<CMatrix>,
    pub index_h: AbelianIndex,
    pub index_h_prime: AbelianIndex,
    pub certificates: Vec<Certificate>,
}

fn certificate(name: &str, passed: bool, residual: f64) -> Certificate {
    Certificate {
        name: String::from(name),
        passed,
        residual,
    }
}

/// Maps M onto a finite matrix group H′ that kills Γ = ⟨K⟩.
///
/// `coords[i]` is the position (t, h) of `gens[i]` in the extension model,
/// i.e. `gens[i] = K^t · R_h` for the coset representatives behind `ext`.
/// With ρ̄ = ρ / index_m the normalized transfer, m = ρ̄(K) and K̂ = K^{1/m},
/// the map φ(A) = A·K̂^{−ρ̄(A)} sends K to E, so H′ = φ(M) is a quotient of
/// H and is enumerated with |H| as the cap.
pub fn reduce_to_finite(
    gens: &[CMatrix],
    k: &CMatrix,
    ext: &CentralExtensionZ,
    coords: &[ExtElement],
    tol: &Tolerance,
) -> Result<FiniteReduction> {
    if !ext.is_central() {
        return Err(Error::NonCentral);
    }
    if gens.len() != coords.len() {
        return Err(Error::Shape(format!(
            "{} generators but {} coordinates",
            gens.len(),
            coords.len()
        )));
    }
    for g in gens {
        k.same_shape(g)?;
    }
    let zq = kernel_and_z_quotient(ext)?;
    let m = zq.normalized(ext.gamma());
    let m = u32::try_from(m).map_err(|_| Error::ModelInconsistency(format!("root order {m} out of range")))?;
    let root = commutant_preserving_root(k, m, tol)?;
    let mut certificates = Vec::new();

    let scale = k.max_norm().max(1.0);
    let root_res = root.powu(u64::from(m)).dist(k);
    certificates.push(certificate(
        "root_residual",
        root_res <= tol.residual_eps * scale,
        root_res,
    ));

    let comm_res = gens
        .iter()
        .map(|a| a.commutator(&root).map(|c| c.max_norm()))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let comm_scale = root.max_norm().max(1.0) * gens.iter().map(CMatrix::max_norm).fold(1.0, f64::max);
    certificates.push(certificate(
        "root_commutes",
        comm_res <= tol.residual_eps * comm_scale,
        comm_res,
    ));

    let inv_power = root.powi(-i64::from(m))?;
    let phi_k = k * &inv_power;
    let phi_k_res = phi_k.dist(&CMatrix::identity(k.dim()));
    let phi_k_ok = phi_k_res <= tol.residual_eps * inv_power.max_norm().max(1.0);
    certificates.push(certificate("phi_kills_gamma", phi_k_ok, phi_k_res));
    if !phi_k_ok {
        return Err(Error::ModelInconsistency(format!(
            "φ(K) differs from the identity by {phi_k_res:.3e}"
        )));
    }

    let images = gens
        .iter()
        .zip(coords)
        .map(|(a, &x)| Ok(a * &root.powi(-zq.normalized(x))?))
        .collect::<Result<Vec<CMatrix>>>()?;
    let finite = if images.is_empty() {
        matrix_closure(&[CMatrix::identity(k.dim())], 1, tol.residual_eps)?
    } else {
        matrix_closure(&images, ext.order(), tol.residual_eps).map_err(|e| match e {
            Error::NotFinite { cap } => {
                Error::ModelInconsistency(format!("image of M has more than |H| = {cap} elements"))
            }
            other => other,
        })?
    };

    let index_h = minimal_abelian_index(ext.quotient())?;
    let index_h_prime = minimal_abelian_index(&finite.group)?;
    let equal = index_h.index == index_h_prime.index;
    certificates.push(certificate("index_preservation", equal, 0.0));
    if !equal {
        return Err(Error::CertificationFailure(format!(
            "minimal abelian index of H is {} but of H′ is {}",
            index_h.index, index_h_prime.index
        )));
    }
    Ok(FiniteReduction {
        m,
        root,
        images,
        finite,
        index_h,
        index_h_prime,
        certificates,
    })
}
