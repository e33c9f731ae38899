use alloc::format;
use alloc::vec::Vec;

use super::model::{build_extension_model, validate_model, LinearHopfModel};
use super::Certificate;
use crate::group::{
    characteristic_power_subgroup, commutator_subgroup, index2_reduction, kernel_and_z_quotient, minimal_abelian_index,
    project_to_quotient, reduce_to_finite, schur_commutators_finite, CentralExtensionZ, FiniteGroup, GroupHom,
    Subgroup,
};
use crate::matrix::CMatrix;
use crate::{Error, Result, Tolerance};

/// Largest |G| = |H|² for which the exact sequence is built as a table.
const EXACT_SEQUENCE_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
pub struct JordanReport {
    /// |H| = [M : Γ]
    pub quotient_order: usize,
    /// Minimal index of an abelian subgroup of H.
    pub jordan_index: usize,
    pub witness: Subgroup,
    /// Order m of the root K̂ = g^{1/m}.
    pub root_order: u32,
    pub root_matrix: CMatrix,
    /// |H′| of the finite matrix model.
    pub finite_model_order: usize,
    /// n with Θ = ⟨gⁿ⟩.
    pub theta_exponent: usize,
    /// |G| = [M : Θ]
    pub primary_quotient_order: usize,
    pub certificates: Vec<Certificate>,
}

impl JordanReport {
    pub fn certified(&self) -> bool {
        self.certificates.iter().all(|c| c.passed)
    }
}

/// The Jordan index of the model, computed on H directly and on the finite
/// matrix model H′, with the two required to agree.
pub fn aut_jordan_index(model: &LinearHopfModel, tol: &Tolerance) -> Result<JordanReport> {
    let mut certificates = validate_model(model, tol)?;
    let em = build_extension_model(model, tol)?;
    certificates.extend(em.certificates.iter().cloned());
    let ext = &em.ext;
    let n = ext.order();

    let (_, index2) = index2_reduction(ext);
    certificates.push(Certificate::new("index2_reduction", index2 == 1, 0.0));
    if index2 != 1 {
        return Err(Error::ModelInconsistency("Γ is not central in M".into()));
    }

    let zq = kernel_and_z_quotient(ext)?;
    certificates.push(Certificate::new("transfer_homomorphism", true, 0.0));
    let separated = zq.kernel.iter().all(|x| x.h != ext.quotient().identity() || x.t == 0);
    certificates.push(Certificate::new("kernel_separation", separated, 0.0));

    let schur = schur_commutators_finite(ext)?;
    let schur_ok = project_to_quotient(ext, &schur) == commutator_subgroup(ext.quotient());
    certificates.push(Certificate::new("schur_commutators", schur_ok, 0.0));

    let direct = minimal_abelian_index(ext.quotient())?;
    let reduction = reduce_to_finite(model.generators(), model.contraction(), ext, &em.generator_coords, tol)?;
    certificates.extend(reduction.certificates.iter().cloned());
    if reduction.index_h_prime.index != direct.index {
        return Err(Error::CertificationFailure(format!(
            "minimal abelian index {} on H but {} on H′",
            direct.index, reduction.index_h_prime.index
        )));
    }

    let theta = characteristic_power_subgroup(ext);
    certificates.push(Certificate::new(
        "theta_invariance",
        theta.invariant,
        theta.worst_defect as f64,
    ));

    let primary_quotient_order = n * n;
    if primary_quotient_order <= EXACT_SEQUENCE_LIMIT {
        let seq = exact_sequence_of(ext)?;
        let ok = seq.group.order() == primary_quotient_order && seq.kernel.order() == n;
        certificates.push(Certificate::new("exact_sequence", ok, 0.0));
    }
    certificates.push(Certificate::new("report_arithmetic", n % direct.index == 0, 0.0));

    let report = JordanReport {
        quotient_order: n,
        jordan_index: direct.index,
        witness: direct.witness,
        root_order: reduction.m,
        root_matrix: reduction.root,
        finite_model_order: reduction.finite.group.order(),
        theta_exponent: theta.exponent,
        primary_quotient_order,
        certificates,
    };
    if let Some(bad) = report.certificates.iter().find(|c| !c.passed) {
        return Err(Error::CertificationFailure(format!(
            "certificate `{}` failed",
            bad.name
        )));
    }
    Ok(report)
}

/// G = M/Θ with Θ = ⟨gⁿ⟩, n = |H|, and its projection onto H.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    /// Element `h·n + s` is the class of (s, h), 0 ≤ s < n.
    pub group: FiniteGroup,
    pub projection: GroupHom,
    /// Γ/Θ ≅ ℤ/n, the kernel of the projection.
    pub kernel: Subgroup,
}

pub fn exact_sequence_data(model: &LinearHopfModel, tol: &Tolerance) -> Result<ExactSequence> {
    let em = build_extension_model(model, tol)?;
    exact_sequence_of(&em.ext)
}

/// Builds 1 → Γ/Θ → M/Θ → H → 1 for a central extension and checks it:
/// the table is a group, the projection a surjective homomorphism, and its
/// kernel a central cyclic subgroup of order n.
pub fn exact_sequence_of(ext: &CentralExtensionZ) -> Result<ExactSequence> {
    if !ext.is_central() {
        return Err(Error::NonCentral);
    }
    let h = ext.quotient();
    let n = h.order();
    let order = n * n;
    if order > EXACT_SEQUENCE_LIMIT {
        return Err(Error::UnsupportedSize {
            what: "primary quotient order",
            size: order,
            limit: EXACT_SEQUENCE_LIMIT,
        });
    }
    let ni = n as i64;
    let mut table = Vec::with_capacity(order);
    for x in 0..order {
        let (hx, sx) = (x / n, (x % n) as i64);
        for y in 0..order {
            let (hy, sy) = (y / n, (y % n) as i64);
            let s = (sx + sy + ext.c(hx, hy)).rem_euclid(ni) as usize;
            table.push(h.mul(hx, hy) * n + s);
        }
    }
    let rows: Vec<Vec<usize>> = table.chunks(order).map(<[usize]>::to_vec).collect();
    let group = FiniteGroup::from_table(rows, h.identity() * n, None)?;
    let projection = GroupHom::new(&group, h, (0..order).map(|x| x / n).collect())?;
    let kernel = projection.kernel(h);
    let gamma = h.identity() * n + usize::from(n > 1);
    let cyclic = Subgroup::generated(&group, &[gamma]);
    if !projection.is_surjective()
        || kernel != cyclic
        || kernel.order() != n
        || !kernel.is_subset_of(&crate::group::center(&group))
    {
        return Err(Error::ModelInconsistency(
            "M/Θ → H is not a central extension by ℤ/n".into(),
        ));
    }
    Ok(ExactSequence {
        group,
        projection,
        kernel,
    })
}
