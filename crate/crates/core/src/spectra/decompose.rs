//! Root-subspace (generalized eigenspace) decomposition.
//!
//! Projectors are built as Hermite interpolation polynomials in K: for the
//! cluster means μ_i with multiplicities k_i, `p_i ≡ 1 mod (x-μ_i)^{k_i}`
//! and `p_i ≡ 0 mod (x-μ_j)^{k_j}` for j ≠ i. Every projector (and so every
//! nilpotent part) is therefore a polynomial in K.
//!
//! Defective eigenvalues come out of the QR iteration split by roughly
//! δ^{1/k} for a k-fold block under a perturbation of size δ. Clustering
//! starts at `eigen_cluster_eps` and walks the single-linkage levels until
//! the decomposition passes its residual checks; a level is only tried when
//! each k-element cluster has spread within `scale · eigen_cluster_eps^{1/k}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::eigen::{check_dim, mean, raw_eigenvalues, single_linkage};
use crate::matrix::{c64, CMatrix, C64};
use crate::{Error, Result, Tolerance};

#[derive(Clone, Debug, PartialEq)]
pub struct RootDecomposition {
    eigenvalues: Vec<C64>,
    multiplicities: Vec<usize>,
    projectors: Vec<CMatrix>,
    nilpotents: Vec<CMatrix>,
}

impl RootDecomposition {
    pub fn eigenvalues(&self) -> &[C64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projectors(&self) -> &[CMatrix] {
        &self.projectors
    }

    pub fn nilpotents(&self) -> &[CMatrix] {
        &self.nilpotents
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.projectors.first().map_or(0, CMatrix::dim)
    }

    /// `Σ (λ_i P_i + N_i)`.
    pub fn reconstruct(&self) -> CMatrix {
        let mut k = CMatrix::zeros(self.dim());
        for ((&l, p), nil) in self.eigenvalues.iter().zip(&self.projectors).zip(&self.nilpotents) {
            k = &(&k + &p.scale(l)) + nil;
        }
        k
    }

    /// Worst residual over the projector algebra, nilpotency and
    /// reconstruction identities, each measured in the max-entry norm.
    pub fn residuals(&self, k: &CMatrix) -> DecompositionResiduals {
        let n = self.dim();
        let mut sum = CMatrix::zeros(n);
        let mut algebra: f64 = 0.0;
        let mut nilpotency: f64 = 0.0;
        for (i, p) in self.projectors.iter().enumerate() {
            sum = &sum + p;
            for (j, q) in self.projectors.iter().enumerate() {
                let pq = p * q;
                let r = if i == j { pq.dist(p) } else { pq.max_norm() };
                algebra = algebra.max(r);
            }
            let nil = &self.nilpotents[i];
            nilpotency = nilpotency.max(nil.powu(self.multiplicities[i] as u64).max_norm());
        }
        DecompositionResiduals {
            partition: sum.dist(&CMatrix::identity(n)),
            algebra,
            nilpotency,
            reconstruction: self.reconstruct().dist(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecompositionResiduals {
    /// ‖Σ P_i − E‖
    pub partition: f64,
    /// max ‖P_i P_j − δ_ij P_i‖
    pub algebra: f64,
    /// max ‖N_i^{k_i}‖
    pub nilpotency: f64,
    /// ‖Σ(λ_i P_i + N_i) − K‖
    pub reconstruction: f64,
}

impl DecompositionResiduals {
    pub fn max(&self) -> f64 {
        self.partition
            .max(self.algebra)
            .max(self.nilpotency)
            .max(self.reconstruction)
    }
}

pub fn root_decomposition(k: &CMatrix, tol: &Tolerance) -> Result<RootDecomposition> {
    check_dim(k)?;
    if k.is_numerically_singular() {
        return Err(Error::SingularInput);
    }
    let raw = raw_eigenvalues(k)?;
    let scale = k.max_norm().max(1.0);
    if raw.iter().any(|l| l.norm() <= tol.residual_eps * scale) {
        return Err(Error::SingularInput);
    }

    let mut best = f64::INFINITY;
    for clusters in candidate_clusterings(&raw, tol.eigen_cluster_eps, scale) {
        let means: Vec<C64> = clusters.iter().map(|c| mean(&raw, c)).collect();
        let mults: Vec<usize> = clusters.iter().map(Vec::len).collect();
        let dec = assemble(k, &means, &mults);
        let res = dec.residuals(k);
        let trace_err = dec
            .projectors
            .iter()
            .zip(&mults)
            .map(|(p, &m)| (p.trace() - c64(m as f64, 0.0)).norm())
            .fold(0.0, f64::max);
        let worst_nil = dec
            .nilpotents
            .iter()
            .zip(&mults)
            .map(|(nil, &m)| nil.powu(m as u64).max_norm() / scale.powi(m as i32))
            .fold(0.0, f64::max);
        let ok = res.partition <= tol.residual_eps * scale
            && res.algebra <= tol.residual_eps * scale
            && worst_nil <= tol.residual_eps
            && res.reconstruction <= tol.residual_eps * scale
            && trace_err <= 0.5;
        if ok {
            return Ok(dec);
        }
        best = best.min(res.max());
    }
    Err(Error::IllConditionedSpectrum(format!(
        "no eigenvalue clustering yields a consistent root decomposition (best residual {best:.3e})"
    )))
}

/// Single-linkage partitions from finest (`eps`) to coarsest, keeping only
/// those whose every cluster of size k has spread ≤ `scale · eps^{1/k}`.
fn candidate_clusterings(raw: &[C64], eps: f64, scale: f64) -> Vec<Vec<Vec<usize>>> {
    let mut radii: Vec<f64> = Vec::new();
    for i in 0..raw.len() {
        for j in i + 1..raw.len() {
            let d = (raw[i] - raw[j]).norm();
            if d > eps {
                radii.push(d);
            }
        }
    }
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for r in core::iter::once(eps).chain(radii) {
        let clusters = single_linkage(raw, r);
        if out.last() == Some(&clusters) {
            continue;
        }
        let admissible = clusters.iter().all(|c| {
            if c.len() == 1 {
                return true;
            }
            let centre = mean(raw, c);
            let spread = c.iter().map(|&x| (raw[x] - centre).norm()).fold(0.0, f64::max);
            spread <= eps.max(scale * eps.powf(1.0 / c.len() as f64))
        });
        if admissible {
            out.push(clusters);
        } else if clusters.len() == 1 {
            break;
        }
    }
    out
}

fn assemble(k: &CMatrix, means: &[C64], mults: &[usize]) -> RootDecomposition {
    let n = k.dim();
    let e = CMatrix::identity(n);
    let shifted: Vec<CMatrix> = means.iter().map(|&mu| k - &e.scale(mu)).collect();
    let mut projectors = Vec::with_capacity(means.len());
    let mut nilpotents = Vec::with_capacity(means.len());
    for i in 0..means.len() {
        let ki = mults[i];
        // q_i(μ_i + y) truncated to degree k_i − 1
        let mut q_taylor = vec![c64(0.0, 0.0); ki];
        q_taylor[0] = c64(1.0, 0.0);
        let mut q_matrix = e.clone();
        for j in 0..means.len() {
            if j == i {
                continue;
            }
            let d = means[i] - means[j];
            for _ in 0..mults[j] {
                // multiply by (y + d)
                for t in (0..ki).rev() {
                    let prev = if t > 0 { q_taylor[t - 1] } else { c64(0.0, 0.0) };
                    q_taylor[t] = q_taylor[t] * d + prev;
                }
                q_matrix = &q_matrix * &shifted[j];
            }
        }
        let r = invert_series(&q_taylor);
        let p = &q_matrix * &shifted[i].polynomial(&r);
        let nil = &shifted[i] * &p;
        projectors.push(p);
        nilpotents.push(nil);
    }
    RootDecomposition {
        eigenvalues: means.to_vec(),
        multiplicities: mults.to_vec(),
        projectors,
        nilpotents,
    }
}

/// Coefficients of `1 / a(y)` modulo `y^{len}`; `a[0]` must be nonzero.
fn invert_series(a: &[C64]) -> Vec<C64> {
    let mut b = vec![c64(0.0, 0.0); a.len()];
    b[0] = a[0].inv();
    for t in 1..a.len() {
        let mut s = c64(0.0, 0.0);
        for j in 1..=t {
            s += a[j] * b[t - j];
        }
        b[t] = -s * b[0];
    }
    b
}
