//! The transfer ρ(a) = aⁿ into the central ℤ, its kernel, the finite
//! commutator subgroup, the index-2 reduction and the subgroup ⟨Kⁿ⟩.

use alloc::format;
use alloc::vec::Vec;

use super::closure::closure_from_generators;
use super::extension::{CentralExtensionZ, ExtElement};
use super::finite::Subgroup;
use crate::{Error, Result};

/// ρ(t, h) = n·t + offset(h), where offset(h) is the ℤ coordinate of (0, h)ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMap {
    n: i64,
    offsets: Vec<i64>,
}

impl TransferMap {
    /// |H|
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn apply(&self, x: ExtElement) -> i64 {
        self.n * x.t + self.offsets[x.h]
    }
}

/// Builds ρ and checks that it is a homomorphism over all of H × H.
///
/// ρ is linear in t, so ρ((t₁,h₁)(t₂,h₂)) = ρ(t₁,h₁) + ρ(t₂,h₂) for all t
/// reduces to `offset(h₁) + offset(h₂) = n·c(h₁,h₂) + offset(h₁h₂)`.
pub fn transfer_power_map(ext: &CentralExtensionZ) -> Result<TransferMap> {
    if !ext.is_central() {
        return Err(Error::NonCentral);
    }
    let h = ext.quotient();
    let n = h.order() as i64;
    let offsets: Vec<i64> = h
        .elements()
        .map(|a| {
            let p = ext.pow(ExtElement::new(0, a), n);
            debug_assert_eq!(p.h, h.identity());
            p.t
        })
        .collect();
    for a in h.elements() {
        for b in h.elements() {
            if offsets[a] + offsets[b] != n * ext.c(a, b) + offsets[h.mul(a, b)] {
                return Err(Error::ModelInconsistency(format!(
                    "transfer is not additive at ({a}, {b})"
                )));
            }
        }
    }
    Ok(TransferMap { n, offsets })
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// R = ker ρ and the positive generator of im ρ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZQuotient {
    pub transfer: TransferMap,
    /// Members of R, sorted by (t, h).
    pub kernel: Vec<ExtElement>,
    pub index_m: i64,
}

impl ZQuotient {
    /// ρ / index_m, the surjection M → ℤ with kernel R.
    pub fn normalized(&self, x: ExtElement) -> i64 {
        self.transfer.apply(x) / self.index_m
    }
}

pub fn kernel_and_z_quotient(ext: &CentralExtensionZ) -> Result<ZQuotient> {
    let transfer = transfer_power_map(ext)?;
    let n = transfer.n;
    let index_m = transfer.offsets.iter().fold(n, |g, &o| gcd(g, o));
    // (t, h) ∈ R iff n·t = −offset(h); at most one t per h
    let mut kernel: Vec<ExtElement> = transfer
        .offsets
        .iter()
        .enumerate()
        .filter(|(_, &o)| o % n == 0)
        .map(|(h, &o)| ExtElement::new(-o / n, h))
        .collect();
    kernel.sort();

    // ker ρ ∩ Γ = {e}: ρ(t, e) = n·t
    if transfer.apply(ext.gamma()) == 0 {
        return Err(Error::ModelInconsistency("transfer vanishes on Γ".into()));
    }
    let member = |x: &ExtElement| kernel.binary_search(x).is_ok();
    let mut conjugators: Vec<ExtElement> = ext
        .quotient()
        .generators()
        .into_iter()
        .map(|h| ExtElement::new(0, h))
        .collect();
    conjugators.push(ext.gamma());
    for &x in &kernel {
        for &y in &kernel {
            if !member(&ext.mul(x, y)) {
                return Err(Error::ModelInconsistency("kernel of the transfer is not closed".into()));
            }
        }
        for &g in &conjugators {
            if !member(&ext.conj(g, x)) {
                return Err(Error::ModelInconsistency("kernel of the transfer is not normal".into()));
            }
        }
    }
    Ok(ZQuotient {
        transfer,
        kernel,
        index_m,
    })
}

/// The commutator subgroup of M, listed explicitly and sorted.
///
/// In a central extension [(t₁,h₁),(t₂,h₂)] depends only on (h₁,h₂). The
/// commutator subgroup lies in ker ρ, which meets Γ trivially, so it embeds
/// into H and |H| bounds the closure.
pub fn schur_commutators_finite(ext: &CentralExtensionZ) -> Result<Vec<ExtElement>> {
    if !ext.is_central() {
        return Err(Error::NonCentral);
    }
    let h = ext.quotient();
    let mut comms: Vec<ExtElement> = Vec::new();
    for a in h.elements() {
        for b in h.elements() {
            comms.push(ext.commutator(ExtElement::new(0, a), ExtElement::new(0, b)));
        }
    }
    comms.sort();
    comms.dedup();
    let closed = closure_from_generators(ext.identity(), &comms, h.order(), |x, y| ext.mul(*x, *y), |x, y| x == y)
        .map_err(|_| Error::ModelInconsistency("commutator subgroup exceeds |H|".into()))?;
    let mut out = closed.elements;
    out.sort();
    Ok(out)
}

/// The sub-extension over ker ε together with its index in M (1 or 2).
pub fn index2_reduction(ext: &CentralExtensionZ) -> (CentralExtensionZ, usize) {
    if ext.is_central() {
        return (ext.clone(), 1);
    }
    let kernel: Vec<usize> = ext.quotient().elements().filter(|&h| ext.sign(h) == 1).collect();
    (ext.restrict(&kernel), 2)
}

/// Θ = ⟨(n, e)⟩ with n = |H|, and the outcome of the inner-automorphism
/// check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCheck {
    pub exponent: usize,
    /// Largest |t − (±n)| seen; zero when every conjugate is (±n, e).
    pub worst_defect: i64,
    pub invariant: bool,
}

/// Conjugates (n, e) by every (t, h) with t ∈ {−2..2}; each result must be
/// (n, e) or (−n, e).
pub fn characteristic_power_subgroup(ext: &CentralExtensionZ) -> ThetaCheck {
    let n = ext.order();
    let kn = ExtElement::new(n as i64, ext.quotient().identity());
    let mut worst = 0i64;
    for h in ext.quotient().elements() {
        for t in -2..=2 {
            let y = ext.conj(ExtElement::new(t, h), kn);
            let defect = if y.h != kn.h {
                i64::MAX
            } else {
                (y.t - kn.t).abs().min((y.t + kn.t).abs())
            };
            worst = worst.max(defect);
        }
    }
    ThetaCheck {
        exponent: n,
        worst_defect: worst,
        invariant: worst == 0,
    }
}

/// Whether a user-supplied map σ: M → M, assumed to be an automorphism,
/// sends Θ = ⟨(n, e)⟩ into itself. Multiplicativity of σ is checked on
/// representatives with t ∈ {−2..2}.
pub fn theta_invariant_under(ext: &CentralExtensionZ, sigma: impl Fn(ExtElement) -> ExtElement) -> Result<bool> {
    let h = ext.quotient();
    for a in h.elements() {
        for b in h.elements() {
            for t in -2..=2 {
                let x = ExtElement::new(t, a);
                let y = ExtElement::new(-t, b);
                if sigma(ext.mul(x, y)) != ext.mul(sigma(x), sigma(y)) {
                    return Err(Error::InvalidHom(format!(
                        "σ is not multiplicative at ({t}, {a}), ({}, {b})",
                        -t
                    )));
                }
            }
        }
    }
    let n = ext.order() as i64;
    let y = sigma(ExtElement::new(n, h.identity()));
    Ok(y.h == h.identity() && y.t % n == 0)
}

/// Projection of a set of extension elements to a subgroup of H.
pub fn project_to_quotient(ext: &CentralExtensionZ, elements: &[ExtElement]) -> Subgroup {
    Subgroup::from_members_unchecked(ext.order(), elements.iter().map(|x| x.h).collect())
}
