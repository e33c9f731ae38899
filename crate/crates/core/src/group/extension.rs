//! Extensions 1 → ℤ → M → H → 1 encoded by an integer 2-cocycle on H and
//! an action of H on ℤ by signs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog;
use super::finite::{FiniteGroup, GroupHom, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};
use crate::{Error, Result};

const COCYCLE_SAMPLES: usize = 50_000;

/// An element (t, h) of M: t is the ℤ coordinate, h indexes H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement {
    pub t: i64,
    pub h: usize,
}

impl ExtElement {
    pub const fn new(t: i64, h: usize) -> Self {
        Self { t, h }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtensionZ {
    quotient: FiniteGroup,
    cocycle: Vec<i64>,
    signs: Vec<i64>,
}

impl CentralExtensionZ {
    /// `cocycle[a][b] = c(a, b)`; `signs[h] = ε(h) ∈ {1, −1}`, or all +1 when
    /// `None`. Checks normalization, the sign homomorphism and the cocycle
    /// identity (exhaustively up to order 64, on a fixed sample above).
    pub fn new(quotient: FiniteGroup, cocycle: Vec<Vec<i64>>, signs: Option<Vec<i64>>) -> Result<Self> {
        let n = quotient.order();
        if cocycle.len() != n || cocycle.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCocycle(format!("cocycle must be {n}×{n}")));
        }
        let signs = signs.unwrap_or_else(|| vec![1; n]);
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidCocycle("action signs must be ±1, one per element".into()));
        }
        for a in quotient.elements() {
            for b in quotient.elements() {
                if signs[quotient.mul(a, b)] != signs[a] * signs[b] {
                    return Err(Error::InvalidCocycle(format!(
                        "action sign is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        let ext = Self {
            cocycle: cocycle.concat(),
            quotient,
            signs,
        };
        ext.check_cocycle()?;
        Ok(ext)
    }

    /// ℤ × H with the zero cocycle and trivial action.
    pub fn trivial(quotient: FiniteGroup) -> Self {
        let n = quotient.order();
        Self {
            quotient,
            cocycle: vec![0; n * n],
            signs: vec![1; n],
        }
    }

    fn check_cocycle(&self) -> Result<()> {
        let h = &self.quotient;
        let e = h.identity();
        for a in h.elements() {
            if self.c(e, a) != 0 || self.c(a, e) != 0 {
                return Err(Error::InvalidCocycle(format!(
                    "cocycle is not normalized at element {a}"
                )));
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let lhs = self.c(a, b) + self.c(h.mul(a, b), c);
            let rhs = self.signs[a] * self.c(b, c) + self.c(a, h.mul(b, c));
            if lhs != rhs {
                return Err(Error::InvalidCocycle(format!(
                    "cocycle identity fails at ({a}, {b}, {c})"
                )));
            }
            Ok(())
        };
        let n = h.order();
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0C0C_7C1E);
            for _ in 0..COCYCLE_SAMPLES {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    /// |H|
    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    #[inline]
    pub fn c(&self, a: usize, b: usize) -> i64 {
        self.cocycle[a * self.quotient.order() + b]
    }

    pub fn cocycle_rows(&self) -> Vec<Vec<i64>> {
        self.cocycle.chunks(self.order()).map(<[i64]>::to_vec).collect()
    }

    #[inline]
    pub fn sign(&self, h: usize) -> i64 {
        self.signs[h]
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    /// True when H acts trivially, i.e. Γ is central.
    pub fn is_central(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// ε as a homomorphism onto the cyclic group of order 2 (0 ↦ +1, 1 ↦ −1).
    pub fn action_sign(&self) -> GroupHom {
        let c2 = catalog::cyclic(2);
        let images = self.signs.iter().map(|&s| usize::from(s == -1)).collect();
        GroupHom::new(&self.quotient, &c2, images).expect("signs were checked to be multiplicative")
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement::new(0, self.quotient.identity())
    }

    /// The generator (1, e) of Γ.
    pub fn gamma(&self) -> ExtElement {
        ExtElement::new(1, self.quotient.identity())
    }

    pub fn mul(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        ExtElement::new(
            x.t + self.signs[x.h] * y.t + self.c(x.h, y.h),
            self.quotient.mul(x.h, y.h),
        )
    }

    pub fn inv(&self, x: ExtElement) -> ExtElement {
        let hi = self.quotient.inv(x.h);
        ExtElement::new(-self.signs[x.h] * (x.t + self.c(x.h, hi)), hi)
    }

    pub fn pow(&self, x: ExtElement, k: i64) -> ExtElement {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    /// x·y·x⁻¹
    pub fn conj(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// x·y·x⁻¹·y⁻¹
    pub fn commutator(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// The sub-extension over the subgroup with the given sorted members,
    /// reindexed to `0..members.len()`.
    pub(crate) fn restrict(&self, members: &[usize]) -> Self {
        let sub = super::finite::Subgroup::from_members_unchecked(self.order(), members.to_vec());
        let (group, embed) = sub.to_group(&self.quotient);
        let cocycle = embed
            .iter()
            .flat_map(|&a| embed.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.c(a, b))
            .collect();
        let signs = embed.iter().map(|&a| self.signs[a]).collect();
        Self {
            quotient: group,
            cocycle,
            signs,
        }
    }
}

/// The coboundary `c(a, b) = f(a) + f(b) − f(ab)` of a function with
/// `f(e) = 0` (trivial action).
pub fn coboundary(h: &FiniteGroup, f: &[i64]) -> Vec<Vec<i64>> {
    assert_eq!(f.len(), h.order());
    assert_eq!(f[h.identity()], 0, "f must vanish at the identity");
    h.elements()
        .map(|a| h.elements().map(|b| f[a] + f[b] - f[h.mul(a, b)]).collect())
        .collect()
}

/// `k · carry(χ(a), χ(b))` for a homomorphism χ: H → ℤ/d given by residues,
/// where `carry(x, y) = 1` when `x + y ≥ d`. This is the pullback of the
/// extension ℤ →(·d) ℤ → ℤ/d scaled by k.
pub fn pullback_carry(h: &FiniteGroup, chi: &[usize], d: usize, k: i64) -> Vec<Vec<i64>> {
    assert_eq!(chi.len(), h.order());
    h.elements()
        .map(|a| h.elements().map(|b| if chi[a] + chi[b] >= d { k } else { 0 }).collect())
        .collect()
}

/// Entrywise sum of cocycles (for a fixed action the cocycles form a group).
pub fn add(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

/// Every homomorphism H → ℤ/d, as residue vectors, in lexicographic order
/// of generator images.
pub fn cyclic_characters(h: &FiniteGroup, d: usize) -> Vec<Vec<usize>> {
    assert!(d >= 1);
    let gens = h.generators();
    let target = catalog::cyclic(d);
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        if let Some(images) = extend_from_generators(h, &gens, &assignment, d) {
            if GroupHom::new(h, &target, images.clone()).is_ok() {
                out.push(images);
            }
        }
        // next assignment in base d
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < d {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Propagates generator images along a breadth-first word search;
/// `None` when two words for the same element disagree.
fn extend_from_generators(h: &FiniteGroup, gens: &[usize], images: &[usize], d: usize) -> Option<Vec<usize>> {
    let mut out = vec![usize::MAX; h.order()];
    out[h.identity()] = 0;
    let mut queue = vec![h.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&g, &v) in gens.iter().zip(images) {
            let y = h.mul(x, g);
            let val = (out[x] + v) % d;
            if out[y] == usize::MAX {
                out[y] = val;
                queue.push(y);
            } else if out[y] != val {
                return None;
            }
        }
    }
    Some(out)
}
