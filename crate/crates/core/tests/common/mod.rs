//! Shared generators for the integration suites.
#![allow(dead_code)]

use std::f64::consts::PI;

use hopf_jordan_core::group::{add, catalog, coboundary, cyclic_characters, pullback_carry, FiniteGroup};
use hopf_jordan_core::hopf::LinearHopfModel;
use hopf_jordan_core::{c64, CMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_c64(rng: &mut ChaCha8Rng) -> C64 {
    c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, |_, _| random_c64(rng))
}

/// Jordan block J_size(lambda) placed at `offset` inside `j`.
pub fn put_jordan_block(j: &mut CMatrix, offset: usize, size: usize, lambda: C64) {
    for i in 0..size {
        j[(offset + i, offset + i)] = lambda;
        if i + 1 < size {
            j[(offset + i, offset + i + 1)] = c64(1.0, 0.0);
        }
    }
}

/// Well-separated eigenvalue candidates with moduli in [0.6, 1.5].
pub fn eigenvalue_pool() -> Vec<C64> {
    let mut pool = Vec::new();
    for (ri, r) in [0.6, 1.0, 1.5].into_iter().enumerate() {
        for k in 0..7 {
            let theta = 2.0 * PI * k as f64 / 7.0 + 0.3 * ri as f64;
            pool.push(C64::from_polar(r, theta));
        }
    }
    pool
}

/// Condition number in the max-entry norm scaled by n (an upper bound
/// proxy for the 2-norm condition number up to a factor n).
pub fn condition(k: &CMatrix) -> f64 {
    match k.inverse() {
        Ok(inv) => k.max_norm() * inv.max_norm() * k.dim() as f64,
        Err(_) => f64::INFINITY,
    }
}

#[derive(Clone, Debug)]
pub struct RootCase {
    pub k: CMatrix,
    /// Block sizes of the Jordan form used to build K.
    pub blocks: Vec<usize>,
    pub eigen: Vec<C64>,
    pub conj: CMatrix,
}

/// K = S·J·S⁻¹ with J a random Jordan matrix (eigenvalues repeated across
/// blocks allowed) and cond(K) ≤ `max_cond`.
pub fn random_root_case(rng: &mut ChaCha8Rng, n: usize, max_cond: f64) -> RootCase {
    let pool = eigenvalue_pool();
    loop {
        let mut blocks = Vec::new();
        let mut left = n;
        while left > 0 {
            let size = rng.random_range(1..=left.min(3));
            blocks.push(size);
            left -= size;
        }
        let mut j = CMatrix::zeros(n);
        let mut eigen = Vec::new();
        let mut offset = 0;
        for &size in &blocks {
            // occasionally reuse the previous eigenvalue so a root subspace
            // carries several Jordan blocks
            let lambda = if !eigen.is_empty() && rng.random_bool(0.25) {
                *eigen.last().unwrap()
            } else {
                pool[rng.random_range(0..pool.len())]
            };
            put_jordan_block(&mut j, offset, size, lambda);
            eigen.push(lambda);
            offset += size;
        }
        let s = &CMatrix::identity(n) + &random_matrix(rng, n).scale(c64(0.7, 0.0));
        let Ok(s_inv) = s.inverse() else { continue };
        let k = &(&s * &j) * &s_inv;
        if condition(&k) <= max_cond {
            return RootCase {
                k,
                blocks,
                eigen,
                conj: s,
            };
        }
    }
}

/// A random polynomial in K of degree ≤ n, scaled to unit max-entry norm.
pub fn random_commutant(rng: &mut ChaCha8Rng, k: &CMatrix) -> CMatrix {
    let degree = rng.random_range(0..=k.dim());
    let coeffs: Vec<C64> = (0..=degree).map(|_| random_c64(rng)).collect();
    let a = k.polynomial(&coeffs);
    let norm = a.max_norm();
    if norm == 0.0 {
        CMatrix::identity(k.dim())
    } else {
        a.scale(c64(1.0 / norm, 0.0))
    }
}

/// S·T·S⁻¹ where T is block diagonal along the Jordan blocks of the case,
/// each block an upper-triangular Toeplitz matrix. T commutes with the
/// Jordan matrix, so the result commutes with K even when it is not a
/// polynomial in K (repeated eigenvalues across blocks).
pub fn random_block_commutant(rng: &mut ChaCha8Rng, case: &RootCase) -> CMatrix {
    let n = case.k.dim();
    let mut t = CMatrix::zeros(n);
    let mut offset = 0;
    for &size in &case.blocks {
        let diag: Vec<C64> = (0..size).map(|_| random_c64(rng)).collect();
        for i in 0..size {
            for j in i..size {
                t[(offset + i, offset + j)] = diag[j - i];
            }
        }
        offset += size;
    }
    let s_inv = case.conj.inverse().expect("conjugator is invertible");
    &(&case.conj * &t) * &s_inv
}

/// Groups of order ≤ 16 used for the extension suites.
pub fn extension_corpus() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for n in 1..=16 {
        out.push((format!("C{n}"), catalog::cyclic(n)));
    }
    for n in 2..=8 {
        out.push((format!("D{}", 2 * n), catalog::dihedral(n)));
    }
    out.push(("Q8".into(), catalog::quaternion()));
    out.push(("A4".into(), catalog::alternating(4)));
    out.push(("BD16".into(), catalog::binary_dihedral(4)));
    out.push((
        "C4xC2".into(),
        catalog::direct_product(&catalog::cyclic(4), &catalog::cyclic(2)),
    ));
    out
}

/// A random normalized cocycle for the trivial action: a coboundary plus a
/// multiple of the carry cocycle pulled back along a character H → ℤ/d.
/// The carry part is what makes the class nontrivial.
pub fn random_cocycle(rng: &mut ChaCha8Rng, h: &FiniteGroup) -> Vec<Vec<i64>> {
    let f: Vec<i64> = h
        .elements()
        .map(|x| if x == h.identity() { 0 } else { rng.random_range(-3..=3) })
        .collect();
    let d = rng.random_range(2..=4usize);
    let chars = cyclic_characters(h, d);
    let chi = &chars[rng.random_range(0..chars.len())];
    let k = rng.random_range(-2..=2i64);
    add(&coboundary(h, &f), &pullback_carry(h, chi, d, k))
}

/// Minimal index of an abelian subgroup by exhaustive search over subsets
/// of pairwise commuting elements that are closed under multiplication.
pub fn abelian_index_oracle(g: &FiniteGroup) -> usize {
    fn closed(g: &FiniteGroup, set: &[usize]) -> bool {
        set.contains(&g.identity()) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&g.mul(a, b))))
    }
    fn search(g: &FiniteGroup, next: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if next == g.order() {
            if chosen.len() > *best && closed(g, chosen) {
                *best = chosen.len();
            }
            return;
        }
        // bound: even taking every remaining element cannot beat best
        if chosen.len() + (g.order() - next) <= *best {
            return;
        }
        if chosen.iter().all(|&c| g.mul(c, next) == g.mul(next, c)) {
            chosen.push(next);
            search(g, next + 1, chosen, best);
            chosen.pop();
        }
        search(g, next + 1, chosen, best);
    }
    let mut best = 1;
    search(g, 0, &mut Vec::new(), &mut best);
    g.order() / best
}

/// Generators of finite subgroups of GL₂(ℂ), with the abstract group they
/// generate.
pub fn finite_matrix_groups() -> Vec<(&'static str, Vec<CMatrix>, FiniteGroup)> {
    let r4 = CMatrix::from_real(&[&[0.0, -1.0], &[1.0, 0.0]]).unwrap();
    let j = CMatrix::from_rows(&[vec![c64(0.0, 0.0), c64(0.0, 1.0)], vec![c64(0.0, 1.0), c64(0.0, 0.0)]]).unwrap();
    let flip = CMatrix::diag(&[c64(1.0, 0.0), c64(-1.0, 0.0)]);
    let zeta8 = C64::from_polar(1.0, PI / 4.0);
    let a8 = CMatrix::diag(&[zeta8, zeta8.conj()]);
    let (c, s) = ((2.0 * PI / 3.0).cos(), (2.0 * PI / 3.0).sin());
    let r3 = CMatrix::from_real(&[&[c, -s], &[s, c]]).unwrap();
    vec![
        ("C2", vec![flip.clone()], catalog::cyclic(2)),
        ("C4", vec![r4.clone()], catalog::cyclic(4)),
        ("Q8", vec![r4.clone(), j], catalog::quaternion()),
        ("BD16", vec![a8, r4], catalog::binary_dihedral(4)),
        ("S3", vec![r3, flip], catalog::symmetric(3)),
    ]
}

/// Scalar contractions times finite matrix groups, plus variants where an
/// even-order generator is multiplied by a square root of the contraction
/// (an odd-order one would enlarge H).
pub fn reduction_models() -> Vec<(String, LinearHopfModel, FiniteGroup)> {
    let scalars = [c64(0.5, 0.0), c64(0.8, 0.0), c64(1.0 / 3.0, 0.0), c64(0.3, 0.4)];
    let mut out = Vec::new();
    for (name, gens, abstract_group) in finite_matrix_groups() {
        for (si, &s) in scalars.iter().enumerate() {
            let g = CMatrix::scalar(2, s);
            let mut all = vec![g.clone()];
            all.extend(gens.iter().cloned());
            let model = LinearHopfModel::new(all, 0).unwrap();
            out.push((format!("{name}/s{si}"), model, abstract_group.clone()));
        }
        let s = c64(0.5, 0.0);
        let even = gens
            .iter()
            .position(|a| {
                (1..=24)
                    .find(|&k| a.powu(k).is_identity(1e-12))
                    .is_some_and(|k| k % 2 == 0)
            })
            .expect("every corpus group has an even-order generator");
        let mut all = vec![CMatrix::scalar(2, s)];
        all.extend(
            gens.iter()
                .enumerate()
                .map(|(i, a)| if i == even { a.scale(s.sqrt()) } else { a.clone() }),
        );
        let model = LinearHopfModel::new(all, 0).unwrap();
        out.push((format!("{name}/twisted"), model, abstract_group));
    }
    out
}
