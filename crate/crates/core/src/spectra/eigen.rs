//! Eigenvalues of small dense complex matrices.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{c64, CMatrix, C64};
use crate::{Error, Result, Tolerance};

/// Largest dimension accepted by the spectral routines.
pub const MAX_DIM: usize = 8;

pub(crate) fn check_dim(k: &CMatrix) -> Result<()> {
    let n = k.dim();
    if n == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    if n > MAX_DIM {
        return Err(Error::UnsupportedSize {
            what: "matrix dimension",
            size: n,
            limit: MAX_DIM,
        });
    }
    if !k.is_finite() {
        return Err(Error::ContractViolation("matrix has non-finite entries".into()));
    }
    Ok(())
}

/// Eigenvalues with multiplicity, values closer than
/// `tol.eigen_cluster_eps` merged into their mean.
///
/// Output is sorted by real part, then imaginary part.
pub fn eigenvalues(k: &CMatrix, tol: &Tolerance) -> Result<Vec<(C64, usize)>> {
    check_dim(k)?;
    let raw = raw_eigenvalues(k)?;
    let clusters = single_linkage(&raw, tol.eigen_cluster_eps);
    Ok(clusters
        .iter()
        .map(|members| (mean(&raw, members), members.len()))
        .collect())
}

/// All n eigenvalues (with repetition) from the QR algorithm.
pub(crate) fn raw_eigenvalues(k: &CMatrix) -> Result<Vec<C64>> {
    let n = k.dim();
    let mut h = k.clone();
    hessenberg(&mut h);
    let mut eig = Vec::with_capacity(n);
    if n == 1 {
        eig.push(h[(0, 0)]);
        return Ok(eig);
    }

    let scale = h.max_norm().max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut iter = 0usize;
    loop {
        if hi == 0 {
            eig.push(h[(0, 0)]);
            break;
        }
        // find the start of the active unreduced block
        let mut l = hi;
        while l > 0 {
            let sub = h[(l, l - 1)].norm();
            let diag = h[(l, l)].norm() + h[(l - 1, l - 1)].norm();
            let diag = if diag == 0.0 { scale } else { diag };
            if sub <= f64::EPSILON * diag {
                h[(l, l - 1)] = c64(0.0, 0.0);
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig.push(h[(hi, hi)]);
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > 100 {
            return Err(Error::IllConditionedSpectrum(format!(
                "QR iteration did not converge for eigenvalue {}",
                hi + 1
            )));
        }
        let mu = if iter % 11 == 10 {
            // exceptional shift to break cycles
            let s = h[(hi, hi - 1)].norm();
            h[(hi, hi)] + c64(0.75 * s, 0.4375 * s)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, l, hi, mu);
    }
    eig.sort_by(cmp_complex);
    Ok(eig)
}

fn wilkinson_shift(h: &CMatrix, hi: usize) -> C64 {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let (m1, m2) = (mid + disc, mid - disc);
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Givens rotation `[[c, s], [-conj(s), c]]` mapping (a, b) to (r, 0).
fn givens(a: C64, b: C64) -> (f64, C64) {
    let na = a.norm();
    let nb = b.norm();
    if nb == 0.0 {
        return (1.0, c64(0.0, 0.0));
    }
    if na == 0.0 {
        return (0.0, c64(1.0, 0.0));
    }
    let r = na.hypot(nb);
    let phase = a / na;
    (na / r, phase * b.conj() / r)
}

fn qr_step(h: &mut CMatrix, l: usize, hi: usize, mu: C64) {
    for i in l..=hi {
        h[(i, i)] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - l);
    for k in l..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..=hi {
            let u = h[(k, j)];
            let v = h[(k + 1, j)];
            h[(k, j)] = u * c + s * v;
            h[(k + 1, j)] = -s.conj() * u + v * c;
        }
        rots.push((c, s));
    }
    for (off, &(c, s)) in rots.iter().enumerate() {
        let k = l + off;
        for i in l..=(k + 1).min(hi) {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * c + y * s.conj();
            h[(i, k + 1)] = -x * s + y * c;
        }
    }
    for i in l..=hi {
        h[(i, i)] += mu;
    }
}

/// In-place reduction to upper Hessenberg form by Householder reflections.
fn hessenberg(a: &mut CMatrix) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let alpha = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = v[0];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { c64(1.0, 0.0) };
        v[0] += phase * alpha;
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vn == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vn;
        }
        // A <- (I - 2vv*) A
        for j in 0..n {
            let s: C64 = v.iter().enumerate().map(|(i, vi)| vi.conj() * a[(k + 1 + i, j)]).sum();
            for (i, vi) in v.iter().enumerate() {
                a[(k + 1 + i, j)] -= vi * s * 2.0;
            }
        }
        // A <- A (I - 2vv*)
        for i in 0..n {
            let s: C64 = v.iter().enumerate().map(|(j, vj)| a[(i, k + 1 + j)] * vj).sum();
            for (j, vj) in v.iter().enumerate() {
                a[(i, k + 1 + j)] -= s * vj.conj() * 2.0;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = c64(0.0, 0.0);
        }
    }
}

pub(crate) fn cmp_complex(a: &C64, b: &C64) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

pub(crate) fn mean(values: &[C64], members: &[usize]) -> C64 {
    let s: C64 = members.iter().map(|&i| values[i]).sum();
    s / members.len() as f64
}

/// Single-linkage clusters at `radius`, sorted by cluster mean.
pub(crate) fn single_linkage(values: &[C64], radius: f64) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = alloc::vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_slot[r] {
            Some(g) => groups[g].push(i),
            None => {
                root_slot[r] = Some(groups.len());
                groups.push(alloc::vec![i]);
            }
        }
    }
    groups.sort_by(|a, b| cmp_complex(&mean(values, a), &mean(values, b)));
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: C64, b: C64, eps: f64) -> bool {
        (a - b).norm() <= eps
    }

    #[test]
    fn identity_has_one_double_eigenvalue() {
        let ev = eigenvalues(&CMatrix::identity(2), &Tolerance::default()).unwrap();
        assert_eq!(ev.len(), 1);
        assert!(close(ev[0].0, c64(1.0, 0.0), 1e-14));
        assert_eq!(ev[0].1, 2);
    }

    #[test]
    fn diagonal_eigenvalues() {
        let ev = eigenvalues(&CMatrix::diag(&[c64(2.0, 0.0), c64(3.0, 0.0)]), &Tolerance::default()).unwrap();
        assert_eq!(ev.len(), 2);
        assert!(close(ev[0].0, c64(2.0, 0.0), 1e-14) && ev[0].1 == 1);
        assert!(close(ev[1].0, c64(3.0, 0.0), 1e-14) && ev[1].1 == 1);
    }

    #[test]
    fn jordan_block_is_one_cluster() {
        let j = CMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        let ev = eigenvalues(&j, &Tolerance::default()).unwrap();
        assert_eq!(ev, vec![(c64(1.0, 0.0), 2)]);
    }

    #[test]
    fn rotation_has_conjugate_pair() {
        let r = CMatrix::from_real(&[&[0.0, -1.0], &[1.0, 0.0]]).unwrap();
        let ev = eigenvalues(&r, &Tolerance::default()).unwrap();
        assert_eq!(ev.len(), 2);
        assert!(close(ev[0].0, c64(0.0, -1.0), 1e-14));
        assert!(close(ev[1].0, c64(0.0, 1.0), 1e-14));
    }

    #[test]
    fn companion_matrix_roots() {
        // x^4 - 10x^3 + 35x^2 - 50x + 24 = (x-1)(x-2)(x-3)(x-4)
        let c = CMatrix::from_real(&[
            &[10.0, -35.0, 50.0, -24.0],
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        let ev = eigenvalues(&c, &Tolerance::default()).unwrap();
        assert_eq!(ev.len(), 4);
        for (i, (v, mult)) in ev.iter().enumerate() {
            assert_eq!(*mult, 1);
            assert!(close(*v, c64(i as f64 + 1.0, 0.0), 1e-10), "{v}");
        }
    }

    #[test]
    fn determinant_residual_vanishes_at_eigenvalues() {
        let k = CMatrix::from_rows(&[
            vec![c64(1.0, 0.5), c64(2.0, 0.0), c64(0.0, 1.0)],
            vec![c64(-1.0, 0.0), c64(0.5, 0.0), c64(1.0, 1.0)],
            vec![c64(0.3, 0.0), c64(0.0, -2.0), c64(2.0, 0.0)],
        ])
        .unwrap();
        for (lambda, _) in eigenvalues(&k, &Tolerance::default()).unwrap() {
            let shifted = &k - &CMatrix::scalar(3, lambda);
            assert!(shifted.det().norm() < 1e-10);
        }
    }

    #[test]
    fn oversized_input_is_rejected() {
        let big = CMatrix::identity(MAX_DIM + 1);
        assert!(matches!(
            eigenvalues(&big, &Tolerance::default()),
            Err(Error::UnsupportedSize { size: 9, .. })
        ));
    }
}
