//! Enumerating the finite group generated by concrete elements.

use alloc::vec;
use alloc::vec::Vec;

use super::finite::FiniteGroup;
use crate::matrix::CMatrix;
use crate::{Error, Result};

/// A group enumerated from generators: the abstract table plus the
/// concrete element behind every index. Index 0 is the identity.
#[derive(Clone, Debug)]
pub struct Enumerated<T> {
    pub group: FiniteGroup,
    pub elements: Vec<T>,
    /// Index of each input generator.
    pub generator_indices: Vec<usize>,
}

impl<T> Enumerated<T> {
    pub fn index_of(&self, x: &T, eq: impl Fn(&T, &T) -> bool) -> Option<usize> {
        self.elements.iter().position(|y| eq(x, y))
    }
}

/// Closes `generators` under multiplication.
///
/// Elements are discovered breadth-first by right multiplication with the
/// generators; the full table is then read off the resulting Cayley graph
/// without further multiplications (x·y = (x·y')·g when y = y'·g).
/// Fails with [`Error::NotFinite`] once more than `cap` elements appear.
pub fn closure_from_generators<T: Clone>(
    identity: T,
    generators: &[T],
    cap: usize,
    mul: impl Fn(&T, &T) -> T,
    eq: impl Fn(&T, &T) -> bool,
) -> Result<Enumerated<T>> {
    let ngen = generators.len();
    let mut elements = vec![identity];
    // parent[j] = (p, g) with elements[j] = elements[p] · generators[g]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (g, gen) in generators.iter().enumerate() {
            let y = mul(&elements[i], gen);
            let idx = match elements.iter().position(|e| eq(e, &y)) {
                Some(idx) => idx,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::NotFinite { cap });
                    }
                    elements.push(y);
                    parent.push(Some((i, g)));
                    elements.len() - 1
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    let n = elements.len();
    let mut table = vec![0usize; n * n];
    for j in 0..n {
        for x in 0..n {
            table[x * n + j] = match parent[j] {
                None => x,
                Some((p, g)) => right[table[x * n + p] * ngen + g],
            };
        }
    }
    let group = FiniteGroup::from_flat_unchecked(n, table, 0);
    let generator_indices = (0..ngen).map(|g| right[g]).collect();
    Ok(Enumerated {
        group,
        elements,
        generator_indices,
    })
}

/// Matrix groups, with elements identified when their max-entry distance is
/// within `eps` times the larger of their norms.
pub fn matrix_closure(generators: &[CMatrix], cap: usize, eps: f64) -> Result<Enumerated<CMatrix>> {
    let n = match generators.first() {
        Some(g) => g.dim(),
        None => return Err(Error::Shape("no generators".into())),
    };
    for g in generators {
        if g.dim() != n {
            return Err(Error::Shape("generators have different dimensions".into()));
        }
    }
    closure_from_generators(
        CMatrix::identity(n),
        generators,
        cap,
        |a, b| a * b,
        |a, b| a.dist(b) <= eps * a.max_norm().max(b.max_norm()),
    )
}

/// Permutations of `0..degree` as image vectors; `(p·q)(x) = p(q(x))`.
pub fn permutation_closure(generators: &[Vec<usize>], cap: usize) -> Result<Enumerated<Vec<usize>>> {
    let degree = generators.first().map_or(0, Vec::len);
    for g in generators {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || core::mem::replace(&mut seen[x], true)) {
            return Err(Error::Shape(
                "generator is not a permutation of the common degree".into(),
            ));
        }
    }
    closure_from_generators(
        (0..degree).collect(),
        generators,
        cap,
        |p, q| q.iter().map(|&x| p[x]).collect(),
        |a, b| a == b,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    #[test]
    fn trivial_generators() {
        let e = permutation_closure(&[vec![0, 1, 2]], 10).unwrap();
        assert_eq!(e.group.order(), 1);
    }

    #[test]
    fn s3_from_transposition_and_three_cycle() {
        let e = permutation_closure(&[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap();
        assert_eq!(e.group.order(), 6);
        assert!(!e.group.is_abelian());
        // table agrees with direct composition
        for a in 0..6 {
            for b in 0..6 {
                let prod: Vec<usize> = e.elements[b].iter().map(|&x| e.elements[a][x]).collect();
                assert_eq!(e.elements[e.group.mul(a, b)], prod);
            }
        }
    }

    #[test]
    fn quaternion_matrices() {
        let i = CMatrix::from_real(&[&[0.0, -1.0], &[1.0, 0.0]]).unwrap();
        let j = CMatrix::from_rows(&[vec![c64(0.0, 0.0), c64(0.0, 1.0)], vec![c64(0.0, 1.0), c64(0.0, 0.0)]]).unwrap();
        let e = matrix_closure(&[i, j], 100, 1e-8).unwrap();
        assert_eq!(e.group.order(), 8);
        // exactly 8 pairwise distinct matrices
        for a in 0..8 {
            for b in 0..a {
                assert!(e.elements[a].dist(&e.elements[b]) > 0.5);
            }
        }
        for a in 0..8 {
            for b in 0..8 {
                let prod = &e.elements[a] * &e.elements[b];
                assert!(prod.approx_eq(&e.elements[e.group.mul(a, b)], 1e-12));
            }
        }
    }

    #[test]
    fn infinite_group_hits_cap() {
        let g = CMatrix::scalar(2, c64(0.5, 0.0));
        assert_eq!(
            matrix_closure(&[g], 50, 1e-8).unwrap_err(),
            Error::NotFinite { cap: 50 }
        );
    }
}
