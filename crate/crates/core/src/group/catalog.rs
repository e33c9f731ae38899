//! Small named groups used throughout the test corpora.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::closure::permutation_closure;
use super::finite::FiniteGroup;

/// ℤ/n with element i standing for a^i.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    FiniteGroup::from_flat_unchecked(n, table, 0)
}

/// Dihedral group of order 2n; index i + n·b stands for r^i s^b.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (a, b) = (x % n, x / n);
        for y in 0..order {
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^{a ± c} s^{b+d}
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table[x * order + y] = rot + n * ((b + d) % 2);
        }
    }
    let labels = (0..order)
        .map(|x| match (x % n, x / n) {
            (0, 0) => String::from("e"),
            (i, 0) => format!("r^{i}"),
            (0, _) => String::from("s"),
            (i, _) => format!("r^{i}s"),
        })
        .collect();
    FiniteGroup::from_flat_unchecked(order, table, 0)
        .with_labels(labels)
        .expect("label count matches")
}

/// Quaternion group Q₈ = {±1, ±i, ±j, ±k}; index 2u + s stands for
/// (−1)^s · unit_u with units 1, i, j, k.
pub fn quaternion() -> FiniteGroup {
    // unit products as (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (sx, ux) = (x % 2, x / 2);
            let (sy, uy) = (y % 2, y / 2);
            let (s, u) = UNIT[ux][uy];
            table[x * 8 + y] = 2 * u + (sx + sy + s) % 2;
        }
    }
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| {
            let sign = if x % 2 == 1 { "-" } else { "" };
            format!("{sign}{}", names[x / 2])
        })
        .collect();
    FiniteGroup::from_flat_unchecked(8, table, 0)
        .with_labels(labels)
        .expect("label count matches")
}

/// Binary dihedral (dicyclic) group of order 4k:
/// ⟨a, b | a^{2k} = 1, b² = a^k, b a b⁻¹ = a⁻¹⟩. Index i + 2k·e is a^i b^e.
pub fn binary_dihedral(k: usize) -> FiniteGroup {
    assert!(k >= 1);
    let m = 2 * k;
    let order = 2 * m;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (i, e) = (x % m, x / m);
        for y in 0..order {
            let (j, f) = (y % m, y / m);
            table[x * order + y] = if e == 0 {
                (i + j) % m + m * f
            } else if f == 0 {
                (i + m - j) % m + m
            } else {
                // a^i b a^j b = a^{i-j} b² = a^{i-j+k}
                (i + m - j + k) % m
            };
        }
    }
    FiniteGroup::from_flat_unchecked(order, table, 0)
}

/// Symmetric group on n points, generated by (0 1) and (0 1 … n−1).
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    if n == 1 {
        return cyclic(1);
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    permutation_closure(&[swap, cycle], usize::MAX)
        .expect("symmetric group is finite")
        .group
}

/// Alternating group on n ≥ 3 points, generated by the 3-cycles (0 1 k).
pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    permutation_closure(&gens, usize::MAX)
        .expect("alternating group is finite")
        .group
}

/// G × H with index g·|H| + h.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (ng, nh) = (g.order(), h.order());
    let order = ng * nh;
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            table[x * order + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
        }
    }
    FiniteGroup::from_flat_unchecked(order, table, g.identity() * nh + h.identity())
}
