//! Quotients by normal subgroups.

use alloc::vec;
use alloc::vec::Vec;

use super::finite::{FiniteGroup, GroupHom, Subgroup};
use crate::{Error, Result};

/// `G/N` with its projection. Cosets are numbered by their smallest
/// member, so the identity coset is 0 when the identity is element 0.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if n.parent_order() != g.order() {
        return Err(Error::InvalidSubgroup("subgroup belongs to a different group".into()));
    }
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::new();
    for a in g.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for &x in n.members() {
            coset_of[g.mul(a, x)] = c;
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let h = FiniteGroup::from_flat_unchecked(q, table, coset_of[g.identity()]);
    let proj = GroupHom::new(g, &h, coset_of)?;
    Ok((h, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, lattice};

    #[test]
    fn trivial_quotient_is_isomorphic() {
        let g = catalog::dihedral(3);
        let (q, p) = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q, FiniteGroup::from_table(g.table_rows(), 0, None).unwrap());
        assert_eq!(p, GroupHom::identity(&g));
    }

    #[test]
    fn s3_mod_a3() {
        let g = catalog::symmetric(3);
        let a3 = lattice::commutator_subgroup(&g);
        let (q, p) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.kernel(&q), a3);
    }

    #[test]
    fn q8_mod_center_is_klein() {
        let g = catalog::quaternion();
        let (q, _) = quotient(&g, &lattice::center(&g)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.elements().all(|x| q.mul(x, x) == q.identity()));
        FiniteGroup::from_table(q.table_rows(), q.identity(), None).unwrap();
    }

    #[test]
    fn non_normal_is_rejected() {
        let g = catalog::symmetric(3);
        let s = Subgroup::generated(&g, &[g.elements().find(|&x| g.element_order(x) == 2).unwrap()]);
        assert_eq!(quotient(&g, &s), Err(Error::NotNormal));
    }
}
