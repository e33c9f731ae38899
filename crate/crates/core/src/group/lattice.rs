//! Centers, commutator subgroups, the subgroup lattice and the minimal
//! index of an abelian subgroup.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::finite::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// Largest group order accepted by [`all_subgroups`] and
/// [`minimal_abelian_index`].
pub const SUBGROUP_LATTICE_CAP: usize = 256;

pub fn center(g: &FiniteGroup) -> Subgroup {
    let members = g
        .elements()
        .filter(|&a| g.elements().all(|b| g.commute(a, b)))
        .collect();
    Subgroup::from_members_unchecked(g.order(), members)
}

pub fn commutator_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut comms: BTreeSet<usize> = BTreeSet::new();
    for a in g.elements() {
        for b in g.elements() {
            comms.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<usize> = comms.into_iter().collect();
    Subgroup::generated(g, &gens)
}

fn check_cap(g: &FiniteGroup) -> Result<()> {
    if g.order() > SUBGROUP_LATTICE_CAP {
        return Err(Error::UnsupportedSize {
            what: "group order for subgroup enumeration",
            size: g.order(),
            limit: SUBGROUP_LATTICE_CAP,
        });
    }
    Ok(())
}

/// Every subgroup exactly once, sorted by order and then member list.
///
/// Layer 1 holds the cyclic subgroups; layer k+1 joins each subgroup of
/// layer k with each cyclic subgroup. Every subgroup is generated by its
/// cyclic subgroups, so the layers eventually cover the lattice.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    check_cap(g)?;
    let cyclic: BTreeSet<Subgroup> = g.elements().map(|a| Subgroup::generated(g, &[a])).collect();
    let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
    let mut seen: BTreeSet<Subgroup> = cyclic.iter().cloned().collect();
    let mut layer: Vec<Subgroup> = cyclic.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for s in &layer {
            for c in &cyclic {
                if c.is_subset_of(s) {
                    continue;
                }
                let mut gens = s.members().to_vec();
                gens.push(cyclic_generator(g, c));
                let join = Subgroup::generated(g, &gens);
                if seen.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(out)
}

fn cyclic_generator(g: &FiniteGroup, c: &Subgroup) -> usize {
    c.members()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == c.order())
        .expect("cyclic subgroup has a generator")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianIndex {
    pub index: usize,
    pub witness: Subgroup,
}

/// Minimal `[G : A]` over abelian subgroups A. Among witnesses of the same
/// order the lexicographically largest member list wins.
pub fn minimal_abelian_index(g: &FiniteGroup) -> Result<AbelianIndex> {
    check_cap(g)?;
    if g.is_abelian() {
        return Ok(AbelianIndex {
            index: 1,
            witness: Subgroup::whole(g),
        });
    }
    let witness = all_subgroups(g)?
        .into_iter()
        .filter(|s| s.is_abelian(g))
        .max_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())))
        .expect("the trivial subgroup is abelian");
    Ok(AbelianIndex {
        index: witness.index(),
        witness,
    })
}
