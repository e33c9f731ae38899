//! Finite groups, central ℤ-extensions and the transfer machinery.

pub mod catalog;
mod closure;
mod extension;
mod finite;
mod lattice;
mod quotient;
mod reduce;
mod transfer;

pub use closure::{closure_from_generators, matrix_closure, permutation_closure, Enumerated};
pub use extension::{add, coboundary, cyclic_characters, pullback_carry, CentralExtensionZ, ExtElement};
pub use finite::{FiniteGroup, GroupHom, Subgroup, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};
pub use lattice::{
    all_subgroups, center, commutator_subgroup, minimal_abelian_index, AbelianIndex, SUBGROUP_LATTICE_CAP,
};
pub use quotient::quotient;
pub use reduce::{index_preservation_check, reduce_to_finite, FiniteReduction, IndexCheck};
pub use transfer::{
    characteristic_power_subgroup, index2_reduction, kernel_and_z_quotient, project_to_quotient,
    schur_commutators_finite, theta_invariant_under, transfer_power_map, ThetaCheck, TransferMap, ZQuotient,
};
