//! Commutant-preserving matrix roots, finite groups, central ℤ-extensions
//! and the Jordan index of linear Hopf models.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; file formats and the command-line front end live
//! in the companion `hopf-jordan-cli` crate.
//!
//! Layout:
//!
//! * [`matrix`] and [`spectra`]: dense complex matrices at desk scale
//!   (n ≤ 8), root-subspace decomposition, commutant-preserving m-th roots
//!   and contraction checks.
//! * [`group`]: finite groups by multiplication table, subgroup lattices,
//!   central ℤ-extensions given by integer 2-cocycles, the transfer map and
//!   the reduction of a linear extension to a finite matrix group.
//! * [`hopf`]: the pipeline from a linear Hopf model to a certified
//!   [`hopf::JordanReport`].
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod group;
pub mod hopf;
pub mod matrix;
pub mod spectra;
mod tolerance;

pub use error::{Error, Result};
pub use matrix::{c64, CMatrix, C64};
pub use tolerance::Tolerance;
