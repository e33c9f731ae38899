//! Linear Hopf models: validation, the extension model of M over Γ = ⟨g⟩,
//! and the certified Jordan index.

use alloc::string::String;

mod model;
mod pipeline;

pub use model::{
    build_extension_model, validate_model, validation_certificates, ExtensionModel, LinearHopfModel, ValidationOptions,
    DEFAULT_QUOTIENT_CAP,
};
pub use pipeline::{aut_jordan_index, exact_sequence_data, exact_sequence_of, ExactSequence, JordanReport};

/// Outcome of one named runtime check.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    /// Worst residual observed by the check (0 for exact checks).
    pub residual: f64,
}

impl Certificate {
    pub fn new(name: &str, passed: bool, residual: f64) -> Self {
        Self {
            name: String::from(name),
            passed,
            residual,
        }
    }
}
