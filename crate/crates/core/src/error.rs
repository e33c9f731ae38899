use alloc::string::String;
use alloc::vec::Vec;

use crate::hopf::Certificate;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{what} of size {size} exceeds the supported limit {limit}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    SingularInput,
    #[error("eigenvalue 0 has no m-th root")]
    SingularEigenvalue,
    #[error("ill-conditioned spectrum: {0}")]
    IllConditionedSpectrum(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("closure exceeded {cap} elements; the generated group is infinite or too large")]
    NotFinite { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("extension is not central: the action on the fiber is nontrivial")]
    NonCentral,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
    #[error("invalid model: certificate `{certificate}` failed")]
    InvalidModel {
        certificate: String,
        certificates: Vec<Certificate>,
    },
    #[error("coset enumeration exceeded {cap} cosets; the quotient is infinite or too large")]
    InfiniteQuotient { cap: usize },
    #[error("ill-conditioned model: {0}")]
    IllConditionedModel(String),
    #[error("certification failure: {0}")]
    CertificationFailure(String),
}
