use alloc::format;

use crate::{Error, Result};

/// Numerical thresholds shared by every floating-point check.
///
/// All matrix comparisons use the max-entry norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Radius for grouping numerically close eigenvalues.
    pub eigen_cluster_eps: f64,
    /// Norm bound for matrix-equation checks.
    pub residual_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EIGEN_CLUSTER_EPS: f64 = 1e-7;
    pub const DEFAULT_RESIDUAL_EPS: f64 = 1e-8;

    pub fn new(eigen_cluster_eps: f64, residual_eps: f64) -> Result<Self> {
        for (name, v) in [("eigen_cluster_eps", eigen_cluster_eps), ("residual_eps", residual_eps)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::ContractViolation(format!(
                    "{name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(Self {
            eigen_cluster_eps,
            residual_eps,
        })
    }

    pub fn with_residual_eps(self, residual_eps: f64) -> Result<Self> {
        Self::new(self.eigen_cluster_eps, residual_eps)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eigen_cluster_eps: Self::DEFAULT_EIGEN_CLUSTER_EPS,
            residual_eps: Self::DEFAULT_RESIDUAL_EPS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_nan() {
        assert!(Tolerance::new(-1.0, 1e-8).is_err());
        assert!(Tolerance::new(1e-7, f64::NAN).is_err());
        assert!(Tolerance::new(0.0, 0.0).is_ok());
    }
}
