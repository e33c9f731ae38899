use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Certificate;
use crate::group::{closure_from_generators, CentralExtensionZ, ExtElement};
use crate::matrix::{c64, CMatrix, C64};
use crate::spectra::{is_linear_contraction, orbit_residual, spectral_radius, MAX_DIM};
use crate::{Error, Result, Tolerance};

pub const DEFAULT_QUOTIENT_CAP: usize = 512;

/// Sampling used by the dynamical contraction check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationOptions {
    pub seed: u64,
    /// Pseudo-random points in addition to the standard basis.
    pub random_points: usize,
    pub max_iter: usize,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            seed: 0x4F50_1E5D,
            random_points: 8,
            max_iter: 200,
        }
    }
}

/// Invertible matrices generating M ⊂ GL_n(ℂ), one of which is the
/// contraction g generating Γ.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearHopfModel {
    generators: Vec<CMatrix>,
    contraction_index: usize,
    quotient_cap: usize,
    options: ValidationOptions,
}

impl LinearHopfModel {
    /// Checks shapes only; the mathematical conditions are certificates of
    /// [`validate_model`].
    pub fn new(generators: Vec<CMatrix>, contraction_index: usize) -> Result<Self> {
        let n = match generators.first() {
            Some(g) => g.dim(),
            None => return Err(Error::Shape("a model needs at least one generator".into())),
        };
        if n > MAX_DIM {
            return Err(Error::UnsupportedSize {
                what: "model dimension",
                size: n,
                limit: MAX_DIM,
            });
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != n {
                return Err(Error::Shape(format!(
                    "generator {i} is {0}×{0}, expected {n}×{n}",
                    g.dim()
                )));
            }
            if !g.is_finite() {
                return Err(Error::ContractViolation(format!(
                    "generator {i} has non-finite entries"
                )));
            }
        }
        if contraction_index >= generators.len() {
            return Err(Error::Shape(format!(
                "contraction index {contraction_index} out of range for {} generators",
                generators.len()
            )));
        }
        Ok(Self {
            generators,
            contraction_index,
            quotient_cap: DEFAULT_QUOTIENT_CAP,
            options: ValidationOptions::default(),
        })
    }

    pub fn with_quotient_cap(mut self, cap: usize) -> Self {
        self.quotient_cap = cap.max(1);
        self
    }

    pub fn with_options(mut self, options: ValidationOptions) -> Self {
        self.options = options;
        self
    }

    pub fn dimension(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn contraction_index(&self) -> usize {
        self.contraction_index
    }

    pub fn contraction(&self) -> &CMatrix {
        &self.generators[self.contraction_index]
    }

    pub fn quotient_cap(&self) -> usize {
        self.quotient_cap
    }

    pub fn options(&self) -> &ValidationOptions {
        &self.options
    }

    /// The model conjugated by S: every generator A becomes S·A·S⁻¹.
    pub fn conjugated(&self, s: &CMatrix) -> Result<Self> {
        let s_inv = s.inverse()?;
        let generators = self
            .generators
            .iter()
            .map(|a| Ok(&s.try_mul(a)? * &s_inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            generators,
            ..self.clone()
        })
    }

    fn sample_points(&self) -> Vec<Vec<C64>> {
        let n = self.dimension();
        let mut points: Vec<Vec<C64>> = (0..n)
            .map(|i| (0..n).map(|j| c64(if i == j { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(self.options.seed);
        for _ in 0..self.options.random_points {
            points.push(
                (0..n)
                    .map(|_| c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect(),
            );
        }
        points
    }
}

/// Runs every validation check and reports each outcome; never fails.
pub fn validation_certificates(model: &LinearHopfModel, tol: &Tolerance) -> Vec<Certificate> {
    let g = model.contraction();
    let mut out = Vec::new();
    out.push(Certificate::new("dimension", model.dimension() >= 2, 0.0));

    let min_det = model
        .generators
        .iter()
        .map(|a| a.det().norm())
        .fold(f64::INFINITY, f64::min);
    let invertible = model.generators.iter().all(|a| !a.is_numerically_singular());
    out.push(Certificate::new("invertibility", invertible, min_det));

    let radius = spectral_radius(g, tol).unwrap_or(f64::INFINITY);
    out.push(Certificate::new("contraction", is_linear_contraction(g, tol), radius));

    let mut converged = true;
    let mut worst: f64 = 0.0;
    for x in model.sample_points() {
        let (ok, last) = orbit_residual(g, &x, model.options.max_iter, tol.residual_eps);
        converged &= ok;
        worst = worst.max(last);
    }
    out.push(Certificate::new("orbit_convergence", converged, worst));

    // A·g·A⁻¹ = g for every generator: a contraction's spectrum is never
    // that of its inverse, so g^{-1} cannot occur.
    let mut normal = invertible;
    let mut worst: f64 = 0.0;
    if invertible {
        for a in &model.generators {
            match a.inverse() {
                Ok(ai) => {
                    let r = (&(a * g) * &ai).dist(g);
                    worst = worst.max(r);
                    normal &=
                        r <= tol.residual_eps * g.max_norm().max(1.0) * a.max_norm().max(1.0) * ai.max_norm().max(1.0);
                }
                Err(_) => normal = false,
            }
        }
    }
    out.push(Certificate::new("normality", normal, worst));
    out
}

/// All validation certificates, failing with [`Error::InvalidModel`] on the
/// first one that does not pass.
pub fn validate_model(model: &LinearHopfModel, tol: &Tolerance) -> Result<Vec<Certificate>> {
    let certificates = validation_certificates(model, tol);
    if let Some(bad) = certificates.iter().find(|c| !c.passed) {
        return Err(Error::InvalidModel {
            certificate: bad.name.clone(),
            certificates: certificates.clone(),
        });
    }
    Ok(certificates)
}

/// M as an extension of H = M/Γ by Γ = ⟨g⟩ ≅ ℤ.
#[derive(Clone, Debug)]
pub struct ExtensionModel {
    pub ext: CentralExtensionZ,
    /// Coset representatives R_h, with R_e = E; the element (t, h) of the
    /// extension is g^t·R_h.
    pub representatives: Vec<CMatrix>,
    /// Position of every model generator in the extension.
    pub generator_coords: Vec<ExtElement>,
    pub certificates: Vec<Certificate>,
}

/// Decides membership in Γ = ⟨g⟩ up to tolerance.
struct GammaTest<'a> {
    g: &'a CMatrix,
    log_det_g: f64,
    eps: f64,
}

impl GammaTest<'_> {
    /// k with D = g^k, if any. The only candidate is the rounded ratio of
    /// log-determinants.
    fn exponent(&self, d: &CMatrix) -> Option<(i64, f64)> {
        let ld = d.det().norm().ln();
        if !ld.is_finite() {
            return None;
        }
        let k = (ld / self.log_det_g).round();
        if k.abs() > 1e6 {
            return None;
        }
        let k = k as i64;
        let gk = self.g.powi(k).ok()?;
        let r = d.dist(&gk);
        (r <= self.eps * d.max_norm().max(gk.max_norm())).then_some((k, r))
    }

    /// D·g^{−k} with |det| as close to 1 as possible.
    fn normalize(&self, d: &CMatrix) -> CMatrix {
        let k = (d.det().norm().ln() / self.log_det_g).round();
        if !k.is_finite() || k == 0.0 || k.abs() > 1e6 {
            return d.clone();
        }
        match self.g.powi(-(k as i64)) {
            Ok(p) => d * &p,
            Err(_) => d.clone(),
        }
    }
}

/// Enumerates the cosets of Γ in M and reads off the 2-cocycle from
/// `R_a·R_b = g^{c(a,b)}·R_{ab}`.
pub fn build_extension_model(model: &LinearHopfModel, tol: &Tolerance) -> Result<ExtensionModel> {
    validate_model(model, tol)?;
    let g = model.contraction();
    let n = model.dimension();
    let log_det_g = g.det().norm().ln();
    // k is read off as a ratio of logs; below this the candidate is unreliable
    if log_det_g.is_nan() || log_det_g >= -1e-6 * n as f64 {
        return Err(Error::IllConditionedModel(format!(
            "log|det g| = {log_det_g:.3e} is too close to 0 to separate powers of g"
        )));
    }
    let test = GammaTest {
        g,
        log_det_g,
        eps: tol.residual_eps,
    };
    let same_coset = |a: &CMatrix, b: &CMatrix| match a.inverse() {
        Ok(ai) => test.exponent(&(&ai * b)).is_some(),
        Err(_) => false,
    };
    let cap = model.quotient_cap;
    let enumerated = closure_from_generators(
        CMatrix::identity(n),
        &model.generators,
        cap,
        |a, b| test.normalize(&(a * b)),
        same_coset,
    )
    .map_err(|e| match e {
        Error::NotFinite { cap } => Error::InfiniteQuotient { cap },
        other => other,
    })?;
    let h = enumerated.group;
    let reps = enumerated.elements;
    let inverses = reps.iter().map(CMatrix::inverse).collect::<Result<Vec<_>>>()?;

    let mut worst: f64 = 0.0;
    let mut exponent_of = |d: &CMatrix, what: &dyn Fn() -> alloc::string::String| -> Result<i64> {
        let (k, r) = test.exponent(d).ok_or_else(|| Error::ModelInconsistency(what()))?;
        worst = worst.max(r);
        Ok(k)
    };

    let order = h.order();
    let mut cocycle = vec![vec![0i64; order]; order];
    for a in 0..order {
        for b in 0..order {
            let d = &inverses[h.mul(a, b)] * &(&reps[a] * &reps[b]);
            cocycle[a][b] = exponent_of(&d, &|| format!("R_{a}·R_{b} is not in the coset R_{}Γ", h.mul(a, b)))?;
        }
    }
    let generator_coords = model
        .generators
        .iter()
        .zip(&enumerated.generator_indices)
        .enumerate()
        .map(|(i, (a, &hi))| {
            let t = exponent_of(&(&inverses[hi] * a), &|| format!("generator {i} is not in its coset"))?;
            Ok(ExtElement::new(t, hi))
        })
        .collect::<Result<Vec<_>>>()?;

    let ext = CentralExtensionZ::new(h, cocycle, None)
        .map_err(|e| Error::ModelInconsistency(format!("coset data does not define an extension: {e}")))?;
    let certificates = vec![
        Certificate::new("coset_enumeration", true, 0.0),
        Certificate::new("cocycle_consistency", true, worst),
    ];
    Ok(ExtensionModel {
        ext,
        representatives: reps,
        generator_coords,
        certificates,
    })
}
