//! JSON file formats: model specs, matrix files and reports.

use std::fmt;

use hopf_jordan_core::hopf::{Certificate, JordanReport, LinearHopfModel};
use hopf_jordan_core::{c64, CMatrix, Tolerance};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// A complex number as `[re, im]`.
pub type Complex = [f64; 2];
/// Row-major rows of complex entries.
pub type MatrixRows = Vec<Vec<Complex>>;

/// Input error with the JSON path of the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for InputError {}

/// Deserializes `text`, reporting the path of the first error.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = match path.as_str() {
            "." | "?" => String::from("$"),
            p => format!("$.{}", p.trim_start_matches('.')),
        };
        InputError::new(path, e.into_inner().to_string())
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigen_cluster_eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_eps: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpecFile {
    pub schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub dimension: usize,
    pub generators: Vec<MatrixRows>,
    pub contraction_index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<ToleranceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_cap: Option<usize>,
}

fn check_schema(version: &str) -> Result<(), InputError> {
    if version != SCHEMA_VERSION {
        return Err(InputError::new(
            "$.schema_version",
            format!("unsupported schema version {version:?}, expected {SCHEMA_VERSION:?}"),
        ));
    }
    Ok(())
}

pub fn matrix_from_rows(rows: &MatrixRows, n: usize, path: &str) -> Result<CMatrix, InputError> {
    if rows.len() != n {
        return Err(InputError::new(
            path,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(InputError::new(
                format!("{path}[{i}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        for (j, z) in row.iter().enumerate() {
            if !z[0].is_finite() || !z[1].is_finite() {
                return Err(InputError::new(format!("{path}[{i}][{j}]"), "entry is not finite"));
            }
        }
        out.push(row.iter().map(|z| c64(z[0], z[1])).collect());
    }
    CMatrix::from_rows(&out).map_err(|e| InputError::new(path, e.to_string()))
}

pub fn matrix_to_rows(m: &CMatrix) -> MatrixRows {
    m.rows()
        .into_iter()
        .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

impl ModelSpecFile {
    /// Tolerance from the file's overrides on top of the defaults.
    pub fn tolerance(&self) -> Result<Tolerance, InputError> {
        let d = Tolerance::default();
        let spec = self.tolerance.clone().unwrap_or(ToleranceSpec {
            eigen_cluster_eps: None,
            residual_eps: None,
        });
        Tolerance::new(
            spec.eigen_cluster_eps.unwrap_or(d.eigen_cluster_eps),
            spec.residual_eps.unwrap_or(d.residual_eps),
        )
        .map_err(|e| InputError::new("$.tolerance", e.to_string()))
    }

    pub fn to_model(&self) -> Result<LinearHopfModel, InputError> {
        check_schema(&self.schema_version)?;
        let n = self.dimension;
        if n == 0 {
            return Err(InputError::new("$.dimension", "dimension must be positive"));
        }
        if self.generators.is_empty() {
            return Err(InputError::new("$.generators", "at least one generator is required"));
        }
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| matrix_from_rows(g, n, &format!("$.generators[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        if self.contraction_index >= gens.len() {
            return Err(InputError::new(
                "$.contraction_index",
                format!(
                    "index {} out of range for {} generators",
                    self.contraction_index,
                    gens.len()
                ),
            ));
        }
        if self.quotient_cap == Some(0) {
            return Err(InputError::new("$.quotient_cap", "cap must be positive"));
        }
        let model =
            LinearHopfModel::new(gens, self.contraction_index).map_err(|e| InputError::new("$", e.to_string()))?;
        Ok(match self.quotient_cap {
            Some(cap) => model.with_quotient_cap(cap),
            None => model,
        })
    }
}

/// A single matrix, for the `root` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<String>,
    pub matrix: MatrixRows,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<CMatrix, InputError> {
        if let Some(v) = &self.schema_version {
            check_schema(v)?;
        }
        let n = self.matrix.len();
        if n == 0 {
            return Err(InputError::new("$.matrix", "matrix is empty"));
        }
        matrix_from_rows(&self.matrix, n, "$.matrix")
    }
}

/// Residuals may be infinite (a diverging orbit); those are written as the
/// strings "inf", "-inf" and "nan" so the report stays valid JSON.
mod residual {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Number(f64),
        Token(String),
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            Repr::Number(*x)
        } else if x.is_nan() {
            Repr::Token("nan".into())
        } else if *x > 0.0 {
            Repr::Token("inf".into())
        } else {
            Repr::Token("-inf".into())
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Number(x) => Ok(x),
            Repr::Token(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                other => Err(serde::de::Error::custom(format!("unknown residual token {other:?}"))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateEntry {
    pub name: String,
    pub passed: bool,
    #[serde(with = "residual")]
    pub residual: f64,
}

impl From<&Certificate> for CertificateEntry {
    fn from(c: &Certificate) -> Self {
        Self {
            name: c.name.clone(),
            passed: c.passed,
            residual: c.residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessEntry {
    pub order: usize,
    pub index: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub schema_version: String,
    pub tool_version: String,
    /// `sha256:<hex>` of the input file bytes.
    pub input_digest: String,
    pub tolerance: ToleranceSpec,
    pub quotient_cap: usize,
    pub seed: u64,
    pub quotient_order: usize,
    pub jordan_index: usize,
    pub witness: WitnessEntry,
    pub root_order: u32,
    pub root_matrix: MatrixRows,
    pub finite_model_order: usize,
    pub theta_exponent: usize,
    pub primary_quotient_order: usize,
    pub certified: bool,
    pub certificates: Vec<CertificateEntry>,
    /// Wall-clock seconds per stage; only present when requested, since
    /// timings make otherwise identical runs differ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<StageTiming>>,
}

pub struct ReportContext<'a> {
    pub input_digest: String,
    pub tolerance: &'a Tolerance,
    pub quotient_cap: usize,
    pub seed: u64,
    pub timings: Option<Vec<StageTiming>>,
}

impl ReportFile {
    pub fn new(report: &JordanReport, ctx: ReportContext<'_>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            input_digest: ctx.input_digest,
            tolerance: ToleranceSpec {
                eigen_cluster_eps: Some(ctx.tolerance.eigen_cluster_eps),
                residual_eps: Some(ctx.tolerance.residual_eps),
            },
            quotient_cap: ctx.quotient_cap,
            seed: ctx.seed,
            quotient_order: report.quotient_order,
            jordan_index: report.jordan_index,
            witness: WitnessEntry {
                order: report.witness.order(),
                index: report.witness.index(),
                members: report.witness.members().to_vec(),
            },
            root_order: report.root_order,
            root_matrix: matrix_to_rows(&report.root_matrix),
            finite_model_order: report.finite_model_order,
            theta_exponent: report.theta_exponent,
            primary_quotient_order: report.primary_quotient_order,
            certified: report.certified(),
            certificates: report.certificates.iter().map(CertificateEntry::from).collect(),
            timings: ctx.timings,
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "order={} jordan_index={} certified={}",
            self.quotient_order, self.jordan_index, self.certified
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.summary());
        out.push('\n');
        out.push_str(&format!("input_digest {}\n", self.input_digest));
        out.push_str(&format!("root_order {}\n", self.root_order));
        out.push_str(&format!("finite_model_order {}\n", self.finite_model_order));
        out.push_str(&format!("theta_exponent {}\n", self.theta_exponent));
        out.push_str(&format!("primary_quotient_order {}\n", self.primary_quotient_order));
        out.push_str(&format!(
            "witness order={} members={:?}\n",
            self.witness.order, self.witness.members
        ));
        out.push_str("root_matrix\n");
        out.push_str(&format_matrix(&self.root_matrix));
        for c in &self.certificates {
            out.push_str(&format_certificate(c));
        }
        if let Some(t) = &self.timings {
            for s in t {
                out.push_str(&format!("time {} {:.6}s\n", s.stage, s.seconds));
            }
        }
        out
    }
}

pub fn format_certificate(c: &CertificateEntry) -> String {
    let status = if c.passed { "PASS" } else { "FAIL" };
    format!("{status} {} residual={:e}\n", c.name, c.residual)
}

pub fn format_matrix(rows: &MatrixRows) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|z| format!("{:+.12e}{:+.12e}i", z[0], z[1])).collect();
        out.push_str("  ");
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}
