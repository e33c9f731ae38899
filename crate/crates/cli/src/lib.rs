//! Command-line front end for `hopf-jordan-core`.
//!
//! Exit codes: 0 on success, 1 when the mathematics says no (failed
//! certificate, singular matrix, pipeline error), 2 when the input cannot
//! be read or parsed.

pub mod format;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_jordan_core::hopf::{
    aut_jordan_index, build_extension_model, validate_model, validation_certificates, ValidationOptions,
};
use hopf_jordan_core::spectra::commutant_preserving_root;
use hopf_jordan_core::Tolerance;
use sha2::{Digest, Sha256};

use format::{
    format_certificate, format_matrix, matrix_to_rows, parse, CertificateEntry, InputError, MatrixFile, ModelSpecFile,
    ReportContext, ReportFile, StageTiming,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hopf-jordan", version, about = "Jordan index of linear Hopf models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(clap::Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Residual tolerance (overrides the file)
    #[arg(long, global = true, value_name = "EPS")]
    pub tol: Option<f64>,
    /// Eigenvalue clustering radius (overrides the file)
    #[arg(long, global = true, value_name = "EPS")]
    pub cluster_eps: Option<f64>,
    /// Maximum number of cosets of Γ to enumerate (overrides the file)
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Seed for the sample points of the orbit check
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write the report here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Include wall-clock stage timings in the report
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the model certificates
    Validate { path: PathBuf },
    /// Compute and certify the Jordan index
    Jordan { path: PathBuf },
    /// Commutant-preserving m-th root of a matrix
    Root {
        path: PathBuf,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
    },
}

enum Failure {
    Input(String),
    Domain(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(format!("parse error at {e}"))
    }
}

struct Io<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs the CLI on already-parsed arguments and returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut io = Io { stdout, stderr };
    let result = match &cli.command {
        Command::Validate { path } => cmd_validate(path, &cli.opts, &mut io),
        Command::Jordan { path } => cmd_jordan(path, &cli.opts, &mut io),
        Command::Root { path, m } => cmd_root(path, *m, &cli.opts, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn read_input(path: &Path) -> Result<(String, String), Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let digest = format!("sha256:{}", hex::encode(Sha256::digest(&bytes)));
    let text = String::from_utf8(bytes).map_err(|_| Failure::Input(format!("{} is not UTF-8", path.display())))?;
    Ok((text, digest))
}

struct Loaded {
    model: hopf_jordan_core::hopf::LinearHopfModel,
    tol: Tolerance,
    digest: String,
}

fn load_model(path: &Path, opts: &GlobalOpts) -> Result<Loaded, Failure> {
    let (text, digest) = read_input(path)?;
    let spec: ModelSpecFile = parse(&text)?;
    let mut model = spec.to_model()?;
    let file_tol = spec.tolerance()?;
    let tol = Tolerance::new(
        opts.cluster_eps.unwrap_or(file_tol.eigen_cluster_eps),
        opts.tol.unwrap_or(file_tol.residual_eps),
    )
    .map_err(|e| Failure::Input(format!("invalid tolerance: {e}")))?;
    if let Some(cap) = opts.cap {
        if cap == 0 {
            return Err(Failure::Input("--cap must be positive".into()));
        }
        model = model.with_quotient_cap(cap);
    }
    if let Some(seed) = opts.seed {
        let options = ValidationOptions {
            seed,
            ..*model.options()
        };
        model = model.with_options(options);
    }
    Ok(Loaded { model, tol, digest })
}

fn emit(opts: &GlobalOpts, io: &mut Io<'_>, body: &str) -> Result<(), Failure> {
    match &opts.out {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => io
            .stdout
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write output: {e}"))),
    }
}

fn cmd_validate(path: &Path, opts: &GlobalOpts, io: &mut Io<'_>) -> Result<i32, Failure> {
    let loaded = load_model(path, opts)?;
    let certs: Vec<CertificateEntry> = validation_certificates(&loaded.model, &loaded.tol)
        .iter()
        .map(CertificateEntry::from)
        .collect();
    let body = match opts.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&certs).expect("certificates serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => certs.iter().map(format_certificate).collect(),
    };
    emit(opts, io, &body)?;
    match certs.iter().find(|c| !c.passed) {
        Some(bad) => Err(Failure::Domain(format!("certificate `{}` failed", bad.name))),
        None => Ok(EXIT_OK),
    }
}

fn cmd_jordan(path: &Path, opts: &GlobalOpts, io: &mut Io<'_>) -> Result<i32, Failure> {
    let start = Instant::now();
    let loaded = load_model(path, opts)?;
    let parsed = start.elapsed().as_secs_f64();
    fn domain(stage: &'static str) -> impl Fn(hopf_jordan_core::Error) -> Failure {
        move |e| Failure::Domain(format!("{stage}: {e}"))
    }

    let mut timings = vec![StageTiming {
        stage: "parse".into(),
        seconds: parsed,
    }];
    let t = Instant::now();
    validate_model(&loaded.model, &loaded.tol).map_err(domain("validate"))?;
    timings.push(StageTiming {
        stage: "validate".into(),
        seconds: t.elapsed().as_secs_f64(),
    });
    let t = Instant::now();
    build_extension_model(&loaded.model, &loaded.tol).map_err(domain("extension"))?;
    timings.push(StageTiming {
        stage: "extension".into(),
        seconds: t.elapsed().as_secs_f64(),
    });
    let t = Instant::now();
    let report = aut_jordan_index(&loaded.model, &loaded.tol).map_err(domain("jordan_index"))?;
    timings.push(StageTiming {
        stage: "jordan_index".into(),
        seconds: t.elapsed().as_secs_f64(),
    });

    let file = ReportFile::new(
        &report,
        ReportContext {
            input_digest: loaded.digest,
            tolerance: &loaded.tol,
            quotient_cap: loaded.model.quotient_cap(),
            seed: loaded.model.options().seed,
            timings: opts.timings.then_some(timings),
        },
    );
    // the text report already starts with the summary line
    if opts.out.is_some() || matches!(opts.format, OutputFormat::Json) {
        let _ = writeln!(io.stdout, "{}", file.summary());
    }
    let body = match opts.format {
        OutputFormat::Json => file.to_json(),
        OutputFormat::Text => file.to_text(),
    };
    emit(opts, io, &body)?;
    Ok(if file.certified { EXIT_OK } else { EXIT_DOMAIN })
}

fn cmd_root(path: &Path, m: u32, opts: &GlobalOpts, io: &mut Io<'_>) -> Result<i32, Failure> {
    let (text, _) = read_input(path)?;
    let file: MatrixFile = parse(&text)?;
    let k = file.to_matrix()?;
    let d = Tolerance::default();
    let tol = Tolerance::new(
        opts.cluster_eps.unwrap_or(d.eigen_cluster_eps),
        opts.tol.unwrap_or(d.residual_eps),
    )
    .map_err(|e| Failure::Input(format!("invalid tolerance: {e}")))?;
    let root = commutant_preserving_root(&k, m, &tol).map_err(|e| Failure::Domain(format!("root: {e}")))?;
    let residual = root.powu(u64::from(m)).dist(&k);
    let rows = matrix_to_rows(&root);
    let body = match opts.format {
        OutputFormat::Json => {
            let v = serde_json::json!({ "m": m, "root": rows, "residual": residual });
            let mut s = serde_json::to_string_pretty(&v).expect("root serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => format!("{}residual={residual:e}\n", format_matrix(&rows)),
    };
    emit(opts, io, &body)?;
    Ok(EXIT_OK)
}
