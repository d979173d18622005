//! The three workflows behind the command line.
//!
//! Each `run_*` function reads its inputs, writes its output file and returns
//! a short human-readable report; the binary prints that report to stderr.

use csdc_core::emitter::{compile, CompileOptions};
use csdc_core::numkit::{frobenius_distance, pad_to_power_of_two};
use csdc_core::seo::{program_matrix, SeoProgram};
use csdc_core::{ComplexMatrix, Error as CoreError, DEFAULT_TOL, DEFAULT_ZERO_ANGLE};
use std::fs;
use std::path::{Path, PathBuf};

use crate::matrix_file::{parse_matrix, write_matrix};
use crate::seo_file::{parse_seo, write_seo};
use crate::FormatError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Compile,
    Decompile,
    Verify,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    /// Matrix file for compile and verify, SEO file for decompile.
    pub input: PathBuf,
    /// Written by compile (SEO) and decompile (matrix).
    pub output: Option<PathBuf>,
    /// SEO file checked by verify.
    pub seo: Option<PathBuf>,
    /// Radians.
    pub zero_angle_threshold: f64,
    pub unitarity_tol: f64,
    pub nbits_override: Option<usize>,
    pub optimize: bool,
}

impl RunConfig {
    pub fn new(mode: Mode, input: impl Into<PathBuf>) -> Self {
        RunConfig {
            mode,
            input: input.into(),
            output: None,
            seo: None,
            zero_angle_threshold: DEFAULT_ZERO_ANGLE,
            unitarity_tol: DEFAULT_TOL,
            nbits_override: None,
            optimize: true,
        }
    }

    pub fn validate(&self) -> Result<(), RunError> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(RunError::Config(format!("{name} must be positive, got {v}")))
            }
        };
        positive("zero-angle threshold", self.zero_angle_threshold)?;
        positive("tolerance", self.unitarity_tol)?;
        if self.input.as_os_str().is_empty() {
            return Err(RunError::Config("input path is empty".into()));
        }
        let needs = |p: &Option<PathBuf>, what: &str| match p {
            Some(p) if !p.as_os_str().is_empty() => Ok(()),
            _ => Err(RunError::Config(format!("{what} path is required"))),
        };
        match self.mode {
            Mode::Compile | Mode::Decompile => needs(&self.output, "output"),
            Mode::Verify => needs(&self.seo, "SEO"),
        }
    }

    fn compile_options(&self) -> CompileOptions {
        CompileOptions {
            optimize: self.optimize,
            zero_angle_threshold: self.zero_angle_threshold,
            tol: self.unitarity_tol,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("input is not unitary: ‖U†U − I‖_F = {defect:e} exceeds {bound:e}")]
    NotUnitary { defect: f64, bound: f64 },
    #[error("residual {residual:e} exceeds {bound:e}")]
    Residual { residual: f64, bound: f64 },
    #[error(transparent)]
    Core(CoreError),
}

impl RunError {
    /// 1 IO and other failures, 2 bad configuration (as for usage errors),
    /// 3 parse error, 4 non-unitary input, 5 residual above tolerance.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Io { .. } | RunError::Core(_) => 1,
            RunError::Config(_) => 2,
            RunError::Parse { .. } => 3,
            RunError::NotUnitary { .. } => 4,
            RunError::Residual { .. } => 5,
        }
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotUnitary { defect, bound } => RunError::NotUnitary { defect, bound },
            CoreError::Residual { residual, bound } => RunError::Residual { residual, bound },
            other => RunError::Core(other),
        }
    }
}

fn read(path: &Path) -> Result<String, RunError> {
    fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), RunError> {
    fs::write(path, text).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_matrix(path: &Path) -> Result<ComplexMatrix, RunError> {
    parse_matrix(&read(path)?).map_err(|source| RunError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_seo(path: &Path, nbits: Option<usize>) -> Result<SeoProgram, RunError> {
    parse_seo(&read(path)?, nbits).map_err(|source| RunError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run(cfg: &RunConfig) -> Result<String, RunError> {
    cfg.validate()?;
    match cfg.mode {
        Mode::Compile => run_compile(cfg),
        Mode::Decompile => run_decompile(cfg),
        Mode::Verify => run_verify(cfg),
    }
}

pub fn run_compile(cfg: &RunConfig) -> Result<String, RunError> {
    let u = load_matrix(&cfg.input)?;
    let c = compile(&u, &cfg.compile_options())?;
    write(cfg.output.as_deref().expect("validated"), &write_seo(&c.program))?;
    Ok(format!(
        "instructions: {}\nresidual: {:e}\npadded by {}\n",
        c.program.len(),
        c.residual,
        c.padding()
    ))
}

pub fn run_decompile(cfg: &RunConfig) -> Result<String, RunError> {
    let p = load_seo(&cfg.input, cfg.nbits_override)?;
    let m = program_matrix(&p);
    write(cfg.output.as_deref().expect("validated"), &write_matrix(&m))?;
    Ok(format!("bits: {}\ninstructions: {}\n", p.nbits(), p.len()))
}

pub fn run_verify(cfg: &RunConfig) -> Result<String, RunError> {
    let u = load_matrix(&cfg.input)?;
    let (padded, _) = pad_to_power_of_two(&u, cfg.unitarity_tol)?;
    let nbits = padded.dim().trailing_zeros() as usize;
    let seo_path = cfg.seo.as_deref().expect("validated");
    let p = load_seo(seo_path, Some(cfg.nbits_override.unwrap_or(nbits)))?;
    if p.nbits() != nbits {
        return Err(RunError::Config(format!(
            "program acts on {} bits, matrix on {nbits}",
            p.nbits()
        )));
    }
    let residual = frobenius_distance(&padded, &program_matrix(&p))?;
    let bound = cfg.unitarity_tol * padded.dim() as f64;
    if residual > bound {
        return Err(RunError::Residual { residual, bound });
    }
    Ok(format!("residual: {residual:e}\n"))
}
