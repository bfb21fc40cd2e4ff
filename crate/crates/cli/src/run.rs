//! Dispatches a configuration to its solver and writes the artifacts.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;
use weno3::euler1d::{self, Case1D};
use weno3::euler2d;
use weno3::scalar1d::OrderTable;
use weno3::{SolverError, Weno5Reference};

use crate::config::{CaseKind, RunConfig};

/// Environment variable naming the default output root.
pub const OUTPUT_ENV: &str = "WENO3_OUTPUT";
pub const DEFAULT_OUTPUT: &str = "weno3-out";

pub const MANIFEST: &str = "manifest.txt";
pub const FIELD: &str = "field.csv";
pub const CONVERGENCE: &str = "convergence.csv";
pub const FAILURE: &str = "failure.txt";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io { path: path.to_path_buf(), source }
}

/// Output root from the environment, or the default.
pub fn output_root() -> PathBuf {
    std::env::var_os(OUTPUT_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT))
}

/// What a run produced.
#[derive(Debug)]
pub struct RunOutcome {
    pub dir: PathBuf,
    pub files: Vec<PathBuf>,
    pub failure: Option<SolverError>,
    pub wall_time: f64,
    pub table: Option<OrderTable>,
}

impl RunOutcome {
    pub fn completed(&self) -> bool {
        self.failure.is_none()
    }
}

enum Product {
    Table(OrderTable),
    Field(String),
}

fn solve(cfg: &RunConfig) -> Result<Product, SolverError> {
    match cfg.case {
        CaseKind::Advection => {
            let mut rows = Vec::new();
            for n in cfg.ladder() {
                let case = cfg.advection_case(n);
                rows.push((n, case.dt(), case.linf_error(&cfg.params)?));
            }
            Ok(Product::Table(OrderTable::from_errors(&rows)))
        }
        CaseKind::Euler1(_) => {
            let field = euler1d::run_case(&cfg.setup_1d().unwrap(), &cfg.params)?;
            Ok(Product::Field(field.to_csv()))
        }
        CaseKind::Euler2(_) => {
            let field = euler2d::run_case(&cfg.setup_2d().unwrap(), &cfg.params)?;
            Ok(Product::Field(field.to_csv(cfg.stride)))
        }
    }
}

/// Directory a config writes to under `root`.
pub fn run_dir(cfg: &RunConfig, root: &Path) -> PathBuf {
    cfg.output
        .clone()
        .unwrap_or_else(|| root.join(format!("{}_{}", cfg.case.name(), cfg.scheme().name())))
}

/// Runs `cfg`, writing a manifest plus either the order table, the final
/// field, or a failure report. Solver failures are returned in the outcome.
pub fn run(cfg: &RunConfig, root: &Path) -> Result<RunOutcome, HarnessError> {
    let dir = run_dir(cfg, root);
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;
    let start = Instant::now();
    let result = solve(cfg);
    let wall_time = start.elapsed().as_secs_f64();

    let mut files = Vec::new();
    let mut write = |name: &str, text: &str| -> Result<(), HarnessError> {
        let path = dir.join(name);
        fs::write(&path, text).map_err(io_err(&path))?;
        files.push(path);
        Ok(())
    };

    let (failure, table) = match result {
        Ok(Product::Table(t)) => {
            write(CONVERGENCE, &t.to_csv())?;
            (None, Some(t))
        }
        Ok(Product::Field(csv)) => {
            if cfg.snapshots {
                write(FIELD, &csv)?;
            }
            (None, None)
        }
        Err(e) => {
            write(FAILURE, &e.report())?;
            (Some(e), None)
        }
    };

    let mut manifest = cfg.to_text();
    manifest.push_str(&format!("# completed={}\n", failure.is_none()));
    manifest.push_str(&format!("# wall_time_s={wall_time:.3}\n"));
    write(MANIFEST, &manifest)?;

    Ok(RunOutcome { dir, files, failure, wall_time, table })
}

/// Fine-grid fifth-order solution of a 1D case, written as a field file.
pub fn make_reference(case: Case1D, cells: Option<usize>, path: &Path) -> Result<(), HarnessError> {
    let mut setup = case.reference_setup();
    if let Some(n) = cells {
        setup.dt = case.default_dt() * case.default_cells() as f64 / n as f64;
        setup.cells = n;
    }
    let field = euler1d::run_case(&setup, &Weno5Reference).map_err(|e| HarnessError::Usage(e.to_string()))?;
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io_err(parent))?;
    }
    fs::write(path, field.to_csv()).map_err(io_err(path))
}

/// Manifest lines that describe the run, without `#` comments.
pub fn manifest_body(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}
