//! Line-oriented `key=value` run configuration.
//!
//! ```text
//! # Shu–Osher with a softer amplification
//! case=shu_osher
//! scheme=es4
//! C_alpha=1.0
//! ```
//!
//! Blank lines and `#` comments are ignored. Unset keys take the case and
//! scheme defaults.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;
use weno3::euler1d::{Case1D, Setup1D};
use weno3::euler2d::{Case2D, Setup2D};
use weno3::scalar1d::{self, AdvectionCase};
use weno3::weights::ParamError;
use weno3::{Scheme, SchemeParams};

/// Parse or validation failure; `line` is 1-based, 0 for whole-file problems.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl ConfigError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ConfigError { line, message: message.into() }
    }
}

/// A registered problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    Advection,
    Euler1(Case1D),
    Euler2(Case2D),
}

impl CaseKind {
    pub const ALL: [CaseKind; 6] = [
        CaseKind::Advection,
        CaseKind::Euler1(Case1D::ShuOsher),
        CaseKind::Euler1(Case1D::Blast),
        CaseKind::Euler1(Case1D::StrongShock),
        CaseKind::Euler2(Case2D::Riemann),
        CaseKind::Euler2(Case2D::DoubleMach),
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Advection => "advection",
            CaseKind::Euler1(c) => c.name(),
            CaseKind::Euler2(c) => c.name(),
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            CaseKind::Advection => "periodic linear advection, convergence ladder to t=2",
            CaseKind::Euler1(Case1D::ShuOsher) => "shock / entropy-wave interaction on [-5,5]",
            CaseKind::Euler1(Case1D::Blast) => "interacting blast waves between solid walls",
            CaseKind::Euler1(Case1D::StrongShock) => "shock tube with pressure ratio 1e6",
            CaseKind::Euler2(Case2D::Riemann) => "four-quadrant 2D Riemann problem",
            CaseKind::Euler2(Case2D::DoubleMach) => "double Mach reflection of a Mach-10 shock",
        }
    }
}

impl FromStr for CaseKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseKind::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = CaseKind::ALL.iter().map(|c| c.name()).collect();
            format!("unknown case `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Everything one run needs, with defaults resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub case: CaseKind,
    pub params: SchemeParams,
    /// Advection: finest grid of the ladder. 1D: cell count. Riemann: cells per side.
    pub n: usize,
    pub nx: usize,
    pub ny: usize,
    pub dt: f64,
    pub t_end: f64,
    /// Advection only.
    pub cfl: f64,
    pub output: Option<PathBuf>,
    pub snapshots: bool,
    pub stride: usize,
}

impl RunConfig {
    /// Defaults of `case` with `scheme`.
    pub fn defaults(case: CaseKind, scheme: Scheme) -> Self {
        let params = SchemeParams::new(scheme);
        let base = RunConfig {
            case,
            params,
            n: 0,
            nx: 0,
            ny: 0,
            dt: 0.0,
            t_end: 0.0,
            cfl: scalar1d::DEFAULT_CFL,
            output: None,
            snapshots: true,
            stride: 1,
        };
        match case {
            CaseKind::Advection => RunConfig {
                n: *scalar1d::TABLE_LADDER.last().unwrap(),
                t_end: scalar1d::DEFAULT_T_END,
                ..base
            },
            CaseKind::Euler1(c) => {
                let s = c.setup();
                RunConfig { n: s.cells, dt: s.dt, t_end: s.t_end, ..base }
            }
            CaseKind::Euler2(c) => {
                let s = c.setup();
                RunConfig { n: s.nx, nx: s.nx, ny: s.ny, dt: s.dt, t_end: s.t_end, ..base }
            }
        }
    }

    pub fn scheme(&self) -> Scheme {
        self.params.scheme
    }

    /// Advection grids `10, 20, …, n`.
    pub fn ladder(&self) -> Vec<usize> {
        scalar1d::ladder_up_to(self.n)
    }

    pub fn advection_case(&self, n: usize) -> AdvectionCase {
        AdvectionCase { n, cfl: self.cfl, t_end: self.t_end }
    }

    pub fn setup_1d(&self) -> Option<Setup1D> {
        match self.case {
            CaseKind::Euler1(case) => Some(Setup1D { case, cells: self.n, dt: self.dt, t_end: self.t_end }),
            _ => None,
        }
    }

    pub fn setup_2d(&self) -> Option<Setup2D> {
        match self.case {
            CaseKind::Euler2(case) => Some(Setup2D { case, nx: self.nx, ny: self.ny, dt: self.dt, t_end: self.t_end }),
            _ => None,
        }
    }

    /// Config text that parses back to `self`.
    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "case={}", self.case.name());
        let _ = writeln!(s, "scheme={}", p.scheme.name());
        match self.case {
            CaseKind::Advection => {
                let _ = writeln!(s, "N={}", self.n);
                let _ = writeln!(s, "cfl={:.16e}", self.cfl);
            }
            CaseKind::Euler1(_) => {
                let _ = writeln!(s, "N={}", self.n);
                let _ = writeln!(s, "dt={:.16e}", self.dt);
            }
            CaseKind::Euler2(_) => {
                let _ = writeln!(s, "nx={}", self.nx);
                let _ = writeln!(s, "ny={}", self.ny);
                let _ = writeln!(s, "dt={:.16e}", self.dt);
            }
        }
        let _ = writeln!(s, "t_end={:.16e}", self.t_end);
        let _ = writeln!(s, "C_alpha={:.16e}", p.c_alpha);
        let _ = writeln!(s, "C_beta={:.16e}", p.c_beta);
        let _ = writeln!(s, "p={:.16e}", p.p);
        let _ = writeln!(s, "epsilon={:.16e}", p.epsilon);
        let _ = writeln!(s, "snapshots={}", self.snapshots);
        let _ = writeln!(s, "stride={}", self.stride);
        s
    }

    fn validate(&self) -> Result<(), ConfigError> {
        self.params.validate().map_err(|e| ConfigError::new(0, param_message(&e)))?;
        let whole = |m: String| ConfigError::new(0, m);
        match self.case {
            CaseKind::Advection => {
                if self.n < 10 || !(self.n % 10 == 0 && (self.n / 10).is_power_of_two()) {
                    return Err(whole(format!("advection N must be 10·2^k, got {}", self.n)));
                }
                for n in self.ladder() {
                    self.advection_case(n).steps().map_err(|e| whole(e.to_string()))?;
                }
            }
            CaseKind::Euler1(_) => {
                self.setup_1d().unwrap().steps().map_err(|e| whole(e.to_string()))?;
            }
            CaseKind::Euler2(c) => {
                if c == Case2D::DoubleMach && self.nx != 4 * self.ny {
                    return Err(whole(format!("dmr grid must be 4:1, got {}x{}", self.nx, self.ny)));
                }
                if c == Case2D::Riemann && self.nx != self.ny {
                    return Err(whole(format!("riemann2d grid must be square, got {}x{}", self.nx, self.ny)));
                }
                self.setup_2d().unwrap().steps().map_err(|e| whole(e.to_string()))?;
            }
        }
        Ok(())
    }
}

fn param_message(e: &ParamError) -> String {
    match e {
        ParamError::NotPositive { name, .. } => format!("{name} must be positive"),
        other => other.to_string(),
    }
}

#[derive(Default)]
struct Overrides {
    n: Option<usize>,
    nx: Option<usize>,
    ny: Option<usize>,
    dt: Option<f64>,
    t_end: Option<f64>,
    cfl: Option<f64>,
    c_alpha: Option<f64>,
    c_beta: Option<f64>,
    p: Option<f64>,
    epsilon: Option<f64>,
    output: Option<PathBuf>,
    snapshots: Option<bool>,
    stride: Option<usize>,
}

fn positive(line: usize, key: &str, value: &str) -> Result<f64, ConfigError> {
    let v: f64 = value
        .parse()
        .map_err(|_| ConfigError::new(line, format!("{key}: `{value}` is not a number")))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(ConfigError::new(line, format!("{key} must be positive")));
    }
    Ok(v)
}

fn count(line: usize, key: &str, value: &str) -> Result<usize, ConfigError> {
    let v: usize = value
        .parse()
        .map_err(|_| ConfigError::new(line, format!("{key}: `{value}` is not a positive integer")))?;
    if v == 0 {
        return Err(ConfigError::new(line, format!("{key} must be positive")));
    }
    Ok(v)
}

/// Parses and validates a config.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut case = None;
    let mut scheme = None;
    let mut o = Overrides::default();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::new(line, format!("expected key=value, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "case" => case = Some(value.parse::<CaseKind>().map_err(|e| ConfigError::new(line, e))?),
            "scheme" => {
                scheme = Some(value.parse::<Scheme>().map_err(|e| ConfigError::new(line, e.to_string()))?)
            }
            "N" => o.n = Some(count(line, key, value)?),
            "nx" => o.nx = Some(count(line, key, value)?),
            "ny" => o.ny = Some(count(line, key, value)?),
            "dt" => o.dt = Some(positive(line, key, value)?),
            "t_end" => o.t_end = Some(positive(line, key, value)?),
            "cfl" => o.cfl = Some(positive(line, key, value)?),
            "C_alpha" => o.c_alpha = Some(positive(line, key, value)?),
            "C_beta" => o.c_beta = Some(positive(line, key, value)?),
            "p" => o.p = Some(positive(line, key, value)?),
            "epsilon" => o.epsilon = Some(positive(line, key, value)?),
            "output" => o.output = Some(PathBuf::from(value)),
            "snapshots" => {
                o.snapshots = Some(value.parse().map_err(|_| {
                    ConfigError::new(line, format!("snapshots: expected true or false, got `{value}`"))
                })?)
            }
            "stride" => o.stride = Some(count(line, key, value)?),
            other => return Err(ConfigError::new(line, format!("unknown key `{other}`"))),
        }
    }

    let case = case.ok_or_else(|| ConfigError::new(0, "missing `case`"))?;
    let mut cfg = RunConfig::defaults(case, scheme.unwrap_or(Scheme::Es4));
    if let Some(v) = o.c_alpha {
        cfg.params.c_alpha = v;
    }
    if let Some(v) = o.c_beta {
        cfg.params.c_beta = v;
    }
    if let Some(v) = o.p {
        cfg.params.p = v;
    }
    if let Some(v) = o.epsilon {
        cfg.params.epsilon = v;
    }
    if let Some(v) = o.n {
        cfg.n = v;
        if case == CaseKind::Euler2(Case2D::Riemann) {
            cfg.nx = v;
            cfg.ny = v;
        }
    }
    cfg.nx = o.nx.unwrap_or(cfg.nx);
    cfg.ny = o.ny.unwrap_or(cfg.ny);
    if let CaseKind::Euler1(_) | CaseKind::Euler2(_) = case {
        if o.cfl.is_some() {
            return Err(ConfigError::new(0, "cfl applies to the advection case only"));
        }
    } else if o.dt.is_some() {
        return Err(ConfigError::new(0, "advection derives dt from cfl; set cfl instead"));
    }
    cfg.dt = o.dt.unwrap_or(cfg.dt);
    cfg.t_end = o.t_end.unwrap_or(cfg.t_end);
    cfg.cfl = o.cfl.unwrap_or(cfg.cfl);
    cfg.output = o.output;
    cfg.snapshots = o.snapshots.unwrap_or(true);
    cfg.stride = o.stride.unwrap_or(1);
    cfg.validate()?;
    Ok(cfg)
}
