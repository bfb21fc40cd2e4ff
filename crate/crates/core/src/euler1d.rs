//! One-dimensional Euler equations: Steger–Warming splitting,
//! characteristic reconstruction and TVD-RK3 on cell-centred grids.

use std::fmt;
use std::str::FromStr;

use crate::error::{Cell, SolverError, StateFault};
use crate::gas::{conserved_1d, primitive_1d, Euler1};
use crate::reconstruction::Reconstruct;
use crate::sweep::{line_divergence, LineWorkspace};

pub const GHOST: usize = 3;

pub type State = [f64; 3];

/// Ghost-cell treatment at both ends of the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Ghost cells keep the initial condition evaluated at their centres.
    Frozen,
    /// Solid wall: mirrored density and energy, negated momentum.
    Reflective,
    ZeroGradient,
    Periodic,
}

/// The benchmark problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case1D {
    ShuOsher,
    Blast,
    StrongShock,
}

/// Left pressure over right pressure in the strong-shock tube.
pub const STRONG_SHOCK_PRESSURE_RATIO: f64 = 1e6;

impl Case1D {
    pub const ALL: [Case1D; 3] = [Case1D::ShuOsher, Case1D::Blast, Case1D::StrongShock];

    pub fn name(self) -> &'static str {
        match self {
            Case1D::ShuOsher => "shu_osher",
            Case1D::Blast => "blast",
            Case1D::StrongShock => "strong_shock",
        }
    }

    pub fn domain(self) -> (f64, f64) {
        match self {
            Case1D::ShuOsher | Case1D::StrongShock => (-5.0, 5.0),
            Case1D::Blast => (0.0, 1.0),
        }
    }

    pub fn default_cells(self) -> usize {
        match self {
            Case1D::ShuOsher => 240,
            Case1D::Blast => 600,
            Case1D::StrongShock => 200,
        }
    }

    pub fn default_dt(self) -> f64 {
        match self {
            Case1D::ShuOsher => 0.003,
            Case1D::Blast | Case1D::StrongShock => 1e-5,
        }
    }

    pub fn t_end(self) -> f64 {
        match self {
            Case1D::ShuOsher => 1.8,
            Case1D::Blast => 0.038,
            Case1D::StrongShock => 0.01,
        }
    }

    pub fn boundary(self) -> Boundary {
        match self {
            Case1D::ShuOsher | Case1D::StrongShock => Boundary::Frozen,
            Case1D::Blast => Boundary::Reflective,
        }
    }

    /// Resolution of the fine-grid reference solution.
    pub fn reference_cells(self) -> usize {
        match self {
            Case1D::ShuOsher => 10_000,
            Case1D::Blast => 15_000,
            Case1D::StrongShock => 10_000,
        }
    }

    /// Primitive `(ρ, u, p)` at `x`.
    pub fn initial(self, x: f64) -> (f64, f64, f64) {
        match self {
            Case1D::ShuOsher => {
                if x < -4.0 {
                    (3.857143, 2.62936, 10.3333)
                } else {
                    (1.0 + 0.2 * (5.0 * x).sin(), 0.0, 1.0)
                }
            }
            Case1D::Blast => {
                let p = if x < 0.1 {
                    1000.0
                } else if x <= 0.9 {
                    0.01
                } else {
                    100.0
                };
                (1.0, 0.0, p)
            }
            Case1D::StrongShock => {
                if x < 0.0 {
                    (1.0, 0.0, 0.1 * STRONG_SHOCK_PRESSURE_RATIO)
                } else {
                    (1.0, 0.0, 0.1)
                }
            }
        }
    }

    /// Setup with the published grid and time step.
    pub fn setup(self) -> Setup1D {
        Setup1D {
            case: self,
            cells: self.default_cells(),
            dt: self.default_dt(),
            t_end: self.t_end(),
        }
    }

    /// Fine-grid setup, time step scaled with the cell size.
    pub fn reference_setup(self) -> Setup1D {
        let cells = self.reference_cells();
        let dt = self.default_dt() * self.default_cells() as f64 / cells as f64;
        Setup1D { case: self, cells, dt, t_end: self.t_end() }
    }
}

impl fmt::Display for Case1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case1D {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Case1D::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown 1D case `{s}`"))
    }
}

/// Grid, time step and end time of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Setup1D {
    pub case: Case1D,
    pub cells: usize,
    pub dt: f64,
    pub t_end: f64,
}

impl Setup1D {
    pub fn dx(&self) -> f64 {
        let (a, b) = self.case.domain();
        (b - a) / self.cells as f64
    }

    pub fn centres(&self) -> Vec<f64> {
        let (a, _) = self.case.domain();
        let dx = self.dx();
        (0..self.cells).map(|i| a + (i as f64 + 0.5) * dx).collect()
    }

    /// Number of fixed steps; the end time must be a whole number of steps.
    pub fn steps(&self) -> Result<usize, SolverError> {
        if !(self.dt > 0.0 && self.t_end > 0.0 && self.cells > 0) {
            return Err(SolverError::Config("dt, t_end and N must be positive".into()));
        }
        let k = (self.t_end / self.dt).round();
        if ((k * self.dt - self.t_end) / self.t_end).abs() > 1e-9 {
            return Err(SolverError::Config(format!(
                "t_end={} is not a whole number of steps of dt={}",
                self.t_end, self.dt
            )));
        }
        Ok(k as usize)
    }

    pub fn initial_field(&self) -> Field1D {
        let x = self.centres();
        let u = x
            .iter()
            .map(|&xi| {
                let (r, v, p) = self.case.initial(xi);
                conserved_1d(r, v, p)
            })
            .collect();
        Field1D { x, u }
    }
}

/// Cell centres and conserved states.
#[derive(Debug, Clone, PartialEq)]
pub struct Field1D {
    pub x: Vec<f64>,
    pub u: Vec<State>,
}

impl Field1D {
    pub fn primitives(&self) -> Vec<(f64, f64, f64)> {
        self.u.iter().map(primitive_1d).collect()
    }

    pub fn density(&self) -> Vec<f64> {
        self.u.iter().map(|s| s[0]).collect()
    }

    /// `x,rho,u,p` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,rho,u,p\n");
        for (x, (r, v, p)) in self.x.iter().zip(self.primitives()) {
            out.push_str(&format!("{x:.16e},{r:.16e},{v:.16e},{p:.16e}\n"));
        }
        out
    }

    /// `Σ u Δx` per component.
    pub fn totals(&self, dx: f64) -> State {
        let mut t = [0.0; 3];
        for s in &self.u {
            for m in 0..3 {
                t[m] += s[m] * dx;
            }
        }
        t
    }
}

fn check_state(u: &State, cell: Cell) -> Result<(), StateFault> {
    let (r, _, p) = primitive_1d(u);
    if !(r > 0.0 && p > 0.0) {
        let reason = if u.iter().any(|v| !v.is_finite()) {
            "non-finite state"
        } else {
            "nonpositive density or pressure"
        };
        return Err(StateFault { cell, state: u.to_vec(), reason });
    }
    Ok(())
}

/// Semi-discrete operator and TVD-RK3 integrator for one grid.
pub struct Euler1D<'a, R: ?Sized> {
    recon: &'a R,
    n: usize,
    dx: f64,
    boundary: Boundary,
    frozen: [[State; GHOST]; 2],
    padded: Vec<State>,
    ws: LineWorkspace<3>,
    stage: Vec<State>,
    rate: Vec<State>,
}

impl<'a, R: Reconstruct + ?Sized> Euler1D<'a, R> {
    /// `frozen` holds the (left, right) ghost states for [`Boundary::Frozen`],
    /// ordered from the outermost ghost inward on the left and from the
    /// innermost outward on the right.
    pub fn new(recon: &'a R, n: usize, dx: f64, boundary: Boundary, frozen: [[State; GHOST]; 2]) -> Self {
        Euler1D {
            recon,
            n,
            dx,
            boundary,
            frozen,
            padded: vec![[0.0; 3]; n + 2 * GHOST],
            ws: LineWorkspace::new(),
            stage: vec![[0.0; 3]; n],
            rate: vec![[0.0; 3]; n],
        }
    }

    /// Solver for a benchmark setup, with frozen ghosts from its initial condition.
    pub fn for_setup(recon: &'a R, setup: &Setup1D) -> Self {
        let (a, b) = setup.case.domain();
        let dx = setup.dx();
        let ghost = |x: f64| {
            let (r, v, p) = setup.case.initial(x);
            conserved_1d(r, v, p)
        };
        let mut frozen = [[[0.0; 3]; GHOST]; 2];
        for k in 0..GHOST {
            frozen[0][k] = ghost(a - (GHOST - k) as f64 * dx + 0.5 * dx);
            frozen[1][k] = ghost(b + (k as f64 + 0.5) * dx);
        }
        Self::new(recon, setup.cells, dx, setup.case.boundary(), frozen)
    }

    fn fill(&mut self, u: &[State]) {
        let (n, g) = (self.n, GHOST);
        self.padded[g..g + n].copy_from_slice(u);
        for k in 0..g {
            let (left, right) = match self.boundary {
                Boundary::Frozen => (self.frozen[0][k], self.frozen[1][k]),
                Boundary::ZeroGradient => (u[0], u[n - 1]),
                Boundary::Periodic => (u[n - g + k], u[k]),
                Boundary::Reflective => {
                    let mut l = u[g - 1 - k];
                    let mut r = u[n - 1 - k];
                    l[1] = -l[1];
                    r[1] = -r[1];
                    (l, r)
                }
            };
            self.padded[k] = left;
            self.padded[g + n + k] = right;
        }
    }

    /// `dU/dt` for the interior cells.
    pub fn rhs(&mut self, u: &[State], out: &mut [State]) -> Result<(), StateFault> {
        self.fill(u);
        line_divergence::<Euler1, R, 3>(&self.padded, GHOST, self.dx, self.recon, &mut self.ws, out).map_err(|f| {
            StateFault { cell: Cell::Line(f.index), state: self.padded[f.index].to_vec(), reason: f.reason }
        })
    }

    fn checked_rhs(&mut self, u: &[State], out: &mut [State], step: usize) -> Result<(), SolverError> {
        self.rhs(u, out).map_err(|fault| SolverError::Unphysical { step, fault })?;
        if out.iter().flatten().any(|v| !v.is_finite()) {
            return Err(SolverError::BlowUp { step });
        }
        Ok(())
    }

    fn verify(u: &[State], step: usize) -> Result<(), SolverError> {
        for (i, s) in u.iter().enumerate() {
            if s.iter().any(|v| !v.is_finite()) {
                return Err(SolverError::BlowUp { step });
            }
            check_state(s, Cell::Line(i + GHOST)).map_err(|fault| SolverError::Unphysical { step, fault })?;
        }
        Ok(())
    }

    /// One TVD-RK3 step; `step` labels errors.
    pub fn step(&mut self, u: &mut [State], dt: f64, step: usize) -> Result<(), SolverError> {
        let n = self.n;
        let mut stage = std::mem::take(&mut self.stage);
        let mut rate = std::mem::take(&mut self.rate);
        let result = (|| {
            self.checked_rhs(u, &mut rate, step)?;
            for j in 0..n {
                for m in 0..3 {
                    stage[j][m] = u[j][m] + dt * rate[j][m];
                }
            }
            Self::verify(&stage, step)?;

            self.checked_rhs(&stage, &mut rate, step)?;
            for j in 0..n {
                for m in 0..3 {
                    stage[j][m] = 0.75 * u[j][m] + 0.25 * (stage[j][m] + dt * rate[j][m]);
                }
            }
            Self::verify(&stage, step)?;

            self.checked_rhs(&stage, &mut rate, step)?;
            for j in 0..n {
                for m in 0..3 {
                    u[j][m] = (u[j][m] + 2.0 * (stage[j][m] + dt * rate[j][m])) / 3.0;
                }
            }
            Self::verify(u, step)
        })();
        self.stage = stage;
        self.rate = rate;
        result
    }
}

/// Advances a benchmark setup to its end time.
pub fn run_case<R: Reconstruct + ?Sized>(setup: &Setup1D, recon: &R) -> Result<Field1D, SolverError> {
    let steps = setup.steps()?;
    let mut field = setup.initial_field();
    let mut solver = Euler1D::for_setup(recon, setup);
    for k in 1..=steps {
        solver.step(&mut field.u, setup.dt, k)?;
    }
    Ok(field)
}
