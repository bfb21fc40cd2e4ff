//! Periodic linear advection `u_t + u_x = 0` on `[−1, 1]`.
//!
//! The initial profile has two first-order critical points, one on the node
//! `x = 0`; under CFL 0.25 the critical point drifts through every offset
//! inside the cell, which is what separates the schemes on the order table.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::SolverError;
use crate::reconstruction::Reconstruct;
use crate::stencil::StencilWindow;

/// Shift of the initial profile that places a critical point on `x = 0`.
pub const CRITICAL_SHIFT: f64 = 0.596_683_186_911_208_963_721_2;
/// Ghost layers on each side of the periodic array.
pub const GHOST: usize = 3;
pub const DEFAULT_CFL: f64 = 0.25;
pub const DEFAULT_T_END: f64 = 2.0;
/// `N` ladder of the published order table.
pub const TABLE_LADDER: [usize; 7] = [10, 20, 40, 80, 160, 320, 640];

/// `sin(π(x − x_c) − sin(π(x − x_c))/π)`
pub fn initial_profile(x: f64) -> f64 {
    let s = PI * (x - CRITICAL_SHIFT);
    (s - s.sin() / PI).sin()
}

/// Node coordinates `x_j = −1 + jΔx`, `j = 0..n`.
pub fn nodes(n: usize) -> Vec<f64> {
    let dx = 2.0 / n as f64;
    (0..n).map(|j| -1.0 + j as f64 * dx).collect()
}

/// Flux divergence `−(f̂_{j+1/2} − f̂_{j−1/2})/Δx` for `f(u) = u`, from a
/// ghost-padded array of `out.len() + 2·GHOST` values.
pub fn flux_divergence<R: Reconstruct + ?Sized>(
    padded: &[f64],
    dx: f64,
    recon: &R,
    faces: &mut Vec<f64>,
    out: &mut [f64],
) {
    let n = out.len();
    debug_assert_eq!(padded.len(), n + 2 * GHOST);
    faces.clear();
    // face f sits between padded cells GHOST-1+f and GHOST+f
    faces.extend((0..=n).map(|f| recon.plus(&StencilWindow::centered(padded, GHOST - 1 + f))));
    for (i, o) in out.iter_mut().enumerate() {
        *o = -(faces[i + 1] - faces[i]) / dx;
    }
}

fn pad_periodic(u: &[f64], padded: &mut Vec<f64>) {
    let n = u.len();
    padded.clear();
    padded.extend_from_slice(&u[n - GHOST..]);
    padded.extend_from_slice(u);
    padded.extend_from_slice(&u[..GHOST]);
}

/// Periodic advection operator with reusable scratch buffers.
pub struct Advection<'a, R: ?Sized> {
    recon: &'a R,
    dx: f64,
    padded: Vec<f64>,
    faces: Vec<f64>,
    stages: [Vec<f64>; 4],
    trial: Vec<f64>,
}

impl<'a, R: Reconstruct + ?Sized> Advection<'a, R> {
    pub fn new(recon: &'a R, n: usize, dx: f64) -> Self {
        Self {
            recon,
            dx,
            padded: Vec::with_capacity(n + 2 * GHOST),
            faces: Vec::with_capacity(n + 1),
            stages: std::array::from_fn(|_| vec![0.0; n]),
            trial: vec![0.0; n],
        }
    }

    /// `du/dt` with periodic wrap.
    pub fn rhs(&mut self, u: &[f64], out: &mut [f64]) {
        pad_periodic(u, &mut self.padded);
        flux_divergence(&self.padded, self.dx, self.recon, &mut self.faces, out);
    }

    /// One classical four-stage Runge–Kutta step, in place.
    pub fn rk4_step(&mut self, u: &mut [f64], dt: f64, step: usize) -> Result<(), SolverError> {
        let mut k = std::mem::take(&mut self.stages);
        let mut trial = std::mem::take(&mut self.trial);
        let offsets = [0.0, 0.5, 0.5, 1.0];
        let mut result = Ok(());
        for s in 0..4 {
            if s == 0 {
                self.rhs(u, &mut k[0]);
            } else {
                let h = offsets[s] * dt;
                for ((t, &ui), &ki) in trial.iter_mut().zip(u.iter()).zip(&k[s - 1]) {
                    *t = ui + h * ki;
                }
                self.rhs(&trial, &mut k[s]);
            }
            if k[s].iter().any(|v| !v.is_finite()) {
                result = Err(SolverError::BlowUp { step });
                break;
            }
        }
        if result.is_ok() {
            for i in 0..u.len() {
                u[i] += dt / 6.0 * (k[0][i] + 2.0 * k[1][i] + 2.0 * k[2][i] + k[3][i]);
            }
        }
        self.stages = k;
        self.trial = trial;
        result
    }
}

/// One RK4 step of periodic advection on a fresh workspace.
pub fn rk4_step<R: Reconstruct + ?Sized>(
    u: &[f64],
    dt: f64,
    dx: f64,
    recon: &R,
) -> Result<Vec<f64>, SolverError> {
    let mut out = u.to_vec();
    Advection::new(recon, u.len(), dx).rk4_step(&mut out, dt, 0)?;
    Ok(out)
}

/// Periodic `du/dt` on a fresh workspace.
pub fn advect_rhs<R: Reconstruct + ?Sized>(u: &[f64], dx: f64, recon: &R) -> Vec<f64> {
    let mut out = vec![0.0; u.len()];
    Advection::new(recon, u.len(), dx).rhs(u, &mut out);
    out
}

/// One grid of the convergence study.
#[derive(Debug, Clone)]
pub struct AdvectionCase {
    pub n: usize,
    pub cfl: f64,
    pub t_end: f64,
}

impl AdvectionCase {
    pub fn new(n: usize) -> Self {
        Self { n, cfl: DEFAULT_CFL, t_end: DEFAULT_T_END }
    }

    pub fn dx(&self) -> f64 {
        2.0 / self.n as f64
    }

    pub fn dt(&self) -> f64 {
        self.cfl * self.dx()
    }

    /// Number of steps; errors unless `t_end/Δt` is an integer.
    pub fn steps(&self) -> Result<usize, SolverError> {
        let ratio = self.t_end / self.dt();
        let steps = ratio.round();
        if self.n < 2 * GHOST || (ratio - steps).abs() > 1e-9 * ratio.max(1.0) {
            return Err(SolverError::Config(format!(
                "t_end/dt = {ratio} is not an integer for N = {}",
                self.n
            )));
        }
        Ok(steps as usize)
    }

    /// Advances the initial profile to `t_end`; returns node values.
    pub fn run<R: Reconstruct + ?Sized>(&self, recon: &R) -> Result<Vec<f64>, SolverError> {
        let steps = self.steps()?;
        let dt = self.dt();
        let mut u: Vec<f64> = nodes(self.n).into_iter().map(initial_profile).collect();
        let mut adv = Advection::new(recon, self.n, self.dx());
        for step in 0..steps {
            adv.rk4_step(&mut u, dt, step)?;
        }
        Ok(u)
    }

    /// Maximum nodal error at `t_end`, against the initial profile (exact
    /// after one full period, `t_end = 2`).
    pub fn linf_error<R: Reconstruct + ?Sized>(&self, recon: &R) -> Result<f64, SolverError> {
        let u = self.run(recon)?;
        let periods = self.t_end / 2.0;
        let exact = nodes(self.n).into_iter().map(|x| {
            if periods == periods.round() {
                initial_profile(x)
            } else {
                initial_profile((x - self.t_end + 1.0).rem_euclid(2.0) - 1.0)
            }
        });
        Ok(u.iter().zip(exact).fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs())))
    }
}

/// One row of an order table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderRow {
    pub n: usize,
    pub dt: f64,
    pub error: f64,
    /// `log2(e_{N/2} / e_N)`; absent on the first row.
    pub order: Option<f64>,
}

/// Grid-convergence table.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OrderTable {
    pub rows: Vec<OrderRow>,
}

impl OrderTable {
    pub fn from_errors(entries: &[(usize, f64, f64)]) -> Self {
        let rows = entries
            .iter()
            .enumerate()
            .map(|(i, &(n, dt, error))| OrderRow {
                n,
                dt,
                error,
                order: (i > 0).then(|| (entries[i - 1].2 / error).log2()),
            })
            .collect();
        Self { rows }
    }

    pub fn row(&self, n: usize) -> Option<&OrderRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Comma-delimited text with header `N,dt,error,order`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("N,dt,error,order\n");
        for r in &self.rows {
            let order = r.order.map(|o| format!("{o:.16e}")).unwrap_or_else(|| "-".into());
            let _ = writeln!(s, "{},{:.16e},{:.16e},{}", r.n, r.dt, r.error, order);
        }
        s
    }
}

/// Runs every grid of `ladder` and tabulates L∞ errors and orders.
pub fn run_convergence<R: Reconstruct + ?Sized>(
    recon: &R,
    ladder: &[usize],
) -> Result<OrderTable, SolverError> {
    if ladder.is_empty() {
        return Err(SolverError::Config("empty N ladder".into()));
    }
    if ladder.windows(2).any(|p| p[1] != 2 * p[0]) {
        return Err(SolverError::Config(format!("N ladder {ladder:?} is not a doubling sequence")));
    }
    let mut entries = Vec::with_capacity(ladder.len());
    for &n in ladder {
        let case = AdvectionCase::new(n);
        entries.push((n, case.dt(), case.linf_error(recon)?));
    }
    Ok(OrderTable::from_errors(&entries))
}

/// Doubling ladder `10, 20, …` up to and including `max_n`.
pub fn ladder_up_to(max_n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = TABLE_LADDER[0];
    while n <= max_n {
        out.push(n);
        n *= 2;
    }
    out
}
