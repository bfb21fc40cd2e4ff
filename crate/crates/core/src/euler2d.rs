//! Two-dimensional Euler equations, dimension by dimension.
//!
//! Rows are swept in `x` and columns in `y` with the same directional
//! operator; a column is handed to it with the two momentum components
//! exchanged, so a transposed field with `u ↔ v` produces the transposed
//! right-hand side bit for bit.

use std::fmt;
use std::str::FromStr;

use crate::error::{Cell, SolverError, StateFault};
use crate::gas::{conserved_2d, primitive_2d, EulerSweep};
use crate::reconstruction::Reconstruct;
use crate::sweep::{line_divergence, LineWorkspace};

pub const GHOST: usize = 3;

/// `(ρ, ρu, ρv, E)`.
pub type State = [f64; 4];

#[inline]
fn swap_momentum(s: &State) -> State {
    [s[0], s[2], s[1], s[3]]
}

/// Quiescent gas ahead of the Mach-10 shock.
pub const DMR_PRE_SHOCK: (f64, f64, f64, f64) = (1.4, 0.0, 0.0, 1.0);

/// Post-shock primitive state for the Mach-10 shock inclined at 60°.
pub fn dmr_post_shock() -> (f64, f64, f64, f64) {
    let speed = 8.25;
    let angle = std::f64::consts::PI / 6.0;
    (8.0, speed * angle.cos(), -speed * angle.sin(), 116.5)
}

/// Where the incident shock meets the horizontal line at height `y` at time `t`.
pub fn dmr_shock_x(y: f64, t: f64) -> f64 {
    1.0 / 6.0 + (y + 20.0 * t) / 3f64.sqrt()
}

/// Riemann quadrant split point.
pub const RIEMANN_SPLIT: f64 = 0.8;

/// Quadrant states `(ρ, u, v, p)`.
pub fn riemann_state(x: f64, y: f64) -> (f64, f64, f64, f64) {
    match (x >= RIEMANN_SPLIT, y >= RIEMANN_SPLIT) {
        (true, true) => (1.5, 0.0, 0.0, 1.5),
        (false, true) => (0.5323, 1.206, 0.0, 0.3),
        (false, false) => (0.138, 1.206, 1.206, 0.029),
        (true, false) => (0.5323, 0.0, 1.206, 0.3),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case2D {
    Riemann,
    DoubleMach,
}

impl Case2D {
    pub const ALL: [Case2D; 2] = [Case2D::Riemann, Case2D::DoubleMach];

    pub fn name(self) -> &'static str {
        match self {
            Case2D::Riemann => "riemann2d",
            Case2D::DoubleMach => "dmr",
        }
    }

    /// `(x0, x1, y0, y1)`.
    pub fn domain(self) -> (f64, f64, f64, f64) {
        match self {
            Case2D::Riemann => (0.0, 1.0, 0.0, 1.0),
            Case2D::DoubleMach => (0.0, 4.0, 0.0, 1.0),
        }
    }

    pub fn default_grid(self) -> (usize, usize) {
        match self {
            Case2D::Riemann => (240, 240),
            Case2D::DoubleMach => (480, 120),
        }
    }

    pub fn default_dt(self) -> f64 {
        0.0004
    }

    pub fn t_end(self) -> f64 {
        match self {
            Case2D::Riemann => 0.8,
            Case2D::DoubleMach => 0.2,
        }
    }

    pub fn initial(self, x: f64, y: f64) -> (f64, f64, f64, f64) {
        match self {
            Case2D::Riemann => riemann_state(x, y),
            Case2D::DoubleMach => {
                if x < dmr_shock_x(y, 0.0) {
                    dmr_post_shock()
                } else {
                    DMR_PRE_SHOCK
                }
            }
        }
    }

    pub fn setup(self) -> Setup2D {
        let (nx, ny) = self.default_grid();
        Setup2D { case: self, nx, ny, dt: self.default_dt(), t_end: self.t_end() }
    }
}

impl fmt::Display for Case2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case2D {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Case2D::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown 2D case `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Setup2D {
    pub case: Case2D,
    pub nx: usize,
    pub ny: usize,
    pub dt: f64,
    pub t_end: f64,
}

impl Setup2D {
    pub fn spacing(&self) -> (f64, f64) {
        let (x0, x1, y0, y1) = self.case.domain();
        ((x1 - x0) / self.nx as f64, (y1 - y0) / self.ny as f64)
    }

    pub fn steps(&self) -> Result<usize, SolverError> {
        if !(self.dt > 0.0 && self.t_end > 0.0 && self.nx > 0 && self.ny > 0) {
            return Err(SolverError::Config("dt, t_end, nx and ny must be positive".into()));
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

    pub fn initial_field(&self) -> Field2D {
        let (x0, _, y0, _) = self.case.domain();
        let (dx, dy) = self.spacing();
        let mut field = Field2D::uniform(self.nx, self.ny, (x0, y0), (dx, dy), [0.0; 4]);
        for j in 0..self.ny {
            for i in 0..self.nx {
                let (x, y) = field.centre(i, j);
                let (r, u, v, p) = self.case.initial(x, y);
                field.u[j * self.nx + i] = conserved_2d(r, u, v, p);
            }
        }
        field
    }
}

/// Row-major (`x` fastest) conserved states on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    pub nx: usize,
    pub ny: usize,
    pub origin: (f64, f64),
    pub spacing: (f64, f64),
    pub u: Vec<State>,
}

impl Field2D {
    pub fn uniform(nx: usize, ny: usize, origin: (f64, f64), spacing: (f64, f64), state: State) -> Self {
        Field2D { nx, ny, origin, spacing, u: vec![state; nx * ny] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &State {
        &self.u[j * self.nx + i]
    }

    pub fn centre(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.origin.0 + (i as f64 + 0.5) * self.spacing.0,
            self.origin.1 + (j as f64 + 0.5) * self.spacing.1,
        )
    }

    pub fn density(&self, i: usize, j: usize) -> f64 {
        self.at(i, j)[0]
    }

    /// Swaps the axes and the two velocity components.
    pub fn transposed(&self) -> Field2D {
        let mut u = vec![[0.0; 4]; self.u.len()];
        for j in 0..self.ny {
            for i in 0..self.nx {
                u[i * self.ny + j] = swap_momentum(self.at(i, j));
            }
        }
        Field2D {
            nx: self.ny,
            ny: self.nx,
            origin: (self.origin.1, self.origin.0),
            spacing: (self.spacing.1, self.spacing.0),
            u,
        }
    }

    /// Density along the horizontal line `y`, linear between cell-centre rows.
    pub fn density_along_y(&self, y: f64) -> Vec<(f64, f64)> {
        let s = ((y - self.origin.1) / self.spacing.1 - 0.5).clamp(0.0, (self.ny - 1) as f64);
        let j0 = (s.floor() as usize).min(self.ny.saturating_sub(2));
        let w = s - j0 as f64;
        (0..self.nx)
            .map(|i| {
                let r = (1.0 - w) * self.density(i, j0) + w * self.density(i, (j0 + 1).min(self.ny - 1));
                (self.centre(i, 0).0, r)
            })
            .collect()
    }

    /// `x,y,rho,u,v,p` rows for every `stride`-th cell in each direction.
    pub fn to_csv(&self, stride: usize) -> String {
        let stride = stride.max(1);
        let mut out = String::from("x,y,rho,u,v,p\n");
        for j in (0..self.ny).step_by(stride) {
            for i in (0..self.nx).step_by(stride) {
                let (x, y) = self.centre(i, j);
                let (r, u, v, p) = primitive_2d(self.at(i, j));
                out.push_str(&format!("{x:.16e},{y:.16e},{r:.16e},{u:.16e},{v:.16e},{p:.16e}\n"));
            }
        }
        out
    }
}

/// Ghost-cell rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary2D {
    ZeroGradient,
    /// Inflow left, outflow right, wall with a post-shock strip at the
    /// bottom, and the exact incident-shock trace on top.
    DoubleMach,
}

impl Case2D {
    pub fn boundary(self) -> Boundary2D {
        match self {
            Case2D::Riemann => Boundary2D::ZeroGradient,
            Case2D::DoubleMach => Boundary2D::DoubleMach,
        }
    }
}

/// Semi-discrete operator and TVD-RK3 integrator on one grid.
pub struct Euler2D<'a, R: ?Sized> {
    recon: &'a R,
    nx: usize,
    ny: usize,
    origin: (f64, f64),
    spacing: (f64, f64),
    boundary: Boundary2D,
    padded: Vec<State>,
    line: Vec<State>,
    div: Vec<State>,
    ws: LineWorkspace<4>,
    stage: Vec<State>,
    rate: Vec<State>,
}

impl<'a, R: Reconstruct + ?Sized> Euler2D<'a, R> {
    pub fn new(recon: &'a R, field: &Field2D, boundary: Boundary2D) -> Self {
        let (nx, ny) = (field.nx, field.ny);
        Euler2D {
            recon,
            nx,
            ny,
            origin: field.origin,
            spacing: field.spacing,
            boundary,
            padded: vec![[0.0; 4]; (nx + 2 * GHOST) * (ny + 2 * GHOST)],
            line: Vec::new(),
            div: Vec::new(),
            ws: LineWorkspace::new(),
            stage: vec![[0.0; 4]; nx * ny],
            rate: vec![[0.0; 4]; nx * ny],
        }
    }

    #[inline]
    fn pidx(&self, i: usize, j: usize) -> usize {
        j * (self.nx + 2 * GHOST) + i
    }

    /// Copies the interior and fills ghost strips for stage time `t`.
    /// Corner blocks are never read by the sweeps and are left untouched.
    fn fill(&mut self, u: &[State], t: f64) {
        let (nx, ny, g) = (self.nx, self.ny, GHOST);
        for j in 0..ny {
            let p = self.pidx(g, j + g);
            self.padded[p..p + nx].copy_from_slice(&u[j * nx..(j + 1) * nx]);
        }
        let post = {
            let (r, a, b, p) = dmr_post_shock();
            conserved_2d(r, a, b, p)
        };
        let pre = {
            let (r, a, b, p) = DMR_PRE_SHOCK;
            conserved_2d(r, a, b, p)
        };
        for j in 0..ny {
            for k in 0..g {
                let left = match self.boundary {
                    Boundary2D::ZeroGradient => u[j * nx],
                    Boundary2D::DoubleMach => post,
                };
                let right = u[j * nx + nx - 1];
                let (pl, pr) = (self.pidx(k, j + g), self.pidx(g + nx + k, j + g));
                self.padded[pl] = left;
                self.padded[pr] = right;
            }
        }
        for i in 0..nx {
            let xc = self.origin.0 + (i as f64 + 0.5) * self.spacing.0;
            for k in 0..g {
                let (bottom, top) = match self.boundary {
                    Boundary2D::ZeroGradient => (u[i], u[(ny - 1) * nx + i]),
                    Boundary2D::DoubleMach => {
                        let bottom = if xc < 1.0 / 6.0 {
                            post
                        } else {
                            let mut s = u[(g - 1 - k) * nx + i];
                            s[2] = -s[2];
                            s
                        };
                        let yc = self.origin.1 + (ny + k) as f64 * self.spacing.1 + 0.5 * self.spacing.1;
                        let top = if xc < dmr_shock_x(yc, t) { post } else { pre };
                        (bottom, top)
                    }
                };
                let (pb, pt) = (self.pidx(i + g, k), self.pidx(i + g, g + ny + k));
                self.padded[pb] = bottom;
                self.padded[pt] = top;
            }
        }
    }

    fn fault(&self, i: usize, j: usize, reason: &'static str) -> StateFault {
        StateFault { cell: Cell::Grid(i, j), state: self.padded[self.pidx(i, j)].to_vec(), reason }
    }

    /// `dU/dt` at stage time `t`.
    pub fn rhs(&mut self, u: &[State], t: f64, out: &mut [State]) -> Result<(), StateFault> {
        let (nx, ny, g) = (self.nx, self.ny, GHOST);
        self.fill(u, t);
        let (dx, dy) = self.spacing;

        // x-sweep
        self.div.resize(nx, [0.0; 4]);
        for j in 0..ny {
            let p = self.pidx(0, j + g);
            let row = &self.padded[p..p + nx + 2 * g];
            if let Err(f) = line_divergence::<EulerSweep, R, 4>(row, g, dx, self.recon, &mut self.ws, &mut self.div) {
                return Err(self.fault(f.index, j + g, f.reason));
            }
            out[j * nx..(j + 1) * nx].copy_from_slice(&self.div);
        }

        // y-sweep on momentum-swapped columns
        self.div.resize(ny, [0.0; 4]);
        self.line.resize(ny + 2 * g, [0.0; 4]);
        for i in 0..nx {
            for jj in 0..ny + 2 * g {
                self.line[jj] = swap_momentum(&self.padded[self.pidx(i + g, jj)]);
            }
            if let Err(f) =
                line_divergence::<EulerSweep, R, 4>(&self.line, g, dy, self.recon, &mut self.ws, &mut self.div)
            {
                return Err(self.fault(i + g, f.index, f.reason));
            }
            for j in 0..ny {
                let d = swap_momentum(&self.div[j]);
                let o = &mut out[j * nx + i];
                for m in 0..4 {
                    o[m] += d[m];
                }
            }
        }
        Ok(())
    }

    fn checked_rhs(&mut self, u: &[State], t: f64, out: &mut [State], step: usize) -> Result<(), SolverError> {
        self.rhs(u, t, out).map_err(|fault| SolverError::Unphysical { step, fault })?;
        if out.iter().flatten().any(|v| !v.is_finite()) {
            return Err(SolverError::BlowUp { step });
        }
        Ok(())
    }

    fn verify(&self, u: &[State], step: usize) -> Result<(), SolverError> {
        for (k, s) in u.iter().enumerate() {
            if s.iter().any(|v| !v.is_finite()) {
                return Err(SolverError::BlowUp { step });
            }
            let (r, _, _, p) = primitive_2d(s);
            if !(r > 0.0 && p > 0.0) {
                let cell = Cell::Grid(k % self.nx + GHOST, k / self.nx + GHOST);
                let fault = StateFault { cell, state: s.to_vec(), reason: "nonpositive density or pressure" };
                return Err(SolverError::Unphysical { step, fault });
            }
        }
        Ok(())
    }

    /// One TVD-RK3 step from time `t`.
    pub fn step(&mut self, u: &mut [State], t: f64, dt: f64, step: usize) -> Result<(), SolverError> {
        let mut stage = std::mem::take(&mut self.stage);
        let mut rate = std::mem::take(&mut self.rate);
        let result = (|| {
            self.checked_rhs(u, t, &mut rate, step)?;
            for ((s, a), l) in stage.iter_mut().zip(u.iter()).zip(&rate) {
                for m in 0..4 {
                    s[m] = a[m] + dt * l[m];
                }
            }
            self.verify(&stage, step)?;

            self.checked_rhs(&stage, t + dt, &mut rate, step)?;
            for ((s, a), l) in stage.iter_mut().zip(u.iter()).zip(&rate) {
                for m in 0..4 {
                    s[m] = 0.75 * a[m] + 0.25 * (s[m] + dt * l[m]);
                }
            }
            self.verify(&stage, step)?;

            self.checked_rhs(&stage, t + 0.5 * dt, &mut rate, step)?;
            for ((a, s), l) in u.iter_mut().zip(&stage).zip(&rate) {
                for m in 0..4 {
                    a[m] = (a[m] + 2.0 * (s[m] + dt * l[m])) / 3.0;
                }
            }
            self.verify(u, step)
        })();
        self.stage = stage;
        self.rate = rate;
        result
    }
}

/// Advances a setup to its end time.
pub fn run_case<R: Reconstruct + ?Sized>(setup: &Setup2D, recon: &R) -> Result<Field2D, SolverError> {
    let steps = setup.steps()?;
    let mut field = setup.initial_field();
    let mut solver = Euler2D::new(recon, &field, setup.case.boundary());
    for k in 0..steps {
        let t = k as f64 * setup.dt;
        solver.step(&mut field.u, t, setup.dt, k + 1)?;
    }
    Ok(field)
}

/// 2D Riemann problem on an `n × n` grid with the published time step scaled to it.
pub fn run_riemann2d<R: Reconstruct + ?Sized>(n: usize, dt: f64, recon: &R) -> Result<Field2D, SolverError> {
    let setup = Setup2D { case: Case2D::Riemann, nx: n, ny: n, dt, t_end: Case2D::Riemann.t_end() };
    run_case(&setup, recon)
}

/// Double Mach reflection on an `nx × ny` grid (`nx = 4 ny`).
pub fn run_dmr<R: Reconstruct + ?Sized>(nx: usize, ny: usize, dt: f64, recon: &R) -> Result<Field2D, SolverError> {
    if nx != 4 * ny {
        return Err(SolverError::Config(format!("double Mach grid must be 4:1, got {nx}x{ny}")));
    }
    let setup = Setup2D { case: Case2D::DoubleMach, nx, ny, dt, t_end: Case2D::DoubleMach.t_end() };
    run_case(&setup, recon)
}

/// Position of the largest density jump between neighbouring samples.
pub fn largest_jump(samples: &[(f64, f64)]) -> Option<(f64, f64)> {
    samples
        .windows(2)
        .map(|w| (0.5 * (w[0].0 + w[1].0), (w[1].1 - w[0].1).abs()))
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler1d::{self, Euler1D};
    use crate::gas::conserved_1d;
    use crate::weights::SchemeParams;

    fn smooth_field(nx: usize, ny: usize) -> Field2D {
        let mut f = Field2D::uniform(nx, ny, (0.0, 0.0), (1.0 / nx as f64, 1.0 / ny as f64), [0.0; 4]);
        for j in 0..ny {
            for i in 0..nx {
                let (x, y) = f.centre(i, j);
                let r = 1.0 + 0.3 * (6.0 * x).sin() * (4.0 * y).cos();
                f.u[j * nx + i] = conserved_2d(r, 0.2 + 0.1 * y, -0.3 * x, 1.0 + 0.2 * x * y);
            }
        }
        f
    }

    #[test]
    fn uniform_flow_has_zero_rhs() {
        let p = SchemeParams::es4();
        let f = Field2D::uniform(8, 6, (0.0, 0.0), (0.1, 0.1), conserved_2d(1.0, 0.4, -0.7, 2.0));
        let mut s = Euler2D::new(&p, &f, Boundary2D::ZeroGradient);
        let mut out = vec![[1.0; 4]; 48];
        s.rhs(&f.u, 0.0, &mut out).unwrap();
        assert!(out.iter().flatten().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn y_invariant_data_matches_the_1d_solver() {
        let p = SchemeParams::es4();
        let (nx, ny) = (30, 5);
        let dx = 1.0 / nx as f64;
        let prim = |x: f64| (1.0 + 0.5 * (x > 0.4) as u8 as f64, 0.3, 1.0 + 0.2 * x);
        let mut f = Field2D::uniform(nx, ny, (0.0, 0.0), (dx, 0.2), [0.0; 4]);
        let mut u1 = Vec::new();
        for i in 0..nx {
            let (r, v, pr) = prim((i as f64 + 0.5) * dx);
            u1.push(conserved_1d(r, v, pr));
            for j in 0..ny {
                f.u[j * nx + i] = conserved_2d(r, v, 0.0, pr);
            }
        }
        let mut s2 = Euler2D::new(&p, &f, Boundary2D::ZeroGradient);
        let mut s1 = Euler1D::new(&p, nx, dx, euler1d::Boundary::ZeroGradient, [[[0.0; 3]; 3]; 2]);
        for k in 0..5 {
            s2.step(&mut f.u, 0.0, 0.004, k).unwrap();
            s1.step(&mut u1, 0.004, k).unwrap();
        }
        for j in 0..ny {
            for i in 0..nx {
                let a = f.at(i, j);
                let b = u1[i];
                for (x, y) in [(a[0], b[0]), (a[1], b[1]), (a[3], b[2])] {
                    assert!((x - y).abs() < 1e-12, "({i},{j}) {x} {y}");
                }
                assert_eq!(a[2], 0.0);
            }
        }
    }

    #[test]
    fn rhs_commutes_with_transposition() {
        let p = SchemeParams::es4();
        let f = smooth_field(9, 7);
        let ft = f.transposed();
        let mut a = vec![[0.0; 4]; 63];
        let mut b = vec![[0.0; 4]; 63];
        Euler2D::new(&p, &f, Boundary2D::ZeroGradient).rhs(&f.u, 0.0, &mut a).unwrap();
        Euler2D::new(&p, &ft, Boundary2D::ZeroGradient).rhs(&ft.u, 0.0, &mut b).unwrap();
        for j in 0..7 {
            for i in 0..9 {
                assert_eq!(swap_momentum(&a[j * 9 + i]), b[i * 7 + j]);
            }
        }
    }

    #[test]
    fn riemann_quadrants_are_transposition_symmetric() {
        let s = Setup2D { nx: 20, ny: 20, ..Case2D::Riemann.setup() };
        let f = s.initial_field();
        assert_eq!(f.transposed(), f);
    }

    #[test]
    fn short_riemann_run_stays_symmetric() {
        let p = SchemeParams::z();
        let s = Setup2D { case: Case2D::Riemann, nx: 24, ny: 24, dt: 0.004, t_end: 0.08 };
        let f = run_case(&s, &p).unwrap();
        assert_eq!(f.transposed(), f);
    }

    #[test]
    fn dmr_states_and_trace() {
        let (r, u, v, p) = dmr_post_shock();
        assert_eq!((r, p), (8.0, 116.5));
        assert!((u - 7.144_709_581_221_619).abs() < 1e-12);
        assert!((v + 4.125).abs() < 1e-12);
        assert!((dmr_shock_x(0.0, 0.0) - 1.0 / 6.0).abs() < 1e-15);
        // shock moves at Mach 10 normal to itself
        let drift = (dmr_shock_x(0.0, 0.1) - dmr_shock_x(0.0, 0.0)) * (std::f64::consts::PI / 3.0).sin();
        assert!((drift - 1.0).abs() < 1e-12);
        assert!(run_dmr(100, 30, 1e-3, &SchemeParams::es4()).is_err());
    }

    #[test]
    fn jump_finder_and_line_sampling() {
        let s = [(0.0, 1.0), (1.0, 1.0), (2.0, 5.0), (3.0, 5.2)];
        assert_eq!(largest_jump(&s), Some((1.5, 4.0)));
        let mut f = Field2D::uniform(2, 4, (0.0, 0.0), (0.5, 0.25), [1.0, 0.0, 0.0, 2.5]);
        for i in 0..2 {
            f.u[2 + i][0] = 3.0;
        }
        // rows at y = 0.125 and 0.375: y = 0.25 sits half way
        let line = f.density_along_y(0.25);
        assert!((line[0].1 - 2.0).abs() < 1e-15);
    }

    #[test]
    fn csv_stride_downsamples() {
        let f = Field2D::uniform(4, 4, (0.0, 0.0), (0.25, 0.25), conserved_2d(1.0, 0.0, 0.0, 1.0));
        assert_eq!(f.to_csv(1).lines().count(), 17);
        assert_eq!(f.to_csv(2).lines().count(), 5);
        assert!(f.to_csv(2).starts_with("x,y,rho,u,v,p\n"));
    }
}
