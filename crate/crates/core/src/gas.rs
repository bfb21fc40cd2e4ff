//! Ideal-gas Euler fluxes, Steger–Warming splitting and Roe-averaged
//! eigensystems.
//!
//! Directional quantities are written for one sweep direction: in 1D the
//! conserved vector is `(ρ, ρu, E)`; in 2D it is `(ρ, ρu_n, ρu_t, E)` with
//! `u_n` the velocity along the sweep. The 2D solver permutes momentum
//! components before a transverse sweep so that one set of formulas serves
//! both directions.

/// Ratio of specific heats.
pub const GAMMA: f64 = 1.4;
/// Eigenvalue smoothing of the flux split, relative to the sound speed.
pub const SPLIT_SMOOTHING: f64 = 1e-6;

/// `(ρ, u, p)` from `(ρ, ρu, E)`.
#[inline]
pub fn primitive_1d(u: &[f64; 3]) -> (f64, f64, f64) {
    let rho = u[0];
    let vel = u[1] / rho;
    let p = (GAMMA - 1.0) * (u[2] - 0.5 * rho * vel * vel);
    (rho, vel, p)
}

#[inline]
pub fn conserved_1d(rho: f64, vel: f64, p: f64) -> [f64; 3] {
    [rho, rho * vel, p / (GAMMA - 1.0) + 0.5 * rho * vel * vel]
}

/// `(ρ, u_n, u_t, p)` from `(ρ, ρu_n, ρu_t, E)`.
#[inline]
pub fn primitive_2d(u: &[f64; 4]) -> (f64, f64, f64, f64) {
    let rho = u[0];
    let un = u[1] / rho;
    let ut = u[2] / rho;
    let p = (GAMMA - 1.0) * (u[3] - 0.5 * rho * (un * un + ut * ut));
    (rho, un, ut, p)
}

#[inline]
pub fn conserved_2d(rho: f64, un: f64, ut: f64, p: f64) -> [f64; 4] {
    [rho, rho * un, rho * ut, p / (GAMMA - 1.0) + 0.5 * rho * (un * un + ut * ut)]
}

#[inline]
pub fn sound_speed(rho: f64, p: f64) -> f64 {
    (GAMMA * p / rho).sqrt()
}

/// Exact flux `(ρu, ρu² + p, u(E + p))`.
pub fn euler_flux_1d(u: &[f64; 3]) -> [f64; 3] {
    let (rho, vel, p) = primitive_1d(u);
    [rho * vel, rho * vel * vel + p, vel * (u[2] + p)]
}

/// Exact flux in the sweep direction.
pub fn euler_flux_2d(u: &[f64; 4]) -> [f64; 4] {
    let (rho, un, ut, p) = primitive_2d(u);
    [rho * un, rho * un * un + p, rho * un * ut, un * (u[3] + p)]
}

#[inline]
fn split_speed(lambda: f64, eps: f64) -> (f64, f64) {
    let r = (lambda * lambda + eps * eps).sqrt();
    (0.5 * (lambda + r), 0.5 * (lambda - r))
}

#[inline]
fn physical(rho: f64, p: f64) -> bool {
    rho > 0.0 && p > 0.0 && rho.is_finite() && p.is_finite()
}

/// Steger–Warming split `F = F⁺ + F⁻` of the 1D flux; `None` for a state
/// with nonpositive density or pressure.
#[inline]
pub fn steger_warming_1d(rho: f64, vel: f64, p: f64) -> Option<([f64; 3], [f64; 3])> {
    if !physical(rho, p) {
        return None;
    }
    let c = sound_speed(rho, p);
    let eps = SPLIT_SMOOTHING * c;
    let (l1p, l1m) = split_speed(vel, eps);
    let (l2p, l2m) = split_speed(vel - c, eps);
    let (l3p, l3m) = split_speed(vel + c, eps);
    let part = |l1: f64, l2: f64, l3: f64| {
        let s = rho / (2.0 * GAMMA);
        let um = vel - c;
        let up = vel + c;
        let w = (3.0 - GAMMA) * (l2 + l3) * c * c / (2.0 * (GAMMA - 1.0));
        [
            s * (2.0 * (GAMMA - 1.0) * l1 + l2 + l3),
            s * (2.0 * (GAMMA - 1.0) * l1 * vel + l2 * um + l3 * up),
            s * ((GAMMA - 1.0) * l1 * vel * vel + 0.5 * l2 * um * um + 0.5 * l3 * up * up + w),
        ]
    };
    Some((part(l1p, l2p, l3p), part(l1m, l2m, l3m)))
}

/// Steger–Warming split of the flux in the sweep direction.
#[inline]
pub fn steger_warming_2d(rho: f64, un: f64, ut: f64, p: f64) -> Option<([f64; 4], [f64; 4])> {
    if !physical(rho, p) {
        return None;
    }
    let c = sound_speed(rho, p);
    let eps = SPLIT_SMOOTHING * c;
    let (l1p, l1m) = split_speed(un, eps);
    let (l2p, l2m) = split_speed(un - c, eps);
    let (l3p, l3m) = split_speed(un + c, eps);
    let part = |l1: f64, l2: f64, l3: f64| {
        let s = rho / (2.0 * GAMMA);
        let um = un - c;
        let up = un + c;
        let tt = ut * ut;
        let w = (3.0 - GAMMA) * (l2 + l3) * c * c / (2.0 * (GAMMA - 1.0));
        [
            s * (2.0 * (GAMMA - 1.0) * l1 + l2 + l3),
            s * (2.0 * (GAMMA - 1.0) * l1 * un + l2 * um + l3 * up),
            s * (2.0 * (GAMMA - 1.0) * l1 + l2 + l3) * ut,
            s * ((GAMMA - 1.0) * l1 * (un * un + tt)
                + 0.5 * l2 * (um * um + tt)
                + 0.5 * l3 * (up * up + tt)
                + w),
        ]
    };
    Some((part(l1p, l2p, l3p), part(l1m, l2m, l3m)))
}

/// Left and right eigenvectors of the flux Jacobian at a face state, with
/// `left · right = I`. Rows of `left` and columns of `right` are ordered by
/// wave family `u−c, u, (shear,) u+c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem<const N: usize> {
    pub left: [[f64; N]; N],
    pub right: [[f64; N]; N],
    pub speeds: [f64; N],
}

impl<const N: usize> Eigensystem<N> {
    #[inline]
    pub fn project(&self, k: usize, v: &[f64; N]) -> f64 {
        let row = &self.left[k];
        let mut s = 0.0;
        for m in 0..N {
            s += row[m] * v[m];
        }
        s
    }

    #[inline]
    pub fn back_project(&self, w: &[f64; N]) -> [f64; N] {
        let mut out = [0.0; N];
        for (m, o) in out.iter_mut().enumerate() {
            let row = &self.right[m];
            for k in 0..N {
                *o += row[k] * w[k];
            }
        }
        out
    }
}

/// Roe-averaged face state `(ρ̃, ũ_n, ũ_t, H̃)` of two neighbouring cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoeState {
    pub rho: f64,
    pub un: f64,
    pub ut: f64,
    pub enthalpy: f64,
}

impl RoeState {
    fn average(l: (f64, f64, f64, f64, f64), r: (f64, f64, f64, f64, f64)) -> Self {
        // (ρ, u_n, u_t, p, E)
        let sl = l.0.sqrt();
        let sr = r.0.sqrt();
        let hl = (l.4 + l.3) / l.0;
        let hr = (r.4 + r.3) / r.0;
        let inv = 1.0 / (sl + sr);
        RoeState {
            rho: sl * sr,
            un: (sl * l.1 + sr * r.1) * inv,
            ut: (sl * l.2 + sr * r.2) * inv,
            enthalpy: (sl * hl + sr * hr) * inv,
        }
    }

    pub fn from_1d(l: &[f64; 3], r: &[f64; 3]) -> Self {
        let (rl, ul, pl) = primitive_1d(l);
        let (rr, ur, pr) = primitive_1d(r);
        Self::average((rl, ul, 0.0, pl, l[2]), (rr, ur, 0.0, pr, r[2]))
    }

    pub fn from_2d(l: &[f64; 4], r: &[f64; 4]) -> Self {
        let (rl, unl, utl, pl) = primitive_2d(l);
        let (rr, unr, utr, pr) = primitive_2d(r);
        Self::average((rl, unl, utl, pl, l[3]), (rr, unr, utr, pr, r[3]))
    }

    /// Squared sound speed `(γ−1)(H − q²/2)`.
    pub fn sound_speed_sq(&self) -> f64 {
        (GAMMA - 1.0) * (self.enthalpy - 0.5 * (self.un * self.un + self.ut * self.ut))
    }

    /// 1D eigensystem; `None` if the averaged state is unphysical.
    pub fn eigensystem_1d(&self) -> Option<Eigensystem<3>> {
        let c2 = self.sound_speed_sq();
        if !(c2 > 0.0 && self.rho > 0.0 && c2.is_finite()) {
            return None;
        }
        let c = c2.sqrt();
        let u = self.un;
        let h = self.enthalpy;
        let b1 = (GAMMA - 1.0) / c2;
        let b2 = 0.5 * b1 * u * u;
        let right = [
            [1.0, 1.0, 1.0],
            [u - c, u, u + c],
            [h - u * c, 0.5 * u * u, h + u * c],
        ];
        let left = [
            [0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1],
            [1.0 - b2, b1 * u, -b1],
            [0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1],
        ];
        Some(Eigensystem { left, right, speeds: [u - c, u, u + c] })
    }

    /// Eigensystem in the sweep direction; `None` if unphysical.
    pub fn eigensystem_2d(&self) -> Option<Eigensystem<4>> {
        let c2 = self.sound_speed_sq();
        if !(c2 > 0.0 && self.rho > 0.0 && c2.is_finite()) {
            return None;
        }
        let c = c2.sqrt();
        let u = self.un;
        let v = self.ut;
        let h = self.enthalpy;
        let q2 = 0.5 * (u * u + v * v);
        let b1 = (GAMMA - 1.0) / c2;
        let b2 = b1 * q2;
        let right = [
            [1.0, 1.0, 0.0, 1.0],
            [u - c, u, 0.0, u + c],
            [v, v, 1.0, v],
            [h - u * c, q2, v, h + u * c],
        ];
        let left = [
            [0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1],
            [1.0 - b2, b1 * u, b1 * v, -b1],
            [-v, 0.0, 1.0, 0.0],
            [0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1],
        ];
        Some(Eigensystem { left, right, speeds: [u - c, u, u, u + c] })
    }
}

/// A conservation-law system that a line sweep can discretize.
pub trait FluxModel<const N: usize> {
    /// `(F⁺, F⁻)` at a cell; `None` if the state is unphysical.
    fn split(u: &[f64; N]) -> Option<([f64; N], [f64; N])>;
    /// Characteristic decomposition at the face between `l` and `r`.
    fn face_eigensystem(l: &[f64; N], r: &[f64; N]) -> Option<Eigensystem<N>>;
}

/// 1D Euler, `(ρ, ρu, E)`.
#[derive(Debug, Clone, Copy)]
pub struct Euler1;

impl FluxModel<3> for Euler1 {
    #[inline]
    fn split(u: &[f64; 3]) -> Option<([f64; 3], [f64; 3])> {
        let (rho, vel, p) = primitive_1d(u);
        steger_warming_1d(rho, vel, p)
    }

    #[inline]
    fn face_eigensystem(l: &[f64; 3], r: &[f64; 3]) -> Option<Eigensystem<3>> {
        RoeState::from_1d(l, r).eigensystem_1d()
    }
}

/// 2D Euler along the sweep direction, `(ρ, ρu_n, ρu_t, E)`.
#[derive(Debug, Clone, Copy)]
pub struct EulerSweep;

impl FluxModel<4> for EulerSweep {
    #[inline]
    fn split(u: &[f64; 4]) -> Option<([f64; 4], [f64; 4])> {
        let (rho, un, ut, p) = primitive_2d(u);
        steger_warming_2d(rho, un, ut, p)
    }

    #[inline]
    fn face_eigensystem(l: &[f64; 4], r: &[f64; 4]) -> Option<Eigensystem<4>> {
        RoeState::from_2d(l, r).eigensystem_2d()
    }
}
