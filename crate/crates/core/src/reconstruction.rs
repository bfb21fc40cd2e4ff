//! Face reconstruction `f̂_{j+1/2} = Σ ω_k q_k`.
//!
//! Finite-difference (flux) formulation: point values of a flux are
//! reconstructed to the half-node and differenced. For negative wind the
//! window is reversed and the positive-wind kernel reused, so the two
//! directions are exact mirrors of each other.

use crate::stencil::StencilWindow;
use crate::weights::{weights_for, SchemeParams};

/// Reconstructed value at a half-node.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FaceValue(pub f64);

impl FaceValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// The two two-point candidate interpolations at `x_{j+1/2}`.
#[inline]
pub fn candidates(w: &StencilWindow) -> [f64; 2] {
    [0.5 * (3.0 * w[0] - w[-1]), 0.5 * (w[0] + w[1])]
}

/// Third-order upwind face combination `(−v−1 + 5v0 + 2v+1)/6`.
#[inline]
pub fn upwind3_face(w: &StencilWindow) -> f64 {
    (-w[-1] + 5.0 * w[0] + 2.0 * w[1]) / 6.0
}

/// Solves for the linear weights that turn the two candidates into the
/// third-order upwind combination.
///
/// Consistency on constants forces `d0 + d1 = 1`; matching on quadratic
/// data `v_k = k²` fixes the remaining degree of freedom.
pub fn taylor_matching_oracle() -> [f64; 2] {
    let quad = StencilWindow::sample(|x| x * x, 0.0, 1.0);
    let [q0, q1] = candidates(&quad);
    let target = upwind3_face(&quad);
    // [1  1 ] [d0]   [1     ]
    // [q0 q1] [d1] = [target]
    let det = q1 - q0;
    let d0 = (q1 - target) / det;
    let d1 = (target - q0) / det;
    [d0, d1]
}

/// Positive-wind reconstruction from the window centered on cell `j`.
#[inline]
pub fn reconstruct_plus(w: &StencilWindow, params: &SchemeParams) -> FaceValue {
    let [w0, w1] = weights_for(w, params);
    let [q0, q1] = candidates(w);
    FaceValue(w0 * q0 + w1 * q1)
}

/// Negative-wind reconstruction at `x_{j+1/2}` from the window centered on
/// cell `j+1`.
#[inline]
pub fn reconstruct_minus(w: &StencilWindow, params: &SchemeParams) -> FaceValue {
    reconstruct_plus(&w.reversed(), params)
}

const WENO5_EPSILON: f64 = 1e-6;
const WENO5_LINEAR: [f64; 3] = [0.1, 0.6, 0.3];

/// Classical fifth-order WENO-JS face value; used only to generate
/// fine-grid reference solutions.
#[inline]
pub fn weno5_reference(w: &StencilWindow) -> FaceValue {
    let (a, b, c, d, e) = (w[-2], w[-1], w[0], w[1], w[2]);
    let q = [
        (2.0 * a - 7.0 * b + 11.0 * c) / 6.0,
        (-b + 5.0 * c + 2.0 * d) / 6.0,
        (2.0 * c + 5.0 * d - e) / 6.0,
    ];
    let s = [a - 2.0 * b + c, b - 2.0 * c + d, c - 2.0 * d + e];
    let g = [a - 4.0 * b + 3.0 * c, b - d, 3.0 * c - 4.0 * d + e];
    let mut alpha = [0.0; 3];
    for k in 0..3 {
        let beta = 13.0 / 12.0 * s[k] * s[k] + 0.25 * g[k] * g[k];
        let t = WENO5_EPSILON + beta;
        alpha[k] = WENO5_LINEAR[k] / (t * t);
    }
    let sum = alpha[0] + alpha[1] + alpha[2];
    FaceValue((alpha[0] * q[0] + alpha[1] * q[1] + alpha[2] * q[2]) / sum)
}

/// A face reconstruction kernel usable by the solvers.
pub trait Reconstruct: Sync {
    /// Positive-wind face value from the window centered on the upwind cell.
    fn plus(&self, w: &StencilWindow) -> f64;

    /// Negative-wind face value from the window centered on the downwind cell.
    #[inline]
    fn minus(&self, w: &StencilWindow) -> f64 {
        self.plus(&w.reversed())
    }

    fn label(&self) -> String;
}

impl Reconstruct for SchemeParams {
    #[inline]
    fn plus(&self, w: &StencilWindow) -> f64 {
        reconstruct_plus(w, self).0
    }

    fn label(&self) -> String {
        self.scheme.name().to_string()
    }
}

/// Fifth-order WENO-JS kernel for reference solutions.
#[derive(Debug, Clone, Copy, Default)]
pub struct Weno5Reference;

impl Reconstruct for Weno5Reference {
    #[inline]
    fn plus(&self, w: &StencilWindow) -> f64 {
        weno5_reference(w).0
    }

    fn label(&self) -> String {
        "weno5-js".to_string()
    }
}
