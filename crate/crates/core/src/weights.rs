//! Nonlinear weights for the third-order schemes.
//!
//! Each scheme maps a window to a pair of local indicators `β_k` and (for
//! the Z family) one global indicator `τ`, then to non-normalized weights
//! `α_k` and finally to `ω_k = α_k / Σα`.
//!
//! * `Js`:  `α_k = d_k / (ε + β_k)²`
//! * `Z`, `Es3`, `Es4`: `α_k = d_k (1 + C_α (τ / (β_k + ε))^p)`
//! * `F3`:  `α_k = d_k (1 + τ^{p1} / (β_k + ε)^{p2})`
//!
//! ES4 pairs extended-stencil local indicators whose leading terms coincide
//! at a first-order critical point with a four-point `τ` that is fifth order
//! there. The shared leading term cancels in the normalization, which is
//! what lets ES4 meet `ω_k − d_k = O(Δx²)` with `p = 1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::indicators::{self, ES4_C_BETA};
use crate::probe::{OrderMeasurement, OrderProbe};
use crate::stencil::StencilWindow;

/// Linear weights of the two candidates for the positive-wind face `j+1/2`.
pub const LINEAR_WEIGHTS: [f64; 2] = [1.0 / 3.0, 2.0 / 3.0];
/// Division guard for the Z family.
pub const EPSILON_Z: f64 = 1e-40;
/// Division guard for the classical weights.
pub const EPSILON_JS: f64 = 1e-6;
/// Amplification coefficient of ES4.
pub const ES4_C_ALPHA: f64 = 1.3;
/// Amplification coefficient of ES3; reproduces its published advection errors.
pub const ES3_C_ALPHA: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Js,
    Z,
    F3,
    Es3,
    Es4,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [Scheme::Js, Scheme::Z, Scheme::F3, Scheme::Es3, Scheme::Es4];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Js => "js",
            Scheme::Z => "z",
            Scheme::F3 => "f3",
            Scheme::Es3 => "es3",
            Scheme::Es4 => "es4",
        }
    }

    /// True for the schemes whose weights are `d_k(1 + ...)`.
    pub fn is_z_type(self) -> bool {
        !matches!(self, Scheme::Js)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown scheme `{0}` (expected js, z, f3, es3 or es4)")]
pub struct UnknownScheme(pub String);

impl FromStr for Scheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "js" | "weno3-js" => Ok(Scheme::Js),
            "z" | "weno3-z" => Ok(Scheme::Z),
            "f3" | "weno-f3" => Ok(Scheme::F3),
            "es3" | "weno3-z_es3" => Ok(Scheme::Es3),
            "es4" | "weno3-z_es4" => Ok(Scheme::Es4),
            _ => Err(UnknownScheme(s.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("{name} must be positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error("linear weights must lie in (0, 1) and sum to 1, got ({0}, {1})")]
    LinearWeights(f64, f64),
}

#[derive(Debug, Error, PartialEq)]
#[error("degenerate weights: both non-normalized weights are zero")]
pub struct DegenerateWeights;

/// A scheme and all its free constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub scheme: Scheme,
    /// Exponent of `τ/β` for the Z family.
    pub p: f64,
    /// F3 exponent on `τ`.
    pub p1: f64,
    /// F3 exponent on `β + ε`.
    pub p2: f64,
    pub c_alpha: f64,
    /// ES4 second-difference weight; ignored by the other schemes.
    pub c_beta: f64,
    pub epsilon: f64,
    pub d: [f64; 2],
}

impl SchemeParams {
    /// Default constants for `scheme`.
    pub fn new(scheme: Scheme) -> Self {
        let base = SchemeParams {
            scheme,
            p: 2.0,
            p1: 1.5,
            p2: 1.0,
            c_alpha: 1.0,
            c_beta: ES4_C_BETA,
            epsilon: EPSILON_Z,
            d: LINEAR_WEIGHTS,
        };
        match scheme {
            Scheme::Js => SchemeParams { epsilon: EPSILON_JS, ..base },
            Scheme::Z | Scheme::F3 => base,
            Scheme::Es3 => SchemeParams { c_alpha: ES3_C_ALPHA, ..base },
            Scheme::Es4 => SchemeParams { p: 1.0, c_alpha: ES4_C_ALPHA, ..base },
        }
    }

    pub fn js() -> Self {
        Self::new(Scheme::Js)
    }
    pub fn z() -> Self {
        Self::new(Scheme::Z)
    }
    pub fn f3() -> Self {
        Self::new(Scheme::F3)
    }
    pub fn es3() -> Self {
        Self::new(Scheme::Es3)
    }
    pub fn es4() -> Self {
        Self::new(Scheme::Es4)
    }

    pub fn with_c_alpha(self, c_alpha: f64) -> Self {
        Self { c_alpha, ..self }
    }
    pub fn with_c_beta(self, c_beta: f64) -> Self {
        Self { c_beta, ..self }
    }
    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }
    pub fn with_epsilon(self, epsilon: f64) -> Self {
        Self { epsilon, ..self }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let positive = [
            ("p", self.p),
            ("p1", self.p1),
            ("p2", self.p2),
            ("C_alpha", self.c_alpha),
            ("C_beta", self.c_beta),
            ("epsilon", self.epsilon),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ParamError::NotPositive { name, value });
            }
        }
        let [d0, d1] = self.d;
        let inside = |d: f64| d > 0.0 && d < 1.0;
        if !(inside(d0) && inside(d1) && (d0 + d1 - 1.0).abs() < 1e-14) {
            return Err(ParamError::LinearWeights(d0, d1));
        }
        Ok(())
    }

    /// `(β0, β1, τ)` for this scheme; `τ` is zero for `Js`.
    #[inline]
    pub fn indicators(&self, w: &StencilWindow) -> ([f64; 2], f64) {
        match self.scheme {
            Scheme::Js => (indicators::beta_js(w), 0.0),
            Scheme::Z => (indicators::beta_js(w), indicators::tau_z3(w)),
            Scheme::F3 => (indicators::beta_js(w), indicators::tau_f3(w)),
            Scheme::Es3 => (indicators::beta_es3(w), indicators::tau_es(w)),
            Scheme::Es4 => (indicators::beta_es4(w, self.c_beta), indicators::tau_es(w)),
        }
    }
}

#[inline]
fn pow_fast(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x * x
    } else if p == 1.5 {
        x * x.sqrt()
    } else {
        x.powf(p)
    }
}

/// `d_k / (ε + β_k)²`
#[inline]
pub fn alpha_js(d: f64, beta: f64, epsilon: f64) -> f64 {
    let s = epsilon + beta;
    d / (s * s)
}

/// `d_k (1 + C_α (τ / (β_k + ε))^p)`
#[inline]
pub fn alpha_z(d: f64, beta: f64, tau: f64, c_alpha: f64, p: f64, epsilon: f64) -> f64 {
    d * (1.0 + c_alpha * pow_fast(tau / (beta + epsilon), p))
}

/// `d_k (1 + τ^{p1} / (β_k + ε)^{p2})`
#[inline]
pub fn alpha_f3(d: f64, beta: f64, tau: f64, p1: f64, p2: f64, epsilon: f64) -> f64 {
    d * (1.0 + pow_fast(tau, p1) / pow_fast(beta + epsilon, p2))
}

/// `ω_k = α_k / (α_0 + α_1)`
pub fn normalize(alpha: [f64; 2]) -> Result<[f64; 2], DegenerateWeights> {
    let sum = alpha[0] + alpha[1];
    if !(sum > 0.0) {
        return Err(DegenerateWeights);
    }
    Ok([alpha[0] / sum, alpha[1] / sum])
}

/// Non-normalized weights for `w`.
#[inline]
pub fn alphas_for(w: &StencilWindow, params: &SchemeParams) -> [f64; 2] {
    let (beta, tau) = params.indicators(w);
    let d = params.d;
    let e = params.epsilon;
    match params.scheme {
        Scheme::Js => [alpha_js(d[0], beta[0], e), alpha_js(d[1], beta[1], e)],
        Scheme::Z | Scheme::Es3 | Scheme::Es4 => [
            alpha_z(d[0], beta[0], tau, params.c_alpha, params.p, e),
            alpha_z(d[1], beta[1], tau, params.c_alpha, params.p, e),
        ],
        Scheme::F3 => [
            alpha_f3(d[0], beta[0], tau, params.p1, params.p2, e),
            alpha_f3(d[1], beta[1], tau, params.p1, params.p2, e),
        ],
    }
}

/// Normalized nonlinear weights `(ω0, ω1)` for `w`.
#[inline]
pub fn weights_for(w: &StencilWindow, params: &SchemeParams) -> [f64; 2] {
    let a = alphas_for(w, params);
    // α_k > 0 for every scheme: d_k > 0 and ε > 0.
    let sum = a[0] + a[1];
    [a[0] / sum, a[1] / sum]
}

/// `ω_num / ω_den` on one window.
///
/// With `den` the smoother candidate and `num` the rougher one, this is the
/// relative importance the scheme gives to the less smooth sub-stencil.
pub fn weight_ratio(w: &StencilWindow, params: &SchemeParams, num: usize, den: usize) -> f64 {
    let omega = weights_for(w, params);
    omega[num] / omega[den]
}

/// Relative level below which a weight deviation counts as roundoff.
pub const DEVIATION_ROUNDOFF: f64 = 1e-13;

/// Empirical order of `max_k |ω_k − d_k|` on the probe's refinement sequence.
///
/// Levels where the deviation has dropped below `1e−13·min d_k` are reported
/// as converged to roundoff and excluded from the slope.
pub fn deviation_order<F>(probe: &OrderProbe<F>, params: &SchemeParams) -> OrderMeasurement
where
    F: Fn(f64) -> f64,
{
    let d = params.d;
    let floor = DEVIATION_ROUNDOFF * d[0].min(d[1]);
    probe.measure(
        |w| {
            let omega = weights_for(w, params);
            (omega[0] - d[0]).abs().max((omega[1] - d[1]).abs())
        },
        floor,
    )
}
