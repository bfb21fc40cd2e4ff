//! Local (`β_k`) and global (`τ`) smoothness indicators.
//!
//! All indicators are quadratic forms in the raw window values. Grid spacing
//! never enters a kernel, which keeps them homogeneous of degree two
//! (`I(s·w) = s²·I(w)`) and invariant under constant shifts.
//!
//! | kernel     | slots read | leading error, smooth | at a first-order critical point |
//! |------------|-----------|------------------------|----------------------------------|
//! | `beta_js`  | −1..+1    | `f′²Δx²`               | `¼(2λ±1)²f″²Δx⁴`              |
//! | `beta_es3` | −2..+2    | `f′²Δx²`               | `O(Δx⁴)`                         |
//! | `beta_es4` | −2..+2    | `f′²Δx²`               | `(λ²+C_β)f″²Δx⁴`                |
//! | `tau_z3`   | −1..+1    | `2f′f″Δx³`             | `2|λ|f″²Δx⁴`                   |
//! | `tau_f3`   | −1..+1    | `c f″²Δx⁴`             | `c f″²Δx⁴`                      |
//! | `tau_es`   | −1..+2    | `|f′f‴|Δx⁴`            | `|(3/2−λ)f″f‴|Δx⁵`             |

use crate::probe::{OrderMeasurement, OrderProbe, ZERO_FLOOR};
use crate::stencil::StencilWindow;

/// Second-difference weight on the left candidate of the ES3 local indicator.
pub const ES3_C_BETA0: f64 = 0.5;
/// Second-difference weight on the right candidate of the ES3 local indicator.
pub const ES3_C_BETA1: f64 = 0.15;
/// Coefficient of the squared second difference in the F3 global indicator.
pub const F3_C_TAU: f64 = 2.0 / 12.0;
/// Default second-difference weight of the ES4 local indicators.
pub const ES4_C_BETA: f64 = 2.0;

/// Classical two-point indicators `(v0 − v−1)²` and `(v+1 − v0)²`.
#[inline]
pub fn beta_js(w: &StencilWindow) -> [f64; 2] {
    let d0 = w[0] - w[-1];
    let d1 = w[1] - w[0];
    [d0 * d0, d1 * d1]
}

/// Extended-stencil indicators: a squared one-sided three-point first
/// derivative at `x_j` plus `c_beta` times the squared second difference of
/// the same candidate side.
#[inline]
pub fn beta_es4(w: &StencilWindow, c_beta: f64) -> [f64; 2] {
    let g0 = 3.0 * w[0] - 4.0 * w[-1] + w[-2];
    let s0 = w[-2] - 2.0 * w[-1] + w[0];
    let g1 = 3.0 * w[0] - 4.0 * w[1] + w[2];
    let s1 = w[0] - 2.0 * w[1] + w[2];
    [
        0.25 * g0 * g0 + c_beta * s0 * s0,
        0.25 * g1 * g1 + c_beta * s1 * s1,
    ]
}

/// Two-point first difference plus a weighted second difference, with the
/// fixed weights 0.5 (left) and 0.15 (right).
#[inline]
pub fn beta_es3(w: &StencilWindow) -> [f64; 2] {
    let d0 = w[0] - w[-1];
    let s0 = w[0] - 2.0 * w[-1] + w[-2];
    let d1 = w[1] - w[0];
    let s1 = w[2] - 2.0 * w[1] + w[0];
    [
        d0 * d0 + ES3_C_BETA0 * s0 * s0,
        d1 * d1 + ES3_C_BETA1 * s1 * s1,
    ]
}

/// `|(v+1 − v−1)(v+1 − 2v0 + v−1)|`
#[inline]
pub fn tau_z3(w: &StencilWindow) -> f64 {
    ((w[1] - w[-1]) * (w[1] - 2.0 * w[0] + w[-1])).abs()
}

/// `(2/12)(v+1 − 2v0 + v−1)²`
#[inline]
pub fn tau_f3(w: &StencilWindow) -> f64 {
    let s = w[1] - 2.0 * w[0] + w[-1];
    F3_C_TAU * s * s
}

/// Four-point global indicator: product of a third difference and a
/// first-derivative approximation, `|(v+2 − 3v+1 + 3v0 − v−1)(2v+1 − 3v0 + v−1)|`.
#[inline]
pub fn tau_es(w: &StencilWindow) -> f64 {
    ((w[2] - 3.0 * w[1] + 3.0 * w[0] - w[-1]) * (2.0 * w[1] - 3.0 * w[0] + w[-1])).abs()
}

/// Selects a single scalar indicator, for probes and property tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Indicator {
    BetaJs(usize),
    BetaEs3(usize),
    BetaEs4 { k: usize, c_beta: f64 },
    TauZ3,
    TauF3,
    TauEs,
}

impl Indicator {
    /// Every indicator kernel with the default constants.
    pub fn all() -> Vec<Indicator> {
        let mut out = Vec::new();
        for k in 0..2 {
            out.push(Indicator::BetaJs(k));
            out.push(Indicator::BetaEs3(k));
            out.push(Indicator::BetaEs4 { k, c_beta: ES4_C_BETA });
        }
        out.extend([Indicator::TauZ3, Indicator::TauF3, Indicator::TauEs]);
        out
    }

    pub fn eval(&self, w: &StencilWindow) -> f64 {
        match *self {
            Indicator::BetaJs(k) => beta_js(w)[k],
            Indicator::BetaEs3(k) => beta_es3(w)[k],
            Indicator::BetaEs4 { k, c_beta } => beta_es4(w, c_beta)[k],
            Indicator::TauZ3 => tau_z3(w),
            Indicator::TauF3 => tau_f3(w),
            Indicator::TauEs => tau_es(w),
        }
    }
}

/// Empirical order of `indicator` as `Δx → 0` on the probe's refinement
/// sequence, with the anchor point sitting `λ·Δx` to the right of the
/// window center.
pub fn measure_order<F>(probe: &OrderProbe<F>, indicator: Indicator) -> OrderMeasurement
where
    F: Fn(f64) -> f64,
{
    probe.measure(|w| indicator.eval(w), ZERO_FLOOR)
}
