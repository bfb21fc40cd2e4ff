//! Five-point stencil windows.

use std::ops::{Add, Index, Mul};

/// Five consecutive point values `v[-2..=2]` centered on a cell `j`.
///
/// Every smoothness indicator and reconstruction kernel in this crate reads
/// its data through a window. Three-point kernels simply ignore the outer
/// slots, so all kernels share one calling convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilWindow([f64; 5]);

impl StencilWindow {
    pub const fn new(values: [f64; 5]) -> Self {
        Self(values)
    }

    /// Window from a slice of five values; `None` if the length is wrong.
    pub fn from_slice(values: &[f64]) -> Option<Self> {
        <[f64; 5]>::try_from(values).ok().map(Self)
    }

    /// Window centered on `center` of `data`, which must have two values on each side.
    #[inline]
    pub fn centered(data: &[f64], center: usize) -> Self {
        Self([
            data[center - 2],
            data[center - 1],
            data[center],
            data[center + 1],
            data[center + 2],
        ])
    }

    /// Samples `f` at `x_center + k*dx` for `k = -2..=2`.
    pub fn sample<F: Fn(f64) -> f64>(f: F, x_center: f64, dx: f64) -> Self {
        Self(std::array::from_fn(|i| f(x_center + (i as f64 - 2.0) * dx)))
    }

    /// Value at `offset` from the center, `offset` in `-2..=2`.
    #[inline]
    pub fn at(&self, offset: i32) -> f64 {
        self.0[(offset + 2) as usize]
    }

    #[inline]
    pub fn values(&self) -> &[f64; 5] {
        &self.0
    }

    /// The window with offsets negated, `v'[k] = v[-k]`.
    #[inline]
    pub fn reversed(&self) -> Self {
        let v = self.0;
        Self([v[4], v[3], v[2], v[1], v[0]])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl Index<i32> for StencilWindow {
    type Output = f64;

    #[inline]
    fn index(&self, offset: i32) -> &f64 {
        &self.0[(offset + 2) as usize]
    }
}

impl From<[f64; 5]> for StencilWindow {
    fn from(values: [f64; 5]) -> Self {
        Self(values)
    }
}

impl Mul<StencilWindow> for f64 {
    type Output = StencilWindow;

    fn mul(self, w: StencilWindow) -> StencilWindow {
        StencilWindow(w.0.map(|v| self * v))
    }
}

impl Add<f64> for StencilWindow {
    type Output = StencilWindow;

    fn add(self, c: f64) -> StencilWindow {
        StencilWindow(self.0.map(|v| v + c))
    }
}
