//! Grid-refinement probes for measuring the order of pointwise quantities.
//!
//! A probe samples a smooth test function on five-point windows whose center
//! sits at `x_j = anchor − λ·Δx`, so that the anchor (typically a first-order
//! critical point) lies at `x_j + λ·Δx`. Evaluating a functional on the
//! windows across a halving sequence of `Δx` and comparing successive
//! levels gives the empirical exponent of its leading term.

use thiserror::Error;

use crate::stencil::StencilWindow;

/// Values at or below this magnitude are treated as exact zeros.
pub const ZERO_FLOOR: f64 = 1e-300;

#[derive(Debug, Error, PartialEq)]
pub enum ProbeError {
    #[error("critical-point offset must satisfy -1 < lambda < 1, got {0}")]
    OffsetOutOfRange(f64),
    #[error("refinement sequence needs at least 4 levels, got {0}")]
    TooFewLevels(usize),
    #[error("grid spacings must be positive and halve at every level (level {0})")]
    NotHalving(usize),
}

/// A smooth test function, an anchor point, an offset and a refinement ladder.
#[derive(Debug, Clone)]
pub struct OrderProbe<F> {
    function: F,
    anchor: f64,
    lambda: f64,
    dx: Vec<f64>,
}

impl<F: Fn(f64) -> f64> OrderProbe<F> {
    pub fn new(function: F, anchor: f64, lambda: f64, dx: Vec<f64>) -> Result<Self, ProbeError> {
        if !(lambda > -1.0 && lambda < 1.0) {
            return Err(ProbeError::OffsetOutOfRange(lambda));
        }
        if dx.len() < 4 {
            return Err(ProbeError::TooFewLevels(dx.len()));
        }
        for (i, &h) in dx.iter().enumerate() {
            if !(h > 0.0 && h.is_finite()) {
                return Err(ProbeError::NotHalving(i));
            }
            if i > 0 {
                let ratio = dx[i - 1] / h;
                if (ratio - 2.0).abs() > 1e-12 {
                    return Err(ProbeError::NotHalving(i));
                }
            }
        }
        Ok(Self { function, anchor, lambda, dx })
    }

    /// Probe with `levels` spacings starting at `dx0` and halving each time.
    pub fn halving(
        function: F,
        anchor: f64,
        lambda: f64,
        dx0: f64,
        levels: usize,
    ) -> Result<Self, ProbeError> {
        let dx = (0..levels).map(|k| dx0 / f64::powi(2.0, k as i32)).collect();
        Self::new(function, anchor, lambda, dx)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn spacings(&self) -> &[f64] {
        &self.dx
    }

    /// Window at refinement level `level`.
    pub fn window(&self, level: usize) -> StencilWindow {
        let h = self.dx[level];
        let center = self.anchor - self.lambda * h;
        StencilWindow::sample(&self.function, center, h)
    }

    /// Evaluates `functional` at every level and estimates its order.
    ///
    /// Pairs where either value is at or below `floor` are excluded; the
    /// reported order is the slope of the finest remaining pair.
    pub fn measure<G>(&self, functional: G, floor: f64) -> OrderMeasurement
    where
        G: Fn(&StencilWindow) -> f64,
    {
        let values: Vec<f64> = (0..self.dx.len())
            .map(|level| functional(&self.window(level)))
            .collect();
        OrderMeasurement::from_values(self.dx.clone(), values, floor)
    }
}

/// Result of a refinement probe.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderMeasurement {
    pub dx: Vec<f64>,
    pub values: Vec<f64>,
    /// Slope of `log2(value)` against `log2(Δx)` for each successive pair;
    /// `None` where the pair was excluded.
    pub slopes: Vec<Option<f64>>,
    /// Slope of the finest usable pair, `None` if no pair was usable.
    pub order: Option<f64>,
    /// `value/Δx^n` at the finest usable level, with `n` the measured order
    /// rounded to the nearest integer.
    pub coefficient: Option<f64>,
}

impl OrderMeasurement {
    pub fn from_values(dx: Vec<f64>, values: Vec<f64>, floor: f64) -> Self {
        let usable = |v: f64| v.is_finite() && v.abs() > floor;
        let slopes: Vec<Option<f64>> = dx
            .windows(2)
            .zip(values.windows(2))
            .map(|(h, v)| {
                (usable(v[0]) && usable(v[1]))
                    .then(|| (v[0].abs() / v[1].abs()).log2() / (h[0] / h[1]).log2())
            })
            .collect();
        let finest = slopes.iter().rposition(Option::is_some);
        let order = finest.and_then(|i| slopes[i]);
        let coefficient = finest.zip(order).map(|(i, n)| {
            let level = i + 1;
            values[level].abs() / dx[level].powi(n.round() as i32)
        });
        Self { dx, values, slopes, order, coefficient }
    }

    /// True when every value was at or below the floor.
    pub fn is_undefined(&self) -> bool {
        self.order.is_none()
    }
}
