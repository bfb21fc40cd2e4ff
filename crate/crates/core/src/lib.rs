//! Third-order finite-difference WENO toolkit.
//!
//! The crate provides the smoothness indicators, nonlinear weights and face
//! reconstruction of five third-order schemes (`js`, `z`, `f3`, `es3`,
//! `es4`), together with the solvers they are exercised on: periodic scalar
//! advection, 1D Euler with Steger–Warming splitting and characteristic
//! reconstruction, and a dimension-by-dimension 2D Euler solver.
//!
//! ES4 keeps third order at first-order critical points regardless of where
//! inside the cell the critical point falls, while using `p = 1`.

pub mod error;
pub mod euler1d;
pub mod euler2d;
pub mod gas;
pub mod indicators;
pub mod probe;
pub mod reconstruction;
pub mod scalar1d;
pub mod stencil;
pub mod sweep;
pub mod weights;

pub use error::{Cell, SolverError, StateFault};
pub use indicators::Indicator;
pub use probe::{OrderMeasurement, OrderProbe, ProbeError};
pub use reconstruction::{FaceValue, Reconstruct, Weno5Reference};
pub use scalar1d::{OrderRow, OrderTable};
pub use stencil::StencilWindow;
pub use weights::{Scheme, SchemeParams};
