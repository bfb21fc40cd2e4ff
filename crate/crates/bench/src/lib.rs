//! Input fixtures shared by the criterion benchmarks.

use weno3::StencilWindow;

/// Deterministic windows mixing smooth, critical-point and discontinuous data.
pub fn sample_windows(count: usize) -> Vec<StencilWindow> {
    (0..count)
        .map(|i| {
            let t = i as f64 * 0.37;
            match i % 3 {
                0 => StencilWindow::sample(|x| (x + t).sin(), 0.0, 0.05),
                1 => StencilWindow::sample(|x| (x - 0.3).powi(2) * (1.0 + t.cos()), 0.0, 0.1),
                _ => StencilWindow::new([1.0, 1.0, 1.0 + t.sin().abs(), 0.1, 0.1]),
            }
        })
        .collect()
}
