//! Density comparison of a 1D field file against a reference.

use std::path::Path;

use thiserror::Error;

/// Windows around the secondary entropy-wave peak of the Shu–Osher problem
/// at `t = 1.8`, and the primary peak left of it.
pub const SHU_OSHER_WINDOWS: [Window; 2] = [Window { lo: 1.95, hi: 2.3 }, Window { lo: 1.7, hi: 1.95 }];

#[derive(Debug, Error)]
pub enum CompareError {
    #[error("{path}: {source}")]
    Read { path: String, source: csv::Error },
    #[error("{path}: missing column `{column}`")]
    MissingColumn { path: String, column: &'static str },
    #[error("{path}: `{value}` is not a number")]
    Number { path: String, value: String },
    #[error("{0}: no rows")]
    Empty(String),
    #[error("grids differ ({0} vs {1} points); pass --interpolate to map the reference onto the field")]
    GridMismatch(usize, usize),
    #[error("window [{lo}, {hi}] contains no samples")]
    EmptyWindow { lo: f64, hi: f64 },
}

/// Density samples of a 1D solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub x: Vec<f64>,
    pub rho: Vec<f64>,
}

impl Profile {
    pub fn new(x: Vec<f64>, rho: Vec<f64>) -> Self {
        assert_eq!(x.len(), rho.len());
        Profile { x, rho }
    }

    /// Reads the `x` and `rho` columns of a field file.
    pub fn read(path: &Path) -> Result<Self, CompareError> {
        let name = path.display().to_string();
        let mut reader = csv::Reader::from_path(path).map_err(|source| CompareError::Read { path: name.clone(), source })?;
        let headers = reader.headers().map_err(|source| CompareError::Read { path: name.clone(), source })?.clone();
        let column = |c: &'static str| {
            headers
                .iter()
                .position(|h| h == c)
                .ok_or(CompareError::MissingColumn { path: name.clone(), column: c })
        };
        let (ix, ir) = (column("x")?, column("rho")?);
        let (mut x, mut rho) = (Vec::new(), Vec::new());
        for record in reader.records() {
            let record = record.map_err(|source| CompareError::Read { path: name.clone(), source })?;
            let num = |k: usize| {
                let v = record.get(k).unwrap_or("");
                v.parse::<f64>().map_err(|_| CompareError::Number { path: name.clone(), value: v.to_string() })
            };
            x.push(num(ix)?);
            rho.push(num(ir)?);
        }
        if x.is_empty() {
            return Err(CompareError::Empty(name));
        }
        Ok(Profile { x, rho })
    }

    /// Linear interpolation, constant beyond the end samples.
    pub fn at(&self, t: f64) -> f64 {
        let n = self.x.len();
        if n == 1 || t <= self.x[0] {
            return self.rho[0];
        }
        if t >= self.x[n - 1] {
            return self.rho[n - 1];
        }
        let k = self.x.partition_point(|&v| v < t).clamp(1, n - 1);
        let w = (t - self.x[k - 1]) / (self.x[k] - self.x[k - 1]);
        self.rho[k - 1] + w * (self.rho[k] - self.rho[k - 1])
    }

    /// `(max, min)` density over samples with `x ∈ [lo, hi]`.
    pub fn extrema(&self, w: Window) -> Option<(f64, f64)> {
        let mut it = self.x.iter().zip(&self.rho).filter(|(x, _)| **x >= w.lo && **x <= w.hi).map(|(_, r)| *r);
        let first = it.next()?;
        Some(it.fold((first, first), |(hi, lo), r| (hi.max(r), lo.min(r))))
    }

    fn same_grid(&self, other: &Profile) -> bool {
        self.x.len() == other.x.len()
            && self.x.iter().zip(&other.x).all(|(a, b)| (a - b).abs() <= 1e-12 * a.abs().max(1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowMetrics {
    pub window: Window,
    /// `(max, min)` of the field.
    pub field: (f64, f64),
    /// `(max, min)` of the reference.
    pub reference: (f64, f64),
}

impl WindowMetrics {
    /// `|max_field − max_reference|`.
    pub fn peak_error(&self) -> f64 {
        (self.field.0 - self.reference.0).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// `sqrt(Σ (ρ − ρ_ref)² Δx)` over the field samples.
    pub l2: f64,
    pub windows: Vec<WindowMetrics>,
}

impl Comparison {
    pub fn to_text(&self) -> String {
        let mut s = format!("l2={:.16e}\n", self.l2);
        for m in &self.windows {
            s.push_str(&format!(
                "window=[{},{}] field_max={:.16e} field_min={:.16e} reference_max={:.16e} reference_min={:.16e}\n",
                m.window.lo, m.window.hi, m.field.0, m.field.1, m.reference.0, m.reference.1
            ));
        }
        s
    }
}

/// Compares `field` against `reference`. Without `interpolate` the two
/// must share the same grid.
pub fn compare(
    field: &Profile,
    reference: &Profile,
    windows: &[Window],
    interpolate: bool,
) -> Result<Comparison, CompareError> {
    if !interpolate && !field.same_grid(reference) {
        return Err(CompareError::GridMismatch(field.x.len(), reference.x.len()));
    }
    let n = field.x.len();
    let dx = if n > 1 { (field.x[n - 1] - field.x[0]) / (n - 1) as f64 } else { 1.0 };
    let sum: f64 = field
        .x
        .iter()
        .zip(&field.rho)
        .enumerate()
        .map(|(k, (x, r))| {
            let r_ref = if interpolate { reference.at(*x) } else { reference.rho[k] };
            (r - r_ref).powi(2)
        })
        .sum();
    let mut metrics = Vec::with_capacity(windows.len());
    for &w in windows {
        let f = field.extrema(w).ok_or(CompareError::EmptyWindow { lo: w.lo, hi: w.hi })?;
        let r = reference.extrema(w).ok_or(CompareError::EmptyWindow { lo: w.lo, hi: w.hi })?;
        metrics.push(WindowMetrics { window: w, field: f, reference: r });
    }
    Ok(Comparison { l2: (sum * dx).sqrt(), windows: metrics })
}
