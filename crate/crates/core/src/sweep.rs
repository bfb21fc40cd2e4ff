//! Characteristic-wise flux-split divergence along one grid line.
//!
//! For each face the Roe-averaged eigensystem projects the split fluxes of
//! the surrounding cells onto characteristic fields; each field is
//! reconstructed with the positive-wind kernel on `F⁺` and the negative-wind
//! kernel on `F⁻`, and the sum is mapped back with the right eigenvectors.

use crate::gas::FluxModel;
use crate::reconstruction::Reconstruct;
use crate::stencil::StencilWindow;

/// Padded-line index of a cell the sweep could not process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineFault {
    pub index: usize,
    pub reason: &'static str,
}

/// Scratch buffers reused between sweeps of the same length.
#[derive(Debug, Clone, Default)]
pub struct LineWorkspace<const N: usize> {
    plus: Vec<[f64; N]>,
    minus: Vec<[f64; N]>,
    faces: Vec<[f64; N]>,
}

impl<const N: usize> LineWorkspace<N> {
    pub fn new() -> Self {
        LineWorkspace { plus: Vec::new(), minus: Vec::new(), faces: Vec::new() }
    }
}

/// Numerical flux at the face between padded cells `i` and `i + 1`.
#[inline]
fn face_flux<M, R, const N: usize>(
    line: &[[f64; N]],
    plus: &[[f64; N]],
    minus: &[[f64; N]],
    i: usize,
    recon: &R,
) -> Result<[f64; N], LineFault>
where
    M: FluxModel<N>,
    R: Reconstruct + ?Sized,
{
    let eig = M::face_eigensystem(&line[i], &line[i + 1])
        .ok_or(LineFault { index: i, reason: "unphysical face average" })?;
    let mut h = [0.0; N];
    for (k, hk) in h.iter_mut().enumerate() {
        let mut wp = [0.0; 5];
        let mut wm = [0.0; 5];
        for s in 0..5 {
            wp[s] = eig.project(k, &plus[i - 2 + s]);
            wm[s] = eig.project(k, &minus[i - 1 + s]);
        }
        *hk = recon.plus(&StencilWindow::new(wp)) + recon.minus(&StencilWindow::new(wm));
    }
    Ok(eig.back_project(&h))
}

/// Writes `−(F̂_{i+1/2} − F̂_{i−1/2})/Δx` for the `line.len() − 2·ghost`
/// interior cells of a padded line into `out`.
pub fn line_divergence<M, R, const N: usize>(
    line: &[[f64; N]],
    ghost: usize,
    dx: f64,
    recon: &R,
    ws: &mut LineWorkspace<N>,
    out: &mut [[f64; N]],
) -> Result<(), LineFault>
where
    M: FluxModel<N>,
    R: Reconstruct + ?Sized,
{
    assert!(ghost >= 3, "the five-point window needs three ghost cells");
    let len = line.len();
    let n = len - 2 * ghost;
    assert_eq!(out.len(), n);

    ws.plus.resize(len, [0.0; N]);
    ws.minus.resize(len, [0.0; N]);
    for (i, u) in line.iter().enumerate() {
        let (fp, fm) = M::split(u).ok_or(LineFault { index: i, reason: "nonpositive density or pressure" })?;
        ws.plus[i] = fp;
        ws.minus[i] = fm;
    }

    ws.faces.clear();
    for i in ghost - 1..ghost + n {
        let f = face_flux::<M, R, N>(line, &ws.plus, &ws.minus, i, recon)?;
        ws.faces.push(f);
    }

    let inv = 1.0 / dx;
    for (j, o) in out.iter_mut().enumerate() {
        let (l, r) = (&ws.faces[j], &ws.faces[j + 1]);
        for m in 0..N {
            o[m] = -(r[m] - l[m]) * inv;
        }
    }
    Ok(())
}
