//! Closed-form solutions: free plane waves, the infinite well and the
//! harmonic oscillator, all in the presence of the background field alpha.
//!
//! Every bound state here factorizes as psi_n(x; alpha) =
//! e^{-i alpha x} psi'_n(x), where psi'_n is the textbook alpha = 0 state.
//! Energies do not depend on alpha at all:
//!
//! * free:      E = k^2 / (2m), valid for k^2 > alpha^2
//! * box:       E_n = n^2 pi^2 / (2 m L^2),  psi_n = sqrt(2/L) e^{-i a x} sin(n pi x / L)
//! * oscillator E_n = (n + 1/2) omega,       psi_0 = (m w / pi)^{1/4} e^{-m w x^2 / 2} e^{-i a x}
//!
//! Excited oscillator states are built twice: from the Hermite recurrence
//! (stable closed form) and by repeated application of the discrete raising
//! operator, normalizing numerically after each step since the analytic
//! normalization constants are not tracked. The two constructions agree to
//! O(h^2), which is one of the cross-checks the verification suite runs.

use num_complex::Complex64;

use crate::domain::{Energy, Grid, WaveFunction};
use crate::eigensolve::SolverWarning;
use crate::error::{Error, Result};
use crate::operators::ladder;

/// Plane-wave solution A e^{i(k - alpha)x} + B e^{-i(k + alpha)x}.
/// Unnormalized: plane waves are not square-integrable on the line.
pub fn free_particle(
    k: f64,
    alpha: f64,
    a: Complex64,
    b: Complex64,
    grid: &Grid,
) -> Result<WaveFunction> {
    if k <= 0.0 || !k.is_finite() {
        return Err(Error::Domain(format!("wavenumber must be positive, got {k}")));
    }
    if k * k <= alpha * alpha {
        return Err(Error::Condition {
            k_sq: k * k,
            alpha_sq: alpha * alpha,
        });
    }
    WaveFunction::from_fn(grid.clone(), |x| {
        a * Complex64::from_polar(1.0, (k - alpha) * x)
            + b * Complex64::from_polar(1.0, -(k + alpha) * x)
    })
}

/// E = k^2 / (2m); independent of alpha.
pub fn free_energy(k: f64, m: f64) -> Result<Energy> {
    if m <= 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!("mass must be positive, got {m}")));
    }
    if k < 0.0 || !k.is_finite() {
        return Err(Error::Domain(format!("wavenumber must be >= 0, got {k}")));
    }
    Ok(Energy(k * k / (2.0 * m)))
}

/// Well eigenstate sqrt(2/L) e^{-i alpha x} sin(n pi x / L) on a grid
/// spanning [0, L]. The endpoint samples are exactly zero.
pub fn box_state(n: u32, width: f64, alpha: f64, grid: &Grid) -> Result<WaveFunction> {
    if n < 1 {
        return Err(Error::Domain("well quantum number starts at 1".into()));
    }
    if width <= 0.0 || !width.is_finite() {
        return Err(Error::Domain(format!("well width must be positive, got {width}")));
    }
    if !grid.spans(0.0, width) {
        return Err(Error::Domain(format!(
            "well state needs a grid spanning [0, {width}], got [{}, {}]",
            grid.x_min(),
            grid.x_max()
        )));
    }
    let amp_const = (2.0 / width).sqrt();
    let kn = n as f64 * std::f64::consts::PI / width;
    let last = grid.len() - 1;
    let mut amp = Vec::with_capacity(grid.len());
    for j in 0..grid.len() {
        if j == 0 || j == last {
            amp.push(Complex64::new(0.0, 0.0));
        } else {
            let x = grid.point(j);
            amp.push(Complex64::from_polar(1.0, -alpha * x) * (amp_const * (kn * x).sin()));
        }
    }
    Ok(WaveFunction::new(grid.clone(), amp)?.set_normalized(true))
}

/// E_n = n^2 pi^2 / (2 m L^2); independent of alpha.
pub fn box_energy(n: u32, m: f64, width: f64) -> Result<Energy> {
    if n < 1 {
        return Err(Error::Domain("well quantum number starts at 1".into()));
    }
    if m <= 0.0 || width <= 0.0 || !m.is_finite() || !width.is_finite() {
        return Err(Error::Domain(format!(
            "well energy needs m > 0 and L > 0, got m = {m}, L = {width}"
        )));
    }
    let nf = n as f64;
    Ok(Energy(nf * nf * std::f64::consts::PI * std::f64::consts::PI
        / (2.0 * m * width * width)))
}

/// Oscillator ground state (m w / pi)^{1/4} e^{-m w x^2 / 2} e^{-i alpha x},
/// sampled directly (not renormalized on the grid).
pub fn ho_ground(m: f64, omega: f64, alpha: f64, grid: &Grid) -> Result<WaveFunction> {
    check_mw(m, omega)?;
    let amp_const = (m * omega / std::f64::consts::PI).powf(0.25);
    WaveFunction::from_fn(grid.clone(), |x| {
        Complex64::from_polar(1.0, -alpha * x) * (amp_const * (-0.5 * m * omega * x * x).exp())
    })
}

/// Physicists' Hermite polynomial by the recurrence
/// H_0 = 1, H_1 = 2 xi, H_{n+1} = 2 xi H_n - 2 n H_{n-1}.
fn hermite(n: u32, xi: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * xi;
    for j in 1..n {
        let next = 2.0 * xi * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// n-th oscillator eigenstate e^{-i alpha x} psi'_n(x) with
/// psi'_n = (m w / pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(m w) x) e^{-m w x^2 / 2},
/// trapezoid-normalized on the given grid.
pub fn ho_state(n: u32, m: f64, omega: f64, alpha: f64, grid: &Grid) -> Result<WaveFunction> {
    check_mw(m, omega)?;
    if n > 170 {
        // (2^n n!)^(-1/2) leaves the double range past here
        return Err(Error::Overflow(format!(
            "oscillator states above n = 170 are not representable, got {n}"
        )));
    }
    let sqrt_mw = (m * omega).sqrt();
    let mut norm_const = (m * omega / std::f64::consts::PI).powf(0.25);
    for j in 1..=n {
        norm_const /= (2.0 * j as f64).sqrt();
    }
    let raw = WaveFunction::from_fn(grid.clone(), |x| {
        let xi = sqrt_mw * x;
        let real = norm_const * hermite(n, xi) * (-0.5 * xi * xi).exp();
        Complex64::from_polar(1.0, -alpha * x) * real
    })?;
    raw.normalize()
}

/// Excited state built by repeated application of the discrete raising
/// operator to the sampled ground state, renormalizing at every step.
#[derive(Debug, Clone)]
pub struct LadderState {
    pub wf: WaveFunction,
    /// Largest magnitude at the two grid ends after the final step.
    pub boundary_amplitude: f64,
}

impl LadderState {
    /// Boundary amplitudes above 1e-6 mean the grid truncates the state.
    pub fn warning(&self) -> Option<SolverWarning> {
        if self.boundary_amplitude > 1e-6 {
            Some(SolverWarning::NarrowGrid {
                boundary_amplitude: self.boundary_amplitude,
            })
        } else {
            None
        }
    }
}

/// normalize(a_+^n psi_0) using the discrete ladder matrix. Agrees with
/// [`ho_state`] to O(h^2) after phase alignment.
pub fn ho_state_via_ladder(
    n: u32,
    m: f64,
    omega: f64,
    alpha: f64,
    grid: &Grid,
) -> Result<LadderState> {
    check_mw(m, omega)?;
    if n > 170 {
        return Err(Error::Overflow(format!(
            "oscillator states above n = 170 are not representable, got {n}"
        )));
    }
    let (_minus, plus) = ladder(grid, m, omega, alpha)?;
    let mut wf = ho_ground(m, omega, alpha, grid)?.normalize()?;
    for _ in 0..n {
        let raised = plus.apply(wf.amp());
        wf = WaveFunction::from_vector(grid.clone(), raised)?.normalize()?;
    }
    let boundary_amplitude = wf.boundary_amplitude();
    Ok(LadderState {
        wf,
        boundary_amplitude,
    })
}

/// E_n = (n + 1/2) omega; independent of alpha.
pub fn ho_energy(n: u32, omega: f64) -> Result<Energy> {
    if omega <= 0.0 || !omega.is_finite() {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    Ok(Energy((n as f64 + 0.5) * omega))
}

/// Default half-width for oscillator grids: the classical turning point of
/// the highest requested state plus six decay lengths, which keeps the
/// Dirichlet-truncation error below 1e-10 for n_max <= 10.
pub fn ho_half_width(n_max: u32, m: f64, omega: f64) -> f64 {
    let mw = m * omega;
    (2.0 * (n_max as f64 + 1.0) / mw).sqrt() + 6.0 / mw.sqrt()
}

fn check_mw(m: f64, omega: f64) -> Result<()> {
    if m <= 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!("mass must be positive, got {m}")));
    }
    if omega <= 0.0 || !omega.is_finite() {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    Ok(())
}
