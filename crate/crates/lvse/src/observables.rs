//! Expectation values, uncertainty products, parity checks and grid
//! refinement studies: the machinery that turns the structural claims
//! (alpha-independent observables, parity relation, ladder algebra) into
//! measured numbers.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::domain::{Grid, ModelParams, PotentialSpec, WaveFunction};
use crate::eigensolve::{eigen_lowest, SolveOptions};
use crate::error::{Error, Result};
use crate::operators::{
    apply_d1, apply_momentum, hamiltonian, DenseOperator, Scheme, TridiagonalHermitianOperator,
};

/// Operators that can be averaged over a state.
pub trait GridOperator {
    fn op_grid(&self) -> &Grid;
    /// Whether a real expectation value is guaranteed and asserted.
    fn hermitian_flagged(&self) -> bool;
    /// Trapezoid-weighted quadratic form <psi|A|psi> (unnormalized).
    fn quadratic_form(&self, wf: &WaveFunction) -> Complex64;
}

impl GridOperator for DenseOperator {
    fn op_grid(&self) -> &Grid {
        self.grid()
    }

    fn hermitian_flagged(&self) -> bool {
        self.is_hermitian()
    }

    fn quadratic_form(&self, wf: &WaveFunction) -> Complex64 {
        let applied = self.apply(wf.amp());
        let g = wf.grid();
        (0..g.len())
            .map(|j| g.weight(j) * wf.amp()[j].conj() * applied[j])
            .sum()
    }
}

impl GridOperator for crate::operators::MomentumOperator {
    fn op_grid(&self) -> &Grid {
        self.grid()
    }

    fn hermitian_flagged(&self) -> bool {
        // one-sided endpoint rows keep the full matrix non-Hermitian
        false
    }

    fn quadratic_form(&self, wf: &WaveFunction) -> Complex64 {
        let applied = self.apply(wf.amp());
        let g = wf.grid();
        (0..g.len())
            .map(|j| g.weight(j) * wf.amp()[j].conj() * applied[j])
            .sum()
    }
}

impl GridOperator for TridiagonalHermitianOperator {
    fn op_grid(&self) -> &Grid {
        self.grid()
    }

    fn hermitian_flagged(&self) -> bool {
        true
    }

    /// Interior-only quadrature (uniform weight h). The diagonal and
    /// interior couplings are accumulated in real arithmetic, so the
    /// Hermitian part contributes exactly zero imaginary part; only the two
    /// boundary couplings are complex, and they vanish with the boundary
    /// amplitudes of bound states.
    fn quadratic_form(&self, wf: &WaveFunction) -> Complex64 {
        let n = self.dim();
        let amp = wf.amp();
        let mut core = 0.0f64;
        for j in 0..n {
            let v = amp[j + 1];
            core += self.diag()[j] * v.norm_sqr();
            if j + 1 < n {
                core += 2.0 * (v.conj() * self.offdiag()[j] * amp[j + 2]).re;
            }
        }
        let mut total = Complex64::new(core, 0.0);
        if n >= 2 {
            let c0 = self.offdiag()[0];
            let cl = self.offdiag()[n - 2];
            total += amp[1].conj() * c0.conj() * amp[0];
            total += amp[n].conj() * cl * amp[n + 1];
        }
        total * self.grid().spacing()
    }
}

/// <psi|A|psi> for a normalized state. Hermitian-flagged operators assert a
/// real result (imaginary part below 1e-10 relative).
pub fn expectation<A: GridOperator>(op: &A, wf: &WaveFunction) -> Result<Complex64> {
    if op.op_grid() != wf.grid() {
        return Err(Error::Shape(
            "expectation of an operator on a different grid".into(),
        ));
    }
    let value = op.quadratic_form(wf);
    if op.hermitian_flagged() {
        assert!(
            value.im.abs() <= 1e-10 * value.re.abs().max(1.0),
            "Hermitian expectation came out complex: {value}"
        );
    }
    Ok(value)
}

/// Heisenberg product dx * dp for a state prepared with the same alpha as
/// the momentum operator; the pairing is enforced by the signature because
/// the invariance claim only holds when state and operator transform
/// together. p^2 is two successive stencil applications; momentum moments
/// use interior-only quadrature to keep the one-sided endpoint rows out of
/// the sums.
pub fn uncertainty_product(wf: &WaveFunction, alpha: f64) -> Result<f64> {
    let grid = wf.grid();
    let n = grid.len();
    let norm = wf.norm_sq();
    if norm <= 1e-300 {
        return Err(Error::ZeroNorm { norm_sq: norm });
    }

    let mut x1 = 0.0f64;
    let mut x2 = 0.0f64;
    for j in 0..n {
        let d = grid.weight(j) * wf.amp()[j].norm_sqr();
        let x = grid.point(j);
        x1 += d * x;
        x2 += d * x * x;
    }
    x1 /= norm;
    x2 /= norm;

    let p_once = apply_momentum(grid, alpha, wf.amp());
    let p_twice = apply_momentum(grid, alpha, &p_once);
    let h = grid.spacing();
    let mut m1 = Complex64::new(0.0, 0.0);
    let mut m2 = Complex64::new(0.0, 0.0);
    for j in 1..n - 1 {
        let c = wf.amp()[j].conj();
        m1 += c * p_once[j];
        m2 += c * p_twice[j];
    }
    let p1 = (m1 * h).re / norm;
    let p2 = (m2 * h).re / norm;

    let dx2 = (x2 - x1 * x1).max(0.0);
    let dp2 = (p2 - p1 * p1).max(0.0);
    Ok(dx2.sqrt() * dp2.sqrt())
}

/// Apply the wavefunction redefinition pointwise: psi -> e^{-i alpha x} psi.
pub fn gauge_map(wf: &WaveFunction, alpha: f64) -> Result<WaveFunction> {
    let g = wf.grid();
    let amp = DVector::from_iterator(
        g.len(),
        (0..g.len()).map(|j| Complex64::from_polar(1.0, -alpha * g.point(j)) * wf.amp()[j]),
    );
    WaveFunction::from_vector(g.clone(), amp)
}

/// max_j |psi_alpha(x_j) - e^{-i alpha x_j} psi_zero(x_j)|: how well two
/// states satisfy the wavefunction-redefinition identity.
pub fn gauge_residual(wf_alpha: &WaveFunction, wf_zero: &WaveFunction, alpha: f64) -> Result<f64> {
    if wf_alpha.grid() != wf_zero.grid() {
        return Err(Error::Shape("gauge residual across different grids".into()));
    }
    let g = wf_alpha.grid();
    let mut worst = 0.0f64;
    for j in 0..g.len() {
        let mapped = Complex64::from_polar(1.0, -alpha * g.point(j)) * wf_zero.amp()[j];
        worst = worst.max((wf_alpha.amp()[j] - mapped).norm());
    }
    Ok(worst)
}

/// Outcome of the parity identity check.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ParityCheck {
    /// Entrywise max |P H(alpha) P - H(-alpha)|; an exact matrix identity,
    /// so this is zero for both schemes.
    pub relation_residual: f64,
    /// Entrywise max |P H(alpha) - H(alpha) P|; zero iff alpha = 0.
    pub commutator_norm: f64,
}

/// Verify P H(alpha) P = H(-alpha) and measure the parity commutator. Needs
/// a symmetric grid and a symmetric potential (free or harmonic). Both
/// quantities are evaluated by index arithmetic on the bands, so no dense
/// matrices are formed.
pub fn parity_relation_residual(
    grid: &Grid,
    params: &ModelParams,
    scheme: Scheme,
) -> Result<ParityCheck> {
    match params.potential() {
        PotentialSpec::Free | PotentialSpec::Harmonic { .. } => {}
        _ => {
            return Err(Error::Domain(
                "parity check needs a symmetric potential (free or harmonic)".into(),
            ))
        }
    }
    if !grid.is_symmetric() {
        return Err(Error::Symmetry {
            x_min: grid.x_min(),
            x_max: grid.x_max(),
        });
    }

    let h_plus = hamiltonian(grid, params, scheme)?;
    let h_minus = hamiltonian(grid, &params.with_alpha(-params.alpha())?, scheme)?;
    let n = h_plus.dim();

    // P H P reverses the diagonal and conjugate-reverses the band
    let mut relation = 0.0f64;
    for j in 0..n {
        relation = relation.max((h_plus.diag()[n - 1 - j] - h_minus.diag()[j]).abs());
    }
    for j in 0..n.saturating_sub(1) {
        let php = h_plus.offdiag()[n - 2 - j].conj();
        relation = relation.max((php - h_minus.offdiag()[j]).norm());
    }

    // [P, H] is supported on three anti-diagonals
    let mut commutator = 0.0f64;
    for j in 0..n {
        commutator = commutator.max((h_plus.diag()[n - 1 - j] - h_plus.diag()[j]).abs());
    }
    for j in 0..n.saturating_sub(1) {
        // entries (j, n-2-j): lower band of P H vs upper band of H P
        let ph = h_plus.offdiag()[n - 2 - j].conj();
        let hp = h_plus.offdiag()[j];
        commutator = commutator.max((ph - hp).norm());
        // entries (j+1, n-1-j): upper band of P H vs lower band of H P
        let ph = h_plus.offdiag()[n - 2 - j];
        let hp = h_plus.offdiag()[j].conj();
        commutator = commutator.max((ph - hp).norm());
    }

    Ok(ParityCheck {
        relation_residual: relation,
        commutator_norm: commutator,
    })
}

/// Gaussian probe exp(-x^2 / (2 sigma^2)) used by the refinement studies.
fn gaussian_probe(grid: &Grid, sigma: f64) -> DVector<Complex64> {
    DVector::from_iterator(
        grid.len(),
        (0..grid.len()).map(|j| {
            let x = grid.point(j);
            Complex64::new((-0.5 * x * x / (sigma * sigma)).exp(), 0.0)
        }),
    )
}

fn interior_norm(v: &DVector<Complex64>) -> f64 {
    (1..v.len() - 1).map(|j| v[j].norm_sqr()).sum::<f64>().sqrt()
}

/// Matrix-free ladder application a_pm v (sign +1 raises, -1 lowers).
fn apply_ladder(
    grid: &Grid,
    m: f64,
    omega: f64,
    alpha: f64,
    raise: bool,
    v: &DVector<Complex64>,
) -> DVector<Complex64> {
    let s = 1.0 / (2.0 * m * omega).sqrt();
    let d = apply_d1(grid, v);
    let ia = Complex64::new(0.0, alpha);
    DVector::from_iterator(
        grid.len(),
        (0..grid.len()).map(|j| {
            let deriv = d[j] + ia * v[j];
            let xterm = Complex64::new(m * omega * grid.point(j), 0.0) * v[j];
            if raise {
                Complex64::new(s, 0.0) * (xterm - deriv)
            } else {
                Complex64::new(s, 0.0) * (xterm + deriv)
            }
        }),
    )
}

/// Error functional measured in a grid refinement study.
#[derive(Debug, Clone)]
pub enum ConvergenceMeasure {
    /// Worst |E_k(numeric) - E_k(analytic)| over the lowest `levels` well
    /// eigenvalues.
    BoxEigenvalue {
        m: f64,
        width: f64,
        alpha: f64,
        scheme: Scheme,
        levels: usize,
    },
    /// Worst |E_k(alpha) - E_k(0)| over the lowest `levels` eigenvalues for
    /// a given scheme. Identically zero for GaugeExact, where the study
    /// reports the machine-precision floor instead of an order.
    AlphaDeviation {
        params: ModelParams,
        scheme: Scheme,
        levels: usize,
    },
    /// Pointwise gauge residual between the numeric ground states at alpha
    /// and at zero (same scheme), after phase alignment.
    GaugeVectorResidual { params: ModelParams, scheme: Scheme },
    /// ||([a-, a+] - 1) psi|| / ||psi|| on a Gaussian of width sigma.
    LadderCommutator {
        m: f64,
        omega: f64,
        alpha: f64,
        sigma: f64,
    },
    /// ||a- psi_0|| / ||psi_0|| for the sampled ground state.
    GroundAnnihilation { m: f64, omega: f64, alpha: f64 },
    /// ||(omega (a+ a- + 1/2) - H) psi|| / ||psi|| on a Gaussian probe
    /// against the naive-stencil Hamiltonian.
    FactorizedHamiltonian {
        m: f64,
        omega: f64,
        alpha: f64,
        sigma: f64,
    },
    /// sup-norm residual ||H psi - E psi||_inf / ||psi||_inf of the sampled
    /// plane wave A e^{i(k - alpha)x} in the naive Hamiltonian.
    FreeParticleResidual { k: f64, alpha: f64, m: f64 },
}

/// Evaluate the measure's error on one grid.
pub fn measure_error(measure: &ConvergenceMeasure, grid: &Grid) -> Result<f64> {
    match measure {
        ConvergenceMeasure::BoxEigenvalue {
            m,
            width,
            alpha,
            scheme,
            levels,
        } => {
            let params = ModelParams::box_well(*m, *alpha, *width)?;
            let op = hamiltonian(grid, &params, *scheme)?;
            let spec = eigen_lowest(&op, &SolveOptions::new(*levels))?;
            let mut worst = 0.0f64;
            for (i, e) in spec.energies().iter().enumerate() {
                let exact = crate::analytic::box_energy(i as u32 + 1, *m, *width)?.0;
                worst = worst.max((e - exact).abs());
            }
            Ok(worst)
        }
        ConvergenceMeasure::AlphaDeviation {
            params,
            scheme,
            levels,
        } => {
            let op_a = hamiltonian(grid, params, *scheme)?;
            let op_0 = hamiltonian(grid, &params.with_alpha(0.0)?, *scheme)?;
            let ea = eigen_lowest(&op_a, &SolveOptions::new(*levels))?.energies();
            let e0 = eigen_lowest(&op_0, &SolveOptions::new(*levels))?.energies();
            Ok(ea
                .iter()
                .zip(e0.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max))
        }
        ConvergenceMeasure::GaugeVectorResidual { params, scheme } => {
            let op_a = hamiltonian(grid, params, *scheme)?;
            let op_0 = hamiltonian(grid, &params.with_alpha(0.0)?, *scheme)?;
            let sa = eigen_lowest(&op_a, &SolveOptions::new(1))?;
            let s0 = eigen_lowest(&op_0, &SolveOptions::new(1))?;
            gauge_residual(sa.state(0), s0.state(0), params.alpha())
        }
        ConvergenceMeasure::LadderCommutator {
            m,
            omega,
            alpha,
            sigma,
        } => {
            let psi = gaussian_probe(grid, *sigma);
            let up = apply_ladder(grid, *m, *omega, *alpha, true, &psi);
            let down_up = apply_ladder(grid, *m, *omega, *alpha, false, &up);
            let down = apply_ladder(grid, *m, *omega, *alpha, false, &psi);
            let up_down = apply_ladder(grid, *m, *omega, *alpha, true, &down);
            let resid = DVector::from_iterator(
                grid.len(),
                (0..grid.len()).map(|j| down_up[j] - up_down[j] - psi[j]),
            );
            Ok(interior_norm(&resid) / interior_norm(&psi))
        }
        ConvergenceMeasure::GroundAnnihilation { m, omega, alpha } => {
            let psi = crate::analytic::ho_ground(*m, *omega, *alpha, grid)?;
            let lowered = apply_ladder(grid, *m, *omega, *alpha, false, psi.amp());
            Ok(interior_norm(&lowered) / interior_norm(psi.amp()))
        }
        ConvergenceMeasure::FactorizedHamiltonian {
            m,
            omega,
            alpha,
            sigma,
        } => {
            let params = ModelParams::harmonic(*m, *alpha, *omega)?;
            let op = hamiltonian(grid, &params, Scheme::NaiveStencil)?;
            let psi = gaussian_probe(grid, *sigma);
            let down = apply_ladder(grid, *m, *omega, *alpha, false, &psi);
            let updown = apply_ladder(grid, *m, *omega, *alpha, true, &down);
            let h_psi = op.apply_with_boundary(&psi);
            let mut num = 0.0f64;
            for j in 0..op.dim() {
                let factorized = Complex64::new(*omega, 0.0)
                    * (updown[j + 1] + Complex64::new(0.5, 0.0) * psi[j + 1]);
                num += (factorized - h_psi[j]).norm_sqr();
            }
            Ok(num.sqrt() / interior_norm(&psi))
        }
        ConvergenceMeasure::FreeParticleResidual { k, alpha, m } => {
            let psi = crate::analytic::free_particle(
                *k,
                *alpha,
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                grid,
            )?;
            let e = crate::analytic::free_energy(*k, *m)?.0;
            let params = ModelParams::free(*m, *alpha)?;
            let op = hamiltonian(grid, &params, Scheme::NaiveStencil)?;
            let h_psi = op.apply_with_boundary(psi.amp());
            let mut worst = 0.0f64;
            let mut amp_max = 0.0f64;
            for j in 0..op.dim() {
                worst = worst.max((h_psi[j] - Complex64::new(e, 0.0) * psi.amp()[j + 1]).norm());
                amp_max = amp_max.max(psi.amp()[j + 1].norm());
            }
            Ok(worst / amp_max)
        }
    }
}

/// Least-squares slope of log(error) against log(h) over a refinement
/// sequence of at least three grids. Errors below 1e-13 are already at the
/// machine-precision floor and make an order meaningless, so they are
/// rejected.
pub fn convergence_order(measure: &ConvergenceMeasure, grids: &[Grid]) -> Result<f64> {
    if grids.len() < 3 {
        return Err(Error::Domain(format!(
            "a refinement study needs at least 3 grids, got {}",
            grids.len()
        )));
    }
    let mut xs = Vec::with_capacity(grids.len());
    let mut ys = Vec::with_capacity(grids.len());
    for g in grids {
        let err = measure_error(measure, g)?;
        if err < 1e-13 {
            return Err(Error::Domain(format!(
                "error {err:.3e} is at the machine-precision floor; no order to measure"
            )));
        }
        xs.push(g.spacing().ln());
        ys.push(err.ln());
    }
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{box_state, ho_ground, ho_state};
    use crate::domain::make_grid;
    use crate::operators::{momentum_matrix, position_matrix};

    #[test]
    fn position_expectation_vanishes_on_even_state() {
        let g = make_grid(-8.0, 8.0, 801).unwrap();
        for &alpha in &[0.0, 0.1, 1.0] {
            let wf = ho_ground(1.0, 1.0, alpha, &g).unwrap();
            let x_op = position_matrix(&g);
            let v = expectation(&x_op, &wf).unwrap();
            assert!(v.norm() < 1e-10, "alpha = {alpha}: <x> = {v}");
        }
    }

    #[test]
    fn momentum_expectation_vanishes_on_standing_wave() {
        // the gauge factor commutes with the momentum up to O(h^2), and a
        // real standing wave has <p_0> = 0; h = 1e-3 puts the stencil error
        // below the 1e-8 mark
        let g = make_grid(0.0, 10.0, 10001).unwrap();
        let wf = box_state(1, 10.0, 0.1, &g).unwrap();
        let p = crate::operators::MomentumOperator::new(g.clone(), 0.1);
        let v = expectation(&p, &wf).unwrap();
        assert!(v.norm() < 1e-8, "<p> = {v}");
        // the dense matrix route agrees with the stencil route
        let coarse = make_grid(0.0, 10.0, 201).unwrap();
        let wf_c = box_state(1, 10.0, 0.1, &coarse).unwrap();
        let dense = expectation(&momentum_matrix(&coarse, 0.1).unwrap(), &wf_c).unwrap();
        let free = expectation(
            &crate::operators::MomentumOperator::new(coarse.clone(), 0.1),
            &wf_c,
        )
        .unwrap();
        assert!((dense - free).norm() < 1e-13);
    }

    #[test]
    fn energy_expectation_on_naive_hamiltonian() {
        let g = make_grid(-10.0, 10.0, 1001).unwrap();
        let params = ModelParams::harmonic(1.0, 0.1, 1.0).unwrap();
        let op = hamiltonian(&g, &params, Scheme::NaiveStencil).unwrap();
        let wf = ho_ground(1.0, 1.0, 0.1, &g).unwrap();
        let v = expectation(&op, &wf).unwrap();
        // 0.5 + O(h^2) with h = 0.02
        assert!((v.re - 0.5).abs() < 5e-5, "<H> = {v}");
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn expectation_grid_mismatch_is_shape_error() {
        let g1 = make_grid(-8.0, 8.0, 101).unwrap();
        let g2 = make_grid(-8.0, 8.0, 102).unwrap();
        let wf = ho_ground(1.0, 1.0, 0.0, &g1).unwrap();
        let x_op = position_matrix(&g2);
        assert!(matches!(
            expectation(&x_op, &wf),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn ho_ground_uncertainty_is_minimal() {
        let g = make_grid(-8.0, 8.0, 16001).unwrap();
        let u0 = uncertainty_product(&ho_ground(1.0, 1.0, 0.0, &g).unwrap(), 0.0).unwrap();
        assert!((u0 - 0.5).abs() <= 1e-6, "got {u0}");
        let ua = uncertainty_product(&ho_ground(1.0, 1.0, 0.1, &g).unwrap(), 0.1).unwrap();
        assert!((ua - u0).abs() <= 1e-8, "|{ua} - {u0}|");
    }

    #[test]
    fn box_uncertainty_alpha_invariant_and_above_bound() {
        let g = make_grid(0.0, 10.0, 8001).unwrap();
        let u0 = uncertainty_product(&box_state(1, 10.0, 0.0, &g).unwrap(), 0.0).unwrap();
        let ua = uncertainty_product(&box_state(1, 10.0, 0.1, &g).unwrap(), 0.1).unwrap();
        assert!((ua - u0).abs() <= 1e-8, "|{ua} - {u0}|");
        assert!(u0 >= 0.5);
        // continuum value sqrt(pi^2/12 - 1/2)
        assert!((u0 - 0.567861808387).abs() < 1e-6);
    }

    #[test]
    fn gauge_residual_zero_for_closed_forms() {
        let g = make_grid(0.0, 10.0, 501).unwrap();
        let wa = box_state(2, 10.0, 0.1, &g).unwrap();
        let w0 = box_state(2, 10.0, 0.0, &g).unwrap();
        assert!(gauge_residual(&wa, &w0, 0.1).unwrap() <= 1e-12);
        let g = make_grid(-9.0, 9.0, 901).unwrap();
        let wa = ho_state(2, 1.0, 1.0, 0.1, &g).unwrap();
        let w0 = ho_state(2, 1.0, 1.0, 0.0, &g).unwrap();
        assert!(gauge_residual(&wa, &w0, 0.1).unwrap() <= 1e-12);
    }

    #[test]
    fn parity_relation_is_exact() {
        let g = make_grid(-5.0, 5.0, 101).unwrap();
        let params = ModelParams::harmonic(1.0, 0.3, 1.0).unwrap();
        for scheme in [Scheme::NaiveStencil, Scheme::GaugeExact] {
            let check = parity_relation_residual(&g, &params, scheme).unwrap();
            assert_eq!(check.relation_residual, 0.0, "{scheme}");
            assert!(check.commutator_norm > 0.0, "{scheme}");
        }
        let zero = params.with_alpha(0.0).unwrap();
        for scheme in [Scheme::NaiveStencil, Scheme::GaugeExact] {
            let check = parity_relation_residual(&g, &zero, scheme).unwrap();
            assert_eq!(check.relation_residual, 0.0);
            assert_eq!(check.commutator_norm, 0.0, "{scheme}");
        }
    }

    #[test]
    fn parity_rejects_unsymmetric_inputs() {
        let g = make_grid(0.0, 10.0, 101).unwrap();
        let params = ModelParams::free(1.0, 0.1).unwrap();
        assert!(matches!(
            parity_relation_residual(&g, &params, Scheme::NaiveStencil),
            Err(Error::Symmetry { .. })
        ));
        let g = make_grid(-5.0, 5.0, 101).unwrap();
        let boxy = ModelParams::box_well(1.0, 0.1, 10.0).unwrap();
        assert!(parity_relation_residual(&g, &boxy, Scheme::NaiveStencil).is_err());
    }

    #[test]
    fn ladder_commutator_second_order() {
        let grids: Vec<Grid> = [501usize, 1001, 2001]
            .iter()
            .map(|&n| make_grid(-10.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::LadderCommutator {
            m: 1.0,
            omega: 1.0,
            alpha: 0.1,
            sigma: 1.0,
        };
        let order = convergence_order(&measure, &grids).unwrap();
        assert!((1.8..=2.2).contains(&order), "order {order}");
        // the residual itself quarters with each halving
        let e0 = measure_error(&measure, &grids[0]).unwrap();
        let e1 = measure_error(&measure, &grids[1]).unwrap();
        let ratio = e0 / e1;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn annihilation_residual_second_order() {
        let grids: Vec<Grid> = [501usize, 1001, 2001]
            .iter()
            .map(|&n| make_grid(-10.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::GroundAnnihilation {
            m: 1.0,
            omega: 1.0,
            alpha: 0.1,
        };
        let order = convergence_order(&measure, &grids).unwrap();
        assert!((1.8..=2.2).contains(&order), "order {order}");
    }

    #[test]
    fn factorized_hamiltonian_second_order() {
        let grids: Vec<Grid> = [501usize, 1001, 2001]
            .iter()
            .map(|&n| make_grid(-10.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::FactorizedHamiltonian {
            m: 1.0,
            omega: 1.0,
            alpha: 0.1,
            sigma: 1.0,
        };
        let order = convergence_order(&measure, &grids).unwrap();
        assert!((1.8..=2.2).contains(&order), "order {order}");
    }

    #[test]
    fn free_particle_residual_second_order() {
        let grids: Vec<Grid> = [501usize, 1001, 2001]
            .iter()
            .map(|&n| make_grid(0.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::FreeParticleResidual {
            k: 1.0,
            alpha: 0.1,
            m: 1.0,
        };
        let order = convergence_order(&measure, &grids).unwrap();
        assert!((1.8..=2.2).contains(&order), "order {order}");
    }

    #[test]
    fn gauge_exact_deviation_hits_the_floor() {
        let grids: Vec<Grid> = [101usize, 201, 401]
            .iter()
            .map(|&n| make_grid(0.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::AlphaDeviation {
            params: ModelParams::box_well(1.0, 0.1, 10.0).unwrap(),
            scheme: Scheme::GaugeExact,
            levels: 2,
        };
        assert!(matches!(
            convergence_order(&measure, &grids),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn too_few_grids_rejected() {
        let grids: Vec<Grid> = [101usize, 201]
            .iter()
            .map(|&n| make_grid(0.0, 10.0, n).unwrap())
            .collect();
        let measure = ConvergenceMeasure::FreeParticleResidual {
            k: 1.0,
            alpha: 0.1,
            m: 1.0,
        };
        assert!(convergence_order(&measure, &grids).is_err());
    }
}
