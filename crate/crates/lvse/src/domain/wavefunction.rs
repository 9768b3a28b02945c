use nalgebra::DVector;
use num_complex::Complex64;

use crate::domain::Grid;
use crate::error::{Error, Result};

/// Complex amplitudes sampled on a grid.
///
/// Norms and inner products use the trapezoid rule, matching the
/// second-order stencils used for the operators. The `normalized` flag is
/// set by constructors that guarantee unit trapezoid norm.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    grid: Grid,
    amp: DVector<Complex64>,
    normalized: bool,
}

impl WaveFunction {
    pub fn new(grid: Grid, amp: Vec<Complex64>) -> Result<Self> {
        Self::from_vector(grid, DVector::from_vec(amp))
    }

    pub fn from_vector(grid: Grid, amp: DVector<Complex64>) -> Result<Self> {
        if amp.len() != grid.len() {
            return Err(Error::Shape(format!(
                "{} amplitudes on a grid of {} points",
                amp.len(),
                grid.len()
            )));
        }
        if amp.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("non-finite amplitude".into()));
        }
        Ok(WaveFunction {
            grid,
            amp,
            normalized: false,
        })
    }

    /// Sample a closed-form state f(x_j).
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let amp = DVector::from_iterator(grid.len(), (0..grid.len()).map(|j| f(grid.point(j))));
        Self::from_vector(grid, amp)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn amp(&self) -> &DVector<Complex64> {
        &self.amp
    }

    pub fn len(&self) -> usize {
        self.amp.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub(crate) fn set_normalized(mut self, flag: bool) -> Self {
        self.normalized = flag;
        self
    }

    /// Trapezoid-rule integral of |psi|^2.
    pub fn norm_sq(&self) -> f64 {
        (0..self.len())
            .map(|j| self.grid.weight(j) * self.amp[j].norm_sqr())
            .sum()
    }

    /// Trapezoid-rule inner product <self|other>.
    pub fn inner(&self, other: &WaveFunction) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::Shape("inner product across different grids".into()));
        }
        Ok((0..self.len())
            .map(|j| self.grid.weight(j) * self.amp[j].conj() * other.amp[j])
            .sum())
    }

    /// Rescale to unit trapezoid norm. The overall complex phase is
    /// unchanged (the scale factor is real positive).
    pub fn normalize(&self) -> Result<WaveFunction> {
        let ns = self.norm_sq();
        if ns <= 1e-300 {
            return Err(Error::ZeroNorm { norm_sq: ns });
        }
        let scale = Complex64::new(1.0 / ns.sqrt(), 0.0);
        Ok(WaveFunction {
            grid: self.grid.clone(),
            amp: &self.amp * scale,
            normalized: true,
        })
    }

    /// Fix the global phase: after multiplying pointwise by e^{+i alpha x_j},
    /// the component of largest magnitude becomes real and positive. Ties on
    /// magnitude break to the lowest index, so the convention is
    /// deterministic and eigenvectors become comparable.
    pub fn align_phase(&self, alpha: f64) -> Result<WaveFunction> {
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for j in 0..self.len() {
            let mag = self.amp[j].norm_sqr();
            if mag > best_mag {
                best_mag = mag;
                best = j;
            }
        }
        if best_mag <= 1e-300 {
            return Err(Error::ZeroNorm { norm_sq: best_mag });
        }
        let x = self.grid.point(best);
        let z = self.amp[best] * Complex64::from_polar(1.0, alpha * x);
        let factor = z.conj() / z.norm();
        Ok(WaveFunction {
            grid: self.grid.clone(),
            amp: &self.amp * factor,
            normalized: self.normalized,
        })
    }

    /// Rotate this state by a global phase so its overlap with `reference`
    /// is real and positive. States with two magnitude-tied peaks (any
    /// excited bound state) cannot be compared reliably through the
    /// peak-based convention of [`WaveFunction::align_phase`]; pairing
    /// through the overlap is stable.
    pub fn aligned_with(&self, reference: &WaveFunction) -> Result<WaveFunction> {
        let overlap = reference.inner(self)?;
        let mag = overlap.norm();
        if mag <= 1e-300 {
            return Err(Error::ZeroNorm { norm_sq: mag });
        }
        let factor = overlap.conj() / mag;
        Ok(WaveFunction {
            grid: self.grid.clone(),
            amp: &self.amp * factor,
            normalized: self.normalized,
        })
    }

    /// Largest magnitude at the two grid ends; bound states on an adequate
    /// domain keep this below 1e-10.
    pub fn boundary_amplitude(&self) -> f64 {
        self.amp[0].norm().max(self.amp[self.len() - 1].norm())
    }

    /// |psi(x_j)|^2 per point.
    pub fn density(&self) -> Vec<f64> {
        self.amp.iter().map(|z| z.norm_sqr()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::make_grid;

    fn constant_one(n: usize) -> WaveFunction {
        let g = make_grid(0.0, 1.0, n).unwrap();
        WaveFunction::from_fn(g, |_| Complex64::new(1.0, 0.0)).unwrap()
    }

    #[test]
    fn unit_constant_already_normalized() {
        let wf = constant_one(101);
        assert!((wf.norm_sq() - 1.0).abs() < 1e-14);
        let n = wf.normalize().unwrap();
        for j in 0..n.len() {
            assert!((n.amp()[j] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn scaling_removed_phase_preserved() {
        let wf = constant_one(101).normalize().unwrap();
        let doubled = WaveFunction::from_vector(wf.grid().clone(), wf.amp() * Complex64::new(2.0, 0.0)).unwrap();
        let back = doubled.normalize().unwrap();
        for j in 0..wf.len() {
            assert!((back.amp()[j] - wf.amp()[j]).norm() < 1e-12);
        }

        let i_psi = WaveFunction::from_vector(wf.grid().clone(), wf.amp() * Complex64::i()).unwrap();
        let n = i_psi.normalize().unwrap();
        for j in 0..wf.len() {
            assert!((n.amp()[j] - wf.amp()[j] * Complex64::i()).norm() < 1e-12);
        }
    }

    #[test]
    fn normalize_idempotent() {
        let g = make_grid(-3.0, 5.0, 200).unwrap();
        let wf = WaveFunction::from_fn(g, |x| Complex64::new((-x * x).exp(), 0.3 * x.sin())).unwrap();
        let once = wf.normalize().unwrap();
        let twice = once.normalize().unwrap();
        for j in 0..once.len() {
            assert!((once.amp()[j] - twice.amp()[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_norm_rejected() {
        let g = make_grid(0.0, 1.0, 5).unwrap();
        let wf = WaveFunction::from_fn(g, |_| Complex64::new(0.0, 0.0)).unwrap();
        assert!(matches!(wf.normalize(), Err(Error::ZeroNorm { .. })));
        assert!(matches!(wf.align_phase(0.0), Err(Error::ZeroNorm { .. })));
    }

    #[test]
    fn align_phase_idempotent_and_phase_blind() {
        let g = make_grid(-4.0, 4.0, 81).unwrap();
        let wf = WaveFunction::from_fn(g, |x| {
            Complex64::from_polar((-0.5 * x * x).exp(), 0.7 * x)
        })
        .unwrap();
        let aligned = wf.align_phase(0.7).unwrap();
        let again = aligned.align_phase(0.7).unwrap();
        for j in 0..wf.len() {
            assert!((aligned.amp()[j] - again.amp()[j]).norm() < 1e-12);
        }
        // a global phase on the input must not change the output
        for &theta in &[0.3, std::f64::consts::FRAC_PI_3, -2.1] {
            let rotated = WaveFunction::from_vector(
                wf.grid().clone(),
                wf.amp() * Complex64::from_polar(1.0, theta),
            )
            .unwrap();
            let b = rotated.align_phase(0.7).unwrap();
            for j in 0..wf.len() {
                assert!((aligned.amp()[j] - b.amp()[j]).norm() < 1e-12, "theta = {theta}");
            }
        }
    }

    #[test]
    fn align_phase_preserves_magnitudes() {
        let g = make_grid(-4.0, 4.0, 81).unwrap();
        let wf = WaveFunction::from_fn(g, |x| Complex64::from_polar((-x * x).exp(), 1.3 * x)).unwrap();
        let aligned = wf.align_phase(0.0).unwrap();
        for j in 0..wf.len() {
            // |factor| = 1 up to one rounding; magnitudes survive to machine precision
            assert!((aligned.amp()[j].norm() - wf.amp()[j].norm()).abs() <= 1e-16 * wf.amp()[j].norm().max(1e-30));
        }
    }

    #[test]
    fn align_phase_on_convention_aligned_input_is_identity() {
        let g = make_grid(0.0, 10.0, 101).unwrap();
        // sin arch: the peak is already real positive
        let wf = WaveFunction::from_fn(g, |x| {
            Complex64::new((std::f64::consts::PI * x / 10.0).sin(), 0.0)
        })
        .unwrap();
        let aligned = wf.align_phase(0.0).unwrap();
        for j in 0..wf.len() {
            assert!((aligned.amp()[j] - wf.amp()[j]).norm() < 1e-14);
        }
        // removing an explicit global phase recovers the input
        let rotated = WaveFunction::from_vector(
            wf.grid().clone(),
            wf.amp() * Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3),
        )
        .unwrap();
        let back = rotated.align_phase(0.0).unwrap();
        for j in 0..wf.len() {
            assert!((back.amp()[j] - wf.amp()[j]).norm() < 1e-13);
        }
    }

    #[test]
    fn gauge_factor_states_align_to_phase_one() {
        // e^{-i a x} sin(pi x / L): after the e^{+i a x} unwinding the peak
        // is real positive, so alignment is a no-op.
        let g = make_grid(0.0, 10.0, 101).unwrap();
        let a = 0.7;
        let wf = WaveFunction::from_fn(g, |x| {
            Complex64::from_polar((std::f64::consts::PI * x / 10.0).sin().abs(), -a * x)
        })
        .unwrap();
        let aligned = wf.align_phase(a).unwrap();
        for j in 0..wf.len() {
            assert!((aligned.amp()[j] - wf.amp()[j]).norm() < 1e-13);
        }
    }
}
