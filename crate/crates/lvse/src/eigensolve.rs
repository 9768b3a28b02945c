//! Eigensolver for complex-Hermitian tridiagonal operators.
//!
//! Eigenvalues come from bisection on the Sturm sequence of the
//! phase-reduced real matrix: a diagonal unitary maps the complex-Hermitian
//! tridiagonal to a real symmetric one with the hopping magnitudes, so
//! eigenvalue counts below a shift are cheap and each of the lowest k
//! eigenvalues is bracketed independently. Eigenvectors come from inverse
//! iteration on the complex operator (shifted tridiagonal LU with partial
//! pivoting). Bisection is preferred over QL/QR because only k << n
//! eigenvalues are needed and it gives per-eigenvalue error control.
//!
//! `rq_descent` is an independent variational ground-state finder used as a
//! cross-check: it minimizes the Rayleigh quotient by projected gradient
//! descent with an exact two-dimensional subspace solve per step. Start
//! vectors come from a fixed linear congruential sequence so runs are
//! bit-reproducible; the seed is recorded in the returned metadata.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::domain::{Energy, WaveFunction};
use crate::error::{Error, Result};
use crate::operators::{Scheme, TridiagonalHermitianOperator};

/// Seed for the fixed linear congruential sequence used for start vectors.
pub const DEFAULT_SEED: u64 = 0x5eed_0d15_ea5e_0001;

/// Deterministic 64-bit linear congruential generator (Knuth multiplier).
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform in [-1, 1).
    pub fn next_f64(&mut self) -> f64 {
        // take the top 53 bits
        let bits = self.next_u64() >> 11;
        (bits as f64) / ((1u64 << 52) as f64) - 1.0
    }

    pub fn next_complex(&mut self) -> Complex64 {
        Complex64::new(self.next_f64(), self.next_f64())
    }

    pub fn complex_vector(&mut self, n: usize) -> DVector<Complex64> {
        DVector::from_iterator(n, (0..n).map(|_| self.next_complex()))
    }
}

/// Which algorithm produced a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SolverKind {
    #[serde(rename = "tridiag")]
    Tridiag,
    #[serde(rename = "rq-descent")]
    RqDescent,
    #[serde(rename = "analytic")]
    Analytic,
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolverKind::Tridiag => write!(f, "tridiag"),
            SolverKind::RqDescent => write!(f, "rq-descent"),
            SolverKind::Analytic => write!(f, "analytic"),
        }
    }
}

/// Non-fatal solver diagnostics carried in results.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum SolverWarning {
    /// Two eigenvalues closer than 1e-10 |E|; vectors re-orthogonalized.
    Cluster { index: usize, gap: f64 },
    /// Boundary amplitudes above 1e-6: the grid truncates the state.
    NarrowGrid { boundary_amplitude: f64 },
}

/// Options for the eigensolvers.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Number of eigenpairs (lowest first). Must satisfy 1 <= k <= dim.
    pub k: usize,
    /// Residual tolerance ||H psi - E psi||_2.
    pub tol: f64,
    /// Iteration budget; defaults to 10 * dim when None.
    pub max_iter: Option<usize>,
    /// Seed for deterministic start vectors.
    pub seed: u64,
}

impl SolveOptions {
    pub fn new(k: usize) -> Self {
        SolveOptions {
            k,
            tol: 1e-10,
            max_iter: None,
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = Some(max_iter);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self, dim: usize) -> Result<()> {
        if self.k < 1 || self.k > dim {
            return Err(Error::Domain(format!(
                "requested {} eigenpairs from an operator of dimension {dim}",
                self.k
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn iter_budget(&self, dim: usize) -> usize {
        self.max_iter.unwrap_or(10 * dim.max(1))
    }
}

/// Ordered eigenpairs with solver metadata.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pairs: Vec<(Energy, WaveFunction)>,
    scheme: Scheme,
    solver: SolverKind,
    residuals: Vec<f64>,
    warnings: Vec<SolverWarning>,
    seed: u64,
}

impl Spectrum {
    /// Build a spectrum from precomputed pairs (used for analytic states).
    /// Energies must already be ascending.
    pub fn from_pairs(
        pairs: Vec<(Energy, WaveFunction)>,
        scheme: Scheme,
        solver: SolverKind,
        residuals: Vec<f64>,
        seed: u64,
    ) -> Result<Self> {
        if pairs.windows(2).any(|w| w[0].0 .0 > w[1].0 .0) {
            return Err(Error::Domain("spectrum energies must be ascending".into()));
        }
        Ok(Spectrum {
            pairs,
            scheme,
            solver,
            residuals,
            warnings: Vec::new(),
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn energy(&self, i: usize) -> Energy {
        self.pairs[i].0
    }

    pub fn state(&self, i: usize) -> &WaveFunction {
        &self.pairs[i].1
    }

    pub fn energies(&self) -> Vec<f64> {
        self.pairs.iter().map(|(e, _)| e.0).collect()
    }

    pub fn states(&self) -> impl Iterator<Item = &WaveFunction> {
        self.pairs.iter().map(|(_, w)| w)
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn solver(&self) -> SolverKind {
        self.solver
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn warnings(&self) -> &[SolverWarning] {
        &self.warnings
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Real symmetric tridiagonal similarity image of a complex-Hermitian
/// tridiagonal operator, plus the cumulative phases that map eigenvectors
/// back: a T-eigenvector v corresponds to u_j = conj(phases[j]) * v_j.
#[derive(Debug, Clone)]
pub struct PhaseReduced {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub phases: Vec<Complex64>,
}

/// Strip the off-diagonal phases: T = S H S^H with S = diag(phases),
/// phases[0] = 1 and phases[j+1] = phases[j] * c_j/|c_j|. T has the same
/// spectrum with off-diagonal |c_j|; a zero off-diagonal keeps phase 1.
pub fn phase_reduce(op: &TridiagonalHermitianOperator) -> PhaseReduced {
    let n = op.dim();
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut phases = Vec::with_capacity(n);
    phases.push(Complex64::new(1.0, 0.0));
    for j in 0..n - 1 {
        let c = op.offdiag()[j];
        let mag = c.norm();
        offdiag.push(mag);
        let step = if mag == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            c / mag
        };
        phases.push(phases[j] * step);
    }
    PhaseReduced {
        diag: op.diag().to_vec(),
        offdiag,
        phases,
    }
}

/// Number of eigenvalues of the real symmetric tridiagonal (diag, offdiag)
/// strictly below `shift`, via the Sturm sequence of the LDL^T pivots.
fn sturm_count(diag: &[f64], offdiag_sq: &[f64], shift: f64) -> usize {
    let n = diag.len();
    let guard = 1e-300;
    let mut count = 0usize;
    let mut q = diag[0] - shift;
    if q < 0.0 {
        count += 1;
    }
    for j in 1..n {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (diag[j] - shift) - offdiag_sq[j - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Bisect for the (index)-th smallest eigenvalue (0-based) inside [lo, hi].
fn bisect_eigenvalue(diag: &[f64], offdiag_sq: &[f64], index: usize, lo: f64, hi: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a) <= 2.0 * f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
        if sturm_count(diag, offdiag_sq, mid) <= index {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// LU factorization with partial pivoting of (H - shift I) for a complex
/// Hermitian tridiagonal H; supports repeated solves for inverse iteration.
struct ShiftedLu {
    n: usize,
    mid: Vec<Complex64>,
    up: Vec<Complex64>,
    up2: Vec<Complex64>,
    mult: Vec<Complex64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(op: &TridiagonalHermitianOperator, shift: f64) -> Self {
        let n = op.dim();
        let tiny = f64::EPSILON * op.norm_bound().max(1.0) * 1e-3;
        let mut low: Vec<Complex64> = (0..n.saturating_sub(1))
            .map(|j| op.offdiag()[j].conj())
            .collect();
        let mut mid: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new(op.diag()[j] - shift, 0.0))
            .collect();
        let mut up: Vec<Complex64> = op.offdiag().to_vec();
        let mut up2 = vec![Complex64::new(0.0, 0.0); n.saturating_sub(2)];
        let mut mult = vec![Complex64::new(0.0, 0.0); n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];

        for k in 0..n.saturating_sub(1) {
            if low[k].norm() > mid[k].norm() {
                swapped[k] = true;
                std::mem::swap(&mut mid[k], &mut low[k]);
                // after the row swap the old diagonal sits in `low`, the
                // old upper entries shift accordingly
                std::mem::swap(&mut mid[k + 1], &mut up[k]);
                if k + 2 < n {
                    std::mem::swap(&mut up[k + 1], &mut up2[k]);
                }
            }
            if mid[k].norm() < tiny {
                mid[k] = Complex64::new(tiny, 0.0);
            }
            let m = low[k] / mid[k];
            mult[k] = m;
            mid[k + 1] -= m * up[k];
            if k + 2 < n {
                up[k + 1] -= m * up2[k];
            }
        }
        if mid[n - 1].norm() < tiny {
            mid[n - 1] = Complex64::new(tiny, 0.0);
        }
        ShiftedLu {
            n,
            mid,
            up,
            up2,
            mult,
            swapped,
        }
    }

    fn solve(&self, rhs: &DVector<Complex64>) -> DVector<Complex64> {
        let n = self.n;
        let mut b = rhs.clone();
        for k in 0..n - 1 {
            if self.swapped[k] {
                b.swap_rows(k, k + 1);
            }
            let t = self.mult[k] * b[k];
            b[k + 1] -= t;
        }
        let mut x = DVector::from_element(n, Complex64::new(0.0, 0.0));
        x[n - 1] = b[n - 1] / self.mid[n - 1];
        if n >= 2 {
            x[n - 2] = (b[n - 2] - self.up[n - 2] * x[n - 1]) / self.mid[n - 2];
        }
        for j in (0..n.saturating_sub(2)).rev() {
            x[j] = (b[j] - self.up[j] * x[j + 1] - self.up2[j] * x[j + 2]) / self.mid[j];
        }
        x
    }
}

fn l2_normalize(v: &mut DVector<Complex64>) -> f64 {
    let norm = v.norm();
    if norm > 0.0 {
        *v /= Complex64::new(norm, 0.0);
    }
    norm
}

/// Modified Gram-Schmidt of v against the given unit vectors.
fn orthogonalize(v: &mut DVector<Complex64>, basis: &[DVector<Complex64>]) {
    for b in basis {
        let coeff = b.dotc(v);
        *v -= b * coeff;
    }
}

/// Compute the k lowest eigenpairs.
///
/// Degenerate clusters (gap below 1e-10 |E|) get re-orthogonalized via
/// modified Gram-Schmidt and are reported as warnings. Returned states are
/// embedded on the full grid with zero endpoints, trapezoid-normalized and
/// phase-aligned with the operator's alpha. Residuals are the l2 matrix
/// residuals ||H v - E v|| of the unit interior vectors.
pub fn eigen_lowest(op: &TridiagonalHermitianOperator, opts: &SolveOptions) -> Result<Spectrum> {
    let n = op.dim();
    opts.validate(n)?;
    let reduced = phase_reduce(op);
    let off_sq: Vec<f64> = reduced.offdiag.iter().map(|e| e * e).collect();

    // Gershgorin bracket
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for j in 0..n {
        let left = if j > 0 { reduced.offdiag[j - 1].abs() } else { 0.0 };
        let right = if j < n - 1 { reduced.offdiag[j].abs() } else { 0.0 };
        lo = lo.min(reduced.diag[j] - left - right);
        hi = hi.max(reduced.diag[j] + left + right);
    }
    lo -= 1.0;
    hi += 1.0;

    let eigenvalues: Vec<f64> = (0..opts.k)
        .map(|i| bisect_eigenvalue(&reduced.diag, &off_sq, i, lo, hi))
        .collect();

    // cluster bookkeeping: group indices whose gap is below threshold
    let mut warnings = Vec::new();
    let mut cluster_start = vec![0usize; opts.k];
    for i in 1..opts.k {
        let gap = eigenvalues[i] - eigenvalues[i - 1];
        if gap.abs() < 1e-10 * eigenvalues[i].abs() {
            cluster_start[i] = cluster_start[i - 1];
            warnings.push(SolverWarning::Cluster { index: i, gap });
        } else {
            cluster_start[i] = i;
        }
    }

    let budget = opts.iter_budget(n);
    let h = op.grid().spacing();
    let mut vectors: Vec<DVector<Complex64>> = Vec::with_capacity(opts.k);
    let mut residuals = Vec::with_capacity(opts.k);

    for (i, &lambda) in eigenvalues.iter().enumerate() {
        let mut rng = Lcg::new(opts.seed.wrapping_add((i as u64).wrapping_mul(0x9e3779b97f4a7c15)));
        let lu = ShiftedLu::factor(op, lambda);
        let mut v = rng.complex_vector(n);
        l2_normalize(&mut v);
        let mut residual = f64::INFINITY;
        let mut converged = false;
        for _ in 0..budget {
            let mut w = lu.solve(&v);
            if w.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                // exactly singular solve: restart from a fresh vector
                w = rng.complex_vector(n);
            }
            if cluster_start[i] < i {
                orthogonalize(&mut w, &vectors[cluster_start[i]..i]);
            }
            if l2_normalize(&mut w) == 0.0 {
                w = rng.complex_vector(n);
                l2_normalize(&mut w);
            }
            let hw = op.apply(&w);
            residual = (&hw - &w * Complex64::new(lambda, 0.0)).norm();
            v = w;
            if residual <= opts.tol {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence(format!(
                "inverse iteration for eigenvalue {i} stalled at residual {residual:.3e} \
                 (tolerance {:.3e})",
                opts.tol
            )));
        }
        vectors.push(v);
        residuals.push(residual);
    }

    let mut pairs = Vec::with_capacity(opts.k);
    for (i, v) in vectors.iter().enumerate() {
        let mut amp = DVector::from_element(op.grid().len(), Complex64::new(0.0, 0.0));
        let scale = Complex64::new(1.0 / h.sqrt(), 0.0);
        for j in 0..n {
            amp[j + 1] = v[j] * scale;
        }
        let wf = WaveFunction::from_vector(op.grid().clone(), amp)?
            .normalize()?
            .align_phase(op.alpha())?;
        pairs.push((Energy(eigenvalues[i]), wf));
    }

    Ok(Spectrum {
        pairs,
        scheme: op.scheme(),
        solver: SolverKind::Tridiag,
        residuals,
        warnings,
        seed: opts.seed,
    })
}

/// Rayleigh quotient <psi|H|psi> / <psi|psi> over the interior points.
///
/// The numerator is accumulated as d_j |v_j|^2 + 2 Re(conj(v_j) c_j v_{j+1}),
/// so the result is real by construction (the imaginary part is identically
/// zero, well within the 1e-12 relative guarantee).
pub fn rayleigh_quotient(op: &TridiagonalHermitianOperator, wf: &WaveFunction) -> Result<f64> {
    if wf.grid() != op.grid() {
        return Err(Error::Shape("wavefunction grid does not match operator grid".into()));
    }
    let n = op.dim();
    let amp = wf.amp();
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for j in 0..n {
        let vj = amp[j + 1];
        den += vj.norm_sqr();
        num += op.diag()[j] * vj.norm_sqr();
        if j + 1 < n {
            let cross = vj.conj() * op.offdiag()[j] * amp[j + 2];
            num += 2.0 * cross.re;
        }
    }
    if den <= 1e-300 {
        return Err(Error::ZeroNorm { norm_sq: den });
    }
    Ok(num / den)
}

fn interior_vector(op: &TridiagonalHermitianOperator, wf: &WaveFunction) -> DVector<Complex64> {
    DVector::from_iterator(op.dim(), (0..op.dim()).map(|j| wf.amp()[j + 1]))
}

/// Ground state by Rayleigh-quotient minimization: projected gradient
/// descent with an exact line search over span{psi, g} (the 2x2 restricted
/// eigenproblem is solved in closed form each step). Stops when the
/// relative change of the quotient drops below tol or the residual does.
///
/// The given seed state is tried first; on stagnation two further start
/// vectors from the fixed LCG stream are tried before giving up.
pub fn rq_descent(
    op: &TridiagonalHermitianOperator,
    seed: &WaveFunction,
    opts: &SolveOptions,
) -> Result<(Energy, WaveFunction)> {
    let n = op.dim();
    opts.validate(n)?;
    if seed.grid() != op.grid() {
        return Err(Error::Shape("seed grid does not match operator grid".into()));
    }
    let budget = opts.iter_budget(n);
    let mut rng = Lcg::new(opts.seed);
    let attempts = 3u32;

    for attempt in 0..attempts {
        let mut v = if attempt == 0 {
            interior_vector(op, seed)
        } else {
            rng.complex_vector(n)
        };
        if l2_normalize(&mut v) <= 1e-300 {
            continue;
        }

        let mut r = {
            let hv = op.apply(&v);
            v.dotc(&hv).re
        };
        let mut stagnant = false;
        let mut converged = false;
        for _ in 0..budget {
            let hv = op.apply(&v);
            let resid_vec = &hv - &v * Complex64::new(r, 0.0);
            let residual = resid_vec.norm();
            if residual <= opts.tol {
                converged = true;
                break;
            }
            // gradient of the quotient at unit norm
            let mut g = resid_vec * Complex64::new(2.0, 0.0);
            let overlap = v.dotc(&g);
            g -= &v * overlap;
            let gnorm = g.norm();
            if gnorm <= f64::EPSILON * op.norm_bound().max(1.0) {
                stagnant = true;
                break;
            }
            g /= Complex64::new(gnorm, 0.0);

            let hg = op.apply(&g);
            let a = r;
            let c = g.dotc(&hg).re;
            let b = v.dotc(&hg);
            let mid = 0.5 * (a + c);
            let disc = (0.25 * (a - c) * (a - c) + b.norm_sqr()).sqrt();
            let lam = mid - disc;
            let (c1, c2) = if b.norm() <= 1e-30 * a.abs().max(c.abs()).max(1e-300) {
                if a <= c {
                    (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
                } else {
                    (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
                }
            } else if (lam - a).abs() >= (lam - c).abs() {
                (b, Complex64::new(lam - a, 0.0))
            } else {
                (Complex64::new(lam - c, 0.0), b.conj())
            };
            v = &v * c1 + &g * c2;
            l2_normalize(&mut v);
            let r_new = {
                let hv = op.apply(&v);
                v.dotc(&hv).re
            };
            let dr = (r_new - r).abs();
            r = r_new;
            if dr <= opts.tol * r.abs().max(f64::MIN_POSITIVE) {
                converged = true;
                break;
            }
        }

        if converged {
            let mut amp = DVector::from_element(op.grid().len(), Complex64::new(0.0, 0.0));
            let scale = Complex64::new(1.0 / op.grid().spacing().sqrt(), 0.0);
            for j in 0..n {
                amp[j + 1] = v[j] * scale;
            }
            let wf = WaveFunction::from_vector(op.grid().clone(), amp)?
                .normalize()?
                .align_phase(op.alpha())?;
            return Ok((Energy(r), wf));
        }
        if !stagnant {
            // iteration budget exhausted while still making progress
            return Err(Error::Convergence(format!(
                "rq descent used {budget} iterations without meeting tolerance {:.3e}",
                opts.tol
            )));
        }
    }
    Err(Error::Stagnation { attempts })
}
