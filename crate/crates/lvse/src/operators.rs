//! Discrete operators: modified momentum, Hamiltonians in two schemes,
//! ladder operators, parity and the gauge unitary.
//!
//! The modified momentum is p = -i (d/dx + i alpha). Squaring it in the
//! kinetic term gives the stationary equation
//!
//! ```text
//! -(1/2m) (psi'' + 2 i alpha psi' - alpha^2 psi) + V psi = E psi
//! ```
//!
//! Two discretizations of the left-hand side are provided:
//!
//! * [`Scheme::NaiveStencil`] applies second-order central differences term
//!   by term: diag 1/(m h^2) + alpha^2/(2m) + V(x_j), hopping
//!   -1/(2 m h^2) - i alpha/(2 m h). Its spectrum carries an
//!   O(alpha^2 h^2 E) artifact that vanishes at second order.
//! * [`Scheme::GaugeExact`] attaches the phase e^{i alpha h} to the hopping
//!   (a Peierls phase): diag 1/(m h^2) + V(x_j), hopping
//!   -e^{i alpha h}/(2 m h^2). This is exactly U H(0) U^H with
//!   U = diag(e^{-i alpha x_j}), so the spectrum is alpha-independent to
//!   machine precision.
//!
//! The first derivative uses the antisymmetric central difference because it
//! keeps the i*alpha band Hermitian; a one-sided difference would not.
//! Hamiltonians act on interior points only (Dirichlet boundaries), which
//! represents the infinite well exactly.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::domain::{Grid, ModelParams};
use crate::error::{Error, Result};

/// Discretization scheme for the Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Scheme {
    /// Term-by-term central differences on the modified equation.
    #[serde(rename = "naive")]
    NaiveStencil,
    /// Peierls phase on the hopping; exactly gauge-equivalent to alpha = 0.
    #[serde(rename = "gauge-exact")]
    GaugeExact,
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scheme::NaiveStencil => write!(f, "naive"),
            Scheme::GaugeExact => write!(f, "gauge-exact"),
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Scheme::NaiveStencil),
            "gauge-exact" => Ok(Scheme::GaugeExact),
            other => Err(Error::Config(format!(
                "unknown scheme {other:?}; expected naive or gauge-exact"
            ))),
        }
    }
}

/// Complex-Hermitian tridiagonal operator on the interior points of a grid.
///
/// Hermiticity is structural: the stored upper band implies the conjugate
/// lower band and the diagonal is real. Dimension is grid.len() - 2.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalHermitianOperator {
    grid: Grid,
    diag: Vec<f64>,
    offdiag: Vec<Complex64>,
    alpha: f64,
    scheme: Scheme,
}

impl TridiagonalHermitianOperator {
    /// Assemble from bands. `diag` has one entry per interior point,
    /// `offdiag[j]` couples interior points j and j+1. `alpha` records the
    /// background field baked into the bands; eigensolvers use it for the
    /// phase-alignment convention. The scheme tag defaults to `NaiveStencil`
    /// and is set by [`hamiltonian`].
    pub fn from_bands(
        grid: Grid,
        diag: Vec<f64>,
        offdiag: Vec<Complex64>,
        alpha: f64,
    ) -> Result<Self> {
        let n = grid.len() - 2;
        if diag.len() != n || offdiag.len() + 1 != n {
            return Err(Error::Shape(format!(
                "bands of length {}/{} for {} interior points",
                diag.len(),
                offdiag.len(),
                n
            )));
        }
        if diag.iter().any(|d| !d.is_finite())
            || offdiag.iter().any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::Domain("non-finite operator entry".into()));
        }
        Ok(TridiagonalHermitianOperator {
            grid,
            diag,
            offdiag,
            alpha,
            scheme: Scheme::NaiveStencil,
        })
    }

    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }

    /// Discretization scheme the bands were assembled with.
    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// Full grid the operator was assembled on (it acts on the interior).
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Number of interior points the operator acts on.
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[Complex64] {
        &self.offdiag
    }

    /// Background field recorded at assembly.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Apply to a vector on the interior points (Dirichlet: missing
    /// neighbours are zero).
    pub fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        let n = self.dim();
        assert_eq!(v.len(), n, "operator of dimension {n} applied to {}", v.len());
        let mut out = DVector::from_element(n, Complex64::new(0.0, 0.0));
        for j in 0..n {
            let mut acc = Complex64::new(self.diag[j], 0.0) * v[j];
            if j > 0 {
                acc += self.offdiag[j - 1].conj() * v[j - 1];
            }
            if j + 1 < n {
                acc += self.offdiag[j] * v[j + 1];
            }
            out[j] = acc;
        }
        out
    }

    /// Apply the stencil to full-grid samples, using the true boundary
    /// values instead of Dirichlet zeros. Returns interior rows only.
    ///
    /// The boundary couplings reuse the first and last band entries, which
    /// is exact for the constant-band operators assembled here (the
    /// potential enters the diagonal only).
    pub fn apply_with_boundary(&self, full: &DVector<Complex64>) -> DVector<Complex64> {
        let n = self.dim();
        assert_eq!(full.len(), self.grid.len());
        debug_assert!(n >= 2, "boundary application needs at least two interior points");
        let mut out = DVector::from_element(n, Complex64::new(0.0, 0.0));
        for j in 0..n {
            let mut acc = Complex64::new(self.diag[j], 0.0) * full[j + 1];
            let lower = if j == 0 { self.offdiag[0] } else { self.offdiag[j - 1] };
            acc += lower.conj() * full[j];
            let upper = if j + 1 < n { self.offdiag[j] } else { self.offdiag[n - 2] };
            acc += upper * full[j + 2];
            out[j] = acc;
        }
        out
    }

    /// Densify (interior grid) for matrix-identity checks.
    pub fn to_dense(&self) -> Result<DenseOperator> {
        let n = self.dim();
        let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        for j in 0..n {
            m[(j, j)] = Complex64::new(self.diag[j], 0.0);
            if j + 1 < n {
                m[(j, j + 1)] = self.offdiag[j];
                m[(j + 1, j)] = self.offdiag[j].conj();
            }
        }
        DenseOperator::new(self.grid.interior()?, m, true)
    }

    /// Gershgorin bound on the spectral radius.
    pub fn norm_bound(&self) -> f64 {
        let n = self.dim();
        let mut bound: f64 = 0.0;
        for j in 0..n {
            let left = if j > 0 { self.offdiag[j - 1].norm() } else { 0.0 };
            let right = if j + 1 < n { self.offdiag[j].norm() } else { 0.0 };
            bound = bound.max(self.diag[j].abs() + left + right);
        }
        bound
    }
}

/// Dense operator on all grid points.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    grid: Grid,
    entries: DMatrix<Complex64>,
    hermitian: bool,
}

impl DenseOperator {
    /// Wrap a matrix. When `hermitian` is set, max|M - M^H| <= 1e-12 is
    /// checked at construction.
    pub fn new(grid: Grid, entries: DMatrix<Complex64>, hermitian: bool) -> Result<Self> {
        if entries.nrows() != grid.len() || entries.ncols() != grid.len() {
            return Err(Error::Shape(format!(
                "{}x{} matrix on a grid of {} points",
                entries.nrows(),
                entries.ncols(),
                grid.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("non-finite operator entry".into()));
        }
        if hermitian {
            let dev = max_abs(&(&entries - entries.adjoint()));
            if dev > 1e-12 {
                return Err(Error::Domain(format!(
                    "operator flagged Hermitian deviates from its adjoint by {dev:.3e}"
                )));
            }
        }
        Ok(DenseOperator {
            grid,
            entries,
            hermitian,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn apply(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        &self.entries * v
    }

    /// Conjugate transpose (the Hermitian flag survives).
    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator {
            grid: self.grid.clone(),
            entries: self.entries.adjoint(),
            hermitian: self.hermitian,
        }
    }

    /// Matrix product self * other.
    pub fn compose(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.grid != other.grid {
            return Err(Error::Shape("composing operators on different grids".into()));
        }
        DenseOperator::new(self.grid.clone(), &self.entries * &other.entries, false)
    }

    /// Principal submatrix over the interior points. One-sided endpoint rows
    /// drop out here, which is where Hermiticity statements about the
    /// momentum and ladder operators live.
    pub fn interior(&self) -> Result<DenseOperator> {
        let n = self.dim();
        let sub = self.entries.view((1, 1), (n - 2, n - 2)).into_owned();
        DenseOperator::new(self.grid.interior()?, sub, false)
    }

    /// Entrywise max |self - other|.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        max_abs(&(&self.entries - &other.entries))
    }
}

pub(crate) fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Antisymmetric central-difference matrix D1 with second-order one-sided
/// stencils on the two endpoint rows.
fn d1_matrix(grid: &Grid) -> DMatrix<f64> {
    let n = grid.len();
    let inv2h = 1.0 / (2.0 * grid.spacing());
    let mut d = DMatrix::zeros(n, n);
    d[(0, 0)] = -3.0 * inv2h;
    d[(0, 1)] = 4.0 * inv2h;
    d[(0, 2)] = -inv2h;
    for j in 1..n - 1 {
        d[(j, j - 1)] = -inv2h;
        d[(j, j + 1)] = inv2h;
    }
    d[(n - 1, n - 1)] = 3.0 * inv2h;
    d[(n - 1, n - 2)] = -4.0 * inv2h;
    d[(n - 1, n - 3)] = inv2h;
    d
}

/// Modified momentum p = -i (D1 + i alpha I) = -i D1 + alpha I.
///
/// The full matrix carries one-sided endpoint rows; its interior-restricted
/// part is Hermitian.
pub fn momentum_matrix(grid: &Grid, alpha: f64) -> Result<DenseOperator> {
    let n = grid.len();
    let d1 = d1_matrix(grid);
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for j in 0..n {
        for k in 0..n {
            let v = d1[(j, k)];
            if v != 0.0 {
                m[(j, k)] = Complex64::new(0.0, -v);
            }
        }
        m[(j, j)] += Complex64::new(alpha, 0.0);
    }
    DenseOperator::new(grid.clone(), m, false)
}

/// Matrix-free application of the first-derivative stencil D1 (central
/// differences, one-sided second order at the ends).
pub fn apply_d1(grid: &Grid, amp: &DVector<Complex64>) -> DVector<Complex64> {
    let n = grid.len();
    assert_eq!(amp.len(), n);
    let inv2h = Complex64::new(1.0 / (2.0 * grid.spacing()), 0.0);
    let mut out = DVector::from_element(n, Complex64::new(0.0, 0.0));
    out[0] = inv2h * (-3.0 * amp[0] + 4.0 * amp[1] - amp[2]);
    for j in 1..n - 1 {
        out[j] = inv2h * (amp[j + 1] - amp[j - 1]);
    }
    out[n - 1] = inv2h * (3.0 * amp[n - 1] - 4.0 * amp[n - 2] + amp[n - 3]);
    out
}

/// Matrix-free modified momentum -i D1 + alpha I as an operator value;
/// same stencil as [`momentum_matrix`] without the n x n storage, for
/// expectation values on fine grids.
#[derive(Debug, Clone)]
pub struct MomentumOperator {
    grid: Grid,
    alpha: f64,
}

impl MomentumOperator {
    pub fn new(grid: Grid, alpha: f64) -> Self {
        MomentumOperator { grid, alpha }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn apply(&self, amp: &DVector<Complex64>) -> DVector<Complex64> {
        apply_momentum(&self.grid, self.alpha, amp)
    }
}

/// Position operator X = diag(x_j).
pub fn position_matrix(grid: &Grid) -> DenseOperator {
    let n = grid.len();
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for j in 0..n {
        m[(j, j)] = Complex64::new(grid.point(j), 0.0);
    }
    DenseOperator {
        grid: grid.clone(),
        entries: m,
        hermitian: true,
    }
}

/// Matrix-free application of the same momentum stencil; O(n) and suitable
/// for fine grids where densifying is wasteful.
pub fn apply_momentum(grid: &Grid, alpha: f64, amp: &DVector<Complex64>) -> DVector<Complex64> {
    let n = grid.len();
    assert_eq!(amp.len(), n);
    let inv2h = Complex64::new(0.0, -1.0 / (2.0 * grid.spacing()));
    let a = Complex64::new(alpha, 0.0);
    let mut out = DVector::from_element(n, Complex64::new(0.0, 0.0));
    out[0] = inv2h * (-3.0 * amp[0] + 4.0 * amp[1] - amp[2]) + a * amp[0];
    for j in 1..n - 1 {
        out[j] = inv2h * (amp[j + 1] - amp[j - 1]) + a * amp[j];
    }
    out[n - 1] = inv2h * (3.0 * amp[n - 1] - 4.0 * amp[n - 2] + amp[n - 3]) + a * amp[n - 1];
    out
}

/// Assemble the Hamiltonian for the given parameters and scheme. Acts on
/// interior points (Dirichlet boundaries).
pub fn hamiltonian(
    grid: &Grid,
    params: &ModelParams,
    scheme: Scheme,
) -> Result<TridiagonalHermitianOperator> {
    let v = params.potential().evaluate(grid)?;
    let n = grid.len() - 2;
    let m = params.m();
    let alpha = params.alpha();
    let h = grid.spacing();
    let kin = 1.0 / (m * h * h);
    let half = 0.5 * kin;

    let (diag_shift, hop) = match scheme {
        Scheme::NaiveStencil => (
            alpha * alpha / (2.0 * m),
            Complex64::new(-half, -alpha / (2.0 * m * h)),
        ),
        Scheme::GaugeExact => {
            let ah = alpha * h;
            (0.0, Complex64::new(-half * ah.cos(), -half * ah.sin()))
        }
    };

    let diag: Vec<f64> = (0..n).map(|j| kin + diag_shift + v[j + 1]).collect();
    Ok(
        TridiagonalHermitianOperator::from_bands(grid.clone(), diag, vec![hop; n.saturating_sub(1)], alpha)?
            .with_scheme(scheme),
    )
}

/// Ladder operators (a_minus, a_plus) with
/// a_pm = (1/sqrt(2 m omega)) (mp (D1 + i alpha I) + m omega X).
///
/// a_plus is the conjugate transpose of a_minus on the interior block; the
/// one-sided endpoint rows break exact adjointness only there.
pub fn ladder(
    grid: &Grid,
    m: f64,
    omega: f64,
    alpha: f64,
) -> Result<(DenseOperator, DenseOperator)> {
    if m <= 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!("mass must be positive, got {m}")));
    }
    if omega <= 0.0 || !omega.is_finite() {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    let n = grid.len();
    let s = 1.0 / (2.0 * m * omega).sqrt();
    let d1 = d1_matrix(grid);
    let mut minus = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    let mut plus = minus.clone();
    for j in 0..n {
        for k in 0..n {
            let d = d1[(j, k)];
            if d != 0.0 {
                minus[(j, k)] += Complex64::new(s * d, 0.0);
                plus[(j, k)] -= Complex64::new(s * d, 0.0);
            }
        }
        let x = grid.point(j);
        let diag_minus = Complex64::new(s * m * omega * x, s * alpha);
        let diag_plus = Complex64::new(s * m * omega * x, -s * alpha);
        minus[(j, j)] += diag_minus;
        plus[(j, j)] += diag_plus;
    }
    Ok((
        DenseOperator::new(grid.clone(), minus, false)?,
        DenseOperator::new(grid.clone(), plus, false)?,
    ))
}

/// Parity operator P with (P psi)_j = psi_{n-1-j}; requires a grid mapped
/// onto itself by x -> -x.
pub fn parity_matrix(grid: &Grid) -> Result<DenseOperator> {
    if !grid.is_symmetric() {
        return Err(Error::Symmetry {
            x_min: grid.x_min(),
            x_max: grid.x_max(),
        });
    }
    let n = grid.len();
    let mut p = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for j in 0..n {
        p[(j, n - 1 - j)] = Complex64::new(1.0, 0.0);
    }
    DenseOperator::new(grid.clone(), p, true)
}

/// Gauge unitary U = diag(e^{-i alpha x_j}); maps alpha = 0 states onto
/// modified ones.
pub fn gauge_unitary(grid: &Grid, alpha: f64) -> DenseOperator {
    let n = grid.len();
    let mut u = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for j in 0..n {
        u[(j, j)] = Complex64::from_polar(1.0, -alpha * grid.point(j));
    }
    DenseOperator {
        grid: grid.clone(),
        entries: u,
        hermitian: false,
    }
}
