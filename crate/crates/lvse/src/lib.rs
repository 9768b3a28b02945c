//! One-dimensional quantum mechanics with a background-field-modified
//! momentum operator p = -i (d/dx + i alpha), where the real constant alpha
//! shifts the derivative. The library builds the modified Hamiltonian in
//! two discretization schemes, solves it with a complex-Hermitian
//! tridiagonal eigensolver, carries the closed-form solutions for the free
//! particle, the infinite well and the harmonic oscillator, and measures
//! the structural facts of the model: spectra do not depend on alpha,
//! wavefunctions pick up only the phase e^{-i alpha x}, parity symmetry is
//! broken as P H(alpha) P = H(-alpha), the ladder algebra closes, and the
//! Heisenberg uncertainty product is unchanged.
//!
//! Start with the runnable examples (`cargo run --example box_spectrum`)
//! or the `lvse` binary (`lvse box --alpha 0.1 --L 10`).

pub mod analytic;
pub mod domain;
pub mod eigensolve;
mod error;
pub mod observables;
pub mod operators;
pub mod output;
pub mod scenario;

pub use domain::{make_grid, Energy, Grid, ModelParams, PotentialSpec, WaveFunction};
pub use eigensolve::{
    eigen_lowest, phase_reduce, rayleigh_quotient, rq_descent, SolveOptions, SolverKind,
    SolverWarning, Spectrum, DEFAULT_SEED,
};
pub use error::{Error, Result};
pub use operators::{DenseOperator, Scheme, TridiagonalHermitianOperator};
