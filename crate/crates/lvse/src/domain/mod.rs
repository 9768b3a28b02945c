//! Core value types: grids, wavefunctions, model parameters.
//!
//! Everything downstream consumes these. All types are immutable after
//! construction and all operations are pure, so unrestricted concurrent
//! use is safe. Units are hbar = 1 throughout.

mod grid;
mod params;
mod wavefunction;

pub use grid::{make_grid, Grid};
pub use params::{Energy, ModelParams, PotentialSpec};
pub use wavefunction::WaveFunction;
