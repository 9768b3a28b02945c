//! The wavefunction redefinition psi -> e^{-i alpha x} psi removes alpha
//! from the equation. Closed-form states satisfy the identity exactly;
//! gauge-exact eigenvectors satisfy it at solver precision; naive-scheme
//! eigenvectors approach it at second order.
//!
//! ```bash
//! cargo run --example gauge_equivalence
//! ```

use lvse::analytic::{box_state, ho_state};
use lvse::domain::{make_grid, ModelParams};
use lvse::observables::{gauge_map, gauge_residual, measure_error, ConvergenceMeasure};
use lvse::operators::hamiltonian;
use lvse::{eigen_lowest, Scheme, SolveOptions};

fn main() -> lvse::Result<()> {
    let alpha = 0.1;

    println!("closed forms: max_j |psi(x_j; alpha) - e^(-i alpha x_j) psi(x_j; 0)|");
    let grid = make_grid(0.0, 10.0, 1001)?;
    for n in 1..=4 {
        let res = gauge_residual(
            &box_state(n, 10.0, alpha, &grid)?,
            &box_state(n, 10.0, 0.0, &grid)?,
            alpha,
        )?;
        println!("  well n = {n}: {res:.3e}");
    }
    let grid = make_grid(-9.0, 9.0, 901)?;
    for n in 0..=3 {
        let res = gauge_residual(
            &ho_state(n, 1.0, 1.0, alpha, &grid)?,
            &ho_state(n, 1.0, 1.0, 0.0, &grid)?,
            alpha,
        )?;
        println!("  oscillator n = {n}: {res:.3e}");
    }

    println!();
    println!("gauge-exact eigenvectors (well, 501 points):");
    let grid = make_grid(0.0, 10.0, 501)?;
    let params = ModelParams::box_well(1.0, alpha, 10.0)?;
    let op_a = hamiltonian(&grid, &params, Scheme::GaugeExact)?;
    let op_0 = hamiltonian(&grid, &params.with_alpha(0.0)?, Scheme::GaugeExact)?;
    let sa = eigen_lowest(&op_a, &SolveOptions::new(3))?;
    let s0 = eigen_lowest(&op_0, &SolveOptions::new(3))?;
    for i in 0..3 {
        let mapped = gauge_map(s0.state(i), alpha)?;
        let aligned = sa.state(i).aligned_with(&mapped)?;
        let res = gauge_residual(&aligned, s0.state(i), alpha)?;
        println!("  level {i}: {res:.3e}");
    }

    println!();
    println!("naive eigenvectors quarter the residual when h halves:");
    let measure = ConvergenceMeasure::GaugeVectorResidual {
        params,
        scheme: Scheme::NaiveStencil,
    };
    for n_points in [251usize, 501, 1001] {
        let g = make_grid(0.0, 10.0, n_points)?;
        println!(
            "  {:>5} points (h = {:>6.3}): {:.3e}",
            n_points,
            g.spacing(),
            measure_error(&measure, &g)?
        );
    }
    Ok(())
}
