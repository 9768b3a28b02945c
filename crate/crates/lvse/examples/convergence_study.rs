//! Grid refinement studies: every second-order claim is measured as a
//! least-squares slope of log(error) vs log(h), and the gauge-exact
//! alpha-deviation refuses to produce an order because it sits at the
//! machine-precision floor.
//!
//! ```bash
//! cargo run --example convergence_study
//! ```

use lvse::domain::{make_grid, Grid, ModelParams};
use lvse::observables::{convergence_order, measure_error, ConvergenceMeasure};
use lvse::operators::Scheme;

fn grids(x_lo: f64, x_hi: f64, counts: &[usize]) -> lvse::Result<Vec<Grid>> {
    counts.iter().map(|&n| make_grid(x_lo, x_hi, n)).collect()
}

fn study(name: &str, measure: &ConvergenceMeasure, grids: &[Grid]) -> lvse::Result<()> {
    print!("{name:<38}");
    for g in grids {
        print!(" {:>10.3e}", measure_error(measure, g)?);
    }
    match convergence_order(measure, grids) {
        Ok(order) => println!("   order {order:.3}"),
        Err(e) => println!("   {e}"),
    }
    Ok(())
}

fn main() -> lvse::Result<()> {
    let box_params = ModelParams::box_well(1.0, 0.1, 10.0)?;
    let ho_params = ModelParams::harmonic(1.0, 0.1, 1.0)?;

    println!("errors per grid (halving h), then the fitted order:");
    println!();

    study(
        "well eigenvalues vs closed form (naive)",
        &ConvergenceMeasure::BoxEigenvalue {
            m: 1.0,
            width: 10.0,
            alpha: 0.1,
            scheme: Scheme::NaiveStencil,
            levels: 3,
        },
        &grids(0.0, 10.0, &[251, 501, 1001])?,
    )?;

    study(
        "well alpha-deviation (naive)",
        &ConvergenceMeasure::AlphaDeviation {
            params: box_params.clone(),
            scheme: Scheme::NaiveStencil,
            levels: 3,
        },
        &grids(0.0, 10.0, &[301, 601, 1201])?,
    )?;

    study(
        "oscillator alpha-deviation (naive)",
        &ConvergenceMeasure::AlphaDeviation {
            params: ho_params,
            scheme: Scheme::NaiveStencil,
            levels: 3,
        },
        &grids(-12.0, 12.0, &[301, 601, 1201])?,
    )?;

    study(
        "free-particle stencil residual",
        &ConvergenceMeasure::FreeParticleResidual {
            k: 1.0,
            alpha: 0.1,
            m: 1.0,
        },
        &grids(0.0, 10.0, &[501, 1001, 2001])?,
    )?;

    study(
        "ladder commutator residual",
        &ConvergenceMeasure::LadderCommutator {
            m: 1.0,
            omega: 1.0,
            alpha: 0.1,
            sigma: 1.0,
        },
        &grids(-10.0, 10.0, &[501, 1001, 2001])?,
    )?;

    study(
        "well alpha-deviation (gauge-exact)",
        &ConvergenceMeasure::AlphaDeviation {
            params: box_params,
            scheme: Scheme::GaugeExact,
            levels: 2,
        },
        &grids(0.0, 10.0, &[101, 201, 401])?,
    )?;

    Ok(())
}
