//! The Heisenberg product dx * dp is untouched by the background field:
//! computing with (psi(alpha), p_alpha) gives the same number as with
//! (psi(0), p_0), and every bound state stays above 1/2.
//!
//! ```bash
//! cargo run --example uncertainty
//! ```

use lvse::analytic::{box_state, ho_ground, ho_state};
use lvse::domain::make_grid;
use lvse::observables::uncertainty_product;

fn main() -> lvse::Result<()> {
    let alpha = 0.1;

    let grid = make_grid(-8.0, 8.0, 16001)?;
    let u0 = uncertainty_product(&ho_ground(1.0, 1.0, 0.0, &grid)?, 0.0)?;
    let ua = uncertainty_product(&ho_ground(1.0, 1.0, alpha, &grid)?, alpha)?;
    println!("oscillator ground state (minimal uncertainty):");
    println!("  dx dp (alpha = 0)   = {u0:.10}");
    println!("  dx dp (alpha = 0.1) = {ua:.10}");
    println!("  |difference|        = {:.3e}", (ua - u0).abs());

    println!();
    println!("well ground state:");
    let grid = make_grid(0.0, 10.0, 8001)?;
    let b0 = uncertainty_product(&box_state(1, 10.0, 0.0, &grid)?, 0.0)?;
    let ba = uncertainty_product(&box_state(1, 10.0, alpha, &grid)?, alpha)?;
    println!("  dx dp (alpha = 0)   = {b0:.10}   (continuum sqrt(pi^2/12 - 1/2) = 0.5678618084)");
    println!("  dx dp (alpha = 0.1) = {ba:.10}");
    println!("  |difference|        = {:.3e}", (ba - b0).abs());

    println!();
    println!("excited oscillator states (dx dp -> n + 1/2):");
    let grid = make_grid(-10.0, 10.0, 8001)?;
    for n in 0..=5 {
        let u = uncertainty_product(&ho_state(n, 1.0, 1.0, alpha, &grid)?, alpha)?;
        println!("  n = {n}: dx dp = {u:.8}");
    }
    Ok(())
}
