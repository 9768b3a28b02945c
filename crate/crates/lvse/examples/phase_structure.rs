//! Where alpha actually lives: the probability density |psi|^2 is
//! alpha-independent, the phase winds as e^{-i alpha x}, and the momentum
//! expectation built with the matching operator is unchanged too.
//!
//! ```bash
//! cargo run --example phase_structure
//! ```

use lvse::analytic::box_state;
use lvse::domain::make_grid;
use lvse::observables::expectation;
use lvse::operators::{position_matrix, MomentumOperator};

fn main() -> lvse::Result<()> {
    let grid = make_grid(0.0, 10.0, 2001)?;
    let alpha = 0.1;

    let w0 = box_state(1, 10.0, 0.0, &grid)?;
    let wa = box_state(1, 10.0, alpha, &grid)?;

    let mut max_density_diff = 0.0f64;
    for (d0, da) in w0.density().iter().zip(wa.density().iter()) {
        max_density_diff = max_density_diff.max((d0 - da).abs());
    }
    println!("max | |psi(a)|^2 - |psi(0)|^2 | = {max_density_diff:.3e}");

    // sample the phase along the well: arg(psi(a)) - arg(psi(0)) = -alpha x
    println!();
    println!("{:>6} {:>14} {:>14}", "x", "arg psi(a)", "-alpha x");
    for j in (200..2001).step_by(400) {
        let x = grid.point(j);
        println!("{x:>6.2} {:>14.6} {:>14.6}", wa.amp()[j].arg(), -alpha * x);
    }

    println!();
    let x_op = position_matrix(&grid);
    let p_op = MomentumOperator::new(grid.clone(), alpha);
    let x_mean = expectation(&x_op, &wa)?;
    let p_mean = expectation(&p_op, &wa)?;
    println!("<x> = {:.6} (center of the well)", x_mean.re);
    println!("<p_alpha> = {:.3e} (standing wave: zero)", p_mean.norm());
    Ok(())
}
