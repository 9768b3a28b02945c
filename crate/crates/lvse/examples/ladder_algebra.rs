//! Ladder operators a_pm = (1/sqrt(2 m w))(-/+ (d/dx + i alpha) + m w x):
//! discretely, [a-, a+] = 1 and a- psi_0 = 0 hold to O(h^2), and repeated
//! raising rebuilds the Hermite states.
//!
//! ```bash
//! cargo run --example ladder_algebra
//! ```

use lvse::analytic::{ho_state, ho_state_via_ladder};
use lvse::domain::make_grid;
use lvse::observables::{measure_error, ConvergenceMeasure};

fn main() -> lvse::Result<()> {
    let (m, omega, alpha) = (1.0, 1.0, 0.1);

    println!("commutator and annihilation residuals on a Gaussian probe:");
    println!(
        "{:>8} {:>9} {:>26} {:>22}",
        "points", "h", "||([a-,a+]-1)psi||/||psi||", "||a- psi_0||/||psi_0||"
    );
    let commutator = ConvergenceMeasure::LadderCommutator {
        m,
        omega,
        alpha,
        sigma: 1.0,
    };
    let annihilation = ConvergenceMeasure::GroundAnnihilation { m, omega, alpha };
    for n_points in [501usize, 1001, 2001] {
        let g = make_grid(-10.0, 10.0, n_points)?;
        println!(
            "{n_points:>8} {:>9.4} {:>26.3e} {:>22.3e}",
            g.spacing(),
            measure_error(&commutator, &g)?,
            measure_error(&annihilation, &g)?
        );
    }
    println!("(both quarter when h halves)");

    println!();
    println!("raising the ground state n times vs the Hermite closed form:");
    let grid = make_grid(-10.0, 10.0, 2001)?;
    for n in 1..=3 {
        let built = ho_state_via_ladder(n, m, omega, alpha, &grid)?;
        let reference = ho_state(n, m, omega, alpha, &grid)?;
        let aligned = built.wf.aligned_with(&reference)?;
        let mut worst = 0.0f64;
        for j in 0..grid.len() {
            worst = worst.max((aligned.amp()[j] - reference.amp()[j]).norm());
        }
        println!(
            "  n = {n}: max pointwise diff {worst:.3e}, boundary amplitude {:.1e}",
            built.boundary_amplitude
        );
    }

    println!();
    println!("a narrow grid truncates the state and is flagged:");
    let narrow = make_grid(-2.0, 2.0, 201)?;
    let built = ho_state_via_ladder(3, m, omega, alpha, &narrow)?;
    match built.warning() {
        Some(w) => println!("  {w:?}"),
        None => println!("  no warning (unexpected)"),
    }
    Ok(())
}
