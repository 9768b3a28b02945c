//! Cross-check the tridiagonal eigensolver against an independent
//! variational route: Rayleigh-quotient minimization by projected gradient
//! descent with an exact two-dimensional line search.
//!
//! ```bash
//! cargo run --example rq_descent
//! ```

use lvse::domain::{make_grid, ModelParams, WaveFunction};
use lvse::eigensolve::Lcg;
use lvse::operators::hamiltonian;
use lvse::{eigen_lowest, rayleigh_quotient, rq_descent, Scheme, SolveOptions, DEFAULT_SEED};

fn main() -> lvse::Result<()> {
    let scenarios = [
        ("well, L = 10", ModelParams::box_well(1.0, 0.1, 10.0)?, make_grid(0.0, 10.0, 101)?),
        (
            "oscillator",
            ModelParams::harmonic(1.0, 0.1, 1.0)?,
            make_grid(-12.0, 12.0, 241)?,
        ),
    ];

    for (label, params, grid) in scenarios {
        let op = hamiltonian(&grid, &params, Scheme::GaugeExact)?;
        let reference = eigen_lowest(&op, &SolveOptions::new(1))?;

        let mut rng = Lcg::new(DEFAULT_SEED);
        let seed = WaveFunction::from_vector(grid.clone(), rng.complex_vector(grid.len()))?;
        let opts = SolveOptions::new(1)
            .with_tol(1e-11)
            .with_max_iter(400_000);
        let (energy, state) = rq_descent(&op, &seed, &opts)?;

        println!("{label} ({} points):", grid.len());
        println!("  bisection ground energy  {:.12}", reference.energy(0).0);
        println!("  descent ground energy    {:.12}", energy.0);
        println!(
            "  |difference|             {:.3e}",
            (energy.0 - reference.energy(0).0).abs()
        );
        // the quotient of the returned state reproduces its energy
        let rq = rayleigh_quotient(&op, &state)?;
        println!("  quotient of the state    {:.12}", rq);
        println!();
    }
    Ok(())
}
