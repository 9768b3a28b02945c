use crate::domain::Grid;
use crate::error::{Error, Result};

/// Potential entering the Hamiltonian.
///
/// The infinite well is represented by restricting the domain to [0, L]
/// with Dirichlet conditions, so `Box` evaluates to zero on its grid; the
/// walls live in the boundary treatment, not in the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSpec {
    Free,
    Box { width: f64 },
    Harmonic { mass: f64, omega: f64 },
    Tabulated { values: Vec<f64> },
}

impl PotentialSpec {
    /// Sample V(x_j) on a grid.
    pub fn evaluate(&self, grid: &Grid) -> Result<Vec<f64>> {
        match self {
            PotentialSpec::Free => Ok(vec![0.0; grid.len()]),
            PotentialSpec::Box { width } => {
                if !grid.spans(0.0, *width) {
                    return Err(Error::Domain(format!(
                        "box potential needs a grid spanning [0, {width}], got [{}, {}]",
                        grid.x_min(),
                        grid.x_max()
                    )));
                }
                Ok(vec![0.0; grid.len()])
            }
            PotentialSpec::Harmonic { mass, omega } => Ok((0..grid.len())
                .map(|j| {
                    let x = grid.point(j);
                    0.5 * mass * omega * omega * x * x
                })
                .collect()),
            PotentialSpec::Tabulated { values } => {
                if values.len() != grid.len() {
                    return Err(Error::Shape(format!(
                        "tabulated potential has {} values for a grid of {} points",
                        values.len(),
                        grid.len()
                    )));
                }
                Ok(values.clone())
            }
        }
    }
}

/// Physical parameters: mass m, the background scalar alpha (inverse-length
/// units at hbar = 1) and the potential.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    m: f64,
    alpha: f64,
    potential: PotentialSpec,
}

impl ModelParams {
    fn validate(m: f64, alpha: f64) -> Result<()> {
        if m <= 0.0 || !m.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {m}")));
        }
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
        }
        Ok(())
    }

    pub fn free(m: f64, alpha: f64) -> Result<Self> {
        Self::validate(m, alpha)?;
        Ok(ModelParams {
            m,
            alpha,
            potential: PotentialSpec::Free,
        })
    }

    pub fn box_well(m: f64, alpha: f64, width: f64) -> Result<Self> {
        Self::validate(m, alpha)?;
        if width <= 0.0 || !width.is_finite() {
            return Err(Error::Domain(format!(
                "well width must be positive, got {width}"
            )));
        }
        Ok(ModelParams {
            m,
            alpha,
            potential: PotentialSpec::Box { width },
        })
    }

    pub fn harmonic(m: f64, alpha: f64, omega: f64) -> Result<Self> {
        Self::validate(m, alpha)?;
        if omega <= 0.0 || !omega.is_finite() {
            return Err(Error::Domain(format!(
                "omega must be positive, got {omega}"
            )));
        }
        Ok(ModelParams {
            m,
            alpha,
            potential: PotentialSpec::Harmonic { mass: m, omega },
        })
    }

    pub fn tabulated(m: f64, alpha: f64, values: Vec<f64>) -> Result<Self> {
        Self::validate(m, alpha)?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("tabulated potential has non-finite values".into()));
        }
        Ok(ModelParams {
            m,
            alpha,
            potential: PotentialSpec::Tabulated { values },
        })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn potential(&self) -> &PotentialSpec {
        &self.potential
    }

    pub fn omega(&self) -> Option<f64> {
        match self.potential {
            PotentialSpec::Harmonic { omega, .. } => Some(omega),
            _ => None,
        }
    }

    pub fn well_width(&self) -> Option<f64> {
        match self.potential {
            PotentialSpec::Box { width } => Some(width),
            _ => None,
        }
    }

    /// Same parameters with the sign of alpha flipped (parity partner).
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::validate(self.m, alpha)?;
        Ok(ModelParams {
            m: self.m,
            alpha,
            potential: self.potential.clone(),
        })
    }
}

/// Energy eigenvalue in hbar = 1 units.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Energy(pub f64);

impl Energy {
    pub fn value(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_mass_and_omega() {
        assert!(ModelParams::free(0.0, 0.1).is_err());
        assert!(ModelParams::free(-1.0, 0.1).is_err());
        assert!(ModelParams::harmonic(1.0, 0.1, 0.0).is_err());
        assert!(ModelParams::box_well(1.0, 0.1, -2.0).is_err());
        assert!(ModelParams::free(1.0, f64::NAN).is_err());
        assert!(ModelParams::free(1.0, 0.0).is_ok());
    }

    #[test]
    fn harmonic_potential_values() {
        let g = Grid::new(-2.0, 2.0, 5).unwrap();
        let p = ModelParams::harmonic(2.0, 0.0, 3.0).unwrap();
        let v = p.potential().evaluate(&g).unwrap();
        // V(x) = 0.5 * 2 * 9 * x^2 = 9 x^2
        assert_eq!(v, vec![36.0, 9.0, 0.0, 9.0, 36.0]);
    }

    #[test]
    fn box_requires_matching_grid() {
        let p = ModelParams::box_well(1.0, 0.1, 10.0).unwrap();
        let good = Grid::new(0.0, 10.0, 11).unwrap();
        let bad = Grid::new(-1.0, 9.0, 11).unwrap();
        assert!(p.potential().evaluate(&good).is_ok());
        assert!(p.potential().evaluate(&bad).is_err());
    }

    #[test]
    fn tabulated_length_mismatch_is_shape_error() {
        let g = Grid::new(0.0, 1.0, 5).unwrap();
        let p = ModelParams::tabulated(1.0, 0.0, vec![0.0; 4]).unwrap();
        assert!(matches!(
            p.potential().evaluate(&g),
            Err(crate::error::Error::Shape(_))
        ));
    }
}
