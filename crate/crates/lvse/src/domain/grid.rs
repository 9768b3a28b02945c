use crate::error::{Error, Result};

/// Uniform 1-D spatial mesh: points x_j = x_min + j*h with
/// h = (x_max - x_min)/(n - 1).
///
/// Grids symmetric about the origin store mirrored points exactly
/// (`point(n-1-j) == -point(j)` bitwise), so parity identities hold without
/// rounding slack.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n: usize,
    h: f64,
    symmetric: bool,
}

impl Grid {
    /// Build a grid with n >= 3 points spanning [x_min, x_max].
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::Domain(format!(
                "grid bounds must be finite, got [{x_min}, {x_max}]"
            )));
        }
        if x_max <= x_min {
            return Err(Error::Domain(format!(
                "grid needs x_max > x_min, got [{x_min}, {x_max}]"
            )));
        }
        if n < 3 {
            return Err(Error::Domain(format!("grid needs n >= 3 points, got {n}")));
        }
        let h = (x_max - x_min) / (n - 1) as f64;
        if h <= 0.0 || !h.is_finite() {
            return Err(Error::Domain(format!("degenerate grid spacing h = {h}")));
        }
        Ok(Grid {
            x_min,
            x_max,
            n,
            h,
            symmetric: x_min == -x_max,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mesh spacing h.
    pub fn spacing(&self) -> f64 {
        self.h
    }

    /// j-th point. Endpoints are returned exactly; on symmetric grids the
    /// upper half mirrors the lower half bitwise.
    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.n);
        if j == 0 {
            return self.x_min;
        }
        if j == self.n - 1 {
            return self.x_max;
        }
        if self.symmetric {
            let mid2 = self.n - 1; // 2*j == mid2 at the centre
            if 2 * j == mid2 {
                return 0.0;
            }
            if 2 * j > mid2 {
                return -(self.x_min + (self.n - 1 - j) as f64 * self.h);
            }
        }
        self.x_min + j as f64 * self.h
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.point(j)).collect()
    }

    /// Trapezoid quadrature weight of point j (h/2 at the ends, h inside).
    pub fn weight(&self, j: usize) -> f64 {
        if j == 0 || j == self.n - 1 {
            0.5 * self.h
        } else {
            self.h
        }
    }

    /// True when x_min = -x_max within 1e-12 relative, i.e. x -> -x maps the
    /// grid onto itself.
    pub fn is_symmetric(&self) -> bool {
        (self.x_min + self.x_max).abs() <= 1e-12 * self.x_max.abs()
    }

    /// True when the grid covers [a, b] within 1e-12 absolute slack.
    pub fn spans(&self, a: f64, b: f64) -> bool {
        let scale = b.abs().max(a.abs()).max(1.0);
        (self.x_min - a).abs() <= 1e-12 * scale && (self.x_max - b).abs() <= 1e-12 * scale
    }

    /// Grid over the interior points x_1 .. x_{n-2} (where Dirichlet
    /// operators act).
    pub fn interior(&self) -> Result<Grid> {
        Grid::new(self.point(1), self.point(self.n - 2), self.n - 2)
    }
}

/// Convenience constructor mirroring `Grid::new`.
pub fn make_grid(x_min: f64, x_max: f64, n: usize) -> Result<Grid> {
    Grid::new(x_min, x_max, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_spacing() {
        let g = Grid::new(0.0, 10.0, 11).unwrap();
        assert_eq!(g.spacing(), 1.0);
        for j in 0..11 {
            assert_eq!(g.point(j), j as f64);
        }
    }

    #[test]
    fn symmetric_three_points() {
        let g = Grid::new(-1.0, 1.0, 3).unwrap();
        assert_eq!(g.points(), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn fine_spacing() {
        let g = Grid::new(0.0, 10.0, 2001).unwrap();
        assert_eq!(g.spacing(), 0.005);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Grid::new(0.0, 10.0, 2).is_err());
        assert!(Grid::new(10.0, 0.0, 5).is_err());
        assert!(Grid::new(0.0, f64::INFINITY, 5).is_err());
        assert!(Grid::new(f64::NAN, 1.0, 5).is_err());
    }

    #[test]
    fn symmetric_points_mirror_exactly() {
        let g = Grid::new(-7.3, 7.3, 402).unwrap();
        for j in 0..402 {
            assert_eq!(g.point(402 - 1 - j), -g.point(j), "j = {j}");
        }
        // odd point count: the midpoint is exactly zero
        let g = Grid::new(-7.3, 7.3, 401).unwrap();
        assert_eq!(g.point(200), 0.0);
    }

    #[test]
    fn points_strictly_increasing() {
        for &(a, b, n) in &[(-7.3, 7.3, 401), (0.0, 10.0, 1000), (-1.0, 2.0, 17)] {
            let g = Grid::new(a, b, n).unwrap();
            for j in 1..n {
                assert!(g.point(j) > g.point(j - 1));
            }
        }
    }

    #[test]
    fn endpoints_exact() {
        let g = Grid::new(0.0, 10.0, 7).unwrap();
        assert_eq!(g.point(0), 0.0);
        assert_eq!(g.point(6), 10.0);
    }

    #[test]
    fn weights_sum_to_length() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        let total: f64 = (0..101).map(|j| g.weight(j)).sum();
        assert!((total - 1.0).abs() < 1e-14);
    }
}
