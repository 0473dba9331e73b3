//! Uniform midpoint grids on `[0, r_max]`.
//!
//! Every sampled profile in this crate lives on a grid of `n` midpoint
//! nodes `r_i = (i + 1/2) · h` with spacing `h = r_max / n`. Midpoint
//! placement buys three things at once:
//!
//! * the node set never contains `0`, where radial densities vanish and
//!   several closed forms need limit handling;
//! * the composite midpoint rule is second-order for rough data and
//!   *superconvergent* for smooth even integrands against the `α = 1/2`
//!   Haar weight (the leading error term cancels in `r²`-weighted sums
//!   of even functions);
//! * no node ever sits exactly on the jump of a band-limited spectrum
//!   such as `χ_{[0,1)}` when `r_max` is an integer multiple of the band
//!   edge, so almost-everywhere identities can be tested by sampling.
//!
//! A grid together with its *conjugate* grid `λ_j = (j + 1/2) · π/r_max`
//! forms a discrete sine-transform pair (DST-IV) on which the `α = 1/2`
//! Hankel transform is exactly unitary; see [`crate::hankel`].

use crate::error::{Error, Result};

/// A uniform midpoint grid `r_i = (i + 1/2) · spacing`, `i = 0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    n: usize,
    spacing: f64,
}

impl RadialGrid {
    /// Creates the grid of `n_points` midpoints covering `[0, r_max]`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidGrid`] if `r_max` is not positive and
    /// finite or `n_points` is zero.
    pub fn new(r_max: f64, n_points: usize) -> Result<Self> {
        if !r_max.is_finite() || r_max <= 0.0 {
            return Err(Error::InvalidGrid { what: "r_max must be positive and finite" });
        }
        if n_points == 0 {
            return Err(Error::InvalidGrid { what: "n_points must be at least 1" });
        }
        Ok(Self { r_max, n: n_points, spacing: r_max / n_points as f64 })
    }

    /// Upper end of the covered interval.
    #[inline]
    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    /// Number of nodes.
    #[inline]
    pub fn n_points(&self) -> usize {
        self.n
    }

    /// Distance between consecutive nodes (also the width of the cell
    /// each node represents).
    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// The `i`-th node `(i + 1/2) · spacing`.
    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.spacing
    }

    /// Iterator over all nodes in increasing order.
    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.node(i))
    }

    /// The conjugate spectral grid `λ_j = (j + 1/2) · π / r_max` with the
    /// same number of nodes.
    ///
    /// On a conjugate pair of grids the phases `λ_j r_i` equal
    /// `(i + 1/2)(j + 1/2) π / n` — the DST-IV phases — and the discrete
    /// `α = 1/2` Hankel transform becomes an exactly unitary involution.
    pub fn conjugate(&self) -> Self {
        let spacing = core::f64::consts::PI / self.r_max;
        Self { r_max: spacing * self.n as f64, n: self.n, spacing }
    }

    /// True when `other` is (up to rounding) the conjugate of `self`,
    /// i.e. `spacing · other.spacing · n ≈ π` and the node counts match.
    pub fn is_conjugate_pair(&self, other: &Self) -> bool {
        self.n == other.n
            && libm::fabs(self.spacing * other.spacing * self.n as f64
                / core::f64::consts::PI
                - 1.0)
                < 1e-12
    }

    /// True when `other` has identical extent and resolution. Grids are
    /// propagated by cloning, so exact float equality is the right test.
    pub fn same_as(&self, other: &Self) -> bool {
        self.n == other.n && self.r_max == other.r_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn nodes_are_cell_midpoints() {
        let g = RadialGrid::new(2.0, 4).unwrap();
        let nodes: alloc::vec::Vec<f64> = g.nodes().collect();
        assert_eq!(nodes, alloc::vec![0.25, 0.75, 1.25, 1.75]);
        assert_relative_eq!(g.spacing(), 0.5);
    }

    #[test]
    fn conjugate_grid_spacing_product() {
        let g = RadialGrid::new(7.3, 911).unwrap();
        let c = g.conjugate();
        assert!(g.is_conjugate_pair(&c));
        assert!(c.is_conjugate_pair(&g));
        assert_relative_eq!(
            g.spacing() * c.spacing(),
            core::f64::consts::PI / 911.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn conjugate_of_conjugate_returns_same_extent() {
        let g = RadialGrid::new(10.0, 256).unwrap();
        let back = g.conjugate().conjugate();
        assert_relative_eq!(back.r_max(), g.r_max(), max_relative = 1e-14);
        assert_eq!(back.n_points(), g.n_points());
    }

    #[test]
    fn zero_is_never_a_node() {
        let g = RadialGrid::new(1.0, 1000).unwrap();
        assert!(g.nodes().all(|r| r > 0.0));
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(RadialGrid::new(0.0, 10).is_err());
        assert!(RadialGrid::new(-1.0, 10).is_err());
        assert!(RadialGrid::new(f64::NAN, 10).is_err());
        assert!(RadialGrid::new(1.0, 0).is_err());
    }
}
