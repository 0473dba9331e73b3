//! Gauss-Legendre quadrature.
//!
//! All spectral-side integrals in this crate (Gram matrices, filter
//! projections, frame coefficients, admissibility constants) reduce to
//! integrals of smooth functions over finite intervals, possibly split
//! at known seam points of piecewise definitions. Composite
//! Gauss-Legendre panels are the right tool: for analytic integrands the
//! error decays geometrically in the node count, and splitting at seams
//! restores that rate for piecewise-analytic ones.
//!
//! Nodes and weights are generated at run time by Newton iteration on
//! the Legendre polynomial (three-term recurrence, cosine initial
//! guesses). For the modest orders used here (≤ 64 nodes) this costs
//! microseconds and converges to machine precision, so no tables are
//! baked in.

use alloc::vec::Vec;

use crate::Complex64;

/// A Gauss-Legendre rule of fixed order on the reference interval `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule (exact for polynomials of degree `2n-1`).
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one node");
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        // Zeros come in ± pairs; compute the non-negative half and mirror.
        let half = n.div_ceil(2);
        for i in 0..half {
            // Cosine guess for the (i+1)-th zero, counted from +1 downward.
            let mut x = libm::cos(
                core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5),
            );
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if libm::fabs(dx) < 1e-15 {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // `i` counts from the +1 end; store ascending.
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
            nodes[i] = -x;
            weights[i] = w;
        }
        if n % 2 == 1 {
            // The middle node is exactly 0 for odd orders.
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Reference nodes on `[-1, 1]`, ascending (for loops that must
    /// share one node set across many integrands).
    pub(crate) fn raw_nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Reference weights matching [`GaussLegendre::raw_nodes`].
    pub(crate) fn raw_weights(&self) -> &[f64] {
        &self.weights
    }

    /// True when the rule has no nodes (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates `f` over `[a, b]` with this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let rad = 0.5 * (b - a);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + rad * x);
        }
        acc * rad
    }

    /// Integrates a complex-valued `f` over `[a, b]` with this rule.
    pub fn integrate_complex<F: FnMut(f64) -> Complex64>(
        &self,
        a: f64,
        b: f64,
        mut f: F,
    ) -> Complex64 {
        let mid = 0.5 * (a + b);
        let rad = 0.5 * (b - a);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + rad * x) * w;
        }
        acc * rad
    }

    /// Integrates `f` over `[a, b]` split into `panels` equal panels.
    ///
    /// Equal panels with a fixed-order rule give a simple, predictable
    /// accuracy dial for oscillatory integrands: choose the panel count
    /// so each panel sees at most a couple of oscillation periods.
    pub fn integrate_panels<F: FnMut(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        panels: usize,
        mut f: F,
    ) -> f64 {
        let panels = panels.max(1);
        let h = (b - a) / panels as f64;
        let mut acc = 0.0;
        for p in 0..panels {
            let lo = a + p as f64 * h;
            acc += self.integrate(lo, lo + h, &mut f);
        }
        acc
    }

    /// Complex-valued counterpart of [`Self::integrate_panels`].
    pub fn integrate_panels_complex<F: FnMut(f64) -> Complex64>(
        &self,
        a: f64,
        b: f64,
        panels: usize,
        mut f: F,
    ) -> Complex64 {
        let panels = panels.max(1);
        let h = (b - a) / panels as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for p in 0..panels {
            let lo = a + p as f64 * h;
            acc += self.integrate_complex(lo, lo + h, &mut f);
        }
        acc
    }
}

/// Legendre polynomial `P_n(x)` and its derivative via the standard
/// three-term recurrence (upward, stable on `[-1, 1]`).
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let k = k as f64;
        let p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
        p_prev = p;
        p = p_next;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x² - 1); the nodes are interior so
    // the denominator never vanishes where we evaluate this.
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}

/// Panel count that keeps a `nodes`-point rule accurate for an integrand
/// oscillating like `sin(freq · λ)` over an interval of length `len`:
/// roughly three panels per period, at least `min_panels`.
pub fn panels_for_oscillation(freq: f64, len: f64, min_panels: usize) -> usize {
    let periods = libm::fabs(freq) * len / (2.0 * core::f64::consts::PI);
    let suggested = libm::ceil(3.0 * periods) as usize;
    suggested.max(min_panels)
}
