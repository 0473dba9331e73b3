//! Radial multiresolution analysis on the half-line `[0, ∞)`.
//!
//! Radial functions on three-dimensional space are determined by their
//! profile along a single ray, but the usual translation structure of the
//! line is lost: shifting a radial profile does not produce a radial
//! profile. This crate works instead with the *generalized* translation
//! that radial averaging induces on `[0, ∞)` — the Bessel-Kingman
//! hypergroup structure of order `α` — and builds the whole wavelet
//! toolchain on top of it:
//!
//! * [`special`] — normalized spherical Bessel functions `j_α`, their
//!   positive zeros, Fourier-Bessel and sine orthonormal bases, and
//!   Chebyshev polynomials of the second kind.
//! * [`hankel`] — the (modified) Hankel transform, the Fourier transform
//!   of the hypergroup, including a fast exact path at `α = 1/2`.
//! * [`hypergroup`] — generalized translation, point convolution, and the
//!   unitary dilation that together replace "shift and scale".
//! * [`mra`] — radial scaling functions: periodization, Riesz bounds,
//!   orthogonalization, the bridge from classical even scaling functions,
//!   and extraction of the two-scale cosine filter.
//! * [`wavelet`] — the associated radial wavelet and its discrete family.
//! * [`fwt`] — the fast radial filter bank: sparse decomposition and
//!   reconstruction tables, pyramid transforms, and their classical tails.
//! * [`cwt`] — the continuous wavelet transform over scale and radius,
//!   admissibility, and discrete Bessel frames.
//!
//! The crate is `no_std` (with `alloc`); all floating-point work is done
//! in `f64` through [`libm`], and complex values use [`num_complex`].
//!
//! # Conventions
//!
//! The hypergroup of order `α ≥ -1/2` carries the Haar measure
//! `dω_α(r) = (2^α Γ(α+1))⁻¹ r^{2α+1} dr`; the physically three-dimensional
//! case is `α = 1/2`, where `dω = √(2/π) r² dr` and
//! `j_{1/2}(z) = sin(z)/z`. Inner products are linear in the first
//! argument and conjugate-linear in the second. Sampled profiles live on
//! uniform midpoint grids (see [`grid::RadialGrid`]), which keeps simple
//! quadrature second-order accurate and avoids placing nodes on the
//! jump points of band-limited spectra.
//!
//! # Example
//!
//! The Gaussian `e^{-r²/2}` is a fixed point of the Hankel transform at
//! every order:
//!
//! ```
//! use radial_mra::grid::RadialGrid;
//! use radial_mra::profile::{ClosedForm, RadialProfile};
//! use radial_mra::hankel;
//!
//! let grid = RadialGrid::new(20.0, 512).unwrap();
//! let f = RadialProfile::tabulate(&ClosedForm::Gaussian, &grid);
//! let f_hat = hankel::hankel_half(&f, &grid).unwrap();
//! for (i, r) in grid.nodes().enumerate() {
//!     let expected = (-0.5 * r * r).exp();
//!     assert!((f_hat.values()[i].re - expected).abs() < 1e-9);
//! }
//! ```

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]
#![warn(clippy::pedantic)]
#![allow(
    clippy::many_single_char_names,
    clippy::similar_names,
    clippy::cast_precision_loss,
    clippy::cast_possible_truncation,
    clippy::cast_sign_loss,
    clippy::doc_markdown,
    clippy::must_use_candidate,
    clippy::return_self_not_must_use,
    clippy::missing_errors_doc,
    clippy::missing_panics_doc
)]

extern crate alloc;

pub mod cwt;
pub mod error;
pub mod filter;
pub mod fwt;
pub mod grid;
pub mod hankel;
pub mod hypergroup;
pub mod mra;
pub mod profile;
pub mod quad;
pub mod special;
pub mod wavelet;

pub use error::{Error, Result};
pub use grid::RadialGrid;
pub use profile::{ClosedForm, RadialProfile, SpectralProfile};

/// Complex double-precision scalar used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;

/// Order of the Bessel-Kingman hypergroup together with derived constants.
///
/// The order `α` enters every formula of the crate: the Haar density
/// `(2^α Γ(α+1))⁻¹ r^{2α+1}`, the translation kernel weight `sin^{2α} φ`,
/// and the normalization of the Bessel kernel `j_α`. Constructing an
/// `Order` validates `α > -1/2` once and precomputes the constants so the
/// hot loops never call the gamma function.
///
/// `α = -1/2` itself (the degenerate cosine case, where the Haar measure
/// loses its radial weight) is rejected: the translation kernel constant
/// `C_α` has a pole there and none of the quadrature in this crate is
/// meaningful in that limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    alpha: f64,
    /// `(2^α Γ(α+1))⁻¹`, the constant in the Haar density.
    haar_constant: f64,
    /// `Γ(α+1) / (Γ(α+1/2) Γ(1/2))`, the constant in the translation kernel.
    kernel_constant: f64,
}

impl Order {
    /// Validates `α > -1/2` and precomputes the measure constants.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidOrder`] when `α ≤ -1/2` or `α` is not finite.
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -0.5 {
            return Err(Error::InvalidOrder { alpha });
        }
        let haar_constant = 1.0 / (libm::exp2(alpha) * libm::tgamma(alpha + 1.0));
        let kernel_constant = libm::tgamma(alpha + 1.0)
            / (libm::tgamma(alpha + 0.5) * libm::tgamma(0.5));
        Ok(Self {
            alpha,
            haar_constant,
            kernel_constant,
        })
    }

    /// The hypergroup of order `α = 1/2`, i.e. radial analysis in `ℝ³`.
    pub fn half() -> Self {
        Self::new(0.5).expect("1/2 is a valid order")
    }

    /// The order `α`.
    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Density of the Haar measure at radius `r`:
    /// `(2^α Γ(α+1))⁻¹ r^{2α+1}`.
    #[inline]
    pub fn haar_density(&self, r: f64) -> f64 {
        self.haar_constant * libm::pow(r, 2.0 * self.alpha + 1.0)
    }

    /// The constant `C_α = Γ(α+1)/(Γ(α+1/2)Γ(1/2))` normalizing the
    /// translation kernel `sin^{2α} φ` to a probability weight on `[0, π]`.
    #[inline]
    pub fn kernel_constant(&self) -> f64 {
        self.kernel_constant
    }

    /// True when this is the `α = 1/2` order, which has exact elementary
    /// fast paths through the whole crate.
    #[inline]
    pub fn is_half(&self) -> bool {
        self.alpha == 0.5
    }
}
