//! Radial and spectral profiles: closed forms and sampled data.
//!
//! A *profile* is a function on the half-line. It is either one of the
//! closed forms of [`ClosedForm`] (evaluated exactly wherever needed) or
//! a vector of complex samples on a midpoint [`RadialGrid`], read back
//! through linear interpolation. The same machinery serves both sides
//! of the Hankel transform:
//!
//! * [`RadialProfile`] — a function of the radius `r`;
//! * [`SpectralProfile`] — a function of the frequency `λ`, extended
//!   evenly to negative arguments (spectra of radial functions are even,
//!   and periodization formulas evaluate them at shifted, possibly
//!   negative, points).
//!
//! # Out-of-range reads
//!
//! Sampled data determines a function on `[0, r_max]` only. Reads below
//! the first node clamp to the first sample (radial profiles are even
//! with vanishing derivative at the origin, so constant extension is
//! second-order accurate there). Reads beyond the last node decay
//! linearly to zero over one further cell and are zero afterwards; reads
//! beyond `r_max` additionally raise a *truncation flag* so callers can
//! report that an operation ran off the sampled domain. Operations that
//! can truncate return the flag alongside their result rather than
//! silently guessing.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::Complex64;

/// Closed-form profiles with exact evaluators.
///
/// The radial forms (`Gaussian`, `ShannonScaling`, `ShannonWavelet`)
/// are functions of the radius; the `*Spectrum` forms and `Indicator`
/// are functions of the frequency. Nothing enforces that split — a
/// Gaussian is its own Hankel transform and is useful on both axes —
/// but the naming records the intended home.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// `e^{-x²/2}`; a fixed point of the Hankel transform at every order.
    Gaussian,
    /// The radial scaling function with spectrum `χ_{[0,1)}`:
    /// `√(2/π) (sin x - x cos x)/x³`.
    ShannonScaling,
    /// The radial wavelet with spectrum `χ_{[1,2)}`:
    /// `√(2/π) (sin 2x - sin x - 2x cos 2x + x cos x)/x³`.
    ShannonWavelet,
    /// Half-open indicator `χ_{[lo, hi)}`.
    Indicator {
        /// Inclusive lower edge.
        lo: f64,
        /// Exclusive upper edge.
        hi: f64,
    },
    /// The smooth band-limited scaling spectrum that is `1` on
    /// `[0, 2/3]`, `cos(π/2 · ν(3λ/2 - 1))` on `(2/3, 4/3)`, and `0`
    /// beyond, where `ν` is the degree-7 polynomial blend
    /// `ν(x) = x⁴(35 - 84x + 70x² - 20x³)` (C³ seams).
    MeyerScalingSpectrum,
    /// The wavelet spectrum paired with [`ClosedForm::MeyerScalingSpectrum`]
    /// through the two-scale filter: supported on `[2/3, 8/3]`.
    MeyerWaveletSpectrum,
    /// The squared-sinc spectrum `(sin(πλ/2)/(πλ/2))²` of the classical
    /// hat (linear B-spline) scaling function; decays only like `λ⁻²`
    /// and is *not* orthonormal, which makes it the canonical test feed
    /// for orthogonalization.
    HatSplineSpectrum,
}

/// The degree-7 polynomial blend `ν(x) = x⁴(35 - 84x + 70x² - 20x³)`,
/// clamped to `[0, 1]` outside the unit interval; satisfies
/// `ν(x) + ν(1-x) = 1`.
pub(crate) fn smooth_blend(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x)
    }
}

/// The smooth two-scale symbol on `[0, 1]` paired with
/// [`ClosedForm::MeyerScalingSpectrum`]: `1` on `[0, 1/3]`, a cosine
/// blend on `(1/3, 2/3)`, `0` on `[2/3, 1]`.
pub(crate) fn meyer_symbol(lambda: f64) -> f64 {
    if lambda <= 1.0 / 3.0 {
        1.0
    } else if lambda < 2.0 / 3.0 {
        libm::cos(core::f64::consts::FRAC_PI_2 * smooth_blend(3.0 * lambda - 1.0))
    } else {
        0.0
    }
}

/// Fold `x` into `[0, 1]` by evenness and 2-periodicity (the symmetry
/// group of a real cosine-series symbol).
pub(crate) fn fold_even_two_periodic(x: f64) -> f64 {
    let mut t = libm::fabs(x) % 2.0;
    if t > 1.0 {
        t = 2.0 - t;
    }
    t
}

impl ClosedForm {
    /// Evaluates the closed form at `x ≥ 0` (callers fold negative
    /// arguments by evenness before reaching here).
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Self::Gaussian => libm::exp(-0.5 * x * x),
            Self::ShannonScaling => shannon_scaling(x),
            Self::ShannonWavelet => shannon_wavelet(x),
            Self::Indicator { lo, hi } => {
                if x >= *lo && x < *hi {
                    1.0
                } else {
                    0.0
                }
            }
            Self::MeyerScalingSpectrum => meyer_scaling_spectrum(x),
            Self::MeyerWaveletSpectrum => {
                // ψ̂(μ) = G(μ/2 + 1) φ̂(μ/2) with G read through its
                // even 2-periodic extension.
                meyer_symbol(fold_even_two_periodic(0.5 * x + 1.0))
                    * meyer_scaling_spectrum(0.5 * x)
            }
            Self::HatSplineSpectrum => {
                let u = core::f64::consts::FRAC_PI_2 * x;
                let s = if libm::fabs(u) < 1e-6 { 1.0 - u * u / 6.0 } else { libm::sin(u) / u };
                s * s
            }
        }
    }

    /// Upper edge of the support for band-limited forms, `None` when the
    /// form has unbounded support. Quadrature uses this to restrict
    /// spectral integrals to the exact band.
    pub fn band_limit(&self) -> Option<f64> {
        match self {
            Self::Indicator { hi, .. } => Some(*hi),
            Self::MeyerScalingSpectrum => Some(4.0 / 3.0),
            Self::MeyerWaveletSpectrum => Some(8.0 / 3.0),
            Self::Gaussian
            | Self::ShannonScaling
            | Self::ShannonWavelet
            | Self::HatSplineSpectrum => None,
        }
    }

    /// Interior seam points where the form switches analytic pieces;
    /// quadrature panels are aligned to these so each panel integrates
    /// an analytic function.
    pub fn seams(&self) -> Vec<f64> {
        match self {
            Self::Indicator { lo, hi } => alloc::vec![*lo, *hi],
            Self::MeyerScalingSpectrum => alloc::vec![2.0 / 3.0, 4.0 / 3.0],
            Self::MeyerWaveletSpectrum => {
                alloc::vec![2.0 / 3.0, 4.0 / 3.0, 2.0, 8.0 / 3.0]
            }
            Self::Gaussian
            | Self::ShannonScaling
            | Self::ShannonWavelet
            | Self::HatSplineSpectrum => Vec::new(),
        }
    }
}

fn meyer_scaling_spectrum(x: f64) -> f64 {
    if x <= 2.0 / 3.0 {
        1.0
    } else if x < 4.0 / 3.0 {
        libm::cos(core::f64::consts::FRAC_PI_2 * smooth_blend(1.5 * x - 1.0))
    } else {
        0.0
    }
}

/// `√(2/π) (sin x - x cos x)/x³` with a series fallback near the origin
/// (the ratio tends to `1/3`; the direct formula loses all precision
/// below `x ≈ 10⁻⁴`).
fn shannon_scaling(x: f64) -> f64 {
    let c = libm::sqrt(2.0 / core::f64::consts::PI);
    if libm::fabs(x) < 0.1 {
        let x2 = x * x;
        // (sin x - x cos x)/x³ = 1/3 - x²/30 + x⁴/840 - x⁶/45360 + …
        c * (1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 - x2 * x2 * x2 / 45_360.0)
    } else {
        c * (libm::sin(x) - x * libm::cos(x)) / (x * x * x)
    }
}

/// `√(2/π) (sin 2x - sin x - 2x cos 2x + x cos x)/x³` with a series
/// fallback near the origin (limit `7/3 · √(2/π)`).
fn shannon_wavelet(x: f64) -> f64 {
    let c = libm::sqrt(2.0 / core::f64::consts::PI);
    if libm::fabs(x) < 0.05 {
        let x2 = x * x;
        // numerator/x³ = 7/3 - 31x²/30 + 127x⁴/840 - …
        c * (7.0 / 3.0 - 31.0 * x2 / 30.0 + 127.0 * x2 * x2 / 840.0)
    } else {
        c * (libm::sin(2.0 * x) - libm::sin(x) - 2.0 * x * libm::cos(2.0 * x)
            + x * libm::cos(x))
            / (x * x * x)
    }
}

/// Internal storage shared by radial and spectral profiles.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum ProfileData {
    /// Exact closed form.
    Closed(ClosedForm),
    /// Complex samples on the nodes of a midpoint grid.
    Sampled {
        /// The grid carrying the samples.
        grid: RadialGrid,
        /// One value per node.
        values: Vec<Complex64>,
    },
}

impl ProfileData {
    /// Evaluate at `x` (already folded non-negative), reporting whether
    /// the read ran past the sampled domain.
    fn eval_flagged(&self, x: f64) -> (Complex64, bool) {
        match self {
            Self::Closed(form) => (Complex64::new(form.eval(x), 0.0), false),
            Self::Sampled { grid, values } => {
                let h = grid.spacing();
                let t = x / h - 0.5;
                let n = values.len();
                if t <= 0.0 {
                    // Below the first node: clamp (even extension).
                    return (values[0], false);
                }
                let last = n as f64 - 1.0;
                if t >= last {
                    let truncated = x > grid.r_max();
                    // One further cell of linear decay to zero keeps the
                    // interpolant continuous; zero beyond.
                    let over = t - last;
                    if over >= 1.0 {
                        return (Complex64::new(0.0, 0.0), truncated);
                    }
                    return (values[n - 1] * (1.0 - over), truncated);
                }
                let i = t as usize;
                let frac = t - i as f64;
                (values[i] * (1.0 - frac) + values[i + 1] * frac, false)
            }
        }
    }
}

macro_rules! profile_common {
    ($name:ident, $axis:literal) => {
        impl $name {
            /// Wraps a closed form.
            pub fn closed(form: ClosedForm) -> Self {
                Self { data: ProfileData::Closed(form) }
            }

            /// Wraps complex samples on a grid.
            ///
            /// # Errors
            ///
            /// Returns [`Error::ShapeMismatch`] when the value count
            /// differs from the node count.
            pub fn from_samples(grid: RadialGrid, values: Vec<Complex64>) -> Result<Self> {
                if values.len() != grid.n_points() {
                    return Err(Error::ShapeMismatch {
                        what: "sample count differs from grid node count",
                    });
                }
                Ok(Self { data: ProfileData::Sampled { grid, values } })
            }

            /// Wraps real samples on a grid.
            ///
            /// # Errors
            ///
            /// Returns [`Error::ShapeMismatch`] when the value count
            /// differs from the node count.
            pub fn from_real_samples(grid: RadialGrid, values: &[f64]) -> Result<Self> {
                let complex: Vec<Complex64> =
                    values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
                Self::from_samples(grid, complex)
            }

            /// Tabulates a closed form on `grid`, producing a sampled
            /// profile.
            pub fn tabulate(form: &ClosedForm, grid: &RadialGrid) -> Self {
                let values: Vec<Complex64> = grid
                    .nodes()
                    .map(|x| Complex64::new(form.eval(x), 0.0))
                    .collect();
                Self {
                    data: ProfileData::Sampled { grid: grid.clone(), values },
                }
            }

            /// The sampled representation on `grid`: a clone of the
            /// samples when the profile already lives on an identical
            /// grid, a fresh tabulation (through the evaluator) otherwise.
            pub fn resampled(&self, grid: &RadialGrid) -> Self {
                if let ProfileData::Sampled { grid: g, values } = &self.data {
                    if g.same_as(grid) {
                        return Self {
                            data: ProfileData::Sampled {
                                grid: g.clone(),
                                values: values.clone(),
                            },
                        };
                    }
                }
                let values: Vec<Complex64> = grid.nodes().map(|x| self.eval(x)).collect();
                Self {
                    data: ProfileData::Sampled { grid: grid.clone(), values },
                }
            }

            /// The closed form, when this profile is one.
            pub fn closed_form(&self) -> Option<&ClosedForm> {
                match &self.data {
                    ProfileData::Closed(form) => Some(form),
                    ProfileData::Sampled { .. } => None,
                }
            }

            /// The grid, when this profile is sampled.
            pub fn grid(&self) -> Option<&RadialGrid> {
                match &self.data {
                    ProfileData::Sampled { grid, .. } => Some(grid),
                    ProfileData::Closed(_) => None,
                }
            }

            /// The samples, when this profile is sampled.
            ///
            /// # Panics
            ///
            /// Panics when the profile is a closed form; check
            /// [`Self::grid`] first when the representation is unknown.
            pub fn values(&self) -> &[Complex64] {
                match &self.data {
                    ProfileData::Sampled { values, .. } => values,
                    ProfileData::Closed(_) => {
                        panic!("closed-form profile carries no samples")
                    }
                }
            }

            /// Evaluate, discarding the truncation flag.
            pub fn eval(&self, x: f64) -> Complex64 {
                self.eval_flagged(x).0
            }
        }
    };
}

/// A function of the radius `r ∈ [0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub(crate) data: ProfileData,
}

profile_common!(RadialProfile, "radial");

impl RadialProfile {
    /// Evaluate at radius `r ≥ 0` (negative arguments are folded by
    /// evenness — a radial profile is the restriction of an even
    /// function), reporting whether the read ran past the sampled
    /// domain.
    pub fn eval_flagged(&self, r: f64) -> (Complex64, bool) {
        self.data.eval_flagged(libm::fabs(r))
    }
}

/// A function of the frequency `λ`, extended evenly to `λ < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProfile {
    pub(crate) data: ProfileData,
}

profile_common!(SpectralProfile, "spectral");

impl SpectralProfile {
    /// Evaluate at frequency `λ` (any sign; spectra of radial profiles
    /// are even), reporting whether the read ran past the sampled
    /// domain.
    pub fn eval_flagged(&self, lambda: f64) -> (Complex64, bool) {
        self.data.eval_flagged(libm::fabs(lambda))
    }

    /// Upper edge of the support when known: the closed form's band
    /// limit, or `r_max` for sampled data.
    pub fn band_limit(&self) -> Option<f64> {
        match &self.data {
            ProfileData::Closed(form) => form.band_limit(),
            ProfileData::Sampled { grid, .. } => Some(grid.r_max()),
        }
    }

    /// Seam points of the underlying closed form (empty for sampled
    /// data, whose interpolant is integrated cell-exactly anyway).
    pub fn seams(&self) -> Vec<f64> {
        match &self.data {
            ProfileData::Closed(form) => form.seams(),
            ProfileData::Sampled { .. } => Vec::new(),
        }
    }
}
