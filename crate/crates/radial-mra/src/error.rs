//! Error type shared by every fallible operation in the crate.
//!
//! All errors are value-carrying and `Display`-able so a caller (for
//! instance a command-line frontend) can render a faithful diagnostic
//! without string-matching. The enum implements [`core::error::Error`],
//! which `std` re-exports, so it composes with `anyhow`-style stacks on
//! hosted targets while remaining `no_std`-clean here.

use core::fmt;

/// Convenience alias used by every fallible function in this crate.
pub type Result<T> = core::result::Result<T, Error>;

/// The ways a radial-analysis computation can fail.
///
/// Domain violations (bad order, bad grid, arguments outside a kernel's
/// domain) are reported eagerly at construction or call time; analytic
/// failures (a non-admissible wavelet, a scaling function with a
/// vanishing periodization) are reported by the operation that detects
/// them, carrying the offending value.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The hypergroup order `α` must satisfy `α > -1/2`.
    InvalidOrder {
        /// The rejected order.
        alpha: f64,
    },
    /// A grid parameter was non-positive, non-finite, or empty.
    InvalidGrid {
        /// Human-readable description of the offending parameter.
        what: &'static str,
    },
    /// An argument fell outside the mathematical domain of a function.
    DomainViolation {
        /// Name of the function whose domain was violated.
        what: &'static str,
        /// The offending argument value.
        value: f64,
    },
    /// Two sampled profiles were combined but live on different grids.
    GridMismatch,
    /// The operation needs sampled data (or an explicit grid to tabulate
    /// on), but the profile is a closed form with no grid attached.
    MissingGrid {
        /// The operation that needed a grid.
        what: &'static str,
    },
    /// The operation needs a closed-form profile on the classical line
    /// (an even scaling function of a classical multiresolution), but
    /// none is attached to this radial object.
    MissingClassicalForm,
    /// A scaling function failed a structural precondition of the
    /// operation (e.g. wavelet construction from a non-orthonormal
    /// scaling function).
    NotOrthonormal,
    /// The periodization of the scaling function degenerates: its lower
    /// Riesz bound is below the reported threshold, so translates do not
    /// form a Riesz basis and orthogonalization would divide by (nearly)
    /// zero.
    DegeneratePeriodization {
        /// The offending lower bound of the periodization.
        lower_bound: f64,
    },
    /// The candidate wavelet fails the admissibility test: the integral
    /// `∫ |ĝ(λ)|² dλ/λ` diverges at the origin (the spectrum does not
    /// vanish fast enough at `λ = 0`).
    NotAdmissible,
    /// A spectral profile extends beyond the band an operation requires
    /// (e.g. a frame window supported past the first Dirichlet cell).
    BandExceeded {
        /// The operation that imposed the band limit.
        what: &'static str,
        /// The band edge that was exceeded.
        limit: f64,
    },
    /// An iterative routine (e.g. a Bessel zero refinement) failed to
    /// converge within its iteration budget.
    NoConvergence {
        /// Name of the routine that failed.
        what: &'static str,
    },
    /// A filter, pyramid, or coefficient vector had an inconsistent
    /// shape (wrong length, empty level, depth exceeding what the data
    /// supports).
    ShapeMismatch {
        /// Human-readable description of the inconsistency.
        what: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidOrder { alpha } => {
                write!(f, "invalid hypergroup order alpha = {alpha}; need alpha > -1/2")
            }
            Self::InvalidGrid { what } => write!(f, "invalid grid: {what}"),
            Self::DomainViolation { what, value } => {
                write!(f, "argument {value} outside the domain of {what}")
            }
            Self::GridMismatch => write!(f, "sampled profiles live on different grids"),
            Self::MissingGrid { what } => {
                write!(f, "{what} needs sampled data or an explicit grid")
            }
            Self::MissingClassicalForm => {
                write!(f, "no classical even profile attached to this radial object")
            }
            Self::NotOrthonormal => {
                write!(f, "operation requires an orthonormal scaling function")
            }
            Self::DegeneratePeriodization { lower_bound } => write!(
                f,
                "periodization degenerates (lower Riesz bound {lower_bound:.3e}); \
                 translates are not a Riesz basis"
            ),
            Self::NotAdmissible => {
                write!(f, "wavelet is not admissible: ∫|ĝ|² dλ/λ diverges at λ = 0")
            }
            Self::BandExceeded { what, limit } => {
                write!(f, "spectrum extends beyond the band [0, {limit}] required by {what}")
            }
            Self::NoConvergence { what } => write!(f, "{what} failed to converge"),
            Self::ShapeMismatch { what } => write!(f, "inconsistent shape: {what}"),
        }
    }
}

impl core::error::Error for Error {}
