//! Fast filter-bank transforms on scaling coefficients.
//!
//! One analysis step maps the coefficients `c^{(j)}` of a function in
//! the scale space `V_j` to the coarser pair `(c^{(j-1)}, d^{(j-1)})`
//! through two exact matrices built from the two-scale cosine filter:
//!
//! ```text
//! c_ℓ^{(j-1)} = Σ_k c_k^{(j)} q_ℓ^{(k)},    d_ℓ^{(j-1)} = Σ_k c_k^{(j)} r_ℓ^{(k)},
//! ```
//!
//! where `q_ℓ^{(k)} = ⟨φ_{1,k}, φ_{0,ℓ}⟩` and `r_ℓ^{(k)} = ⟨φ_{1,k}, ψ_{0,ℓ}⟩`
//! have closed piecewise expressions in the filter coefficients (the
//! tables in [`qr_coefficients`]).  Away from the origin (`2ℓ > N`) the
//! rows collapse to the classical convolve-and-downsample taps
//! `h_k = g_{|k|}` (`h_0 = 2g_0`) — see [`classical_tail_check`] — so
//! the origin rows are exactly the boundary algorithm, not an
//! approximation.
//!
//! Synthesis is the adjoint,
//! `c_k^{(j)} = Σ_ℓ c_ℓ^{(j-1)} conj(q_ℓ^{(k)}) + Σ_ℓ d_ℓ^{(j-1)} conj(r_ℓ^{(k)})`,
//! and `reconstruct ∘ decompose` is the identity up to the filter's
//! quadrature-mirror residual.  Sums beyond the stored coefficient
//! length are dropped (zero extension); each analysis step on `K`
//! coefficients emits `⌈(K+N)/2⌉` outputs, which covers the full
//! support band of every row.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::filter::CosineFilter;
use crate::hankel;
use crate::mra::{fourier_bessel_half, spectral_segments, ScalingFunction, QUADRATURE_NODES};
use crate::profile::{RadialProfile, SpectralProfile};
use crate::quad::{panels_for_oscillation, GaussLegendre};
use crate::Complex64;

fn coeff(filter: &CosineFilter, n: i64) -> Complex64 {
    debug_assert!(n >= 0, "table index arithmetic produced a negative coefficient index");
    filter.coefficient(n as usize)
}

fn parity_sign(p: i64) -> f64 {
    if p % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `q_ℓ^{(k)} = ⟨φ_{1,k}, φ_{0,ℓ}⟩` by the exact piecewise table.
fn q_entry(filter: &CosineFilter, ell: i64, k: i64) -> Complex64 {
    let two_ell = 2 * ell;
    if two_ell < k {
        (coeff(filter, k - two_ell) - coeff(filter, two_ell + k)).conj()
    } else if two_ell == k {
        (coeff(filter, 0) * 2.0 - coeff(filter, 2 * two_ell)).conj()
    } else {
        (coeff(filter, two_ell - k) - coeff(filter, two_ell + k)).conj()
    }
}

/// `r_ℓ^{(k)} = ⟨φ_{1,k}, ψ_{0,ℓ}⟩` by the exact piecewise table.
fn r_entry(filter: &CosineFilter, ell: i64, k: i64) -> Complex64 {
    let m = 2 * ell - 1;
    if m < k {
        (coeff(filter, k - m) - coeff(filter, k + m)) * parity_sign(k - 1)
    } else if m == k {
        coeff(filter, 0) * 2.0 - coeff(filter, 2 * m)
    } else {
        (coeff(filter, m - k) - coeff(filter, m + k)) * parity_sign(k - 1)
    }
}

/// The decomposition-matrix entries `(q_ℓ^{(k)}, r_ℓ^{(k)})`.
///
/// Out-of-range coefficients read as zero, so the entries vanish outside
/// the bands `|2ℓ - k| ≤ N` resp. `|2ℓ - 1 - k| ≤ N`.
///
/// # Errors
///
/// [`Error::DomainViolation`] unless both indices are at least 1.
pub fn qr_coefficients(
    filter: &CosineFilter,
    ell: u32,
    k: u32,
) -> Result<(Complex64, Complex64)> {
    if ell == 0 || k == 0 {
        return Err(Error::DomainViolation {
            what: "filter-bank row and column indices start at 1",
            value: 0.0,
        });
    }
    Ok((q_entry(filter, i64::from(ell), i64::from(k)), r_entry(filter, i64::from(ell), i64::from(k))))
}

/// Whether the far-from-origin rows equal the classical taps exactly:
/// `q_ℓ^{(2ℓ+k)} = conj(h_k)` and `r_ℓ^{(2ℓ-1+k)} = (-1)^k h_k` with
/// `h_0 = 2g_0`, `h_k = g_{|k|}`.
///
/// # Errors
///
/// [`Error::DomainViolation`] unless `2ℓ - 1 > N` (both tail identities
/// need the row clear of the boundary) and both probed column indices
/// are at least 1.
pub fn classical_tail_check(filter: &CosineFilter, ell: u32, k: i64) -> Result<bool> {
    let n = filter.max_index() as i64;
    let el = i64::from(ell);
    if el < 1 || 2 * el - 1 <= n {
        return Err(Error::DomainViolation {
            what: "classical tails need 2ℓ - 1 beyond the filter length N",
            value: ell as f64,
        });
    }
    if 2 * el + k < 1 || 2 * el - 1 + k < 1 {
        return Err(Error::DomainViolation {
            what: "classical tail probe walked off the first column",
            value: k as f64,
        });
    }
    let q = q_entry(filter, el, 2 * el + k);
    let r = r_entry(filter, el, 2 * el - 1 + k);
    let tap = filter.tap(k);
    Ok(q == tap.conj() && r == tap * parity_sign(k))
}

// ---------------------------------------------------------------------------
// The coefficient pyramid
// ---------------------------------------------------------------------------

/// One analysis level: the approximation and detail arrays produced by
/// the same step (index `k ≥ 1` stored at offset `k - 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct PyramidLevel {
    c: Vec<Complex64>,
    d: Vec<Complex64>,
}

impl PyramidLevel {
    /// Builds a level from equal-length approximation and detail arrays.
    pub fn new(c: Vec<Complex64>, d: Vec<Complex64>) -> Result<Self> {
        if c.len() != d.len() {
            return Err(Error::ShapeMismatch {
                what: "pyramid level approximation and detail lengths differ",
            });
        }
        Ok(Self { c, d })
    }

    /// The approximation coefficients `c^{(m)}`.
    pub fn approximation(&self) -> &[Complex64] {
        &self.c
    }

    /// The detail coefficients `d^{(m)}`.
    pub fn detail(&self) -> &[Complex64] {
        &self.d
    }
}

/// The output of a depth-`D` decomposition started at level `j_top`
/// from `K` coefficients: levels `j_top - D, …, j_top - 1` ordered
/// coarsest first, each holding the approximation and detail arrays of
/// its step.  Reconstruction uses the coarsest approximation and every
/// detail array.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientPyramid {
    j_top: i32,
    top_len: usize,
    levels: Vec<PyramidLevel>,
}

impl CoefficientPyramid {
    /// Assembles a pyramid from parts (deserialization entry point).
    ///
    /// # Errors
    ///
    /// [`Error::ShapeMismatch`] when there are no levels or any stored
    /// value is non-finite.
    pub fn from_parts(j_top: i32, top_len: usize, levels: Vec<PyramidLevel>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::ShapeMismatch { what: "pyramid has no levels" });
        }
        for level in &levels {
            let finite = level
                .c
                .iter()
                .chain(level.d.iter())
                .all(|v| v.re.is_finite() && v.im.is_finite());
            if !finite {
                return Err(Error::ShapeMismatch { what: "pyramid holds non-finite values" });
            }
        }
        Ok(Self { j_top, top_len, levels })
    }

    /// The level index the decomposition started from.
    pub fn j_top(&self) -> i32 {
        self.j_top
    }

    /// Number of analysis steps taken.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// The coefficient count at the top level.
    pub fn top_len(&self) -> usize {
        self.top_len
    }

    /// The levels, coarsest first.
    pub fn levels(&self) -> &[PyramidLevel] {
        &self.levels
    }
}

/// Output length of one analysis step on `input_len` coefficients:
/// `⌈(K+N)/2⌉`, which covers the support band of every row.
pub fn analysis_length(input_len: usize, filter: &CosineFilter) -> usize {
    (input_len + filter.max_index()).div_ceil(2)
}

// ---------------------------------------------------------------------------
// Decompose / reconstruct
// ---------------------------------------------------------------------------

fn analysis_step(c: &[Complex64], filter: &CosineFilter) -> PyramidLevel {
    let n = filter.max_index() as i64;
    let len = c.len() as i64;
    let out_len = analysis_length(c.len(), filter);
    let mut c_next = vec![Complex64::new(0.0, 0.0); out_len];
    let mut d_next = vec![Complex64::new(0.0, 0.0); out_len];
    for (row, (cq, dr)) in c_next.iter_mut().zip(d_next.iter_mut()).enumerate() {
        let el = row as i64 + 1;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (2 * el - n).max(1)..=(2 * el + n).min(len) {
            acc += c[(k - 1) as usize] * q_entry(filter, el, k);
        }
        *cq = acc;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (2 * el - 1 - n).max(1)..=(2 * el - 1 + n).min(len) {
            acc += c[(k - 1) as usize] * r_entry(filter, el, k);
        }
        *dr = acc;
    }
    PyramidLevel { c: c_next, d: d_next }
}

fn synthesis_step(
    c: &[Complex64],
    d: &[Complex64],
    filter: &CosineFilter,
    out_len: usize,
) -> Vec<Complex64> {
    let n = filter.max_index() as i64;
    let c_len = c.len() as i64;
    let d_len = d.len() as i64;
    let mut out = Vec::with_capacity(out_len);
    for idx in 0..out_len as i64 {
        let k = idx + 1;
        let mut acc = Complex64::new(0.0, 0.0);
        // q_ℓ^{(k)} ≠ 0 only for k - N ≤ 2ℓ ≤ k + N.
        for el in (k - n + 1).div_euclid(2).max(1)..=((k + n).div_euclid(2)).min(c_len) {
            acc += c[(el - 1) as usize] * q_entry(filter, el, k).conj();
        }
        // r_ℓ^{(k)} ≠ 0 only for k - N ≤ 2ℓ - 1 ≤ k + N.
        for el in (k - n + 2).div_euclid(2).max(1)..=((k + n + 1).div_euclid(2)).min(d_len) {
            acc += d[(el - 1) as usize] * r_entry(filter, el, k).conj();
        }
        out.push(acc);
    }
    out
}

/// Runs `depth` analysis steps on the top-level coefficients.
///
/// # Errors
///
/// [`Error::NotOrthonormal`] when the filter fails its quadrature-mirror
/// flag (the step matrices are then not an isometry), and
/// [`Error::DomainViolation`] for zero depth.
pub fn decompose(
    c_top: &[Complex64],
    filter: &CosineFilter,
    j_top: i32,
    depth: usize,
) -> Result<CoefficientPyramid> {
    if !filter.is_orthonormal() {
        return Err(Error::NotOrthonormal);
    }
    if depth == 0 {
        return Err(Error::DomainViolation {
            what: "decomposition depth must be at least 1",
            value: 0.0,
        });
    }
    let mut levels = Vec::with_capacity(depth);
    let mut current = c_top.to_vec();
    for _ in 0..depth {
        let level = analysis_step(&current, filter);
        current = level.c.clone();
        levels.push(level);
    }
    levels.reverse();
    Ok(CoefficientPyramid { j_top, top_len: c_top.len(), levels })
}

/// Adjoint synthesis: rebuilds the top-level coefficients from the
/// coarsest approximation and the detail arrays.
///
/// # Errors
///
/// [`Error::ShapeMismatch`] when the level lengths are inconsistent with
/// the filter and the recorded top length.
pub fn reconstruct(pyramid: &CoefficientPyramid, filter: &CosineFilter) -> Result<Vec<Complex64>> {
    let depth = pyramid.depth();
    // lengths[i] = coefficient count at level j_top - i.
    let mut lengths = vec![pyramid.top_len()];
    for i in 0..depth {
        lengths.push(analysis_length(lengths[i], filter));
    }
    for (i, level) in pyramid.levels().iter().enumerate() {
        let want = lengths[depth - i];
        if level.c.len() != want || level.d.len() != want {
            return Err(Error::ShapeMismatch {
                what: "pyramid level length disagrees with the filter and top length",
            });
        }
    }
    let mut current = pyramid.levels()[0].c.clone();
    for (i, level) in pyramid.levels().iter().enumerate() {
        current = synthesis_step(&current, &level.d, filter, lengths[depth - 1 - i]);
    }
    Ok(current)
}

// ---------------------------------------------------------------------------
// Projection into a scale space
// ---------------------------------------------------------------------------

/// `c_k^{(j)} = ⟨f, φ_{j,k}⟩` for `k = 1..K`, computed from the sampled
/// radial profile by a discrete Hankel transform onto its conjugate
/// grid followed by frequency-domain quadrature.
///
/// # Errors
///
/// [`Error::NotOrthonormal`] for a non-orthonormal scaling function,
/// [`Error::MissingGrid`] for a closed-form input (tabulate first so
/// the truncation radius is an explicit caller decision).
pub fn project(
    f: &RadialProfile,
    phi: &ScalingFunction,
    j: i32,
    coeff_count: usize,
) -> Result<Vec<Complex64>> {
    let grid = f
        .grid()
        .ok_or(Error::MissingGrid { what: "projection of a closed-form profile (tabulate first)" })?;
    let f_hat = hankel::hankel_half(f, &grid.conjugate())?;
    project_spectrum(&f_hat, phi, j, coeff_count)
}

/// Frequency-domain core of [`project`]: quadrature of a spectral
/// profile against `φ̂_{j,k}(λ) = 2^{-3j/2} ρ_k(2^{-j}λ) φ̂(2^{-j}λ)`.
pub fn project_spectrum(
    f_hat: &SpectralProfile,
    phi: &ScalingFunction,
    j: i32,
    coeff_count: usize,
) -> Result<Vec<Complex64>> {
    if !phi.is_orthonormal() {
        return Err(Error::NotOrthonormal);
    }
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let scale = libm::exp2(f64::from(j));
    let shrink = libm::exp2(-f64::from(j));
    let amp = libm::exp2(-1.5 * f64::from(j));
    // Integrate over the scaled scaling-function band, clipped to the
    // band of f̂ (beyond either the integrand vanishes or is unread).
    let mut bounds: Vec<f64> = spectral_segments(phi).iter().map(|s| scale * s).collect();
    if let Some(band) = f_hat.band_limit() {
        bounds.retain(|&b| b < band);
        bounds.push(band.min(scale * spectral_segments(phi).last().copied().unwrap_or(0.0)));
        bounds.sort_by(f64::total_cmp);
        bounds.dedup();
    }
    let haar = libm::sqrt(2.0 / PI);
    let mut out = Vec::with_capacity(coeff_count);
    for k in 1..=coeff_count as u32 {
        let freq = shrink * PI * f64::from(k);
        let mut acc = Complex64::new(0.0, 0.0);
        for w in bounds.windows(2) {
            let panels = panels_for_oscillation(freq, w[1] - w[0], 8);
            acc += rule.integrate_panels_complex(w[0], w[1], panels, |lam| {
                f_hat.eval(lam)
                    * (phi.spectrum_at(shrink * lam) * (amp * fourier_bessel_half(k, shrink * lam)))
                        .conj()
                    * (haar * lam * lam)
            });
        }
        out.push(acc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Trigonometric building block
// ---------------------------------------------------------------------------

/// Closed value of `∫₀¹ sin(kπλ) sin(tπλ) cos(nπλ) dλ`:
/// `(1/4)(δ_{n,|t-k|} - δ_{n,t+k})` for `n ≥ 1` and `(1/2)δ_{tk}` for
/// `n = 0`.
///
/// # Errors
///
/// [`Error::DomainViolation`] unless `k, t ≥ 1`.
pub fn sine_sine_cosine_integral(k: u32, t: u32, n: u32) -> Result<f64> {
    if k == 0 || t == 0 {
        return Err(Error::DomainViolation {
            what: "sine frequencies start at 1",
            value: 0.0,
        });
    }
    if n == 0 {
        return Ok(if k == t { 0.5 } else { 0.0 });
    }
    let mut value = 0.0;
    if n == k.abs_diff(t) {
        value += 0.25;
    }
    if n == k + t {
        value -= 0.25;
    }
    Ok(value)
}
