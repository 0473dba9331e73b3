//! Radial wavelets built from an orthonormal scaling function and its
//! two-scale filter.
//!
//! The mother wavelet is defined on the spectral side by
//!
//! ```text
//! ψ̂(μ) = conj(G(μ/2 + 1)) · φ̂(μ/2),
//! ```
//!
//! where `G` is the (quadrature-mirror) two-scale symbol of `φ` read
//! through its even 2-periodic extension.  The detail spaces are spanned
//! by *half-integer* translates: the level-`j` family is
//!
//! ```text
//! ψ_{j,k} = 8^{j/2} (M_{2k-1}/2) T^((2k-1) π 2^{-j-1}) ψ(2^j ·),   k ≥ 1,
//! ```
//!
//! whose spectra factor through the half-step Fourier–Bessel weight
//! `(2π)^{1/4} sin((2k-1)πλ/2)/λ`.  Together with the scaling translates
//! `{φ_{0,l}}` the level-zero family `{ψ_{0,k}}` is an orthonormal basis
//! of the next approximation space; this module provides the builder,
//! family synthesis on radial grids, Gram/cross diagnostics, and the
//! isometric lift of odd-frequency sine series into the detail space.
//!
//! Closed forms are recognised for the two built-in orthonormal pairs:
//! the sharp half-band filter yields `ψ̂ = χ_[1,2)` with the explicit
//! radial wavelet, and the smooth blended filter yields the blended
//! wavelet spectrum supported on `[2/3, 8/3]`.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::filter::{CosineFilter, SymbolEval};
use crate::grid::RadialGrid;
use crate::mra::{
    fourier_bessel_half, real, sinc, spectral_segments, ScalingFunction, SpectralForm,
    QUADRATURE_NODES, QUARTER_ROOT_TWO_PI, SPECTRAL_DECAY_CUTOFF,
};
use crate::profile::{ClosedForm, RadialProfile};
use crate::quad::{panels_for_oscillation, GaussLegendre};
use crate::Complex64;

/// The half-step Fourier–Bessel weight
/// `(M_{2k-1}/2) j_{1/2}((2k-1)πλ/2) = (2π)^{1/4} sin((2k-1)πλ/2) / λ`,
/// continued through `λ = 0`.
fn half_integer_rho(k: u32, lambda: f64) -> f64 {
    let h = 0.5 * PI * f64::from(2 * k - 1);
    QUARTER_ROOT_TWO_PI * h * sinc(h * lambda)
}

// ---------------------------------------------------------------------------
// The wavelet
// ---------------------------------------------------------------------------

/// A mother wavelet: the scaling function and filter it was built from,
/// plus closed spectral/radial forms when the pair is a recognised
/// built-in.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavelet {
    phi: ScalingFunction,
    filter: CosineFilter,
    spectral_closed: Option<ClosedForm>,
    radial_closed: Option<ClosedForm>,
}

/// Builds the mother wavelet `ψ̂(μ) = conj(G(μ/2+1)) φ̂(μ/2)`.
///
/// Both structural preconditions are enforced: the scaling function must
/// have orthonormal translates and the filter must satisfy the
/// quadrature-mirror identity (within the filter's own measured
/// tolerance); either violation is a [`Error::NotOrthonormal`].
pub fn build_wavelet(phi: &ScalingFunction, filter: &CosineFilter) -> Result<Wavelet> {
    if !phi.is_orthonormal() || !filter.is_orthonormal() {
        return Err(Error::NotOrthonormal);
    }
    let direct = matches!(phi.spectral_form(), SpectralForm::Direct(_));
    let base_closed = phi.base_spectrum().closed_form();
    let (spectral_closed, radial_closed) = match (base_closed, filter.symbol_eval()) {
        (Some(ClosedForm::Indicator { lo, hi }), SymbolEval::SharpHalfBand)
            if direct && *lo == 0.0 && *hi == 1.0 =>
        {
            (
                Some(ClosedForm::Indicator { lo: 1.0, hi: 2.0 }),
                Some(ClosedForm::ShannonWavelet),
            )
        }
        (Some(ClosedForm::MeyerScalingSpectrum), SymbolEval::SmoothBlend) if direct => {
            (Some(ClosedForm::MeyerWaveletSpectrum), None)
        }
        _ => (None, None),
    };
    Ok(Wavelet { phi: phi.clone(), filter: filter.clone(), spectral_closed, radial_closed })
}

impl Wavelet {
    /// `ψ̂(μ)`: the closed form when one is known, otherwise the defining
    /// product `conj(G(μ/2+1)) φ̂(μ/2)` (even in `μ`).
    pub fn spectrum_at(&self, mu: f64) -> Complex64 {
        let m = libm::fabs(mu);
        match &self.spectral_closed {
            Some(form) => real(form.eval(m)),
            None => self.filter.symbol(0.5 * m + 1.0).conj() * self.phi.spectrum_at(0.5 * m),
        }
    }

    /// The scaling function the wavelet was built from.
    pub fn scaling(&self) -> &ScalingFunction {
        &self.phi
    }

    /// The two-scale filter the wavelet was built from.
    pub fn filter(&self) -> &CosineFilter {
        &self.filter
    }

    /// Closed spectral form, when the pair is a recognised built-in.
    pub fn spectral_closed(&self) -> Option<&ClosedForm> {
        self.spectral_closed.as_ref()
    }

    /// Closed radial form, when one is known (the sharp half-band pair).
    pub fn radial_closed(&self) -> Option<&ClosedForm> {
        self.radial_closed.as_ref()
    }

    /// Upper edge of the spectral support when known: `ψ̂(μ)` inherits
    /// twice the band of `φ̂`.
    pub fn band_limit(&self) -> Option<f64> {
        match &self.spectral_closed {
            Some(form) => form.band_limit(),
            None => self.phi.band_limit().map(|b| 2.0 * b),
        }
    }

    /// Synthesises the radial wavelet on `grid` from the spectral side,
    /// `ψ(r) = ∫ ψ̂(μ) j_{1/2}(μr) dω̂(μ)`.
    pub fn tabulate(&self, grid: &RadialGrid) -> Result<RadialProfile> {
        let rule = GaussLegendre::new(QUADRATURE_NODES);
        let bounds = wavelet_segments(self);
        let haar = libm::sqrt(2.0 / PI);
        let mut values = Vec::with_capacity(grid.n_points());
        for i in 0..grid.n_points() {
            let r = grid.node(i);
            let mut acc = Complex64::new(0.0, 0.0);
            for w in bounds.windows(2) {
                let panels = panels_for_oscillation(r, w[1] - w[0], 2);
                acc += rule.integrate_panels_complex(w[0], w[1], panels, |mu| {
                    self.spectrum_at(mu) * (sinc(mu * r) * haar * mu * mu)
                });
            }
            values.push(acc);
        }
        RadialProfile::from_samples(grid.clone(), values)
    }
}

/// Panel boundaries `0 = b_0 < … < b_m` covering the spectral support of
/// `ψ̂` with every closed-form seam on a boundary.
fn wavelet_segments(psi: &Wavelet) -> Vec<f64> {
    let mut bounds = vec![0.0];
    let upper;
    match &psi.spectral_closed {
        Some(form) => {
            upper = form.band_limit().unwrap_or(2.0 * SPECTRAL_DECAY_CUTOFF);
            for s in form.seams() {
                if s > 0.0 && s < upper {
                    bounds.push(s);
                }
            }
        }
        None => {
            // ψ̂(μ) reads φ̂ at μ/2, so every seam of φ̂ doubles; the
            // filter symbol's fold points land on even integers, where a
            // closed sharp/blended symbol may kink.
            let base = spectral_segments(&psi.phi);
            upper = 2.0 * base.last().copied().unwrap_or(SPECTRAL_DECAY_CUTOFF);
            for s in &base[1..base.len().saturating_sub(1)] {
                bounds.push(2.0 * s);
            }
            for s in symbol_seams(&psi.filter, 0.5 * upper + 1.0) {
                let mu = 2.0 * (s - 1.0);
                if mu > 0.0 && mu < upper {
                    bounds.push(mu);
                }
            }
        }
    }
    bounds.push(upper);
    bounds.sort_by(f64::total_cmp);
    bounds.dedup();
    bounds
}

/// Kink/jump points of the filter symbol on `(0, upper)`; truncated
/// cosine series are entire and contribute none.
fn symbol_seams(filter: &CosineFilter, upper: f64) -> Vec<f64> {
    let step = match filter.symbol_eval() {
        SymbolEval::SharpHalfBand => 0.5,
        SymbolEval::SmoothBlend => 1.0 / 3.0,
        SymbolEval::SquaredCosine | SymbolEval::Series => return Vec::new(),
    };
    let mut seams = Vec::new();
    let mut s = step;
    while s < upper {
        seams.push(s);
        s += step;
    }
    seams
}

// ---------------------------------------------------------------------------
// The wavelet family
// ---------------------------------------------------------------------------

/// `ψ̂_{j,k}(λ) = 2^{-3j/2} ρ̃_k(2^{-j}λ) ψ̂(2^{-j}λ)` with the half-step
/// weight `ρ̃_k(λ) = (2π)^{1/4} sin((2k-1)πλ/2)/λ`.
fn family_spectrum(psi: &Wavelet, j: i32, k: u32, lambda: f64) -> Complex64 {
    let shrink = libm::exp2(-f64::from(j));
    let t = shrink * lambda;
    psi.spectrum_at(t) * (half_integer_rho(k, t) * libm::exp2(-1.5 * f64::from(j)))
}

/// Oscillation rate (in `λ`) of `ψ̂_{j,k}`.
fn family_frequency(j: i32, k: u32) -> f64 {
    libm::exp2(-f64::from(j)) * 0.5 * PI * f64::from(2 * k - 1)
}

/// Spectral support bounds of `ψ̂_{j,k}`: the mother bounds scaled by
/// `2^j`.
fn family_segments(psi: &Wavelet, j: i32) -> Vec<f64> {
    let grow = libm::exp2(f64::from(j));
    wavelet_segments(psi).iter().map(|b| grow * b).collect()
}

fn reject_zero_index(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::DomainViolation {
            what: "wavelet family index k must be at least 1",
            value: 0.0,
        });
    }
    Ok(())
}

/// Tabulates `ψ_{j,k}` on a radial grid through the spectral route,
/// `ψ_{j,k}(r) = 2^{3j/2} ∫ ρ̃_k(μ) ψ̂(μ) j_{1/2}(2^j μ r) dω̂(μ)`.
pub fn wavelet_family(psi: &Wavelet, j: i32, k: u32, grid: &RadialGrid) -> Result<RadialProfile> {
    reject_zero_index(k)?;
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let scale = libm::exp2(f64::from(j));
    let amp = libm::exp2(1.5 * f64::from(j));
    let bounds = wavelet_segments(psi);
    let haar = libm::sqrt(2.0 / PI);
    let mut values = Vec::with_capacity(grid.n_points());
    for i in 0..grid.n_points() {
        let r = grid.node(i);
        let freq = 0.5 * PI * f64::from(2 * k - 1) + scale * r;
        let mut acc = Complex64::new(0.0, 0.0);
        for w in bounds.windows(2) {
            let panels = panels_for_oscillation(freq, w[1] - w[0], 2);
            acc += rule.integrate_panels_complex(w[0], w[1], panels, |mu| {
                psi.spectrum_at(mu)
                    * (half_integer_rho(k, mu) * sinc(scale * mu * r) * haar * mu * mu)
            });
        }
        values.push(acc * amp);
    }
    RadialProfile::from_samples(grid.clone(), values)
}

/// Merges two sorted bound lists, capped at the smaller upper edge
/// (beyond it at least one factor vanishes or is negligible).
fn merged_bounds(a: &[f64], b: &[f64]) -> Vec<f64> {
    let cap = a.last().copied().unwrap_or(0.0).min(b.last().copied().unwrap_or(0.0));
    let mut out: Vec<f64> = a
        .iter()
        .chain(b.iter())
        .copied()
        .filter(|&x| x > 0.0 && x < cap)
        .collect();
    out.push(0.0);
    out.push(cap);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// `⟨ψ_{ja,ka}, ψ_{jb,kb}⟩` by spectral quadrature.
fn family_inner(psi: &Wavelet, a: (i32, u32), b: (i32, u32)) -> Complex64 {
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let bounds = merged_bounds(&family_segments(psi, a.0), &family_segments(psi, b.0));
    let freq = family_frequency(a.0, a.1) + family_frequency(b.0, b.1);
    let haar = libm::sqrt(2.0 / PI);
    let mut acc = Complex64::new(0.0, 0.0);
    for w in bounds.windows(2) {
        let panels = panels_for_oscillation(freq, w[1] - w[0], 4);
        acc += rule.integrate_panels_complex(w[0], w[1], panels, |lam| {
            family_spectrum(psi, a.0, a.1, lam)
                * family_spectrum(psi, b.0, b.1, lam).conj()
                * (haar * lam * lam)
        });
    }
    acc
}

/// `⟨ψ_{j,k}, φ_{0,l}⟩` by spectral quadrature.
fn family_scaling_inner(psi: &Wavelet, j: i32, k: u32, l: u32) -> Complex64 {
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let bounds = merged_bounds(&family_segments(psi, j), &spectral_segments(&psi.phi));
    let freq = family_frequency(j, k) + PI * f64::from(l);
    let haar = libm::sqrt(2.0 / PI);
    let mut acc = Complex64::new(0.0, 0.0);
    for w in bounds.windows(2) {
        let panels = panels_for_oscillation(freq, w[1] - w[0], 4);
        acc += rule.integrate_panels_complex(w[0], w[1], panels, |lam| {
            family_spectrum(psi, j, k, lam)
                * (fourier_bessel_half(l, lam) * psi.phi.spectrum_at(lam)).conj()
                * (haar * lam * lam)
        });
    }
    acc
}

/// Worst deviation of the Gram matrix of the listed family members
/// `(j, k)` from the identity.
///
/// With a single scale this probes orthonormality of `{ψ_{j,k}}_k`; with
/// several scales it additionally probes cross-scale orthogonality.
pub fn wavelet_family_gram_deviation(psi: &Wavelet, members: &[(i32, u32)]) -> Result<f64> {
    for &(_, k) in members {
        reject_zero_index(k)?;
    }
    let mut worst = 0.0f64;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            let target = if a == b { 1.0 } else { 0.0 };
            let dev = (family_inner(psi, a, b) - target).norm();
            worst = worst.max(dev);
        }
    }
    Ok(worst)
}

/// Worst `|⟨ψ_{0,k}, φ_{0,l}⟩|` over `k ≤ k_max`, `l ≤ l_max`: the
/// level-zero detail translates must be orthogonal to the scaling
/// translates.
pub fn wavelet_scaling_cross(psi: &Wavelet, k_max: u32, l_max: u32) -> Result<f64> {
    reject_zero_index(k_max)?;
    reject_zero_index(l_max)?;
    let mut worst = 0.0f64;
    for k in 1..=k_max {
        for l in 1..=l_max {
            worst = worst.max(family_scaling_inner(psi, 0, k, l).norm());
        }
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// Lifting odd sine series into the detail space
// ---------------------------------------------------------------------------

/// `β(λ)/λ` evaluated termwise through `sinc`, continued through `λ = 0`.
fn series_over_lambda(alpha: &crate::mra::SineSeries, lambda: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, c) in alpha.coefficients().iter().enumerate() {
        let h = (i + 1) as f64 * PI;
        acc += c * (core::f64::consts::SQRT_2 * h * sinc(h * lambda));
    }
    acc
}

/// Spectrum of the lifted function,
/// `f̂_α(λ) = (2π)^{1/4} (β(λ)/λ) conj(G(λ+1)) φ̂(λ)`.
fn lift_spectrum(
    alpha: &crate::mra::SineSeries,
    phi: &ScalingFunction,
    filter: &CosineFilter,
    lambda: f64,
) -> Complex64 {
    series_over_lambda(alpha, lambda)
        * filter.symbol(lambda + 1.0).conj()
        * phi.spectrum_at(lambda)
        * QUARTER_ROOT_TWO_PI
}

/// Panel bounds for the lift integrals: the scaling segments plus the
/// shifted seams of a closed filter symbol.
fn lift_segments(phi: &ScalingFunction, filter: &CosineFilter) -> Vec<f64> {
    let mut bounds = spectral_segments(phi);
    let upper = bounds.last().copied().unwrap_or(0.0);
    for s in symbol_seams(filter, upper + 1.0) {
        let lam = s - 1.0;
        if lam > 0.0 && lam < upper {
            bounds.push(lam);
        }
    }
    bounds.sort_by(f64::total_cmp);
    bounds.dedup();
    bounds
}

fn require_odd(alpha: &crate::mra::SineSeries) -> Result<()> {
    if !alpha.is_odd_only() {
        return Err(Error::ShapeMismatch {
            what: "detail-space lift needs a sine series restricted to odd frequencies",
        });
    }
    Ok(())
}

/// Lifts an odd-frequency sine series `α` into the detail space below
/// the scaling level and tabulates the result on `grid`.
///
/// The lift sends the basis series `s_{2k-1}` to `ψ_{-1,k}` and is an
/// isometry: `‖f_α‖ = (Σ |α_k|²)^{1/2}` (see [`w_space_lift_norm`]).
pub fn w_space_lift(
    alpha: &crate::mra::SineSeries,
    phi: &ScalingFunction,
    filter: &CosineFilter,
    grid: &RadialGrid,
) -> Result<RadialProfile> {
    require_odd(alpha)?;
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let bounds = lift_segments(phi, filter);
    let haar = libm::sqrt(2.0 / PI);
    let base_freq = PI * f64::from(alpha.max_frequency());
    let mut values = Vec::with_capacity(grid.n_points());
    for i in 0..grid.n_points() {
        let r = grid.node(i);
        let freq = base_freq + r;
        let mut acc = Complex64::new(0.0, 0.0);
        for w in bounds.windows(2) {
            let panels = panels_for_oscillation(freq, w[1] - w[0], 2);
            acc += rule.integrate_panels_complex(w[0], w[1], panels, |lam| {
                lift_spectrum(alpha, phi, filter, lam) * (sinc(lam * r) * haar * lam * lam)
            });
        }
        values.push(acc);
    }
    RadialProfile::from_samples(grid.clone(), values)
}

/// `‖f_α‖` computed by spectral quadrature; equals `(Σ |α_k|²)^{1/2}`
/// when the pair `(φ, G)` is orthonormal.
pub fn w_space_lift_norm(
    alpha: &crate::mra::SineSeries,
    phi: &ScalingFunction,
    filter: &CosineFilter,
) -> Result<f64> {
    require_odd(alpha)?;
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let bounds = lift_segments(phi, filter);
    let haar = libm::sqrt(2.0 / PI);
    let freq = 2.0 * PI * f64::from(alpha.max_frequency());
    let mut acc = 0.0;
    for w in bounds.windows(2) {
        let panels = panels_for_oscillation(freq, w[1] - w[0], 4);
        acc += rule.integrate_panels(w[0], w[1], panels, |lam| {
            lift_spectrum(alpha, phi, filter, lam).norm_sqr() * haar * lam * lam
        });
    }
    Ok(libm::sqrt(acc.max(0.0)))
}
