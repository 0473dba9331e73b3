//! `plotdata`: figure-ready CSV tables for the diagnostics that are
//! otherwise reported only as single numbers.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use radial_mra::mra::{
    fourier_bessel_half, periodize, ScalingFunction, DEFAULT_LATTICE_CUTOFF,
    DEFAULT_PERIODIZATION_POINTS,
};
use radial_mra::quad::{panels_for_oscillation, GaussLegendre};
use radial_mra::Complex64;

use crate::errors::{data_violation, CliError, Result};
use crate::formats::{read_filter, read_scaling, write_string};

#[derive(Clone, Copy, ValueEnum)]
pub enum PlotKind {
    /// Inner products of the first translates: CSV `k,l,re,im`.
    Gram,
    /// The periodization P on [0, 1]: CSV `lambda,p`.
    Periodization,
    /// Pointwise two-scale residual on [0, 1]: CSV `lambda,residual`.
    FilterIdentity,
}

#[derive(Args)]
pub struct PlotdataArgs {
    /// Which table to emit.
    #[arg(long, value_enum)]
    pub what: PlotKind,
    /// Scaling-function recipe (phi.json).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Refinement filter (g.csv); required for filter-identity.
    #[arg(long)]
    pub filter: Option<PathBuf>,
    /// Largest translate index for the gram table.
    #[arg(long, default_value_t = 16)]
    pub k_max: u32,
    /// Sample count for the periodization / residual tables.
    #[arg(long)]
    pub points: Option<usize>,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
}

/// Frequencies above this are treated as outside the spectrum's
/// support when choosing the gram quadrature cutoff.
const SPECTRUM_PROBE_TOP: f64 = 100.0;
const SPECTRUM_PROBE_POINTS: usize = 8192;
const SPECTRUM_FLOOR: f64 = 1e-14;

/// Upper integration limit: the last probed frequency whose spectrum
/// modulus clears the floor, padded by one probe step.
fn spectral_cutoff(phi: &ScalingFunction) -> f64 {
    let step = SPECTRUM_PROBE_TOP / SPECTRUM_PROBE_POINTS as f64;
    let mut last = 0.0;
    for i in 0..SPECTRUM_PROBE_POINTS {
        let lam = (i as f64 + 0.5) * step;
        if phi.spectrum_at(lam).norm() > SPECTRUM_FLOOR {
            last = lam;
        }
    }
    (last + step).clamp(1.0, SPECTRUM_PROBE_TOP)
}

/// `⟨φ_{0,k}, φ_{0,l}⟩` by spectral quadrature with oscillation-aware
/// panels per unit frequency interval.
fn gram_entry(phi: &ScalingFunction, rule: &GaussLegendre, cutoff: f64, k: u32, l: u32) -> Complex64 {
    let haar = (2.0_f64 / PI).sqrt();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut lo = 0.0_f64;
    while lo < cutoff {
        let hi = (lo + 1.0).min(cutoff);
        let panels = panels_for_oscillation(PI * f64::from(k + l), hi - lo, 8);
        acc += rule.integrate_panels_complex(lo, hi, panels, |lam| {
            (phi.spectrum_at(lam) * fourier_bessel_half(k, lam))
                * (phi.spectrum_at(lam) * fourier_bessel_half(l, lam)).conj()
                * (haar * lam * lam)
        });
        lo = hi;
    }
    acc
}

pub fn plotdata(args: &PlotdataArgs) -> Result<()> {
    let (_, phi) = read_scaling(&args.input)?;
    match args.what {
        PlotKind::Gram => {
            if args.k_max == 0 {
                return Err(CliError::schema("--k-max must be at least 1"));
            }
            let rule = GaussLegendre::new(32);
            let cutoff = spectral_cutoff(&phi);
            let mut out = String::from("k,l,re,im\n");
            for k in 1..=args.k_max {
                for l in 1..=args.k_max {
                    let v = gram_entry(&phi, &rule, cutoff, k, l);
                    out.push_str(&format!("{k},{l},{},{}\n", v.re, v.im));
                }
            }
            write_string(&args.out, &out)
        }
        PlotKind::Periodization => {
            let points = args.points.unwrap_or(DEFAULT_PERIODIZATION_POINTS);
            let p = periodize(&phi, points, DEFAULT_LATTICE_CUTOFF)
                .map_err(|e| data_violation("periodizing", e))?;
            let mut out = String::from("lambda,p\n");
            for (lam, v) in p.grid().nodes().zip(p.values()) {
                out.push_str(&format!("{lam},{v}\n"));
            }
            write_string(&args.out, &out)
        }
        PlotKind::FilterIdentity => {
            let filter_path = args.filter.as_ref().ok_or_else(|| {
                CliError::schema("--what filter-identity requires --filter <g.csv>")
            })?;
            let filter = read_filter(filter_path)?;
            let points = args.points.unwrap_or(2048).max(1);
            let mut out = String::from("lambda,residual\n");
            for i in 0..points {
                let lam = (i as f64 + 0.5) / points as f64;
                let s = (2.0 * PI * lam).sin();
                let lhs = phi.spectrum_at(2.0 * lam) * s;
                let rhs = filter.symbol(lam) * phi.spectrum_at(lam) * s;
                out.push_str(&format!("{lam},{}\n", (lhs - rhs).norm()));
            }
            write_string(&args.out, &out)
        }
    }
}
