//! `scaling build|orthogonalize|validate`, `filter extract`, and
//! `wavelet build`.

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;

use radial_mra::mra::{extract_filter, validate_mra, DEFAULT_SYMBOL_POINTS};
use radial_mra::wavelet::build_wavelet;

use crate::errors::{data_violation, CliError, Result};
use crate::formats::{
    build_scaling, read_filter, read_profile, read_scaling, spectral_profile_value, write_filter,
    write_json, write_wavelet, ScalingFile, ScalingRecipe, SCHEMA_VERSION,
};
use crate::tolerances::Tolerances;

#[derive(Subcommand)]
pub enum ScalingCommand {
    /// Build a scaling function and write its recipe file.
    Build(BuildArgs),
    /// Divide the spectrum by the square root of its periodization.
    Orthogonalize(OrthogonalizeArgs),
    /// Run the structural diagnostics and write a report.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BuildKind {
    /// Sharp spectral cutoff on [0, 1] (orthonormal translates).
    Shannon,
    /// Smooth spectral blend supported on [0, 4/3] (orthonormal).
    Meyer,
    /// Piecewise-linear hat generator (Riesz basis, not orthonormal).
    HatSpline,
    /// Lift a classical spectral profile from `--spec`.
    FromClassical,
}

#[derive(Args)]
pub struct BuildArgs {
    /// Which generator to build.
    #[arg(long, value_enum)]
    pub kind: BuildKind,
    /// Spectral profile (JSON) for `--kind from-classical`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Output recipe path (phi.json).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn build(args: &BuildArgs) -> Result<()> {
    let recipe = match args.kind {
        BuildKind::Shannon => ScalingRecipe::Shannon,
        BuildKind::Meyer => ScalingRecipe::Meyer,
        BuildKind::HatSpline => ScalingRecipe::HatSpline,
        BuildKind::FromClassical => {
            let spec = args.spec.as_ref().ok_or_else(|| {
                CliError::schema("--kind from-classical requires --spec <spectral profile JSON>")
            })?;
            let profile = read_profile(spec)?.into_spectral(spec)?;
            ScalingRecipe::FromClassical {
                source: Box::new(spectral_profile_value(&profile)),
            }
        }
    };
    // Build once before writing: a recipe that cannot be built (e.g. a
    // classical spectrum failing the two-scale test) is rejected here,
    // not on first use.
    build_scaling(&args.out, &recipe)?;
    write_json(&args.out, &ScalingFile::new(recipe))
}

#[derive(Args)]
pub struct OrthogonalizeArgs {
    /// Input recipe (phi.json).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output recipe (phistar.json).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn orthogonalize(args: &OrthogonalizeArgs) -> Result<()> {
    let (file, _phi) = read_scaling(&args.input)?;
    let recipe = ScalingRecipe::Orthogonalized { base: Box::new(file.recipe) };
    // Validates that the periodization admits the division.
    build_scaling(&args.out, &recipe)?;
    write_json(&args.out, &ScalingFile::new(recipe))
}

#[derive(Args)]
pub struct ValidateArgs {
    /// Input recipe (phi.json).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Report output path (JSON).
    #[arg(long)]
    pub report: PathBuf,
    /// Tolerance file overriding ./tolerances.json.
    #[arg(long)]
    pub tolerances: Option<PathBuf>,
}

#[derive(Serialize)]
struct RieszJson {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
}

#[derive(Serialize)]
struct ValidateReport {
    schema: u32,
    riesz: RieszJson,
    two_scale_residual: f64,
    phi_hat_at_zero: f64,
    gram_deviation: Option<f64>,
}

pub fn validate(args: &ValidateArgs) -> Result<()> {
    let tol = Tolerances::load(args.tolerances.as_ref())?;
    let (_, phi) = read_scaling(&args.input)?;
    let report = validate_mra(&phi).map_err(|e| data_violation("validating", e))?;
    write_json(
        &args.report,
        &ValidateReport {
            schema: SCHEMA_VERSION,
            riesz: RieszJson { a: report.riesz_lower, b: report.riesz_upper },
            two_scale_residual: report.two_scale_residual,
            phi_hat_at_zero: report.spectrum_at_zero,
            gram_deviation: report.gram_deviation,
        },
    )?;

    let mut failures = Vec::new();
    if report.riesz_lower < tol.riesz_lower_min {
        failures.push(format!(
            "lower Riesz bound {:.3e} below {:.3e}",
            report.riesz_lower, tol.riesz_lower_min
        ));
    }
    if report.two_scale_residual > tol.two_scale_residual_max {
        failures.push(format!(
            "two-scale residual {:.3e} above {:.3e}",
            report.two_scale_residual, tol.two_scale_residual_max
        ));
    }
    if (report.spectrum_at_zero - 1.0).abs() > tol.normalization_tol {
        failures.push(format!(
            "|phi_hat(0)| = {:.12} deviates from 1 by more than {:.3e}",
            report.spectrum_at_zero, tol.normalization_tol
        ));
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::tolerance(failures.join("; ")))
    }
}

#[derive(Subcommand)]
pub enum FilterCommand {
    /// Project the refinement symbol onto a finite cosine series.
    Extract(ExtractArgs),
}

#[derive(Args)]
pub struct ExtractArgs {
    /// Input recipe (phi.json).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Number of cosine coefficients to keep.
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Symbol sampling resolution on [0, 1/2].
    #[arg(long, default_value_t = DEFAULT_SYMBOL_POINTS)]
    pub symbol_points: usize,
    /// Output filter path (g.csv).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn extract(args: &ExtractArgs) -> Result<()> {
    let (_, phi) = read_scaling(&args.input)?;
    let filter = extract_filter(&phi, args.symbol_points, args.n)
        .map_err(|e| data_violation("extracting the refinement filter", e))?;
    write_filter(&args.out, &filter)
}

#[derive(Subcommand)]
pub enum WaveletCommand {
    /// Pair a scaling function with a refinement filter.
    Build(WaveletBuildArgs),
}

#[derive(Args)]
pub struct WaveletBuildArgs {
    /// Scaling-function recipe (phi.json).
    #[arg(long)]
    pub phi: PathBuf,
    /// Refinement filter (g.csv).
    #[arg(long)]
    pub filter: PathBuf,
    /// Output wavelet path (psi.json).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn wavelet_build(args: &WaveletBuildArgs) -> Result<()> {
    let (file, phi) = read_scaling(&args.phi)?;
    let filter = read_filter(&args.filter)?;
    // Build once to validate the pairing (two-scale compatibility).
    build_wavelet(&phi, &filter).map_err(|e| data_violation("building the wavelet", e))?;
    write_wavelet(&args.out, &file, &filter)
}
