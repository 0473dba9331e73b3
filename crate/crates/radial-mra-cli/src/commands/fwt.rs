//! `fwt decompose|reconstruct|qr`: the fast filter-bank pipeline.

use std::path::PathBuf;

use clap::{Args, Subcommand};

use radial_mra::fwt::{decompose, qr_coefficients, reconstruct};

use crate::errors::{data_violation, Result};
use crate::formats::{
    read_coefficients, read_filter, read_pyramid, write_coefficients, write_pyramid,
};

#[derive(Subcommand)]
pub enum FwtCommand {
    /// Split a coefficient vector into approximation/detail levels.
    Decompose(DecomposeArgs),
    /// Rebuild the top-level coefficients from a pyramid.
    Reconstruct(ReconstructArgs),
    /// Print one sparse-table entry pair (q, r).
    Qr(QrArgs),
}

#[derive(Args)]
pub struct DecomposeArgs {
    /// Refinement filter (g.csv).
    #[arg(long)]
    pub filter: PathBuf,
    /// Input coefficients (coeffs.json with level j).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Number of decomposition levels.
    #[arg(long)]
    pub depth: usize,
    /// Output pyramid path (pyramid.json).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run_decompose(args: &DecomposeArgs) -> Result<()> {
    let filter = read_filter(&args.filter)?;
    let (j_top, values) = read_coefficients(&args.input)?;
    let pyramid = decompose(&values, &filter, j_top, args.depth)
        .map_err(|e| data_violation("decomposing", e))?;
    write_pyramid(&args.out, &pyramid)
}

#[derive(Args)]
pub struct ReconstructArgs {
    /// Refinement filter (g.csv).
    #[arg(long)]
    pub filter: PathBuf,
    /// Input pyramid (pyramid.json).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output coefficients path (coeffs.json).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run_reconstruct(args: &ReconstructArgs) -> Result<()> {
    let filter = read_filter(&args.filter)?;
    let pyramid = read_pyramid(&args.input)?;
    let j_top = pyramid.j_top();
    let values =
        reconstruct(&pyramid, &filter).map_err(|e| data_violation("reconstructing", e))?;
    write_coefficients(&args.out, j_top, &values)
}

#[derive(Args)]
pub struct QrArgs {
    /// Refinement filter (g.csv).
    #[arg(long)]
    pub filter: PathBuf,
    /// Row index ℓ ≥ 1 of the table.
    #[arg(long)]
    pub ell: u32,
    /// Column index k ≥ 1 of the table.
    #[arg(long)]
    pub k: u32,
}

pub fn run_qr(args: &QrArgs) -> Result<()> {
    let filter = read_filter(&args.filter)?;
    let (q, r) = qr_coefficients(&filter, args.ell, args.k)
        .map_err(|e| data_violation("evaluating the table entry", e))?;
    let payload = serde_json::json!({
        "schema": 1,
        "ell": args.ell,
        "k": args.k,
        "q": { "re": q.re, "im": q.im },
        "r": { "re": r.re, "im": r.im },
    });
    println!("{payload}");
    Ok(())
}
