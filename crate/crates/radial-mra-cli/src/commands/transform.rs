//! `hankel` and `translate`: pointwise transform plumbing.

use std::path::PathBuf;

use clap::Args;

use radial_mra::hankel::{hankel_general, inverse_hankel};
use radial_mra::hypergroup::{translate_general, translate_half};
use radial_mra::Order;

use crate::errors::{data_violation, from_library, warn, CliError, Result};
use crate::formats::{read_profile, write_profile, ProfileKind};

fn order_from_alpha(alpha: f64) -> Result<Order> {
    Order::new(alpha)
        .map_err(|e| CliError::schema(format!("--alpha {alpha}: {e}")))
}

/// Forward or inverse transform of a sampled profile. The output lives
/// on the conjugate grid of the input (spacing `π/r_max`), which is the
/// lattice on which the discrete transform is its own inverse.
#[derive(Args)]
pub struct HankelArgs {
    /// Order parameter α > −1/2 of the radial measure.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Input profile: radial samples for the forward transform,
    /// spectral samples with `--inverse`.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output profile path (.csv or .json).
    #[arg(long)]
    pub out: PathBuf,
    /// Run the inverse transform (spectral samples in, radial out).
    #[arg(long)]
    pub inverse: bool,
}

pub fn hankel(args: &HankelArgs) -> Result<()> {
    let order = order_from_alpha(args.alpha)?;
    let loaded = read_profile(&args.input)?;
    let out_grid = loaded.grid.conjugate();
    if args.inverse {
        let f_hat = loaded.into_spectral(&args.input)?;
        let f = inverse_hankel(order, &f_hat, &out_grid)
            .map_err(|e| from_library("inverse transform", e))?;
        write_profile(&args.out, ProfileKind::Radial, &out_grid, f.values())
    } else {
        let f = loaded.into_radial(&args.input)?;
        let f_hat = hankel_general(order, &f, &out_grid)
            .map_err(|e| from_library("forward transform", e))?;
        write_profile(&args.out, ProfileKind::Spectral, &out_grid, f_hat.values())
    }
}

/// Generalized translation `(T_r f)` of a sampled radial profile,
/// written on the same grid as the input.
#[derive(Args)]
pub struct TranslateArgs {
    /// Order parameter α > −1/2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Translation radius r ≥ 0.
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    /// Input radial profile.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output radial profile path.
    #[arg(long)]
    pub out: PathBuf,
}

pub fn translate(args: &TranslateArgs) -> Result<()> {
    let order = order_from_alpha(args.alpha)?;
    let loaded = read_profile(&args.input)?;
    let grid = loaded.grid.clone();
    let f = loaded.into_radial(&args.input)?;
    // α = 1/2 has the elementary kernel (cell-exact on the sampled
    // interpolant); every other order goes through the quadrature path.
    let flagged = if args.alpha == 0.5 {
        translate_half(&f, args.r).map_err(|e| data_violation("translating", e))?
    } else {
        translate_general(order, &f, args.r)
            .map_err(|e| data_violation("translating", e))?
    };
    if flagged.truncated {
        warn(
            "truncated-translation",
            "the translation kernel reached beyond the sampled radius; \
             out-of-range values were taken as zero",
        );
    }
    write_profile(&args.out, ProfileKind::Radial, &grid, flagged.value.values())
}
