//! Central tolerance defaults.
//!
//! Commands that *check* numbers (rather than merely compute them) read
//! their thresholds from a `tolerances.json` file: the path given by
//! `--tolerances`, else `./tolerances.json` if present, else the
//! built-in defaults below. Every field is optional in the file;
//! missing fields keep their defaults.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::errors::{CliError, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub schema: u32,
    /// `scaling validate`: the periodization minimum must stay above
    /// this for the translates to form a Riesz system.
    pub riesz_lower_min: f64,
    /// `scaling validate`: cap on the sup-residual of the two-scale
    /// identity of the extracted refinement symbol.
    pub two_scale_residual_max: f64,
    /// `scaling validate`: cap on `||φ̂(0)| − 1|`.
    pub normalization_tol: f64,
    /// `frame check`: relative slack around the estimated frame bounds
    /// when sandwiching the measured energy ratios.
    pub frame_ratio_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            schema: 1,
            riesz_lower_min: 1e-6,
            // Matches the library's rejection threshold for refinement
            // symbols, so `validate` and `filter extract` agree on what
            // counts as a scaling function.
            two_scale_residual_max: 1e-3,
            normalization_tol: 1e-6,
            frame_ratio_tol: 1e-2,
        }
    }
}

impl Tolerances {
    pub fn load(explicit: Option<&PathBuf>) -> Result<Self> {
        let path: Option<&Path> = match explicit {
            Some(p) => Some(p.as_path()),
            None => {
                let default = Path::new("tolerances.json");
                default.exists().then_some(default)
            }
        };
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::schema(format!("cannot read {}: {e}", path.display())))?;
        let loaded: Self = serde_json::from_str(&text)
            .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
        if loaded.schema != 1 {
            return Err(CliError::schema(format!(
                "{}: unsupported schema version {} (expected 1)",
                path.display(),
                loaded.schema
            )));
        }
        Ok(loaded)
    }
}
