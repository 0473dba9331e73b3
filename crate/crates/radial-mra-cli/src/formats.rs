//! Shared file formats.
//!
//! * Profiles (radial or spectral samples): CSV with header `r,re,im`
//!   or `lambda,re,im`, or the JSON alternative
//!   `{schema:1, kind:"radial"|"spectral", grid:{r_max,n_points},
//!   values:[[re,im],...]}`. Samples always live on the uniform
//!   midpoint grid `r_i = (i + 1/2)·r_max/n_points`; CSV input is
//!   checked against that layout.
//! * Refinement filters: CSV with header `n,g_re,g_im`, indices
//!   contiguous from 0.
//! * Scaling functions (`phi.json`): a build *recipe* rather than a
//!   sample dump, so reloading reconstructs the function exactly:
//!   `{schema:1, kind:"shannon"|"meyer"|"hat-spline"}`,
//!   `{schema:1, kind:"from-classical", source:<spectral profile>}`, or
//!   `{schema:1, kind:"orthogonalized", base:<recipe>}`.
//! * Wavelets (`psi.json`): `{schema:1, scaling:<recipe>,
//!   filter:[[re,im],...]}` — the pair that determines the wavelet.
//! * Coefficient vectors: `{schema:1, j, values:[[re,im],...]}`.
//! * Pyramids: `{schema:1, j_top, depth, K, levels:[{c,d},...]}`.
//!
//! All JSON documents are versioned by a mandatory `"schema": 1`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use radial_mra::filter::CosineFilter;
use radial_mra::fwt::{CoefficientPyramid, PyramidLevel};
use radial_mra::grid::RadialGrid;
use radial_mra::mra::{
    from_classical, hat_spline, meyer_scaling, orthogonalize, shannon_scaling, ScalingFunction,
};
use radial_mra::profile::{RadialProfile, SpectralProfile};
use radial_mra::Complex64;

use crate::errors::{data_violation, read_failure, write_failure, CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Relative slack when matching CSV nodes against the midpoint layout.
const NODE_MATCH_TOLERANCE: f64 = 1e-9;

fn check_schema(found: u32, what: &str) -> Result<()> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(CliError::schema(format!(
            "{what}: unsupported schema version {found} (expected {SCHEMA_VERSION})"
        )))
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    let text = fs::read_to_string(path).map_err(|e| read_failure(path, e))?;
    if text.trim().is_empty() {
        return Err(CliError::schema(format!("{}: empty input file", path.display())));
    }
    Ok(text)
}

pub fn write_string(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| write_failure(path, e))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::internal(format!("serializing {}: {e}", path.display())))?;
    text.push('\n');
    write_string(path, &text)
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Radial,
    Spectral,
}

impl ProfileKind {
    pub fn column(self) -> &'static str {
        match self {
            ProfileKind::Radial => "r",
            ProfileKind::Spectral => "lambda",
        }
    }

    fn name(self) -> &'static str {
        match self {
            ProfileKind::Radial => "radial",
            ProfileKind::Spectral => "spectral",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    r_max: f64,
    n_points: usize,
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    schema: u32,
    kind: String,
    grid: GridJson,
    values: Vec<[f64; 2]>,
}

/// A profile read from disk, not yet committed to a library type.
pub struct LoadedProfile {
    pub kind: ProfileKind,
    pub grid: RadialGrid,
    pub values: Vec<Complex64>,
}

impl LoadedProfile {
    pub fn into_radial(self, path: &Path) -> Result<RadialProfile> {
        if self.kind != ProfileKind::Radial {
            return Err(CliError::schema(format!(
                "{}: expected a radial profile (column `r`), found a spectral one",
                path.display()
            )));
        }
        RadialProfile::from_samples(self.grid, self.values)
            .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
    }

    pub fn into_spectral(self, path: &Path) -> Result<SpectralProfile> {
        if self.kind != ProfileKind::Spectral {
            return Err(CliError::schema(format!(
                "{}: expected a spectral profile (column `lambda`), found a radial one",
                path.display()
            )));
        }
        SpectralProfile::from_samples(self.grid, self.values)
            .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
    }
}

fn is_json(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => true,
        Some(ext) if ext.eq_ignore_ascii_case("csv") => false,
        _ => text.trim_start().starts_with('{'),
    }
}

/// Reconstructs the uniform midpoint grid from explicit CSV nodes.
fn grid_from_nodes(path: &Path, nodes: &[f64]) -> Result<RadialGrid> {
    if nodes.is_empty() {
        return Err(CliError::schema(format!("{}: no data rows", path.display())));
    }
    let spacing = 2.0 * nodes[0];
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(CliError::schema(format!(
            "{}: first node must be positive (midpoint layout r_0 = h/2)",
            path.display()
        )));
    }
    for (i, &r) in nodes.iter().enumerate() {
        let expected = (i as f64 + 0.5) * spacing;
        if (r - expected).abs() > NODE_MATCH_TOLERANCE * (1.0 + expected.abs()) {
            return Err(CliError::schema(format!(
                "{}: row {}: node {r} is off the uniform midpoint grid (expected {expected})",
                path.display(),
                i + 1,
            )));
        }
    }
    RadialGrid::new(spacing * nodes.len() as f64, nodes.len())
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
}

pub fn read_profile(path: &Path) -> Result<LoadedProfile> {
    let text = read_to_string(path)?;
    if is_json(path, &text) {
        let doc: ProfileJson = parse_json(path, &text)?;
        check_schema(doc.schema, &path.display().to_string())?;
        let kind = match doc.kind.as_str() {
            "radial" => ProfileKind::Radial,
            "spectral" => ProfileKind::Spectral,
            other => {
                return Err(CliError::schema(format!(
                    "{}: kind must be \"radial\" or \"spectral\", found {other:?}",
                    path.display()
                )))
            }
        };
        let grid = RadialGrid::new(doc.grid.r_max, doc.grid.n_points)
            .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
        if doc.values.len() != doc.grid.n_points {
            return Err(CliError::schema(format!(
                "{}: {} values for {} grid points",
                path.display(),
                doc.values.len(),
                doc.grid.n_points
            )));
        }
        let values = doc.values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        return Ok(LoadedProfile { kind, grid, values });
    }

    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?
        .clone();
    let cols: Vec<&str> = headers.iter().map(str::trim).collect();
    let kind = match cols.as_slice() {
        ["r", "re", "im"] => ProfileKind::Radial,
        ["lambda", "re", "im"] => ProfileKind::Spectral,
        _ => {
            return Err(CliError::schema(format!(
                "{}: header must be `r,re,im` or `lambda,re,im`, found `{}`",
                path.display(),
                cols.join(",")
            )))
        }
    };
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
        let field = |j: usize| -> Result<f64> {
            record
                .get(j)
                .ok_or_else(|| {
                    CliError::schema(format!("{}: row {}: missing column", path.display(), row + 2))
                })?
                .trim()
                .parse::<f64>()
                .map_err(|e| {
                    CliError::schema(format!("{}: row {}: {e}", path.display(), row + 2))
                })
        };
        nodes.push(field(0)?);
        values.push(Complex64::new(field(1)?, field(2)?));
    }
    let grid = grid_from_nodes(path, &nodes)?;
    Ok(LoadedProfile { kind, grid, values })
}

pub fn write_profile(
    path: &Path,
    kind: ProfileKind,
    grid: &RadialGrid,
    values: &[Complex64],
) -> Result<()> {
    if is_json(path, "") {
        let doc = ProfileJson {
            schema: SCHEMA_VERSION,
            kind: kind.name().to_string(),
            grid: GridJson { r_max: grid.r_max(), n_points: grid.n_points() },
            values: values.iter().map(|v| [v.re, v.im]).collect(),
        };
        return write_json(path, &doc);
    }
    let mut out = String::new();
    out.push_str(kind.column());
    out.push_str(",re,im\n");
    for (node, v) in grid.nodes().zip(values) {
        out.push_str(&format!("{node},{},{}\n", v.re, v.im));
    }
    write_string(path, &out)
}

// ---------------------------------------------------------------------------
// Filters
// ---------------------------------------------------------------------------

pub fn read_filter(path: &Path) -> Result<CosineFilter> {
    let text = read_to_string(path)?;
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?
        .clone();
    let cols: Vec<&str> = headers.iter().map(str::trim).collect();
    if cols != ["n", "g_re", "g_im"] {
        return Err(CliError::schema(format!(
            "{}: header must be `n,g_re,g_im`, found `{}`",
            path.display(),
            cols.join(",")
        )));
    }
    let mut coefficients = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
        let text_at = |j: usize| -> Result<&str> {
            record.get(j).map(str::trim).ok_or_else(|| {
                CliError::schema(format!("{}: row {}: missing column", path.display(), row + 2))
            })
        };
        let index: usize = text_at(0)?.parse().map_err(|e| {
            CliError::schema(format!("{}: row {}: {e}", path.display(), row + 2))
        })?;
        if index != row {
            return Err(CliError::schema(format!(
                "{}: row {}: coefficient indices must run 0,1,2,... (found {index})",
                path.display(),
                row + 2
            )));
        }
        let re: f64 = text_at(1)?.parse().map_err(|e| {
            CliError::schema(format!("{}: row {}: {e}", path.display(), row + 2))
        })?;
        let im: f64 = text_at(2)?.parse().map_err(|e| {
            CliError::schema(format!("{}: row {}: {e}", path.display(), row + 2))
        })?;
        coefficients.push(Complex64::new(re, im));
    }
    if coefficients.is_empty() {
        return Err(CliError::schema(format!("{}: no data rows", path.display())));
    }
    Ok(CosineFilter::from_coefficients(coefficients))
}

pub fn write_filter(path: &Path, filter: &CosineFilter) -> Result<()> {
    let mut out = String::from("n,g_re,g_im\n");
    for (n, g) in filter.coefficients().iter().enumerate() {
        out.push_str(&format!("{n},{},{}\n", g.re, g.im));
    }
    write_string(path, &out)
}

// ---------------------------------------------------------------------------
// Scaling-function recipes
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Clone)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScalingRecipe {
    Shannon,
    Meyer,
    HatSpline,
    FromClassical { source: Box<serde_json::Value> },
    Orthogonalized { base: Box<ScalingRecipe> },
}

#[derive(Serialize, Deserialize, Clone)]
pub struct ScalingFile {
    pub schema: u32,
    #[serde(flatten)]
    pub recipe: ScalingRecipe,
}

impl ScalingFile {
    pub fn new(recipe: ScalingRecipe) -> Self {
        Self { schema: SCHEMA_VERSION, recipe }
    }
}

/// Parses the `source` payload of a `from-classical` recipe: a
/// spectral profile in the shared JSON profile format.
fn classical_source(path: &Path, source: &serde_json::Value) -> Result<SpectralProfile> {
    let doc: ProfileJson = serde_json::from_value(source.clone())
        .map_err(|e| CliError::schema(format!("{}: from-classical source: {e}", path.display())))?;
    check_schema(doc.schema, "from-classical source")?;
    if doc.kind != "spectral" {
        return Err(CliError::schema(format!(
            "{}: from-classical source must be a spectral profile",
            path.display()
        )));
    }
    let grid = RadialGrid::new(doc.grid.r_max, doc.grid.n_points)
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?;
    if doc.values.len() != doc.grid.n_points {
        return Err(CliError::schema(format!(
            "{}: from-classical source: {} values for {} grid points",
            path.display(),
            doc.values.len(),
            doc.grid.n_points
        )));
    }
    let values = doc.values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
    SpectralProfile::from_samples(grid, values)
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
}

/// Builds the scaling function a recipe describes. Construction
/// failures on well-formed files (two-scale rejection, normalization)
/// are tolerance errors, not schema errors.
pub fn build_scaling(path: &Path, recipe: &ScalingRecipe) -> Result<ScalingFunction> {
    match recipe {
        ScalingRecipe::Shannon => Ok(shannon_scaling()),
        ScalingRecipe::Meyer => Ok(meyer_scaling()),
        ScalingRecipe::HatSpline => Ok(hat_spline()),
        ScalingRecipe::FromClassical { source } => {
            let profile = classical_source(path, source)?;
            from_classical(&profile)
                .map_err(|e| data_violation("building from the classical spectrum", e))
        }
        ScalingRecipe::Orthogonalized { base } => {
            let inner = build_scaling(path, base)?;
            orthogonalize(&inner).map_err(|e| data_violation("orthogonalizing", e))
        }
    }
}

pub fn read_scaling(path: &Path) -> Result<(ScalingFile, ScalingFunction)> {
    let text = read_to_string(path)?;
    let file: ScalingFile = parse_json(path, &text)?;
    check_schema(file.schema, &path.display().to_string())?;
    let phi = build_scaling(path, &file.recipe)?;
    Ok((file, phi))
}

/// Profile JSON payload for embedding a sampled spectrum inside a
/// `from-classical` recipe.
pub fn spectral_profile_value(profile: &SpectralProfile) -> serde_json::Value {
    let grid = profile.grid().expect("sampled profile carries a grid");
    serde_json::json!({
        "schema": SCHEMA_VERSION,
        "kind": "spectral",
        "grid": { "r_max": grid.r_max(), "n_points": grid.n_points() },
        "values": profile.values().iter().map(|v| [v.re, v.im]).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Wavelets
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct WaveletFile {
    pub schema: u32,
    pub scaling: ScalingFile,
    pub filter: Vec<[f64; 2]>,
}

pub fn write_wavelet(path: &Path, scaling: &ScalingFile, filter: &CosineFilter) -> Result<()> {
    let doc = WaveletFile {
        schema: SCHEMA_VERSION,
        scaling: scaling.clone(),
        filter: filter.coefficients().iter().map(|g| [g.re, g.im]).collect(),
    };
    write_json(path, &doc)
}

// ---------------------------------------------------------------------------
// Coefficient vectors and pyramids
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct CoefficientsFile {
    pub schema: u32,
    /// Resolution level the coefficients live on.
    pub j: i32,
    pub values: Vec<[f64; 2]>,
}

pub fn read_coefficients(path: &Path) -> Result<(i32, Vec<Complex64>)> {
    let text = read_to_string(path)?;
    let doc: CoefficientsFile = parse_json(path, &text)?;
    check_schema(doc.schema, &path.display().to_string())?;
    if doc.values.is_empty() {
        return Err(CliError::schema(format!("{}: empty coefficient vector", path.display())));
    }
    Ok((doc.j, doc.values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()))
}

pub fn write_coefficients(path: &Path, j: i32, values: &[Complex64]) -> Result<()> {
    let doc = CoefficientsFile {
        schema: SCHEMA_VERSION,
        j,
        values: values.iter().map(|v| [v.re, v.im]).collect(),
    };
    write_json(path, &doc)
}

#[derive(Serialize, Deserialize)]
struct LevelJson {
    c: Vec<[f64; 2]>,
    d: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct PyramidJson {
    schema: u32,
    j_top: i32,
    depth: usize,
    #[serde(rename = "K")]
    k: usize,
    levels: Vec<LevelJson>,
}

pub fn write_pyramid(path: &Path, pyramid: &CoefficientPyramid) -> Result<()> {
    let pack = |v: &[Complex64]| v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>();
    let doc = PyramidJson {
        schema: SCHEMA_VERSION,
        j_top: pyramid.j_top(),
        depth: pyramid.depth(),
        k: pyramid.top_len(),
        levels: pyramid
            .levels()
            .iter()
            .map(|level| LevelJson {
                c: pack(level.approximation()),
                d: pack(level.detail()),
            })
            .collect(),
    };
    write_json(path, &doc)
}

pub fn read_pyramid(path: &Path) -> Result<CoefficientPyramid> {
    let text = read_to_string(path)?;
    let doc: PyramidJson = parse_json(path, &text)?;
    check_schema(doc.schema, &path.display().to_string())?;
    if doc.levels.len() != doc.depth {
        return Err(CliError::schema(format!(
            "{}: {} levels for depth {}",
            path.display(),
            doc.levels.len(),
            doc.depth
        )));
    }
    let unpack = |v: &[[f64; 2]]| v.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
    let mut levels = Vec::with_capacity(doc.levels.len());
    for level in &doc.levels {
        levels.push(
            PyramidLevel::new(unpack(&level.c), unpack(&level.d))
                .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))?,
        );
    }
    CoefficientPyramid::from_parts(doc.j_top, doc.k, levels)
        .map_err(|e| CliError::schema(format!("{}: {e}", path.display())))
}
