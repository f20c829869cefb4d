use std::path::{Path, PathBuf};

use clap::ValueEnum;
use iwa_scalars::{sample_points, ParamPoint, SampleSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[default]
    Table,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slice {
    /// Δ_[γ]: t31 = t32 = 0.
    Essential,
    Full,
}

/// Contents of a `--config` file; every field mirrors the flag of the same name.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub t: Vec<String>,
    pub sample: Option<usize>,
    pub seed: Option<u64>,
    pub max_den: Option<u32>,
    pub slice: Option<Slice>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PointSource {
    Explicit(Vec<ParamPoint>),
    Sampled(SampleSpec),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub points: PointSource,
    pub slice: Option<Slice>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            points: PointSource::Explicit(vec![ParamPoint::zero()]),
            slice: None,
            format: Format::Table,
            output: None,
            seed: 0,
        }
    }
}

/// Flags as parsed; `None` means "not given on the command line".
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub t: Vec<String>,
    pub sample: Option<usize>,
    pub seed: Option<u64>,
    pub max_den: Option<u32>,
    pub slice: Option<Slice>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub config: Option<PathBuf>,
}

fn parse_points(items: &[String]) -> Result<Vec<ParamPoint>, CliError> {
    items
        .iter()
        .map(|s| s.parse::<ParamPoint>().map_err(|e| CliError::Usage(format!("--t {s:?}: {e}"))))
        .collect()
}

impl RunConfig {
    /// Precedence: flag, then config file, then default; `IWA_SEED` beats all.
    pub fn resolve(flags: &Flags, env_seed: Option<&str>) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let mut seed = flags.seed.or(file.seed).unwrap_or(0);
        if let Some(s) = env_seed {
            seed = s
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("IWA_SEED={s:?} is not an unsigned integer")))?;
        }
        let slice = flags.slice.or(file.slice);
        let t = if flags.t.is_empty() { &file.t } else { &flags.t };
        let points = match (t.is_empty(), flags.sample.or(file.sample)) {
            (false, Some(_)) => return Err(CliError::Usage("--t and --sample are exclusive".into())),
            (false, None) => PointSource::Explicit(parse_points(t)?),
            (true, Some(count)) => PointSource::Sampled(SampleSpec {
                seed,
                count,
                max_den: flags.max_den.or(file.max_den).unwrap_or(8),
                essential: slice != Some(Slice::Full),
            }),
            (true, None) => PointSource::Explicit(vec![ParamPoint::zero()]),
        };
        Ok(RunConfig {
            points,
            slice,
            format: flags.format.or(file.format).unwrap_or_default(),
            output: flags.output.clone().or(file.output),
            seed,
        })
    }

    pub fn points(&self) -> Vec<ParamPoint> {
        let pts = match &self.points {
            PointSource::Explicit(v) => v.clone(),
            PointSource::Sampled(spec) => sample_points(spec),
        };
        match self.slice {
            Some(Slice::Essential) => pts.into_iter().map(ParamPoint::essential).collect(),
            _ => pts,
        }
    }
}
