//! Experiment configuration: built-in defaults, then the optional JSON
//! config file, then command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_DEPTH: usize = 20;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;
/// Worker-count override, below `--jobs` and above the config file.
pub const JOBS_ENV: &str = "EMERGENT_JOBS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// The config file: every field optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub model: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub depth: Option<usize>,
    pub output: Option<String>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub tolerance: Option<f64>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Format(format!("config {}: {e}", path.display())))
    }
}

/// Values given on the command line; `None` means not given.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub model: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub depth: Option<usize>,
    pub output: Option<String>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub tolerance: Option<f64>,
}

/// The resolved configuration, recorded in JSON reports. Fields that fell
/// back to a built-in default are listed in `defaulted`.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub command: String,
    pub model: Option<String>,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub samples: usize,
    pub depth: usize,
    pub output: Option<String>,
    pub format: Format,
    pub tolerance: f64,
    pub defaulted: Vec<String>,
    /// Does not affect results, so it is kept out of reports.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

/// Per-command defaults that differ between commands.
pub struct CommandDefaults {
    pub model: Option<&'static str>,
    pub samples: usize,
}

impl ExperimentConfig {
    pub fn resolve(
        command: &str,
        defaults: CommandDefaults,
        file: ConfigFile,
        flags: Overrides,
        jobs_env: Option<String>,
    ) -> Result<Self, CliError> {
        let mut defaulted = Vec::new();
        let mut pick = |name: &str, flag, file| -> bool {
            match (flag, file) {
                (false, false) => {
                    defaulted.push(name.to_string());
                    false
                }
                _ => true,
            }
        };
        let model = flags.model.clone().or(file.model.clone());
        let model = if model.is_none() && defaults.model.is_some() {
            pick("model", false, false);
            defaults.model.map(str::to_string)
        } else {
            model
        };
        pick("seed", flags.seed.is_some(), file.seed.is_some());
        pick("samples", flags.samples.is_some(), file.samples.is_some());
        pick("depth", flags.depth.is_some(), file.depth.is_some());
        pick("format", flags.format.is_some(), file.format.is_some());
        pick("tolerance", flags.tolerance.is_some(), file.tolerance.is_some());

        let env_jobs = match jobs_env {
            Some(v) => Some(v.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!("{JOBS_ENV} must be a positive integer, got `{v}`"))
            })?),
            None => None,
        };
        let jobs = flags.jobs.or(env_jobs).or(file.jobs);
        if jobs == Some(0) {
            return Err(CliError::Usage("worker count must be at least 1".into()));
        }
        let samples = flags.samples.or(file.samples).unwrap_or(defaults.samples);
        let depth = flags.depth.or(file.depth).unwrap_or(DEFAULT_DEPTH);
        if depth < 2 {
            return Err(CliError::Usage(format!("depth must be at least 2, got {depth}")));
        }
        let tolerance = flags.tolerance.or(file.tolerance).unwrap_or(DEFAULT_TOLERANCE);
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(CliError::Usage(format!("tolerance must be a finite non-negative number, got {tolerance}")));
        }
        Ok(ExperimentConfig {
            command: command.to_string(),
            model,
            params: BTreeMap::new(),
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            samples,
            depth,
            output: flags.output.or(file.output),
            format: flags.format.or(file.format).unwrap_or_default(),
            tolerance,
            defaulted,
            jobs,
        })
    }
}
