//! Shared pipeline configuration, loadable from TOML and overridable by
//! command-line flags.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::context::ContextLevel;
use crate::corpus::DedupMode;
use crate::error::ConfigError;

fn default_budget() -> usize {
    1024
}

fn default_fractions() -> [f64; 3] {
    [0.8, 0.1, 0.1]
}

fn default_seed() -> u64 {
    0
}

fn default_levels() -> Vec<ContextLevel> {
    ContextLevel::ALL.to_vec()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// Token budget for context renderings.
    #[serde(default = "default_budget")]
    pub budget: usize,
    /// Levels the analyze stage covers.
    #[serde(default = "default_levels")]
    pub levels: Vec<ContextLevel>,
    /// Train/validation/test pair fractions.
    #[serde(default = "default_fractions")]
    pub fractions: [f64; 3],
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub dedup_mode: DedupMode,
    /// Extra testing-API lists (JSON file), see `ApiCatalog`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub api_lists: Option<PathBuf>,
    /// Runner configuration for the evaluate stage.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runner_config: Option<PathBuf>,
    /// Parallel job limit; 0 means one per CPU.
    #[serde(default)]
    pub jobs: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            budget: default_budget(),
            levels: default_levels(),
            fractions: default_fractions(),
            seed: default_seed(),
            dedup_mode: DedupMode::default(),
            api_lists: None,
            runner_config: None,
            jobs: 0,
        }
    }
}

impl PipelineConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Unreadable {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        let cfg: PipelineConfig =
            toml::from_str(&text).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.budget < 1 {
            return Err(ConfigError::Invalid("budget must be >= 1".to_string()));
        }
        let sum: f64 = self.fractions.iter().sum();
        if (sum - 1.0).abs() > 1e-9 || self.fractions.iter().any(|f| *f <= 0.0) {
            return Err(ConfigError::Invalid(format!(
                "fractions must be positive and sum to 1, got {:?}",
                self.fractions
            )));
        }
        if self.levels.is_empty() {
            return Err(ConfigError::Invalid("levels must be nonempty".to_string()));
        }
        Ok(())
    }
}
