//! Backend configuration: file, environment, then per-call overrides.

use serde::Deserialize;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },
}

/// Settings for both backends. Every field has a default, so an absent file
/// or empty table is fine.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct VerifierConfig {
    /// External model-checker binary; `None` disables the external backend.
    pub tool_path: Option<PathBuf>,
    /// Arguments placed before the file name; the machine-readable output
    /// flag lives here so callers can replace it wholesale.
    pub tool_args: Vec<String>,
    /// Wall-clock budget per external query, in seconds.
    pub timeout_secs: u64,
    /// Word-length bound for the internal backend.
    pub bound: usize,
    /// Largest number of words the internal backend will enumerate.
    pub enumeration_budget: u64,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig {
            tool_path: None,
            tool_args: vec!["-json".into()],
            timeout_secs: 60,
            bound: 8,
            enumeration_budget: 2_000_000,
        }
    }
}

impl VerifierConfig {
    /// Parse a TOML file; missing keys fall back to defaults.
    pub fn from_file(path: &Path) -> Result<VerifierConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        toml::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })
    }

    /// Apply environment overrides on top of `self`:
    /// `CRASP_TOOL_PATH`, `CRASP_TOOL_ARGS` (whitespace-split),
    /// `CRASP_TIMEOUT_SECS`, `CRASP_BOUND`, `CRASP_ENUM_BUDGET`.
    pub fn with_env(mut self) -> VerifierConfig {
        if let Ok(p) = std::env::var("CRASP_TOOL_PATH") {
            if !p.is_empty() {
                self.tool_path = Some(PathBuf::from(p));
            }
        }
        if let Ok(a) = std::env::var("CRASP_TOOL_ARGS") {
            self.tool_args = a.split_whitespace().map(str::to_string).collect();
        }
        if let Ok(t) = std::env::var("CRASP_TIMEOUT_SECS") {
            if let Ok(t) = t.parse() {
                self.timeout_secs = t;
            }
        }
        if let Ok(b) = std::env::var("CRASP_BOUND") {
            if let Ok(b) = b.parse() {
                self.bound = b;
            }
        }
        if let Ok(b) = std::env::var("CRASP_ENUM_BUDGET") {
            if let Ok(b) = b.parse() {
                self.enumeration_budget = b;
            }
        }
        self
    }

    /// File config (if given) plus environment overrides.
    pub fn load(path: Option<&Path>) -> Result<VerifierConfig, ConfigError> {
        let base = match path {
            Some(p) => VerifierConfig::from_file(p)?,
            None => VerifierConfig::default(),
        };
        Ok(base.with_env())
    }
}
