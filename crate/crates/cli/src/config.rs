use std::path::{Path, PathBuf};

use alcove_charge::kmodel::{parse_model, KModel};
use alcove_charge::root_system::RootSystem;
use alcove_charge::rvsc::DEFAULT_RESOLUTION;
use alcove_charge::braid::DEFAULT_SEARCH_BOUND;
use serde::Deserialize;

use crate::{Failure, RsArg};

pub const DEFAULT_FILE: &str = "alcove-charge.json";

/// Contents of `alcove-charge.json`. Command-line flags take precedence.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub schema: u32,
    /// Root system name, e.g. `A2`.
    pub rs: Option<String>,
    /// `kleinian` or `zero-section:...`; defaults to `kleinian`.
    pub model: Option<String>,
    /// Sampling grid density and default scan steps.
    #[serde(default = "default_resolution")]
    pub resolution: u32,
    /// Node bound for the braid word search.
    #[serde(default = "default_bound")]
    pub bound: usize,
    /// Uniform samples per path segment when tracking phases.
    #[serde(default = "default_steps")]
    pub steps: u32,
    pub jobs: Option<usize>,
    /// Default CSV trace path for `cover transport`.
    pub trace: Option<PathBuf>,
    /// Default output path for `charge scan`.
    pub out: Option<PathBuf>,
}

fn default_resolution() -> u32 {
    DEFAULT_RESOLUTION
}

fn default_bound() -> usize {
    DEFAULT_SEARCH_BOUND
}

fn default_steps() -> u32 {
    32
}

impl Default for Config {
    fn default() -> Self {
        Config {
            schema: 1,
            rs: None,
            model: None,
            resolution: default_resolution(),
            bound: default_bound(),
            steps: default_steps(),
            jobs: None,
            trace: None,
            out: None,
        }
    }
}

impl Config {
    /// Reads the given file, or `alcove-charge.json` when it exists, and validates it.
    pub fn load(path: Option<&Path>) -> Result<Config, Failure> {
        let path = match path {
            Some(p) => p.to_path_buf(),
            None if Path::new(DEFAULT_FILE).exists() => PathBuf::from(DEFAULT_FILE),
            None => return Ok(Config::default()),
        };
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let cfg: Config =
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        cfg.validate()
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.schema != 1 {
            return Err(format!("unsupported schema {}", self.schema));
        }
        if self.resolution == 0 || self.bound == 0 || self.steps == 0 {
            return Err("resolution, bound and steps must be positive".into());
        }
        if self.jobs == Some(0) {
            return Err("jobs must be positive".into());
        }
        if let Some(name) = &self.rs {
            let rs = RootSystem::from_name(name).map_err(|e| e.to_string())?;
            if let Some(m) = &self.model {
                parse_model(m, &rs).map_err(|e| e.to_string())?;
            }
        }
        Ok(())
    }

    pub fn root_system(&self, flag: Option<&str>) -> Result<RootSystem, Failure> {
        let name = flag
            .or(self.rs.as_deref())
            .ok_or_else(|| Failure::Usage("no root system given (--rs or config)".into()))?;
        Ok(RootSystem::from_name(name)?)
    }

    pub fn model(&self, rs: &RsArg, flag: Option<&str>) -> Result<KModel, Failure> {
        let rs = self.root_system(rs.rs.as_deref())?;
        let name = flag.or(self.model.as_deref()).unwrap_or("kleinian");
        Ok(parse_model(name, &rs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<(), String> {
        let cfg: Config = serde_json::from_str(text).map_err(|e| e.to_string())?;
        cfg.validate()
    }

    #[test]
    fn defaults_fill_missing_fields() {
        let cfg: Config = serde_json::from_str(r#"{"schema": 1}"#).unwrap();
        assert_eq!((cfg.resolution, cfg.bound, cfg.steps), (16, 100_000, 32));
    }

    #[test]
    fn validation() {
        assert!(parse(r#"{"schema": 1, "rs": "B2", "model": "zero-section:0,0"}"#).is_ok());
        assert!(parse(r#"{"schema": 1, "rs": "B2", "model": "kleinian"}"#).is_err());
        assert!(parse(r#"{"schema": 1, "rs": "Q7"}"#).is_err());
        assert!(parse(r#"{"schema": 1, "steps": 0}"#).is_err());
        assert!(parse(r#"{"schema": 1, "colour": "red"}"#).is_err());
    }
}
