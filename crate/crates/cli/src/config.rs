use std::path::Path;

use anyhow::{bail, Context, Result};
use cgwd_core::arith::{parse_rational, Rational};
use clap::ValueEnum;
use serde::Deserialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Settings shared by all subcommands; flags override the config file.
#[derive(Clone, PartialEq, Debug)]
pub struct CliConfig {
    pub format: Format,
    pub r0: Rational,
    pub seed: u64,
    pub n_min: u32,
    pub n_max: u32,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            format: Format::Json,
            r0: cgwd_core::analysis::default_r0(),
            seed: 0,
            n_min: 4,
            n_max: 12,
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format: Option<Format>,
    r0: Option<String>,
    seed: Option<u64>,
    n_min: Option<u32>,
    n_max: Option<u32>,
}

impl CliConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let mut cfg = CliConfig::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let file: ConfigFile =
                toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            if let Some(f) = file.format {
                cfg.format = f;
            }
            if let Some(r0) = file.r0 {
                cfg.r0 = parse_rational(&r0)?;
            }
            if let Some(s) = file.seed {
                cfg.seed = s;
            }
            if let Some(n) = file.n_min {
                cfg.n_min = n;
            }
            if let Some(n) = file.n_max {
                cfg.n_max = n;
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let one = Rational::from_integer(1.into());
        if self.r0 == Rational::from_integer(0.into()) || self.r0 == one || self.r0 == -one {
            bail!("r0 must not be 0, 1 or -1 (got {})", self.r0);
        }
        if self.n_min < 4 || self.n_max < 4 {
            bail!(
                "rank bounds must be at least 4 (got {}..={})",
                self.n_min,
                self.n_max
            );
        }
        if self.n_min > self.n_max {
            bail!("empty rank range {}..={}", self.n_min, self.n_max);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(f: impl FnOnce(&mut CliConfig)) -> CliConfig {
        let mut c = CliConfig::default();
        f(&mut c);
        c
    }

    #[test]
    fn default_is_valid() {
        CliConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_degenerate_points_and_small_ranks() {
        for r0 in ["0", "1", "-1"] {
            assert!(with(|c| c.r0 = parse_rational(r0).unwrap())
                .validate()
                .is_err());
        }
        assert!(with(|c| c.n_min = 3).validate().is_err());
        assert!(with(|c| (c.n_min, c.n_max) = (7, 6)).validate().is_err());
        with(|c| c.r0 = parse_rational("-2/7").unwrap())
            .validate()
            .unwrap();
    }

    #[test]
    fn file_overrides_defaults() {
        let dir = std::env::temp_dir().join(format!("cgwd-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.toml");
        std::fs::write(&path, "format = \"text\"\nr0 = \"7/2\"\nseed = 9\n").unwrap();
        let c = CliConfig::load(Some(&path)).unwrap();
        assert_eq!((c.format, c.seed, c.n_max), (Format::Text, 9, 12));
        assert_eq!(c.r0, parse_rational("7/2").unwrap());
        std::fs::write(&path, "colour = \"red\"\n").unwrap();
        assert!(CliConfig::load(Some(&path)).is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
