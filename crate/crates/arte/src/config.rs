//! Flat key-value configuration files.
//!
//! Grammar, line by line:
//!
//! ```text
//! # comment                 (also allowed after a value)
//! key = value               keys are case-insensitive; later scalar keys win
//! artist = Name, 650000, 0.11, 0.18, 14, 4500    (repeatable keys append)
//! ```
//!
//! Blank lines are ignored. CLI flags override file values.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::ingest::{FilterConfig, Medium, MediumAliases};
use crate::synth::{ArtistSpec, SynthSpec};

/// A parsed key-value file. Values keep their literal text; typed access
/// goes through the `get_*` helpers.
#[derive(Debug, Clone, Default)]
pub struct KvConfig {
    entries: BTreeMap<String, Vec<String>>,
}

impl KvConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::arg(format!(
                    "config line {}: expected `key = value`, found `{raw}`",
                    lineno + 1
                )));
            };
            entries
                .entry(key.trim().to_lowercase())
                .or_default()
                .push(value.trim().to_string());
        }
        Ok(KvConfig { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::arg(format!("cannot read config `{}`: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Last value for a scalar key.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .get(key)
            .and_then(|v| v.last())
            .map(String::as_str)
    }

    /// All values for a repeatable key.
    pub fn get_all(&self, key: &str) -> &[String] {
        self.entries.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn get_parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| Error::arg(format!("config key `{key}`: invalid value `{raw}`"))),
        }
    }

    pub fn get_date(&self, key: &str) -> Result<Option<NaiveDate>> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => NaiveDate::parse_from_str(raw, "%Y-%m-%d")
                .map(Some)
                .map_err(|_| Error::arg(format!("config key `{key}`: invalid date `{raw}`"))),
        }
    }

    /// Build a [`FilterConfig`], overriding defaults with any of
    /// `allowed_mediums`, `min_history_years`, `min_avg_price`,
    /// `period_start`, `period_end`, and repeatable
    /// `medium_alias = text, medium` lines.
    pub fn filter_config(&self) -> Result<FilterConfig> {
        let mut config = FilterConfig::default();
        if let Some(raw) = self.get("allowed_mediums") {
            let aliases = MediumAliases::default();
            config.allowed_mediums = raw
                .split(',')
                .map(|m| {
                    let medium = aliases.resolve(m);
                    if medium == Medium::Other && m.trim().to_lowercase() != "other" {
                        return Err(Error::arg(format!("unknown medium `{}`", m.trim())));
                    }
                    Ok(medium)
                })
                .collect::<Result<_>>()?;
        }
        if let Some(v) = self.get_parsed("min_history_years")? {
            config.min_history_years = v;
        }
        if let Some(v) = self.get_parsed("min_avg_price")? {
            config.min_avg_price = v;
        }
        if let Some(v) = self.get_date("period_start")? {
            config.period_start = v;
        }
        if let Some(v) = self.get_date("period_end")? {
            config.period_end = v;
        }
        for alias in self.get_all("medium_alias") {
            let Some((text, medium)) = alias.rsplit_once(',') else {
                return Err(Error::arg(format!(
                    "medium_alias expects `text, medium`, found `{alias}`"
                )));
            };
            let resolved = MediumAliases::default().resolve(medium);
            config.medium_aliases.insert(text, resolved);
        }
        config.validate()?;
        Ok(config)
    }

    /// Build a [`SynthSpec`] from `seed`, `start_year`, `end_year`,
    /// `benchmark_growth`, `benchmark_vol`, and repeatable
    /// `artist = name, base_price, annual_growth, noise_sd, sales_per_year, mean_area`
    /// lines. Artists are required.
    pub fn synth_spec(&self) -> Result<SynthSpec> {
        let mut spec = SynthSpec::demo();
        spec.artists.clear();
        if let Some(v) = self.get_parsed("seed")? {
            spec.seed = v;
        }
        if let Some(v) = self.get_parsed("start_year")? {
            spec.start_year = v;
        }
        if let Some(v) = self.get_parsed("end_year")? {
            spec.end_year = v;
        }
        if let Some(v) = self.get_parsed("benchmark_growth")? {
            spec.benchmark_growth = v;
        }
        if let Some(v) = self.get_parsed("benchmark_vol")? {
            spec.benchmark_vol = v;
        }
        for line in self.get_all("artist") {
            let parts: Vec<&str> = line.split(',').map(str::trim).collect();
            if parts.len() != 6 {
                return Err(Error::arg(format!(
                    "artist expects `name, base_price, annual_growth, noise_sd, sales_per_year, mean_area`, found `{line}`"
                )));
            }
            let num = |i: usize, what: &str| -> Result<f64> {
                parts[i].parse().map_err(|_| {
                    Error::arg(format!(
                        "artist `{}`: invalid {what} `{}`",
                        parts[0], parts[i]
                    ))
                })
            };
            spec.artists.push(ArtistSpec {
                name: parts[0].to_string(),
                base_price: num(1, "base_price")?,
                annual_growth: num(2, "annual_growth")?,
                noise_sd: num(3, "noise_sd")?,
                sales_per_year: parts[4].parse().map_err(|_| {
                    Error::arg(format!(
                        "artist `{}`: invalid sales_per_year `{}`",
                        parts[0], parts[4]
                    ))
                })?,
                mean_area: num(5, "mean_area")?,
            });
        }
        spec.validate()?;
        Ok(spec)
    }
}
