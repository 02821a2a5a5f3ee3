//! `key = value` config files. Keys are the long flag names without the
//! leading dashes; `#` starts a comment.

use crate::error::CliError;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Default)]
pub struct Config {
    values: BTreeMap<String, String>,
}

const KNOWN_KEYS: &[&str] = &[
    "demo",
    "coeffs",
    "N",
    "L",
    "M",
    "k",
    "alpha",
    "QoverM",
    "eta",
    "mu",
    "mass",
    "r-max-factor",
    "horizon-eps",
    "subtract-one",
    "drop-l-phase",
    "output",
    "theta-min",
    "theta-max",
    "steps",
];

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
        Self::parse(&text).map_err(|msg| CliError::Args(format!("{}: {msg}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", i + 1))?;
            let key = key.trim().trim_start_matches("--");
            if !KNOWN_KEYS.contains(&key) {
                return Err(format!("line {}: unknown key `{key}`", i + 1));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Command-line value if present, otherwise the parsed config value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Args(format!("config key `{key}`: cannot parse `{v}`"))),
        }
    }

    pub fn switch(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        Ok(flag || self.pick::<bool>(None, key)?.unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_spacing() {
        let c = Config::parse("# demo file\nN = 6\n  eta=1e-4  # wavenumber\n\nsubtract-one = true\n").unwrap();
        assert_eq!(c.raw("N"), Some("6"));
        assert_eq!(c.pick::<f64>(None, "eta").unwrap(), Some(1e-4));
        assert_eq!(c.pick::<usize>(Some(8), "N").unwrap(), Some(8));
        assert!(c.switch(false, "subtract-one").unwrap());
        assert!(!c.switch(false, "drop-l-phase").unwrap());
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("N 6").is_err());
        let c = Config::parse("N = six").unwrap();
        assert!(c.pick::<usize>(None, "N").is_err());
    }
}
