//! Run configuration shared by the library entry points and the CLI.

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// Upper bound for prime sweeps.
    pub pmax: u64,
    /// Number of q-series coefficients (`q^0..=q^N`).
    pub truncation: usize,
    /// Tolerance for floating comparisons of character values.
    pub tol: f64,
    /// Seed for the character-table eigen-solver.
    pub seed: u64,
    pub format: OutputFormat,
    pub cache: Option<PathBuf>,
    pub data_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            pmax: 100_000,
            truncation: 5000,
            tol: 1e-6,
            seed: 20240601,
            format: OutputFormat::Text,
            cache: None,
            data_dir: None,
        }
    }
}

impl Config {
    /// One-line echo of every setting, printed at the top of each report.
    pub fn header(&self) -> String {
        let path = |p: &Option<PathBuf>| p.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "-".into());
        format!(
            "pmax={} N={} tol={:e} seed={} format={} cache={} data_dir={}",
            self.pmax,
            self.truncation,
            self.tol,
            self.seed,
            self.format,
            path(&self.cache),
            path(&self.data_dir)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_header() {
        let c = Config::default();
        assert_eq!(c.pmax, 100_000);
        assert_eq!(c.truncation, 5000);
        assert_eq!(c.header(), "pmax=100000 N=5000 tol=1e-6 seed=20240601 format=text cache=- data_dir=-");
    }
}
