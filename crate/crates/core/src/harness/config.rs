//! Sweep configuration: built-in defaults, a flat `key = value` file, and
//! command-line overrides, applied in that order.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::corpus::FAMILY_LABELS;

use super::HarnessError;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "FRACINEQ_OUT_DIR";

pub const DEFAULT_MARGIN_TOL: f64 = 1e-8;
pub const DEFAULT_AUDIT_TOL: f64 = 1e-9;
pub const DEFAULT_IDENTITY_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 5000;

pub const AUDIT_ALPHA: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
pub const AUDIT_S: [f64; 4] = [0.25, 0.5, 0.75, 1.0];
pub const AUDIT_P: [f64; 4] = [1.5, 2.0, 3.0, 4.0];
pub const IDENTITY_ALPHA: [f64; 3] = [0.5, 1.0, 2.0];
pub const IDENTITY_LAMBDA: [f64; 4] = [0.0, 1.0 / 3.0, 0.5, 1.0];
pub const IDENTITY_X_FRACTION: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
pub const BOUND_Q: [f64; 4] = [1.0, 1.5, 2.0, 3.0];

/// λ ∈ {0, 0.1, …, 1}
pub fn audit_lambda() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

impl FromStr for Format {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(HarnessError::Usage(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

/// Grids left unset fall back to the defaults of the command using them.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub alpha: Option<Vec<f64>>,
    pub lambda: Option<Vec<f64>>,
    pub s: Option<Vec<f64>>,
    pub q: Option<Vec<f64>>,
    pub p: Option<Vec<f64>>,
    pub x_fraction: Option<Vec<f64>>,
    pub interval: (f64, f64),
    pub families: Vec<String>,
    pub tolerance: f64,
    pub audit_tolerance: f64,
    pub seed: u64,
    pub samples: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            alpha: None,
            lambda: None,
            s: None,
            q: None,
            p: None,
            x_fraction: None,
            interval: (0.0, 1.0),
            families: FAMILY_LABELS.iter().map(|s| s.to_string()).collect(),
            tolerance: DEFAULT_MARGIN_TOL,
            audit_tolerance: DEFAULT_AUDIT_TOL,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            output: None,
            format: Format::Json,
        }
    }
}

/// Parses a number, allowing a simple fraction such as `1/3`.
pub fn parse_number(text: &str) -> Result<f64, HarnessError> {
    let t = text.trim();
    let bad = || HarnessError::Usage(format!("not a number: `{t}`"));
    let v = match t.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| bad())?;
            let d: f64 = d.trim().parse().map_err(|_| bad())?;
            n / d
        }
        None => t.parse().map_err(|_| bad())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

pub fn parse_list(text: &str) -> Result<Vec<f64>, HarnessError> {
    let v: Vec<f64> = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_number)
        .collect::<Result<_, _>>()?;
    if v.is_empty() {
        return Err(HarnessError::Usage(format!("empty list `{text}`")));
    }
    Ok(v)
}

fn parse_pair(text: &str) -> Result<(f64, f64), HarnessError> {
    match parse_list(text)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(HarnessError::Usage(format!("expected `a, b`, got `{text}`"))),
    }
}

fn grid_check(name: &str, grid: &Option<Vec<f64>>, ok: impl Fn(f64) -> bool) -> Result<(), HarnessError> {
    if let Some(values) = grid {
        if let Some(v) = values.iter().find(|&&v| !ok(v)) {
            return Err(HarnessError::Usage(format!("{name} value {v} out of range")));
        }
    }
    Ok(())
}

impl SweepConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), HarnessError> {
        let value = value.trim();
        match key.trim() {
            "alpha" => self.alpha = Some(parse_list(value)?),
            "lambda" => self.lambda = Some(parse_list(value)?),
            "s" => self.s = Some(parse_list(value)?),
            "q" => self.q = Some(parse_list(value)?),
            "p" => self.p = Some(parse_list(value)?),
            "x_fraction" => self.x_fraction = Some(parse_list(value)?),
            "interval" => self.interval = parse_pair(value)?,
            "a" => self.interval.0 = parse_number(value)?,
            "b" => self.interval.1 = parse_number(value)?,
            "families" => {
                self.families = value
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect()
            }
            "tolerance" => self.tolerance = parse_number(value)?,
            "audit_tolerance" => self.audit_tolerance = parse_number(value)?,
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| HarnessError::Usage(format!("bad seed `{value}`")))?
            }
            "samples" => {
                self.samples = value
                    .parse()
                    .map_err(|_| HarnessError::Usage(format!("bad sample count `{value}`")))?
            }
            "output" => self.output = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            other => return Err(HarnessError::Usage(format!("unknown config key `{other}`"))),
        }
        Ok(())
    }

    /// Parses the flat `key = value` format; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), HarnessError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| HarnessError::Usage(format!("line {}: expected `key = value`", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        let mut cfg = SweepConfig::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let (a, b) = self.interval;
        if !(a.is_finite() && b.is_finite() && a >= 0.0 && a < b) {
            return Err(HarnessError::Usage(format!("interval [{a}, {b}] must satisfy 0 ≤ a < b")));
        }
        grid_check("alpha", &self.alpha, |v| v > 0.0)?;
        grid_check("lambda", &self.lambda, |v| (0.0..=1.0).contains(&v))?;
        grid_check("s", &self.s, |v| v > 0.0 && v <= 1.0)?;
        grid_check("q", &self.q, |v| v >= 1.0)?;
        grid_check("p", &self.p, |v| v >= 1.0)?;
        grid_check("x_fraction", &self.x_fraction, |v| (0.0..=1.0).contains(&v))?;
        if let Some(f) = self.families.iter().find(|f| !FAMILY_LABELS.contains(&f.as_str())) {
            return Err(HarnessError::Usage(format!("unknown family `{f}`")));
        }
        if !(self.tolerance > 0.0 && self.audit_tolerance > 0.0) {
            return Err(HarnessError::Usage("tolerances must be positive".into()));
        }
        Ok(())
    }

    pub fn alpha_or(&self, default: &[f64]) -> Vec<f64> {
        self.alpha.clone().unwrap_or_else(|| default.to_vec())
    }
    pub fn lambda_or(&self, default: &[f64]) -> Vec<f64> {
        self.lambda.clone().unwrap_or_else(|| default.to_vec())
    }
    pub fn s_or(&self, default: &[f64]) -> Vec<f64> {
        self.s.clone().unwrap_or_else(|| default.to_vec())
    }
    pub fn q_or(&self, default: &[f64]) -> Vec<f64> {
        self.q.clone().unwrap_or_else(|| default.to_vec())
    }
    pub fn p_or(&self, default: &[f64]) -> Vec<f64> {
        self.p.clone().unwrap_or_else(|| default.to_vec())
    }
    pub fn x_fraction_or(&self, default: &[f64]) -> Vec<f64> {
        self.x_fraction.clone().unwrap_or_else(|| default.to_vec())
    }

    /// Explicit output path, else `<dir>/<stem>.<ext>` where `dir` comes
    /// from the environment or defaults to the working directory.
    pub fn output_path(&self, stem: &str) -> PathBuf {
        if let Some(p) = &self.output {
            return p.clone();
        }
        let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
        dir.join(format!("{stem}.{}", self.format.extension()))
    }

    /// `(key, value)` pairs echoed into reports, in a fixed order.
    pub fn echo(&self) -> Vec<(&'static str, String)> {
        let list = |g: &Option<Vec<f64>>| match g {
            Some(v) => v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(","),
            None => "default".to_string(),
        };
        vec![
            ("alpha", list(&self.alpha)),
            ("lambda", list(&self.lambda)),
            ("s", list(&self.s)),
            ("q", list(&self.q)),
            ("p", list(&self.p)),
            ("x_fraction", list(&self.x_fraction)),
            ("interval", format!("{},{}", self.interval.0, self.interval.1)),
            ("families", self.families.join(",")),
            ("tolerance", format!("{:e}", self.tolerance)),
            ("audit_tolerance", format!("{:e}", self.audit_tolerance)),
            ("seed", self.seed.to_string()),
            ("samples", self.samples.to_string()),
            ("format", self.format.to_string()),
        ]
    }
}
