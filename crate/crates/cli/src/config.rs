//! Run configuration: built-in defaults, overridden by a flat `key = value`
//! file, overridden by flags.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use scatbench::SolverConfig64;

use crate::cli::{Format, GlobalArgs, Method, SourceArg, Sweep, TheoremArg};
use crate::Failure;

const KEYS: &[&str] = &[
    "x_max",
    "step",
    "tol",
    "match_tol",
    "zero_energy_slope_tol",
    "energy_mesh",
    "k_min",
    "k_max",
    "k_steps",
    "format",
    "out",
    "degrees",
    "method",
    "theorem",
    "source",
];

/// Raw key/value pairs from a config file.
#[derive(Debug, Default)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path).map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, Failure> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Failure::usage(format!("config line {}: expected key = value", i + 1)));
            };
            let key = key.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(Failure::usage(format!("config line {}: unknown key `{key}`", i + 1)));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(Self { entries })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.entries
            .get(key)
            .map(|v| v.parse().map_err(|_| Failure::usage(format!("config key `{key}`: cannot parse `{v}`"))))
            .transpose()
    }

    fn choice<T: ValueEnum>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.entries
            .get(key)
            .map(|v| T::from_str(v, true).map_err(|_| Failure::usage(format!("config key `{key}`: invalid value `{v}`"))))
            .transpose()
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub solver: SolverConfig64,
    pub k_min: f64,
    pub k_max: f64,
    pub k_steps: usize,
    pub format: Format,
    /// `None` means standard output.
    pub out: Option<PathBuf>,
    pub degrees: bool,
    /// Method/theorem/source defaults from the config file; the command
    /// decides what applies when neither the flag nor the file sets them.
    pub method: Option<Method>,
    pub theorem: Option<TheoremArg>,
    pub source: Option<SourceArg>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            solver: SolverConfig64::default(),
            k_min: 0.05,
            k_max: 10.0,
            k_steps: 200,
            format: Format::Csv,
            out: None,
            degrees: false,
            method: None,
            theorem: None,
            source: None,
        }
    }
}

impl RunConfig {
    pub fn resolve(global: &GlobalArgs, file: &ConfigFile) -> Result<Self, Failure> {
        let mut cfg = Self::default();
        let s = &mut cfg.solver;
        s.x_max = global.x_max.or(file.get("x_max")?).unwrap_or(s.x_max);
        s.h = global.step.or(file.get("step")?).unwrap_or(s.h);
        s.energy_tol = global.tol.or(file.get("tol")?).unwrap_or(s.energy_tol);
        s.match_tol = file.get("match_tol")?.unwrap_or(s.match_tol);
        s.zero_energy_slope_tol = file.get("zero_energy_slope_tol")?.unwrap_or(s.zero_energy_slope_tol);
        s.energy_mesh = file.get("energy_mesh")?.unwrap_or(s.energy_mesh);
        s.validate().map_err(Failure::from)?;

        cfg.k_min = file.get("k_min")?.unwrap_or(cfg.k_min);
        cfg.k_max = file.get("k_max")?.unwrap_or(cfg.k_max);
        cfg.k_steps = file.get("k_steps")?.unwrap_or(cfg.k_steps);
        cfg.format = global.format.or(file.choice("format")?).unwrap_or(cfg.format);
        cfg.out = global.out.clone().or(file.get::<PathBuf>("out")?).filter(|p| p.as_os_str() != "-");
        cfg.degrees = global.degrees || file.get("degrees")?.unwrap_or(false);
        cfg.method = file.choice("method")?;
        cfg.theorem = file.choice("theorem")?;
        cfg.source = file.choice("source")?;
        Ok(cfg)
    }

    /// Applies per-command sweep flags and checks the sweep.
    pub fn with_sweep(mut self, sweep: &Sweep) -> Result<Self, Failure> {
        self.k_min = sweep.k_min.unwrap_or(self.k_min);
        self.k_max = sweep.k_max.unwrap_or(self.k_max);
        self.k_steps = sweep.k_steps.unwrap_or(self.k_steps);
        if !(self.k_min > 0.0) || !self.k_max.is_finite() {
            return Err(Failure::usage(format!("k_min must be positive, got {}", self.k_min)));
        }
        if !(self.k_max > self.k_min) {
            return Err(Failure::usage(format!("k_max must exceed k_min, got {} <= {}", self.k_max, self.k_min)));
        }
        if self.k_steps < 2 {
            return Err(Failure::usage(format!("k_steps must be at least 2, got {}", self.k_steps)));
        }
        Ok(self)
    }

    pub fn k_grid(&self) -> Vec<f64> {
        scatbench::numeric::geometric_grid(self.k_min, self.k_max, self.k_steps)
    }
}
