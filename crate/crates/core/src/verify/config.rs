//! Flat `key = value` configuration for verification runs.
//!
//! ```text
//! # comment
//! checks = msm-left-poly, rl-left-image     # or "all"
//! threads = 4                               # 0: one per core
//! as_printed = false
//! quadrature = true
//! quadrature.max_n = 3
//! quad.node_count = 64
//! quad.tol = 1e-12
//! quad.max_refinements = 6
//! tol.oracle = 1e-10
//! tol.quadrature = 1e-6
//! tol.reduction = 1e-8
//! out = report.jsonl
//! msm-left-poly.params = 0.5, 0.3, 0.2, 0.4, 1.1; 0.2, 0.1, 0.3, 0.5, 0.9
//! msm-left-poly.tau = 2, 3.5
//! msm-left-poly.x = 0.5, 1, 2
//! msm-left-poly.n = 0..=5
//! msm-left-poly.p = 2n+3
//! msm-left-poly.q = 0, 1.5
//! msm-left-poly.tol = 1e-10
//! ```
//!
//! Grid keys replace the built-in grid of that check one symbol at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::{defaults, CheckId};
use crate::error::{Error, Result};
use crate::power::Reading;
use crate::quadrature::QuadConfig;

/// `p` as `slope·n + offset`, so grids can follow the degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PRule {
    pub slope: f64,
    pub offset: f64,
}

impl PRule {
    pub const fn constant(p: f64) -> Self {
        PRule { slope: 0.0, offset: p }
    }

    pub const fn linear(slope: f64, offset: f64) -> Self {
        PRule { slope, offset }
    }

    pub fn at(&self, n: usize) -> f64 {
        self.slope * n as f64 + self.offset
    }

    fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(i) = s.find('n') {
            let slope = match &s[..i] {
                "" | "+" => 1.0,
                "-" => -1.0,
                a => number(a.trim_end_matches('*'))?,
            };
            let offset = match &s[i + 1..] {
                "" => 0.0,
                b => number(b)?,
            };
            Ok(PRule::linear(slope, offset))
        } else {
            Ok(PRule::constant(number(&s)?))
        }
    }
}

impl fmt::Display for PRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.offset) {
            (0.0, o) => write!(f, "{o}"),
            (s, o) if o < 0.0 => write!(f, "{s}n{o}"),
            (s, o) => write!(f, "{s}n+{o}"),
        }
    }
}

/// Values per symbol. Empty lists mean the symbol is unused by the check.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Grid {
    /// Operator parameter tuples, ordered as the family's parameter names.
    pub params: Vec<Vec<f64>>,
    pub tau: Vec<f64>,
    pub x: Vec<f64>,
    pub n: Vec<usize>,
    pub p: Vec<PRule>,
    pub q: Vec<f64>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub oracle: f64,
    pub quadrature: f64,
    pub reduction: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            oracle: 1e-10,
            quadrature: 1e-6,
            reduction: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub checks: Vec<CheckId>,
    pub threads: usize,
    pub reading: Reading,
    pub tol: Tolerances,
    pub quadrature: bool,
    /// Highest degree checked against quadrature.
    pub quadrature_max_n: usize,
    pub quad: QuadConfig,
    pub out: Option<PathBuf>,
    pub grids: BTreeMap<CheckId, Grid>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            checks: CheckId::all(),
            threads: 0,
            reading: Reading::Corrected,
            tol: Tolerances::default(),
            quadrature: true,
            quadrature_max_n: 3,
            quad: QuadConfig::default(),
            out: None,
            grids: CheckId::all().into_iter().map(|c| (c, defaults::grid(c))).collect(),
        }
    }
}

fn number(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Config(format!("'{s}' is not a number")))
}

fn integer(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::Config(format!("'{s}' is not a nonnegative integer")))
}

fn boolean(s: &str) -> Result<bool> {
    match s.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(Error::Config(format!("'{other}' is not a boolean"))),
    }
}

fn list<T>(s: &str, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let v = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(item)
        .collect::<Result<Vec<_>>>()?;
    if v.is_empty() {
        return Err(Error::Config(format!("empty list '{s}'")));
    }
    Ok(v)
}

/// `0..=5`, `0..6` or `0, 2, 4`.
fn degrees(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..=") {
        return Ok((integer(a)?..=integer(b)?).collect());
    }
    if let Some((a, b)) = s.split_once("..") {
        return Ok((integer(a)?..integer(b)?).collect());
    }
    list(s, integer)
}

fn tuples(s: &str) -> Result<Vec<Vec<f64>>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| list(t, number))
        .collect()
}

impl VerifyConfig {
    /// Parses a config file on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = VerifyConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected 'key = value', got '{raw}'", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one key, as a config line or command-line override would.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "checks" => {
                self.checks = if value.trim() == "all" {
                    CheckId::all()
                } else {
                    list(value, |s| s.parse::<CheckId>())?
                }
            }
            "threads" => self.threads = integer(value)?,
            "as_printed" => {
                self.reading = if boolean(value)? {
                    Reading::AsPrinted
                } else {
                    Reading::Corrected
                }
            }
            "quadrature" => self.quadrature = boolean(value)?,
            "quadrature.max_n" => self.quadrature_max_n = integer(value)?,
            "quad.node_count" => self.quad.node_count = integer(value)?,
            "quad.tol" => self.quad.tol = number(value)?,
            "quad.max_refinements" => self.quad.max_refinements = integer(value)?,
            "tol.oracle" => self.tol.oracle = number(value)?,
            "tol.quadrature" => self.tol.quadrature = number(value)?,
            "tol.reduction" => self.tol.reduction = number(value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            _ => {
                let (check, symbol) = key
                    .rsplit_once('.')
                    .ok_or_else(|| Error::Config(format!("unknown key '{key}'")))?;
                let check: CheckId = check.parse()?;
                let grid = self.grids.entry(check).or_default();
                match symbol {
                    "params" => grid.params = tuples(value)?,
                    "tau" => grid.tau = list(value, number)?,
                    "x" => grid.x = list(value, number)?,
                    "n" => grid.n = degrees(value)?,
                    "p" => grid.p = list(value, PRule::parse)?,
                    "q" => grid.q = list(value, number)?,
                    "tol" => grid.tol = Some(number(value)?),
                    _ => return Err(Error::Config(format!("unknown grid symbol '{symbol}' in '{key}'"))),
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for t in [self.tol.oracle, self.tol.quadrature, self.tol.reduction] {
            if !(t > 0.0) {
                return Err(Error::Config(format!("tolerances must be positive (got {t})")));
            }
        }
        if self.quad.node_count < 8 || !(self.quad.tol > 0.0) {
            return Err(Error::Config("quad.node_count >= 8 and quad.tol > 0 required".into()));
        }
        for (check, grid) in &self.grids {
            if let Some(arity) = check.arity() {
                if let Some(bad) = grid.params.iter().find(|t| t.len() != arity) {
                    return Err(Error::Config(format!(
                        "{check}.params: tuple {bad:?} needs {arity} values"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn grid(&self, check: CheckId) -> Grid {
        self.grids.get(&check).cloned().unwrap_or_else(|| defaults::grid(check))
    }
}
