//! Experiment configuration: a flat `key = value` text file, one pair per
//! line, `#` starting a comment.

use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use specsat_core::exact;
use specsat_core::spectral::DEFAULT_TOL;
use specsat_core::subgraph::{DEFAULT_BUDGET, DEFAULT_COLORING_CAP};
use specsat_core::theorems::{LeNsmmReading, StabilityReading, TheoremId, TheoremParams};

pub use specsat_core::random::DEFAULT_SEED;

/// Largest order the exhaustive mode accepts.
pub const EXHAUSTIVE_MAX_N: usize = 8;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{key}: {msg}")]
    Value { key: String, msg: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    FamilySweep,
    RandomHunt,
    Tightness,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.replace('-', "_").as_str() {
            "exhaustive" => Self::Exhaustive,
            "family_sweep" | "family" => Self::FamilySweep,
            "random_hunt" | "hunt" => Self::RandomHunt,
            "tightness" => Self::Tightness,
            _ => return Err(format!("unknown mode {s:?}")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `T_r(n)`.
    Turan,
    /// `T_r(n)` plus an edge inside the first part.
    TuranPlusEdge,
    /// `T_r(n)` minus one cross edge.
    TuranMinusEdge,
    /// `K_r^+(2, s_2, …, s_r)` with the other parts balanced over `n − 2`.
    KrPlus,
    /// An `r`-clique joined to an independent set of `n − r` vertices.
    Book,
}

impl Family {
    pub const ALL: [Family; 5] = [Self::Turan, Self::TuranPlusEdge, Self::TuranMinusEdge, Self::KrPlus, Self::Book];

    pub fn name(self) -> &'static str {
        match self {
            Self::Turan => "turan",
            Self::TuranPlusEdge => "turan_plus_edge",
            Self::TuranMinusEdge => "turan_minus_edge",
            Self::KrPlus => "kr_plus",
            Self::Book => "book",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.replace('-', "_");
        Ok(match key.as_str() {
            "turan_plus" | "turan+e" => Self::TuranPlusEdge,
            "turan_minus" | "turan-e" => Self::TuranMinusEdge,
            "kplus" => Self::KrPlus,
            _ => return Self::ALL.into_iter().find(|f| f.name() == key).ok_or_else(|| format!("unknown family {s:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub r: Vec<usize>,
    pub theorems: Vec<TheoremId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Samples per `(n, r)` for the randomized modes.
    pub trials: u64,
    pub budget: u64,
    pub tol: f64,
    pub coloring_cap: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    pub lensmm: LeNsmmReading,
    pub stability: StabilityReading,
    /// Exhaustive mode: check this many seeded uniform samples instead of
    /// every labelled graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_cap: Option<u64>,
    pub families: Vec<Family>,
    /// Random hunt: fixed edge count; otherwise `e(T_r(n)) + edge_offset`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<u64>,
    pub edge_offset: i64,
    /// Tightness: edge density `⌈(1−ε)n²/2⌉`, capped at `C(n, 2)`.
    pub epsilon: f64,
    pub c_grid: Vec<f64>,
    /// Cap on stored counterexample and escalation records; counts stay exact.
    pub max_records: usize,
    /// Family sweep: structural statistics only up to this order.
    pub stats_max_n: usize,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Exhaustive,
            n_min: 1,
            n_max: 5,
            r: vec![2],
            theorems: vec![TheoremId::FactSTT],
            seed: None,
            trials: 100,
            budget: DEFAULT_BUDGET,
            tol: DEFAULT_TOL,
            coloring_cap: DEFAULT_COLORING_CAP,
            c: None,
            b: None,
            lensmm: LeNsmmReading::AsStated,
            stability: StabilityReading::Theorem,
            sample_cap: None,
            families: Family::ALL.to_vec(),
            edges: None,
            edge_offset: 1,
            epsilon: 0.5,
            c_grid: vec![0.25, 0.5, 1.0, 1.5, 2.0],
            max_records: 1000,
            stats_max_n: 60,
            output: None,
            threads: None,
        }
    }
}

/// Non-negative integer, also written in scientific notation (`1e8`).
pub fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Ok(x) = s.parse::<u64>() {
        return Ok(x);
    }
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    let q = exact::decimal_from_f64(x).ok_or_else(|| format!("not finite: {s:?}"))?;
    if !q.is_integer() || q < exact::int(0) {
        return Err(format!("not a non-negative integer: {s:?}"));
    }
    num_traits::ToPrimitive::to_u64(&q.to_integer()).ok_or_else(|| format!("too large: {s:?}"))
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("not a number: {s:?}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("not finite: {s:?}"))
    }
}

fn parse_usize(s: &str) -> Result<usize, String> {
    usize::try_from(parse_count(s)?).map_err(|_| format!("too large: {s:?}"))
}

/// `7`, `3..8` or `3-8`, both ends inclusive.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let s = s.trim();
    let (a, b) = s.split_once("..=").or_else(|| s.split_once("..")).or_else(|| s.split_once('-')).unwrap_or((s, s));
    let (a, b) = (parse_usize(a)?, parse_usize(b)?);
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

/// Comma-separated items, or an inclusive range for integers.
pub fn parse_list<T, F: Fn(&str) -> Result<T, String>>(s: &str, item: F) -> Result<Vec<T>, String> {
    let out: Vec<T> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(item).collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, String> {
    if !s.contains(',') && (s.contains("..") || s.contains('-')) {
        let (a, b) = parse_range(s)?;
        return Ok((a..=b).collect());
    }
    parse_list(s, parse_usize)
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg = Self::parse_unvalidated(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads the keys without checking the invariants, so that overrides
    /// can be applied first.
    pub fn parse_unvalidated(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax { line: i + 1, msg: format!("expected key = value, got {line:?}") })?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    /// Sets one key from its text value; shared by the file parser and
    /// command-line overrides.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let wrap = |msg: String| ConfigError::Value { key: key.to_string(), msg };
        match key {
            "mode" => self.mode = value.parse().map_err(wrap)?,
            "n" => (self.n_min, self.n_max) = parse_range(value).map_err(wrap)?,
            "n_min" => self.n_min = parse_usize(value).map_err(wrap)?,
            "n_max" => self.n_max = parse_usize(value).map_err(wrap)?,
            "r" => self.r = parse_usize_list(value).map_err(wrap)?,
            "theorem" | "theorems" => {
                self.theorems = parse_list(value, |t| t.parse::<TheoremId>().map_err(|e| e.to_string())).map_err(wrap)?
            }
            "seed" => self.seed = Some(parse_count(value).map_err(wrap)?),
            "trials" => self.trials = parse_count(value).map_err(wrap)?,
            "budget" => self.budget = parse_count(value).map_err(wrap)?,
            "tol" => self.tol = parse_real(value).map_err(wrap)?,
            "coloring_cap" => self.coloring_cap = parse_count(value).map_err(wrap)?,
            "c" => self.c = Some(parse_real(value).map_err(wrap)?),
            "b" => self.b = Some(parse_real(value).map_err(wrap)?),
            "lensmm" => {
                self.lensmm = match value {
                    "as_stated" => LeNsmmReading::AsStated,
                    "clique_order_plus_one" => LeNsmmReading::CliqueOrderPlusOne,
                    _ => return Err(wrap("expected as_stated or clique_order_plus_one".into())),
                }
            }
            "stability" => {
                self.stability = match value {
                    "theorem" => StabilityReading::Theorem,
                    "tstab" => StabilityReading::Tstab,
                    _ => return Err(wrap("expected theorem or tstab".into())),
                }
            }
            "sample_cap" => self.sample_cap = Some(parse_count(value).map_err(wrap)?),
            "families" | "family" => self.families = parse_list(value, str::parse).map_err(wrap)?,
            "edges" | "m" => self.edges = Some(parse_count(value).map_err(wrap)?),
            "edge_offset" => self.edge_offset = value.parse().map_err(|_| wrap(format!("not an integer: {value:?}")))?,
            "epsilon" => self.epsilon = parse_real(value).map_err(wrap)?,
            "c_grid" => self.c_grid = parse_list(value, parse_real).map_err(wrap)?,
            "max_records" => self.max_records = parse_usize(value).map_err(wrap)?,
            "stats_max_n" => self.stats_max_n = parse_usize(value).map_err(wrap)?,
            "output" => self.output = Some(PathBuf::from(value)),
            "threads" => self.threads = Some(parse_usize(value).map_err(wrap)?),
            _ => return Err(ConfigError::Value { key: key.to_string(), msg: "unknown key".into() }),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.n_min > self.n_max {
            return bad("n_min exceeds n_max");
        }
        if self.r.iter().any(|&r| r < 2) {
            return bad("every r must be at least 2");
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return bad("tol must be positive");
        }
        match self.mode {
            Mode::Exhaustive if self.n_max > EXHAUSTIVE_MAX_N => return bad("exhaustive mode requires n <= 8"),
            Mode::Exhaustive if self.sample_cap.is_some() && self.seed.is_none() => {
                return bad("sampled exhaustive mode requires a seed")
            }
            Mode::RandomHunt | Mode::Tightness if self.seed.is_none() => return bad("randomized modes require a seed"),
            Mode::Tightness if !(self.epsilon > 0.0 && self.epsilon < 1.0) => return bad("epsilon must lie in (0, 1)"),
            _ => {}
        }
        if self.c_grid.iter().any(|&c| c < 0.0) {
            return bad("c_grid values must be non-negative");
        }
        if self.mode != Mode::Tightness && self.theorems.is_empty() {
            return bad("no theorems selected");
        }
        for &r in &self.r {
            self.params(r).map_err(ConfigError::Invalid)?;
        }
        Ok(())
    }

    /// Checker parameters for one `r`.
    pub fn params(&self, r: usize) -> Result<TheoremParams, String> {
        let mut p = TheoremParams::new(r).with_tol(self.tol).with_budget(self.budget);
        p.c = self.c;
        p.b = self.b;
        p.coloring_cap = self.coloring_cap;
        p.lensmm = self.lensmm;
        p.stability = self.stability;
        if p.c.is_some_and(|c| c < 0.0) || p.b.is_some_and(|b| b < 0.0) {
            return Err("b and c must be non-negative".into());
        }
        Ok(p)
    }
}
