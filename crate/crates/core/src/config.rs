//! Run configuration: a flat JSON object whose keys are model parameters and
//! run settings. Missing keys take the defaults of [`RunConfig::default`].

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{Map, Number, Value};
use thiserror::Error;

use crate::error::Error;
use crate::gdm::GdmParams;

pub const DEFAULT_HORIZON: f64 = 1.0;
pub const DEFAULT_STEPS: usize = 320;
pub const DEFAULT_STEP_COUNTS: [usize; 6] = [10, 20, 40, 80, 160, 320];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("malformed configuration: {0}")]
    Syntax(#[from] serde_json::Error),

    #[error("configuration must be a JSON object")]
    NotAnObject,

    #[error("unknown key `{0}`")]
    UnknownKey(String),

    #[error("key `{key}`: {reason}")]
    BadValue { key: String, reason: String },

    #[error("override `{0}` is not of the form key=value")]
    BadOverride(String),

    #[error("key `{key}`: {source}")]
    Invalid {
        key: &'static str,
        #[source]
        source: Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Simulate,
    Phase,
    Converge,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Simulate => "simulate",
            Mode::Phase => "phase",
            Mode::Converge => "converge",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simulate" => Ok(Mode::Simulate),
            "phase" => Ok(Mode::Phase),
            "converge" => Ok(Mode::Converge),
            other => Err(format!(
                "unknown mode `{other}`, expected simulate, phase or converge"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: GdmParams,
    pub horizon: f64,
    pub steps: usize,
    pub mode: Mode,
    pub output_path: Option<PathBuf>,
    /// Doubling list of coarse step counts for convergence studies.
    pub step_counts: Option<Vec<usize>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: GdmParams::default(),
            horizon: DEFAULT_HORIZON,
            steps: DEFAULT_STEPS,
            mode: Mode::default(),
            output_path: None,
            step_counts: None,
        }
    }
}

fn bad(key: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::BadValue {
        key: key.to_string(),
        reason: reason.into(),
    }
}

fn as_real(key: &str, v: &Value) -> Result<f64, ConfigError> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| bad(key, format!("expected a finite number, got {v}")))
}

fn as_count(key: &str, v: &Value) -> Result<usize, ConfigError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| bad(key, format!("expected a non-negative integer, got {v}")))
}

/// Parses a configuration document and validates the result.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let map = parse_object(text)?;
    RunConfig::from_map(&map)
}

/// Parses the raw JSON object without interpreting keys.
pub fn parse_object(text: &str) -> Result<Map<String, Value>, ConfigError> {
    match serde_json::from_str::<Value>(text)? {
        Value::Object(map) => Ok(map),
        _ => Err(ConfigError::NotAnObject),
    }
}

/// Applies a `key=value` override to a raw configuration object. The value is
/// read as JSON when possible and as a bare string otherwise.
pub fn apply_override(map: &mut Map<String, Value>, assignment: &str) -> Result<(), ConfigError> {
    let (key, raw) = assignment
        .split_once('=')
        .filter(|(k, _)| !k.trim().is_empty())
        .ok_or_else(|| ConfigError::BadOverride(assignment.to_string()))?;
    let raw = raw.trim();
    let value = serde_json::from_str::<Value>(raw).unwrap_or_else(|_| Value::String(raw.into()));
    map.insert(key.trim().to_string(), value);
    Ok(())
}

impl RunConfig {
    pub fn from_map(map: &Map<String, Value>) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        let p = &mut cfg.params;
        for (key, v) in map {
            match key.as_str() {
                "lambda" => p.lambda = as_real(key, v)?,
                "n" => p.accumulation_rate = as_real(key, v)?,
                "delta1" => p.delta1 = as_real(key, v)?,
                "delta2" => p.delta2 = as_real(key, v)?,
                "omega1" => p.omega1 = as_real(key, v)?,
                "omega2" => p.omega2 = as_real(key, v)?,
                "x_star" => p.x_star = as_real(key, v)?,
                "y_star" => p.y_star = as_real(key, v)?,
                "a" => p.a = as_real(key, v)?,
                "b" => p.b = as_real(key, v)?,
                "alpha1" => p.alpha1 = as_real(key, v)?,
                "alpha2" => p.alpha2 = as_real(key, v)?,
                "horizon" => cfg.horizon = as_real(key, v)?,
                "steps" => cfg.steps = as_count(key, v)?,
                "mode" => {
                    let s = v
                        .as_str()
                        .ok_or_else(|| bad(key, format!("expected a string, got {v}")))?;
                    cfg.mode = s.parse().map_err(|e| bad(key, e))?;
                }
                "output_path" => {
                    cfg.output_path = match v {
                        Value::Null => None,
                        Value::String(s) => Some(PathBuf::from(s)),
                        _ => return Err(bad(key, format!("expected a path string, got {v}"))),
                    }
                }
                "step_counts" => {
                    cfg.step_counts = match v {
                        Value::Null => None,
                        Value::Array(items) => Some(
                            items
                                .iter()
                                .map(|x| as_count(key, x))
                                .collect::<Result<_, _>>()?,
                        ),
                        _ => return Err(bad(key, format!("expected a list of integers, got {v}"))),
                    }
                }
                _ => return Err(ConfigError::UnknownKey(key.clone())),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.params.validate().map_err(|e| match e {
            Error::InvalidParameter { field, .. } => ConfigError::Invalid { key: field, source: e },
            other => ConfigError::Invalid {
                key: "params",
                source: other,
            },
        })?;
        if !(self.horizon.is_finite() && self.horizon > 0.0) {
            return Err(bad("horizon", format!("must be > 0, got {}", self.horizon)));
        }
        if self.steps < 2 {
            return Err(bad("steps", format!("must be >= 2, got {}", self.steps)));
        }
        if let Some(counts) = &self.step_counts {
            if counts.len() < 2 {
                return Err(bad("step_counts", "needs at least two entries"));
            }
            if counts[0] == 0 {
                return Err(bad("step_counts", "entries must be positive"));
            }
            if let Some(w) = counts.windows(2).find(|w| w[1] != 2 * w[0]) {
                return Err(bad(
                    "step_counts",
                    format!("entries must double: {} is followed by {}", w[0], w[1]),
                ));
            }
        }
        Ok(())
    }

    pub fn effective_step_counts(&self) -> Vec<usize> {
        self.step_counts
            .clone()
            .unwrap_or_else(|| DEFAULT_STEP_COUNTS.to_vec())
    }

    /// Every key with its effective value.
    pub fn to_map(&self) -> Map<String, Value> {
        let p = &self.params;
        let real = |x: f64| Value::Number(Number::from_f64(x).expect("validated finite"));
        let mut m = Map::new();
        m.insert("lambda".into(), real(p.lambda));
        m.insert("n".into(), real(p.accumulation_rate));
        m.insert("delta1".into(), real(p.delta1));
        m.insert("delta2".into(), real(p.delta2));
        m.insert("omega1".into(), real(p.omega1));
        m.insert("omega2".into(), real(p.omega2));
        m.insert("x_star".into(), real(p.x_star));
        m.insert("y_star".into(), real(p.y_star));
        m.insert("a".into(), real(p.a));
        m.insert("b".into(), real(p.b));
        m.insert("alpha1".into(), real(p.alpha1));
        m.insert("alpha2".into(), real(p.alpha2));
        m.insert("horizon".into(), real(self.horizon));
        m.insert("steps".into(), Value::from(self.steps));
        m.insert("mode".into(), Value::from(self.mode.as_str()));
        m.insert(
            "output_path".into(),
            self.output_path
                .as_ref()
                .map_or(Value::Null, |p| Value::from(p.to_string_lossy().into_owned())),
        );
        m.insert(
            "step_counts".into(),
            self.step_counts
                .as_ref()
                .map_or(Value::Null, |c| Value::from(c.clone())),
        );
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.to_map())).expect("map serializes")
    }
}
