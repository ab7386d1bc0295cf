//! `name:key=value,...` workload specifications.

use std::fmt;
use std::str::FromStr;

use linkq::difftest::{gen_alternating, gen_burst, gen_ramp, gen_random, Mix, OpTrace};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq)]
pub enum WorkloadSpec {
    Random {
        seed: u64,
        n: usize,
        mix: Mix,
    },
    Burst {
        k: usize,
        rounds: usize,
    },
    Ramp {
        max: usize,
    },
    /// `fill` pushes, then `pairs` push/pop pairs.
    Alternate {
        fill: usize,
        pairs: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkloadError {
    #[error("unknown workload `{0}` (expected random, burst, ramp or alternate)")]
    UnknownGenerator(String),
    #[error("workload `{generator}` has no parameter `{key}`")]
    UnknownKey { generator: String, key: String },
    #[error("parameter `{key}`: `{value}` is not valid here")]
    BadValue { key: String, value: String },
    #[error("parameter `{0}` given twice")]
    Duplicate(String),
    #[error("{0}")]
    InvalidMix(String),
}

impl WorkloadSpec {
    pub fn generator(&self) -> &'static str {
        match self {
            WorkloadSpec::Random { .. } => "random",
            WorkloadSpec::Burst { .. } => "burst",
            WorkloadSpec::Ramp { .. } => "ramp",
            WorkloadSpec::Alternate { .. } => "alternate",
        }
    }

    pub fn build(&self) -> OpTrace {
        match *self {
            WorkloadSpec::Random { seed, n, mix } => {
                gen_random(seed, n, mix).expect("mix validated at parse time")
            }
            WorkloadSpec::Burst { k, rounds } => gen_burst(k, rounds),
            WorkloadSpec::Ramp { max } => gen_ramp(max),
            WorkloadSpec::Alternate { fill, pairs } => gen_alternating(fill, pairs),
        }
    }
}

impl fmt::Display for WorkloadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkloadSpec::Random { seed, n, mix } => write!(
                f,
                "random:seed={seed},n={n},pb={},pf={},pp={}",
                mix.push_back, mix.push_front, mix.pop_front
            ),
            WorkloadSpec::Burst { k, rounds } => write!(f, "burst:k={k},rounds={rounds}"),
            WorkloadSpec::Ramp { max } => write!(f, "ramp:max={max}"),
            WorkloadSpec::Alternate { fill, pairs } => {
                write!(f, "alternate:fill={fill},pairs={pairs}")
            }
        }
    }
}

/// Integer parameter; scientific notation such as `1e6` is accepted when it
/// denotes an exact integer.
fn parse_count(key: &str, value: &str) -> Result<u64, WorkloadError> {
    let bad = || WorkloadError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    };
    if let Ok(n) = value.parse::<u64>() {
        return Ok(n);
    }
    let x: f64 = value.parse().map_err(|_| bad())?;
    if x.is_finite() && x >= 0.0 && x.fract() == 0.0 && x <= 9_007_199_254_740_992.0 {
        Ok(x as u64)
    } else {
        Err(bad())
    }
}

fn parse_prob(key: &str, value: &str) -> Result<f64, WorkloadError> {
    value
        .parse::<f64>()
        .ok()
        .filter(|p| p.is_finite())
        .ok_or_else(|| WorkloadError::BadValue {
            key: key.to_string(),
            value: value.to_string(),
        })
}

fn to_usize(key: &str, n: u64) -> Result<usize, WorkloadError> {
    usize::try_from(n).map_err(|_| WorkloadError::BadValue {
        key: key.to_string(),
        value: n.to_string(),
    })
}

impl FromStr for WorkloadSpec {
    type Err = WorkloadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let mut spec = match name {
            "random" => WorkloadSpec::Random {
                seed: 1,
                n: 1_000_000,
                mix: Mix::QUEUE,
            },
            "burst" => WorkloadSpec::Burst {
                k: 64,
                rounds: 1000,
            },
            "ramp" => WorkloadSpec::Ramp { max: 100 },
            "alternate" => WorkloadSpec::Alternate {
                fill: 63,
                pairs: 100_000,
            },
            other => return Err(WorkloadError::UnknownGenerator(other.to_string())),
        };

        let mut seen: Vec<&str> = Vec::new();
        for pair in params.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| WorkloadError::BadValue {
                    key: pair.to_string(),
                    value: String::new(),
                })?;
            let (key, value) = (key.trim(), value.trim());
            if seen.contains(&key) {
                return Err(WorkloadError::Duplicate(key.to_string()));
            }
            seen.push(key);
            let unknown = || WorkloadError::UnknownKey {
                generator: name.to_string(),
                key: key.to_string(),
            };
            match &mut spec {
                WorkloadSpec::Random { seed, n, mix } => match key {
                    "seed" => *seed = parse_count(key, value)?,
                    "n" => *n = to_usize(key, parse_count(key, value)?)?,
                    "pb" => mix.push_back = parse_prob(key, value)?,
                    "pf" => mix.push_front = parse_prob(key, value)?,
                    "pp" => mix.pop_front = parse_prob(key, value)?,
                    _ => return Err(unknown()),
                },
                WorkloadSpec::Burst { k, rounds } => match key {
                    "k" => *k = to_usize(key, parse_count(key, value)?)?,
                    "rounds" => *rounds = to_usize(key, parse_count(key, value)?)?,
                    _ => return Err(unknown()),
                },
                WorkloadSpec::Ramp { max } => match key {
                    "max" => *max = to_usize(key, parse_count(key, value)?)?,
                    _ => return Err(unknown()),
                },
                WorkloadSpec::Alternate { fill, pairs } => match key {
                    "fill" => *fill = to_usize(key, parse_count(key, value)?)?,
                    "pairs" => *pairs = to_usize(key, parse_count(key, value)?)?,
                    _ => return Err(unknown()),
                },
            }
        }

        if let WorkloadSpec::Random { mix, .. } = &spec {
            mix.validate()
                .map_err(|e| WorkloadError::InvalidMix(e.to_string()))?;
        }
        Ok(spec)
    }
}
