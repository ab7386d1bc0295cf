use std::path::PathBuf;

use linkq::difftest::ParseError;
use linkq::{QueueError, VariantId};
use thiserror::Error;

/// Problems with the requested run, detected before anything is measured.
/// Exit code 2.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("--warmup {warmup} exceeds --ops {ops}")]
    WarmupExceedsOps { warmup: usize, ops: usize },
    #[error("--ops {ops} exceeds the workload length {len}")]
    OpsExceedWorkload { ops: usize, len: usize },
    #[error("cannot read trace file {path}: {source}")]
    TraceFile {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    TraceSyntax(#[from] ParseError),
    #[error("workload op {index} is push_front, which {variant} does not support")]
    VariantMismatch { variant: VariantId, index: usize },
    #[error("workload op {index} needs a non-empty structure but the queue is empty there")]
    Precondition { index: usize },
}

impl ConfigError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ConfigError::Usage(e) if !e.use_stderr() => 0,
            _ => 2,
        }
    }
}

/// A structure misbehaved during a run. Exit code 1.
#[derive(Debug, Error)]
pub enum InternalError {
    #[error("{variant} rep {rep}: op {index} failed: {source}")]
    Operation {
        variant: VariantId,
        rep: usize,
        index: usize,
        source: QueueError,
    },
    #[error("{variant} rep {rep}: {source}")]
    Structure {
        variant: VariantId,
        rep: usize,
        source: QueueError,
    },
    #[error("{variant} rep {rep}: {live} nodes still live after destroy")]
    Leak {
        variant: VariantId,
        rep: usize,
        live: usize,
    },
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("internal invariant failure: {0}")]
    Internal(#[from] InternalError),
}

impl BenchError {
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Config(e) => e.exit_code(),
            BenchError::Internal(_) => 1,
        }
    }
}
