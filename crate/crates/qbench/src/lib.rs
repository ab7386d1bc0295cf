//! Benchmark driver for the `linkq` structures.
//!
//! A run builds a fresh store and structure per (variant, repetition),
//! replays the warm-up prefix of the workload, resets the counters, replays
//! the rest under a timer and records the counters. Counters are
//! deterministic; only the timing columns vary between invocations.

mod bench;
mod config;
mod error;
mod report;
mod workload;

pub use bench::{prepare, run_bench, PreparedWorkload};
pub use config::{parse_args, BenchConfig, Format, VariantArg, WorkloadSource};
pub use error::{BenchError, ConfigError, InternalError};
pub use report::{emit_report, MetricsReport, RunRecord, FIELDS};
pub use workload::{WorkloadError, WorkloadSpec};
