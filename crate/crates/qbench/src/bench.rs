use std::hint::black_box;
use std::time::Instant;

use linkq::difftest::{apply_op, parse_trace, Observation, Op, OpTrace};
use linkq::{with_variant, LinkedSequence, Mode, NodeStore, VariantId};
use rayon::prelude::*;

use crate::config::{BenchConfig, WorkloadSource};
use crate::error::{BenchError, ConfigError, InternalError};
use crate::report::{MetricsReport, RunRecord};

/// The trace a config resolves to, validated against every requested
/// variant.
#[derive(Debug, Clone)]
pub struct PreparedWorkload {
    pub label: String,
    pub trace: OpTrace,
    pub warmup: usize,
}

pub fn prepare(config: &BenchConfig) -> Result<PreparedWorkload, ConfigError> {
    let mut trace = match &config.workload {
        WorkloadSource::Generator(spec) => spec.build(),
        WorkloadSource::TraceFile(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| ConfigError::TraceFile {
                path: path.clone(),
                source,
            })?;
            parse_trace(&text)?
        }
    };
    if let Some(ops) = config.ops {
        if ops > trace.len() {
            return Err(ConfigError::OpsExceedWorkload {
                ops,
                len: trace.len(),
            });
        }
        trace = trace.prefix(ops);
    }
    if config.warmup > trace.len() {
        return Err(ConfigError::WarmupExceedsOps {
            warmup: config.warmup,
            ops: trace.len(),
        });
    }
    if let Some(index) = trace.first_push_front() {
        if let Some(&variant) = config.variants.iter().find(|v| !v.supports_push_front()) {
            return Err(ConfigError::VariantMismatch { variant, index });
        }
    }
    // Every variant must be able to replay the trace without hitting an
    // empty-structure error.
    let mut len = 0usize;
    for (index, op) in trace.ops.iter().enumerate() {
        match op {
            Op::PushBack(_) | Op::PushFront(_) => len += 1,
            Op::PopFront if len == 0 => return Err(ConfigError::Precondition { index }),
            Op::PopFront => len -= 1,
            Op::Front if len == 0 => return Err(ConfigError::Precondition { index }),
            Op::Front | Op::IsEmpty => {}
        }
    }
    Ok(PreparedWorkload {
        label: config.workload.label(),
        trace,
        warmup: config.warmup,
    })
}

fn run_one<S: LinkedSequence<i64>>(
    work: &PreparedWorkload,
    mode: Mode,
    rep: usize,
) -> Result<RunRecord, InternalError> {
    let variant = S::VARIANT;
    let structure = |source| InternalError::Structure {
        variant,
        rep,
        source,
    };
    let mut store = NodeStore::new(mode);
    let mut s = S::create(&mut store).map_err(structure)?;
    let (warm, measured) = work.trace.ops.split_at(work.warmup);

    let replay = |s: &mut S, store: &mut NodeStore<i64>, ops: &[Op], offset: usize| {
        for (i, &op) in ops.iter().enumerate() {
            if let Some(Observation::Error(source)) = black_box(apply_op(s, store, op)) {
                return Err(InternalError::Operation {
                    variant,
                    rep,
                    index: offset + i,
                    source,
                });
            }
        }
        Ok(())
    };

    replay(&mut s, &mut store, warm, 0)?;
    store.reset_metrics();
    let start = Instant::now();
    replay(&mut s, &mut store, measured, warm.len())?;
    let elapsed = start.elapsed();

    let metrics = store.snapshot();
    let peak_live = store.peak_live();
    let final_live = store.live_count();
    s.destroy(&mut store).map_err(structure)?;
    if store.live_count() != 0 {
        return Err(InternalError::Leak {
            variant,
            rep,
            live: store.live_count(),
        });
    }

    Ok(RunRecord::new(
        variant,
        work.label.clone(),
        rep,
        measured.len() as u64,
        elapsed.as_nanos() as u64,
        metrics,
        peak_live as u64,
        final_live as u64,
    ))
}

fn run_variant(
    variant: VariantId,
    work: &PreparedWorkload,
    mode: Mode,
    rep: usize,
) -> Result<RunRecord, InternalError> {
    with_variant!(variant, S => run_one::<S>(work, mode, rep))
}

/// Runs every (variant, repetition) pair. Records come back in variant
/// order, repetitions ascending, also when run in parallel.
pub fn run_bench(config: &BenchConfig) -> Result<MetricsReport, BenchError> {
    let work = prepare(config)?;
    let pairs: Vec<(VariantId, usize)> = config
        .variants
        .iter()
        .flat_map(|&v| (0..config.reps).map(move |rep| (v, rep)))
        .collect();
    let results: Vec<Result<RunRecord, InternalError>> = if config.parallel {
        pairs
            .par_iter()
            .map(|&(v, rep)| run_variant(v, &work, config.mode, rep))
            .collect()
    } else {
        pairs
            .iter()
            .map(|&(v, rep)| run_variant(v, &work, config.mode, rep))
            .collect()
    };
    let runs = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(MetricsReport { runs })
}
