use thiserror::Error;

use super::trace::{Op, OpTrace};
use super::OracleDeque;
use crate::error::QueueError;
use crate::store::{Metrics, Mode, NodeStore};
use crate::variant::{LinkedSequence, VariantId};
use crate::with_variant;

/// What one operation returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observation {
    Value(i64),
    Bool(bool),
    Error(QueueError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceOutcome {
    /// One entry per `PopFront`, `Front` and `IsEmpty`, plus one per failed
    /// push.
    pub observations: Vec<Observation>,
    /// Counters right before the structure was destroyed.
    pub metrics: Metrics,
    /// Counters after destruction.
    pub final_metrics: Metrics,
    pub live_before_destroy: usize,
    pub final_live: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("op {index} is push_front, which {variant} does not support")]
    IllFormed { variant: VariantId, index: usize },
    #[error("structure failed outside the trace: {0}")]
    Structure(#[from] QueueError),
}

/// Applies one operation. Successful pushes observe nothing.
#[inline]
pub fn apply_op<S: LinkedSequence<i64>>(
    s: &mut S,
    store: &mut NodeStore<i64>,
    op: Op,
) -> Option<Observation> {
    let res = match op {
        Op::PushBack(v) => s.push_back(store, v).map(|()| None),
        Op::PushFront(v) => s.push_front(store, v).map(|()| None),
        Op::PopFront => s.pop_front(store).map(|v| Some(Observation::Value(v))),
        Op::Front => s.front(store).map(|v| Some(Observation::Value(*v))),
        Op::IsEmpty => s.is_empty(store).map(|b| Some(Observation::Bool(b))),
    };
    res.unwrap_or_else(|e| Some(Observation::Error(e)))
}

fn apply_oracle(oracle: &mut OracleDeque<i64>, op: Op) -> Option<Observation> {
    let empty = Observation::Error(QueueError::Empty);
    match op {
        Op::PushBack(v) => {
            oracle.push_back(v);
            None
        }
        Op::PushFront(v) => {
            oracle.push_front(v);
            None
        }
        Op::PopFront => Some(oracle.pop_front().map_or(empty, Observation::Value)),
        Op::Front => Some(oracle.front().map_or(empty, |v| Observation::Value(*v))),
        Op::IsEmpty => Some(Observation::Bool(oracle.is_empty())),
    }
}

/// Observations the reference deque produces for `trace`.
pub fn oracle_outcome(trace: &OpTrace) -> Vec<Observation> {
    let mut oracle = OracleDeque::new();
    trace
        .ops
        .iter()
        .filter_map(|&op| apply_oracle(&mut oracle, op))
        .collect()
}

fn well_formed(variant: VariantId, trace: &OpTrace) -> Result<(), RunError> {
    if variant.supports_push_front() {
        return Ok(());
    }
    match trace.first_push_front() {
        Some(index) => Err(RunError::IllFormed { variant, index }),
        None => Ok(()),
    }
}

/// Builds `S` in `store`, replays `trace`, then destroys it.
pub fn run_trace_on<S: LinkedSequence<i64>>(
    store: &mut NodeStore<i64>,
    trace: &OpTrace,
) -> Result<TraceOutcome, RunError> {
    well_formed(S::VARIANT, trace)?;
    let mut s = S::create(store)?;
    let mut observations = Vec::new();
    for &op in &trace.ops {
        if let Some(obs) = apply_op(&mut s, store, op) {
            observations.push(obs);
        }
    }
    let metrics = store.snapshot();
    let live_before_destroy = store.live_count();
    s.destroy(store)?;
    Ok(TraceOutcome {
        observations,
        metrics,
        final_metrics: store.snapshot(),
        live_before_destroy,
        final_live: store.live_count(),
    })
}

pub fn run_trace(
    variant: VariantId,
    store: &mut NodeStore<i64>,
    trace: &OpTrace,
) -> Result<TraceOutcome, RunError> {
    with_variant!(variant, S => run_trace_on::<S>(store, trace))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffReport {
    Agreement {
        ops: usize,
    },
    Divergence {
        index: usize,
        op: Op,
        expected: Option<Observation>,
        got: Option<Observation>,
    },
    /// A structural check failed after op `index` (`None`: at creation or
    /// after destruction).
    Invariant {
        index: Option<usize>,
        detail: String,
    },
    Rejected(RunError),
}

impl DiffReport {
    pub fn is_agreement(&self) -> bool {
        matches!(self, DiffReport::Agreement { .. })
    }
}

/// [`diff_check_with`] in checked mode.
pub fn diff_check(variant: VariantId, trace: &OpTrace) -> DiffReport {
    diff_check_with(variant, trace, Mode::Checked)
}

/// Runs `trace` on a fresh `variant` and on the oracle in lockstep and reports
/// the first disagreement. In checked mode the structure is walked and its
/// node count compared against the node-count law after every operation.
pub fn diff_check_with(variant: VariantId, trace: &OpTrace, mode: Mode) -> DiffReport {
    with_variant!(variant, S => diff_check_on::<S>(trace, mode))
}

fn diff_check_on<S: LinkedSequence<i64>>(trace: &OpTrace, mode: Mode) -> DiffReport {
    if let Err(e) = well_formed(S::VARIANT, trace) {
        return DiffReport::Rejected(e);
    }
    let mut store = NodeStore::new(mode);
    let mut s = match S::create(&mut store) {
        Ok(s) => s,
        Err(e) => return DiffReport::Rejected(e.into()),
    };
    let mut oracle = OracleDeque::new();
    let checked = mode == Mode::Checked;

    let check = |s: &S, store: &NodeStore<i64>, len: usize, index: Option<usize>| {
        if let Err(v) = s.check_structure(store, len) {
            return Err(DiffReport::Invariant { index, detail: v.0 });
        }
        let want = s.expected_live_nodes(len);
        if store.live_count() != want {
            return Err(DiffReport::Invariant {
                index,
                detail: format!("{} live nodes, expected {want}", store.live_count()),
            });
        }
        Ok(())
    };

    if checked {
        if let Err(r) = check(&s, &store, 0, None) {
            return r;
        }
    }
    for (index, &op) in trace.ops.iter().enumerate() {
        let expected = apply_oracle(&mut oracle, op);
        let got = apply_op(&mut s, &mut store, op);
        if expected != got {
            return DiffReport::Divergence {
                index,
                op,
                expected,
                got,
            };
        }
        if checked {
            if let Err(r) = check(&s, &store, oracle.len(), Some(index)) {
                return r;
            }
        }
    }
    if let Err(e) = s.destroy(&mut store) {
        return DiffReport::Invariant {
            index: None,
            detail: format!("destroy failed: {e}"),
        };
    }
    let m = store.snapshot();
    if store.live_count() != 0 || m.allocations != m.deallocations {
        return DiffReport::Invariant {
            index: None,
            detail: format!(
                "leak after destroy: {} live, {} allocations, {} deallocations",
                store.live_count(),
                m.allocations,
                m.deallocations
            ),
        };
    }
    DiffReport::Agreement {
        ops: trace.ops.len(),
    }
}
